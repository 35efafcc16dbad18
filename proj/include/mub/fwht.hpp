#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mub/limits.hpp"

namespace mub {

// Complex amplitude vector over an m-qubit register.
class StateVector {
  public:
    StateVector() = default;
    explicit StateVector(int m) : m_(m), amp_(std::uint64_t{1} << m, 0.0) {}
    StateVector(int m, std::vector<std::complex<double>> amp);

    int qubits() const { return m_; }
    std::uint64_t dim() const { return amp_.size(); }

    std::vector<std::complex<double>>& amplitudes() { return amp_; }
    const std::vector<std::complex<double>>& amplitudes() const { return amp_; }

    double norm() const;

    // Binary format: 8-byte magic "mubstate", u32 m, u32 reserved (zero),
    // then 2^m little-endian (re, im) float64 pairs.
    void write(std::ostream& out) const;
    static StateVector read(std::istream& in);

  private:
    int m_ = 0;
    std::vector<std::complex<double>> amp_;
};

// In-place non-normalized Walsh-Hadamard transform: v <- H^{(x)m} v.
// O(2^m m) butterflies. Length must be a power of two.
void fwht_in_place(std::vector<std::complex<double>>& v);
void fwht_in_place(StateVector& v);

// Applies the generator U_m = omega^{t8} 2^{-m/2} H^{(x)m} P_m to state
// vectors without materializing it. The phase diagonal is built once from
// B_m (m <= kMaxPhaseVectorQubits) and cached in the object.
class MubGenerator {
  public:
    explicit MubGenerator(int m);

    int qubits() const { return m_; }
    int phase_exponent_t8() const { return t8_; }

    // v <- U_m v
    void apply(StateVector& v) const;

    // v <- U_m^k v by k sequential applications. When reduce_by_cycle is set
    // and the cycle U^{2^m+1} = I is exactly verified for this m, k is first
    // reduced mod 2^m+1; the return value reports whether reduction was
    // applied (never silently).
    bool apply_power(StateVector& v, std::uint64_t k, bool reduce_by_cycle = false) const;

  private:
    int m_ = 0;
    int t8_ = 0;
    double scale_ = 1.0;
    std::complex<double> global_ = 1.0;
    std::vector<std::uint8_t> phase_; // exponents of i, length 2^m
};

// Convenience wrappers matching the one-shot call style.
StateVector apply_generator(int m, StateVector v);
StateVector apply_power(int m, std::uint64_t k, StateVector v, bool reduce_by_cycle = false);

} // namespace mub
