#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mub {

// Fourth root of unity stored as the exponent of i: value = i^t, t in {0..3}.
struct Mod4 {
    std::uint8_t t = 0;

    constexpr Mod4() = default;
    constexpr explicit Mod4(int e) : t(static_cast<std::uint8_t>(((e % 4) + 4) % 4)) {}

    constexpr friend Mod4 operator*(Mod4 a, Mod4 b) { return Mod4(a.t + b.t); }

    constexpr bool is_real() const { return (t & 1) == 0; }

    std::complex<double> value() const {
        static constexpr std::complex<double> roots[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return roots[t];
    }

    // "1", "i", "-1", "-i"
    std::string token() const {
        static const char* toks[4] = {"1", "i", "-1", "-i"};
        return toks[t];
    }

    constexpr bool operator==(const Mod4&) const = default;
};

// Diagonal of the phase system P_m: 2^m fourth roots of unity, indexed by the
// basis-label convention n = sum_k j_k 2^{k-1} (j_1 = least significant bit).
class PhaseVector {
  public:
    PhaseVector() = default;
    PhaseVector(int m, std::vector<std::uint8_t> exps) : m_(m), t_(std::move(exps)) {}
    explicit PhaseVector(int m) : m_(m), t_(std::size_t{1} << m, 0) {}

    int qubits() const { return m_; }
    std::uint64_t size() const { return t_.size(); }

    Mod4 at(std::uint64_t n) const { return Mod4(t_[n]); }
    void set(std::uint64_t n, Mod4 v) { t_[n] = v.t; }

    const std::vector<std::uint8_t>& exponents() const { return t_; }

    bool operator==(const PhaseVector&) const = default;

  private:
    int m_ = 0;
    std::vector<std::uint8_t> t_;
};

// 2^m x 2^m matrix of fourth roots of unity stored as exponents of i. Holds
// Sylvester-Hadamard matrices (exponents 0/2) and the non-normalized
// generators V_m, which never contain a zero entry. A zero sentinel exists
// only so sparse diagonal patterns (the identity) can ride through
// unit_right_multiply; the construction paths never produce it.
class UnitEntryMatrix {
  public:
    static constexpr std::uint8_t kZero = 4;

    UnitEntryMatrix() = default;
    explicit UnitEntryMatrix(int m)
        : m_(m), d_(std::uint32_t{1} << m),
          t_(static_cast<std::size_t>(d_) * d_, 0) {}

    int qubits() const { return m_; }
    std::uint32_t dim() const { return d_; }

    // Exponent of i, or kZero.
    std::uint8_t raw(std::uint32_t r, std::uint32_t c) const {
        return t_[static_cast<std::size_t>(r) * d_ + c];
    }
    bool zero_at(std::uint32_t r, std::uint32_t c) const { return raw(r, c) == kZero; }

    Mod4 at(std::uint32_t r, std::uint32_t c) const {
        std::uint8_t v = raw(r, c);
        if (v == kZero) throw std::logic_error("UnitEntryMatrix: entry is zero");
        return Mod4(v);
    }
    void set(std::uint32_t r, std::uint32_t c, Mod4 v) {
        t_[static_cast<std::size_t>(r) * d_ + c] = v.t;
    }
    void set_zero(std::uint32_t r, std::uint32_t c) {
        t_[static_cast<std::size_t>(r) * d_ + c] = kZero;
    }

    bool all_unit() const {
        for (auto v : t_)
            if (v == kZero) return false;
        return true;
    }

    static UnitEntryMatrix identity(int m);

    bool operator==(const UnitEntryMatrix&) const = default;

    // Dump: header "unitmatrix m=<m>", then 2^m lines of tokens 1/i/-1/-i
    // (and 0 for the sentinel).
    std::string dump() const;
    static UnitEntryMatrix parse(const std::string& text);

  private:
    int m_ = 0;
    std::uint32_t d_ = 0;
    std::vector<std::uint8_t> t_;
};

} // namespace mub
