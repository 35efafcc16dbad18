#include "mub/fwht.hpp"

#include <cmath>
#include <cstring>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "mub/phase_system.hpp"

namespace mub {

namespace {

constexpr char kMagic[8] = {'m', 'u', 'b', 's', 't', 'a', 't', 'e'};

void write_u32(std::ostream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t read_u32(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

} // namespace

StateVector::StateVector(int m, std::vector<std::complex<double>> amp)
    : m_(m), amp_(std::move(amp)) {
    if (amp_.size() != (std::uint64_t{1} << m))
        throw std::invalid_argument("StateVector: amplitude count != 2^m");
}

double StateVector::norm() const {
    double s = 0;
    for (const auto& a : amp_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::write(std::ostream& out) const {
    out.write(kMagic, 8);
    write_u32(out, static_cast<std::uint32_t>(m_));
    write_u32(out, 0);
    for (const auto& a : amp_) {
        double re = a.real(), im = a.imag();
        out.write(reinterpret_cast<const char*>(&re), 8);
        out.write(reinterpret_cast<const char*>(&im), 8);
    }
}

StateVector StateVector::read(std::istream& in) {
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kMagic, 8) != 0)
        throw std::runtime_error("state read: bad magic");
    std::uint32_t m = read_u32(in);
    std::uint32_t reserved = read_u32(in);
    if (!in || reserved != 0 || m > 30) throw std::runtime_error("state read: bad header");
    StateVector v(static_cast<int>(m));
    for (auto& a : v.amp_) {
        double re, im;
        in.read(reinterpret_cast<char*>(&re), 8);
        in.read(reinterpret_cast<char*>(&im), 8);
        a = {re, im};
    }
    if (!in) throw std::runtime_error("state read: truncated amplitudes");
    return v;
}

void fwht_in_place(std::vector<std::complex<double>>& v) {
    std::size_t n = v.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fwht_in_place: length is not a power of two");
    for (std::size_t len = 1; len < n; len <<= 1)
        for (std::size_t i = 0; i < n; i += 2 * len)
            for (std::size_t k = i; k < i + len; ++k) {
                auto a = v[k];
                auto b = v[k + len];
                v[k] = a + b;
                v[k + len] = a - b;
            }
}

void fwht_in_place(StateVector& v) { fwht_in_place(v.amplitudes()); }

MubGenerator::MubGenerator(int m) : m_(m) {
    if (!is_supported_m(m))
        throw std::invalid_argument("MubGenerator: unsupported m=" + std::to_string(m) +
                                    "; supported: " + supported_m_list());
    if (m > kMaxPhaseVectorQubits)
        throw std::invalid_argument("MubGenerator: m exceeds the phase-diagonal cap (m <= " +
                                    std::to_string(kMaxPhaseVectorQubits) + ")");
    t8_ = global_phase_t8(m);
    phase_ = phase_vector(build_bmatrix(m)).exponents();
    scale_ = std::pow(2.0, -0.5 * m);
    global_ = std::polar(1.0, std::numbers::pi * 0.25 * t8_);
}

void MubGenerator::apply(StateVector& v) const {
    if (v.qubits() != m_) throw std::invalid_argument("MubGenerator::apply: qubit mismatch");
    auto& amp = v.amplitudes();
    static constexpr std::complex<double> kI4[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (std::size_t n = 0; n < amp.size(); ++n) amp[n] *= kI4[phase_[n]];
    fwht_in_place(amp);
    std::complex<double> f = global_ * scale_;
    for (auto& a : amp) a *= f;
}

bool MubGenerator::apply_power(StateVector& v, std::uint64_t k, bool reduce_by_cycle) const {
    bool reduced = false;
    if (reduce_by_cycle && is_exact_verified_m(m_)) {
        std::uint64_t cycle = (std::uint64_t{1} << m_) + 1;
        if (k >= cycle) {
            k %= cycle;
            reduced = true;
        }
    }
    for (std::uint64_t i = 0; i < k; ++i) apply(v);
    return reduced;
}

StateVector apply_generator(int m, StateVector v) {
    MubGenerator(m).apply(v);
    return v;
}

StateVector apply_power(int m, std::uint64_t k, StateVector v, bool reduce_by_cycle) {
    MubGenerator(m).apply_power(v, k, reduce_by_cycle);
    return v;
}

} // namespace mub
