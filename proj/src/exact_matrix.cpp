#include "mub/exact_matrix.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mub {

ExactScaledMatrix ExactScaledMatrix::identity(std::uint32_t d) {
    ExactScaledMatrix m(d, 0, 0);
    for (std::uint32_t r = 0; r < d; ++r) m.at(r, r) = GaussianInt(1, 0);
    return m;
}

GaussianInt ExactScaledMatrix::trace() const {
    GaussianInt tr;
    for (std::uint32_t r = 0; r < d_; ++r) tr += at(r, r);
    return tr;
}

std::complex<double> ExactScaledMatrix::value_at(std::uint32_t r, std::uint32_t c) const {
    const GaussianInt& g = at(r, c);
    std::complex<double> z(g.re.get_d(), g.im.get_d());
    double mag = std::pow(2.0, -0.5 * static_cast<double>(s_));
    double ang = std::numbers::pi * 0.25 * t8_;
    return z * std::polar(mag, ang);
}

std::string ExactScaledMatrix::dump() const {
    std::string out = "exact d=" + std::to_string(d_) + " s=" + std::to_string(s_) +
                      " t=" + std::to_string(t8_) + "\n";
    for (std::uint32_t r = 0; r < d_; ++r) {
        for (std::uint32_t c = 0; c < d_; ++c) {
            if (c) out += ' ';
            out += at(r, c).str();
        }
        out += '\n';
    }
    return out;
}

ExactScaledMatrix ExactScaledMatrix::parse(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("exact parse: empty input");
    long d = 0, s = 0;
    int t = 0;
    if (std::sscanf(header.c_str(), "exact d=%ld s=%ld t=%d", &d, &s, &t) != 3 || d < 1)
        throw std::runtime_error("exact parse: bad header '" + header + "'");
    ExactScaledMatrix m(static_cast<std::uint32_t>(d), s, t);
    for (std::uint32_t r = 0; r < m.dim(); ++r)
        for (std::uint32_t c = 0; c < m.dim(); ++c) {
            std::string tok;
            if (!(in >> tok)) throw std::runtime_error("exact parse: truncated input");
            m.at(r, c) = GaussianInt::parse(tok);
        }
    return m;
}

ExactScaledMatrix ExactScaledMatrix::reduced() const {
    ExactScaledMatrix out = *this;
    auto fold_phase = [&] {
        // omega^{2q+r} = i^q omega^r
        int q = out.t8_ / 2;
        if (q) {
            for (auto& e : out.g_) e = e.times_i_pow(q);
            out.t8_ %= 2;
        }
    };
    fold_phase();
    for (;;) {
        bool any_nonzero = false, divisible = true;
        for (const auto& e : out.g_) {
            if (!e.is_zero()) any_nonzero = true;
            if (mpz_odd_p((e.re + e.im).get_mpz_t())) {
                divisible = false;
                break;
            }
        }
        if (!any_nonzero || !divisible) break;
        // divide by (1+i): (a+bi)/(1+i) = ((a+b) + (b-a)i)/2
        for (auto& e : out.g_) e = GaussianInt((e.re + e.im) / 2, (e.im - e.re) / 2);
        out.s_ -= 1;
        out.t8_ = (out.t8_ + 1) % 8;
        fold_phase();
    }
    return out;
}

ExactScaledMatrix exact_matmul(const ExactScaledMatrix& a, const ExactScaledMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("exact_matmul: dimension mismatch");
    std::uint32_t d = a.dim();
    ExactScaledMatrix out(d, a.scale_exponent() + b.scale_exponent(),
                          a.phase_exponent() + b.phase_exponent());
    for (std::uint32_t r = 0; r < d; ++r)
        for (std::uint32_t c = 0; c < d; ++c) {
            GaussianInt acc;
            for (std::uint32_t j = 0; j < d; ++j) acc += a.at(r, j) * b.at(j, c);
            out.at(r, c) = std::move(acc);
        }
    return out;
}

ExactScaledMatrix unit_right_multiply(const ExactScaledMatrix& a, const UnitEntryMatrix& v) {
    if (a.dim() != v.dim()) throw std::invalid_argument("unit_right_multiply: dimension mismatch");
    std::uint32_t d = a.dim();
    ExactScaledMatrix out(d, a.scale_exponent(), a.phase_exponent());
    // out[r][c] = sum_j a[r][j] * i^{v[j][c]}; each term is an add/sub of the
    // components of a[r][j], possibly swapped.
    for (std::uint32_t r = 0; r < d; ++r) {
        for (std::uint32_t c = 0; c < d; ++c) {
            mpz_class& ore = out.at(r, c).re;
            mpz_class& oim = out.at(r, c).im;
            for (std::uint32_t j = 0; j < d; ++j) {
                const GaussianInt& x = a.at(r, j);
                switch (v.raw(j, c)) {
                    case 0: ore += x.re; oim += x.im; break;
                    case 1: ore -= x.im; oim += x.re; break;
                    case 2: ore -= x.re; oim -= x.im; break;
                    case 3: ore += x.im; oim -= x.re; break;
                    default: break; // zero entry
                }
            }
        }
    }
    return out;
}

ExactScaledMatrix embed_unit(const UnitEntryMatrix& v) {
    ExactScaledMatrix out(v.dim(), 0, 0);
    for (std::uint32_t r = 0; r < v.dim(); ++r)
        for (std::uint32_t c = 0; c < v.dim(); ++c)
            if (!v.zero_at(r, c)) out.at(r, c) = GaussianInt(1, 0).times_i_pow(v.raw(r, c));
    return out;
}

} // namespace mub
