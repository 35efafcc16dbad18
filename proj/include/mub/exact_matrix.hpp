#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "mub/gaussian.hpp"
#include "mub/phase_types.hpp"

namespace mub {

// Dense matrix of Gaussian integers with a factored-out global scale and
// phase: value = omega^t * 2^{-s/2} * G, where omega = e^{i pi/4}. The
// eighth-root phase convention covers both the i^t cases (t even) and the
// m = 1 generator, whose global phase is e^{i 3pi/4}. No silent rescaling:
// s and t only change through explicit operations, so norm checks on G read
// directly as powers of two.
class ExactScaledMatrix {
  public:
    ExactScaledMatrix() = default;
    ExactScaledMatrix(std::uint32_t d, std::int64_t scale_s, int phase_t8)
        : d_(d), s_(scale_s), t8_(((phase_t8 % 8) + 8) % 8),
          g_(static_cast<std::size_t>(d) * d) {}

    static ExactScaledMatrix identity(std::uint32_t d);

    std::uint32_t dim() const { return d_; }
    std::int64_t scale_exponent() const { return s_; }
    int phase_exponent() const { return t8_; }

    const GaussianInt& at(std::uint32_t r, std::uint32_t c) const {
        return g_[static_cast<std::size_t>(r) * d_ + c];
    }
    GaussianInt& at(std::uint32_t r, std::uint32_t c) {
        return g_[static_cast<std::size_t>(r) * d_ + c];
    }

    GaussianInt trace() const;

    // G compared entrywise; scale and phase must match too.
    bool operator==(const ExactScaledMatrix&) const = default;

    // Explicit normalization (never applied silently): folds the even part
    // of the phase into G and extracts every common (1+i) factor, each of
    // which trades one unit of s for one unit of t. The semantic value is
    // unchanged; powers of the generator reduce to the plain identity form.
    ExactScaledMatrix reduced() const;

    // Semantic value of entry (r,c) as a double-precision complex number.
    std::complex<double> value_at(std::uint32_t r, std::uint32_t c) const;

    // Dump: header "exact d=<d> s=<s> t=<t>", then d lines of d "a+bi" tokens.
    std::string dump() const;
    static ExactScaledMatrix parse(const std::string& text);

  private:
    std::uint32_t d_ = 0;
    std::int64_t s_ = 0;
    int t8_ = 0;
    std::vector<GaussianInt> g_;
};

// Exact product. G_out = G_A * G_B, s_out = s_A + s_B, t_out = t_A + t_B mod 8.
ExactScaledMatrix exact_matmul(const ExactScaledMatrix& a, const ExactScaledMatrix& b);

// A times a matrix of fourth roots of unity, using only additions and
// component swaps (no bignum multiplications). Equals exact_matmul with the
// unit matrix embedded at s = 0, t = 0.
ExactScaledMatrix unit_right_multiply(const ExactScaledMatrix& a, const UnitEntryMatrix& v);

// Lift a unit-entry matrix to an exact matrix with s = 0, t = 0.
ExactScaledMatrix embed_unit(const UnitEntryMatrix& v);

} // namespace mub
