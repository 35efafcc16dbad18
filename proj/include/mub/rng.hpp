#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace mub {

// Deterministic random source. Wraps std::mt19937_64 (whose output sequence
// is fixed by the standard) and derives all variates through explicit,
// documented maps, so results are reproducible across platforms and
// standard-library implementations for a given seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n). Rejection-free modulo is fine here; n is
    // tiny compared to 2^64 so the bias is far below statistical relevance,
    // but we reject anyway to keep draws exactly uniform.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below(0)");
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    // Standard normal via Box-Muller on uniform01 pairs.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = uniform01();
        } while (u1 == 0.0);
        u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Multinomial draw: n shots over the probability vector p (must sum to 1
    // within 1e-9). Inverse-CDF per shot; counts sum to n exactly.
    std::vector<std::uint64_t> multinomial(const std::vector<double>& p, std::uint64_t n) {
        double total = 0;
        for (double x : p) {
            if (x < 0) throw std::invalid_argument("multinomial: negative probability");
            total += x;
        }
        if (std::abs(total - 1.0) > 1e-9)
            throw std::invalid_argument("multinomial: probabilities do not sum to 1");
        std::vector<double> cdf(p.size());
        double acc = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            acc += p[i];
            cdf[i] = acc;
        }
        cdf.back() = 1.0;
        std::vector<std::uint64_t> counts(p.size(), 0);
        for (std::uint64_t s = 0; s < n; ++s) {
            double u = uniform01();
            std::size_t lo = 0, hi = cdf.size() - 1;
            while (lo < hi) {
                std::size_t mid = (lo + hi) / 2;
                if (u < cdf[mid])
                    hi = mid;
                else
                    lo = mid + 1;
            }
            ++counts[lo];
        }
        return counts;
    }

  private:
    std::mt19937_64 gen_;
    double spare_ = 0;
    bool have_spare_ = false;
};

} // namespace mub
