#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "mub/exact_matrix.hpp"
#include "mub/phase_types.hpp"

namespace mub {

// Outcome of a cycle verification run. The MUB property of the bases
// {columns of U^a} is checked through the overlap reduction: the Gram matrix
// between bases a < b is (U^a)^dag U^b = U^{b-a}, so the 2^m+1 bases are
// pairwise unbiased iff every entry of every U^k, 1 <= k <= 2^m, has modulus
// 2^{-m/2}.
struct CycleReport {
    int m = 0;
    std::string mode;                  // exact | float | float-sampled | construction-only
    std::uint64_t bases = 0;           // 2^m + 1 when verified
    std::uint64_t powers_checked = 0;
    bool identity_reached = false;     // U^{2^m+1} == I
    bool trace_power_pass = false;     // tr(U^k) == -1 for all checked k
    bool passed = false;
    std::string note;                  // e.g. "unverified, paper-claimed"
    double wall_time_s = 0.0;

    // exact mode: per-power modulus flags (index k-1 holds power k)
    std::vector<bool> power_pass;

    // float modes
    double tol = 0.0;
    double max_modulus_deviation = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;

    // "key: value" lines.
    std::string text() const;
    // Machine-readable form, stable key order.
    std::string json() const;
};

// Exact tier: m in {1, 2, 4, 6, 8}. Computes W_k = V^k with addition-only
// unit multiplies and checks |entry|^2 against the target derived from
// -tr V (norm2(tr V)^k / 2^m, i.e. 2^{m(k-1)}), plus the exact identity
// W_{2^m+1} = (-tr V)^{2^m+1} I and the trace powers tr(U^k) = -1.
CycleReport verify_cycle_exact(int m);

// Float tier for a materialized unitary (the generator or anything else).
// Verifies unitarity within tol, then the entry moduli of all d powers and
// closure at power d+1.
CycleReport verify_cycle_float(const Eigen::MatrixXcd& u, double tol);

// Sampled float tier for large m (12): tracks a fixed random subset of
// columns through all 2^m+1 generator applications and checks one random
// entry per (power, column) pair, at least min_samples pairs in total.
CycleReport verify_cycle_sampled(int m, double tol, std::uint64_t seed,
                                 std::uint64_t min_samples = 100000);

// Construction-only report for m >= 16 and m = 24: builds B_m (and the phase
// diagonal when materializable) and flags the cycle "unverified,
// paper-claimed".
CycleReport construction_only_report(int m);

// tr(U_m^k) = -1 exactly for all k = 1..2^m; equivalent to the spectrum
// being all (2^m+1)-th roots of unity except 1, each simple.
bool trace_power_check(int m);

// Core of trace_power_check on an arbitrary unit-entry matrix with its
// normalizer: checks tr(W_k) == -(-tr)^k for k = 1..powers.
bool trace_powers_all_minus_one(const UnitEntryMatrix& v, const GaussianInt& trace,
                                std::uint64_t powers);

// Max over column pairs of | |<a|b>|^2 - 1/d | for two orthonormal bases
// given as matrix columns. Throws if either input is not orthonormal
// within tol.
double pairwise_unbiasedness(const Eigen::MatrixXcd& basis_a, const Eigen::MatrixXcd& basis_b,
                             double tol);

} // namespace mub
