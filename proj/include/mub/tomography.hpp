#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mub/rng.hpp"

namespace mub {

// d x d density matrix; valid when Hermitian within 1e-12, trace 1 within
// 1e-12 and positive semidefinite down to a -1e-10 eigenvalue floor.
using DensityMatrix = Eigen::MatrixXcd;

void validate_density(const DensityMatrix& rho, double herm_tol = 1e-12,
                      double eig_floor = -1e-10);

DensityMatrix maximally_mixed(int d);
DensityMatrix random_pure_state(int d, Rng& rng);
DensityMatrix random_mixed_state(int d, Rng& rng);

// Binary density-matrix format: 8-byte magic "mubdmatx", u32 m, u32 reserved,
// then 2^m * 2^m little-endian (re, im) float64 pairs, row-major.
void write_density(std::ostream& out, int m, const DensityMatrix& rho);
DensityMatrix read_density(std::istream& in, int* m_out = nullptr);

// Columns of U_m^b for b = 0..2^m (b = 0 is the standard basis): the 2^m + 1
// measurement bases of the scheme. Dense tier, m <= 8.
Eigen::MatrixXcd basis_columns(int m, int b);
std::vector<Eigen::MatrixXcd> mub_bases(int m);

// Born-rule outcome distribution p_i = <e_i| rho |e_i>, clipped to [0, 1];
// the vector sums to 1 within 1e-12 for a valid rho.
std::vector<double> outcome_probabilities(const DensityMatrix& rho,
                                          const Eigen::MatrixXcd& basis);

// Multinomial counts for N shots, deterministic given the generator state.
std::vector<std::uint64_t> sample_counts(const std::vector<double>& p, std::uint64_t shots,
                                         Rng& rng);

// Linear-inversion estimator over a complete MUB set:
//   rho_hat = sum_b sum_i f_i^(b) |e_i^(b)><e_i^(b)| - I.
// Requires exactly 2^m + 1 bases. Hermitian by construction; PSD projection
// is a separate, explicit step.
DensityMatrix reconstruct(const std::vector<std::vector<double>>& frequencies,
                          const std::vector<Eigen::MatrixXcd>& bases);

// Eigenvalue clipping to the PSD cone plus trace renormalization.
DensityMatrix project_psd(const DensityMatrix& rho);

struct ErrorMetrics {
    double fidelity = 0.0;
    double trace_distance = 0.0;
};

// Uhlmann fidelity and trace distance (both in [0, 1]).
ErrorMetrics error_metrics(const DensityMatrix& rho, const DensityMatrix& sigma);

struct TomographyRun {
    int m = 0;
    std::uint64_t shots_per_basis = 0;
    std::uint64_t seed = 0;
    std::string state_spec;
    bool exact_probabilities = false;
    bool psd_projection = false;
    std::vector<std::vector<double>> frequencies; // (2^m + 1) rows of 2^m
    DensityMatrix rho_hat;
    double fidelity = 0.0;
    double trace_distance = 0.0;

    std::string json() const;
};

struct TomographyOptions {
    std::uint64_t shots_per_basis = 10000;
    std::uint64_t seed = 1;
    bool exact_probabilities = false; // infinite-sample limit
    bool psd_projection = false;
    std::string state_spec = "custom";
};

// Full simulated run against a known state: sample (or copy) per-basis
// outcome distributions, reconstruct, and score against rho.
TomographyRun run_tomography(int m, const DensityMatrix& rho, const TomographyOptions& opts);

} // namespace mub
