#include "mub/tomography.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "mub/exact_matrix.hpp"
#include "mub/phase_system.hpp"

namespace mub {

namespace {

constexpr char kDensityMagic[8] = {'m', 'u', 'b', 'd', 'm', 'a', 't', 'x'};

Eigen::MatrixXcd u_dense(int m) {
    ExactScaledMatrix u = u_matrix(m);
    Eigen::MatrixXcd out(u.dim(), u.dim());
    for (std::uint32_t r = 0; r < u.dim(); ++r)
        for (std::uint32_t c = 0; c < u.dim(); ++c) out(r, c) = u.value_at(r, c);
    return out;
}

} // namespace

void validate_density(const DensityMatrix& rho, double herm_tol, double eig_floor) {
    const auto d = rho.rows();
    if (d < 1 || rho.cols() != d) throw std::invalid_argument("density: not square");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > herm_tol)
        throw std::invalid_argument("density: not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-12 || std::abs(rho.trace().imag()) > herm_tol)
        throw std::invalid_argument("density: trace != 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < eig_floor)
        throw std::invalid_argument("density: negative eigenvalue below floor");
}

DensityMatrix maximally_mixed(int d) {
    return DensityMatrix::Identity(d, d) / static_cast<double>(d);
}

DensityMatrix random_pure_state(int d, Rng& rng) {
    Eigen::VectorXcd psi(d);
    for (int i = 0; i < d; ++i) psi(i) = std::complex<double>(rng.gaussian(), rng.gaussian());
    psi /= psi.norm();
    return psi * psi.adjoint();
}

DensityMatrix random_mixed_state(int d, Rng& rng) {
    // Wishart: G G^dag / tr, with complex Gaussian G.
    Eigen::MatrixXcd g(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) g(r, c) = std::complex<double>(rng.gaussian(), rng.gaussian());
    DensityMatrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

void write_density(std::ostream& out, int m, const DensityMatrix& rho) {
    const auto d = rho.rows();
    if (d != (Eigen::Index{1} << m) || rho.cols() != d)
        throw std::invalid_argument("write_density: dimension is not 2^m");
    out.write(kDensityMagic, 8);
    unsigned char hdr[8] = {};
    std::uint32_t mm = static_cast<std::uint32_t>(m);
    std::memcpy(hdr, &mm, 4);
    out.write(reinterpret_cast<const char*>(hdr), 8);
    for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c) {
            double re = rho(r, c).real(), im = rho(r, c).imag();
            out.write(reinterpret_cast<const char*>(&re), 8);
            out.write(reinterpret_cast<const char*>(&im), 8);
        }
}

DensityMatrix read_density(std::istream& in, int* m_out) {
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kDensityMagic, 8) != 0)
        throw std::runtime_error("density read: bad magic");
    unsigned char hdr[8];
    in.read(reinterpret_cast<char*>(hdr), 8);
    std::uint32_t m;
    std::memcpy(&m, hdr, 4);
    if (!in || m > 15) throw std::runtime_error("density read: bad header");
    const Eigen::Index d = Eigen::Index{1} << m;
    DensityMatrix rho(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c) {
            double re, im;
            in.read(reinterpret_cast<char*>(&re), 8);
            in.read(reinterpret_cast<char*>(&im), 8);
            rho(r, c) = {re, im};
        }
    if (!in) throw std::runtime_error("density read: truncated entries");
    if (m_out) *m_out = static_cast<int>(m);
    return rho;
}

Eigen::MatrixXcd basis_columns(int m, int b) {
    if (b < 0 || b > (1 << m))
        throw std::invalid_argument("basis_columns: basis index out of range 0..2^m");
    const Eigen::Index d = Eigen::Index{1} << m;
    if (b == 0) return Eigen::MatrixXcd::Identity(d, d);
    Eigen::MatrixXcd u = u_dense(m);
    Eigen::MatrixXcd w = u;
    for (int k = 1; k < b; ++k) w = w * u;
    return w;
}

std::vector<Eigen::MatrixXcd> mub_bases(int m) {
    const Eigen::Index d = Eigen::Index{1} << m;
    std::vector<Eigen::MatrixXcd> bases;
    bases.reserve(d + 1);
    bases.push_back(Eigen::MatrixXcd::Identity(d, d));
    Eigen::MatrixXcd u = u_dense(m);
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Identity(d, d);
    for (Eigen::Index b = 1; b <= d; ++b) {
        w = w * u;
        bases.push_back(w);
    }
    return bases;
}

std::vector<double> outcome_probabilities(const DensityMatrix& rho,
                                          const Eigen::MatrixXcd& basis) {
    validate_density(rho);
    const auto d = rho.rows();
    if (basis.rows() != d || basis.cols() != d)
        throw std::invalid_argument("outcome_probabilities: basis dimension mismatch");
    std::vector<double> p(static_cast<std::size_t>(d));
    double total = 0;
    for (Eigen::Index i = 0; i < d; ++i) {
        std::complex<double> v = basis.col(i).adjoint() * rho * basis.col(i);
        double pi = std::clamp(v.real(), 0.0, 1.0);
        p[static_cast<std::size_t>(i)] = pi;
        total += pi;
    }
    // Renormalize away the clipping dust so downstream samplers see a
    // distribution; deviations beyond 1e-12 are a caller bug.
    if (std::abs(total - 1.0) > 1e-12 && std::abs(total - 1.0) < 1e-9)
        for (auto& x : p) x /= total;
    else if (std::abs(total - 1.0) >= 1e-9)
        throw std::invalid_argument("outcome_probabilities: probabilities sum to " +
                                    std::to_string(total));
    return p;
}

std::vector<std::uint64_t> sample_counts(const std::vector<double>& p, std::uint64_t shots,
                                         Rng& rng) {
    return rng.multinomial(p, shots);
}

DensityMatrix reconstruct(const std::vector<std::vector<double>>& frequencies,
                          const std::vector<Eigen::MatrixXcd>& bases) {
    if (bases.empty()) throw std::invalid_argument("reconstruct: no bases");
    const auto d = bases[0].rows();
    if (static_cast<Eigen::Index>(bases.size()) != d + 1)
        throw std::invalid_argument("reconstruct: need exactly d+1 bases, got " +
                                    std::to_string(bases.size()));
    if (frequencies.size() != bases.size())
        throw std::invalid_argument("reconstruct: frequency row per basis required");
    DensityMatrix rho = -DensityMatrix::Identity(d, d);
    for (std::size_t b = 0; b < bases.size(); ++b) {
        if (static_cast<Eigen::Index>(frequencies[b].size()) != d)
            throw std::invalid_argument("reconstruct: frequency row length mismatch");
        for (Eigen::Index i = 0; i < d; ++i)
            rho += frequencies[b][static_cast<std::size_t>(i)] *
                   (bases[b].col(i) * bases[b].col(i).adjoint());
    }
    // Symmetrize away float dust; the estimator is Hermitian in exact arithmetic.
    return 0.5 * (rho + rho.adjoint().eval());
}

DensityMatrix project_psd(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
    Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
    double tr = lam.sum();
    if (tr <= 0) throw std::invalid_argument("project_psd: all eigenvalues clipped to zero");
    lam /= tr;
    return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

// 0.5 ||A - B||_1 for Hermitian A, B; defined even when B is a raw
// linear-inversion estimate outside the PSD cone.
double trace_distance_hermitian(const DensityMatrix& a, const DensityMatrix& b) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a - b, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2; eigenvalues are
// clipped at zero to absorb float dust.
double fidelity_psd(const DensityMatrix& rho, const DensityMatrix& sigma) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_rho(rho);
    Eigen::VectorXd lam = es_rho.eigenvalues().cwiseMax(0.0);
    Eigen::MatrixXcd sqrt_rho = es_rho.eigenvectors() * lam.cwiseSqrt().asDiagonal() *
                                es_rho.eigenvectors().adjoint();
    Eigen::MatrixXcd inner = sqrt_rho * sigma * sqrt_rho;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_inner(0.5 * (inner + inner.adjoint()),
                                                             Eigen::EigenvaluesOnly);
    double root_sum = es_inner.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    return std::clamp(root_sum * root_sum, 0.0, 1.0);
}

} // namespace

ErrorMetrics error_metrics(const DensityMatrix& rho, const DensityMatrix& sigma) {
    validate_density(rho, 1e-10, -1e-8);
    validate_density(sigma, 1e-10, -1e-8);
    return {fidelity_psd(rho, sigma),
            std::clamp(trace_distance_hermitian(rho, sigma), 0.0, 1.0)};
}

std::string TomographyRun::json() const {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["shots_per_basis"] = shots_per_basis;
    j["seed"] = seed;
    j["state_spec"] = state_spec;
    j["exact_probabilities"] = exact_probabilities;
    j["psd_projection"] = psd_projection;
    j["frequencies"] = frequencies;
    nlohmann::ordered_json re = nlohmann::ordered_json::array();
    nlohmann::ordered_json im = nlohmann::ordered_json::array();
    for (Eigen::Index r = 0; r < rho_hat.rows(); ++r) {
        nlohmann::ordered_json rrow = nlohmann::ordered_json::array();
        nlohmann::ordered_json irow = nlohmann::ordered_json::array();
        for (Eigen::Index c = 0; c < rho_hat.cols(); ++c) {
            rrow.push_back(rho_hat(r, c).real());
            irow.push_back(rho_hat(r, c).imag());
        }
        re.push_back(rrow);
        im.push_back(irow);
    }
    j["rho_hat"] = {{"re", re}, {"im", im}};
    j["fidelity"] = fidelity;
    j["trace_distance"] = trace_distance;
    return j.dump(2) + "\n";
}

TomographyRun run_tomography(int m, const DensityMatrix& rho, const TomographyOptions& opts) {
    validate_density(rho);
    TomographyRun run;
    run.m = m;
    run.shots_per_basis = opts.exact_probabilities ? 0 : opts.shots_per_basis;
    run.seed = opts.seed;
    run.state_spec = opts.state_spec;
    run.exact_probabilities = opts.exact_probabilities;
    run.psd_projection = opts.psd_projection;

    std::vector<Eigen::MatrixXcd> bases = mub_bases(m);
    Rng rng(opts.seed);
    for (const auto& basis : bases) {
        std::vector<double> p = outcome_probabilities(rho, basis);
        if (opts.exact_probabilities) {
            run.frequencies.push_back(p);
        } else {
            std::vector<std::uint64_t> counts = sample_counts(p, opts.shots_per_basis, rng);
            std::vector<double> f(p.size());
            for (std::size_t i = 0; i < p.size(); ++i)
                f[i] = static_cast<double>(counts[i]) / static_cast<double>(opts.shots_per_basis);
            run.frequencies.push_back(std::move(f));
        }
    }

    run.rho_hat = reconstruct(run.frequencies, bases);
    if (opts.psd_projection) run.rho_hat = project_psd(run.rho_hat);

    // Trace distance scores rho_hat as reported (the raw estimator may sit
    // outside the PSD cone); fidelity needs a state, so the unprojected
    // estimate is projected just for that number.
    run.trace_distance = std::clamp(trace_distance_hermitian(rho, run.rho_hat), 0.0, 1.0);
    run.fidelity = fidelity_psd(rho, opts.psd_projection ? run.rho_hat : project_psd(run.rho_hat));
    return run;
}

} // namespace mub
