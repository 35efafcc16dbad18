#include "mub/phase_system.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace mub {

Mod4 phase_from_b(const BMatrix& b, const BitString& j) {
    int m = b.size();
    if (j.size() != m) throw std::invalid_argument("phase_from_b: dimension mismatch");
    // sum_{k,l} b_kl j_k j_l = sum_{k: j_k=1} |row_k & j|
    int s1 = 0, s2 = 0;
    int wpr = b.words_per_row();
    const std::uint64_t* jw = j.words();
    for (int k = 0; k < m; ++k) {
        if (!j.get(k)) continue;
        const std::uint64_t* row = b.row_words(k);
        for (int w = 0; w < wpr; ++w) s1 += std::popcount(row[w] & jw[w]);
        if (b.get(k, k)) ++s2;
    }
    return Mod4(s1 + 2 * s2);
}

Mod4 phase_from_b(const BMatrix& b, std::uint64_t n) {
    int m = b.size();
    if (m > 64) throw std::invalid_argument("phase_from_b: index form needs m <= 64");
    int s1 = 0, s2 = 0;
    for (int k = 0; k < m; ++k) {
        if (!((n >> k) & 1)) continue;
        s1 += std::popcount(b.row_words(k)[0] & n);
        if (b.get(k, k)) ++s2;
    }
    return Mod4(s1 + 2 * s2);
}

PhaseVector phase_vector(const BMatrix& b) {
    int m = b.size();
    if (m > kMaxPhaseVectorQubits)
        throw std::invalid_argument("phase_vector: 2^" + std::to_string(m) +
                                    " entries exceed the materialization cap (m <= " +
                                    std::to_string(kMaxPhaseVectorQubits) + ")");
    PhaseVector p(m);
    for (std::uint64_t n = 0; n < p.size(); ++n) p.set(n, phase_from_b(b, n));
    return p;
}

PhaseVector chop(const UnitEntryMatrix& v) {
    std::uint32_t d = v.dim();
    PhaseVector out(2 * v.qubits());
    for (std::uint32_t r = 0; r < d; ++r)
        for (std::uint32_t c = 0; c < d; ++c)
            out.set(static_cast<std::uint64_t>(r) * d + c, v.at(r, c));
    return out;
}

UnitEntryMatrix sylvester(int m) {
    if (m < 0) throw std::invalid_argument("sylvester: negative m");
    if (m > kMaxDenseHadamardQubits)
        throw std::invalid_argument("sylvester: m=" + std::to_string(m) +
                                    " exceeds the dense cap (m <= " +
                                    std::to_string(kMaxDenseHadamardQubits) + ")");
    UnitEntryMatrix h(m);
    std::uint32_t d = h.dim();
    for (std::uint32_t r = 0; r < d; ++r)
        for (std::uint32_t c = 0; c < d; ++c)
            h.set(r, c, Mod4(2 * std::popcount(r & c)));
    return h;
}

UnitEntryMatrix v_matrix(int m) {
    if (!is_supported_m(m))
        throw std::invalid_argument("v_matrix: unsupported m=" + std::to_string(m) +
                                    "; supported: " + supported_m_list());
    if (m > kMaxDenseHadamardQubits)
        throw std::invalid_argument("v_matrix: m=" + std::to_string(m) +
                                    " exceeds the dense cap (m <= " +
                                    std::to_string(kMaxDenseHadamardQubits) + ")");
    PhaseVector p = phase_vector(build_bmatrix(m));
    UnitEntryMatrix v = sylvester(m);
    std::uint32_t d = v.dim();
    for (std::uint32_t r = 0; r < d; ++r)
        for (std::uint32_t c = 0; c < d; ++c)
            v.set(r, c, v.at(r, c) * p.at(c));
    return v;
}

Mod4 v_entry(int m, const BitString& i, const BitString& j) {
    if (!is_doubling_m(m))
        throw std::invalid_argument("v_entry: closed form requires the doubling chain");
    if (i.size() != m || j.size() != m)
        throw std::invalid_argument("v_entry: index length mismatch");
    int x = dot(i, j);
    for (int len = m / 2; len >= 1; len /= 2)
        for (int k = 0; k < len; ++k)
            if (j.get(k) && j.get(k + len)) ++x;
    return Mod4(2 * x + 3 * (j.get(0) ? 1 : 0));
}

Mod4 v_entry_recursive(int m, const BitString& i, const BitString& j) {
    if (!is_doubling_m(m))
        throw std::invalid_argument("v_entry_recursive: requires the doubling chain");
    if (i.size() != m || j.size() != m)
        throw std::invalid_argument("v_entry_recursive: index length mismatch");
    if (m == 1) {
        int ij = (i.get(0) && j.get(0)) ? 1 : 0;
        return Mod4(2 * ij + 3 * (j.get(0) ? 1 : 0));
    }
    Mod4 outer(2 * dot(i, j));
    return outer * v_entry_recursive(m / 2, j.high_half(), j.low_half());
}

GaussianInt trace_v(const BMatrix& b) {
    int m = b.size();
    if (m > kMaxPhaseVectorQubits)
        throw std::invalid_argument("trace_v: m=" + std::to_string(m) +
                                    " exceeds the summation cap (m <= " +
                                    std::to_string(kMaxPhaseVectorQubits) + ")");
    // (V)_{jj} = (-1)^{|j|} p_j; accumulate the four exponent buckets.
    std::int64_t count[4] = {0, 0, 0, 0};
    std::uint64_t d = std::uint64_t{1} << m;
    for (std::uint64_t n = 0; n < d; ++n) {
        Mod4 t = phase_from_b(b, n) * Mod4(2 * std::popcount(n));
        ++count[t.t];
    }
    return {mpz_class(static_cast<long>(count[0] - count[2])),
            mpz_class(static_cast<long>(count[1] - count[3]))};
}

GaussianInt trace_v(int m) {
    if (!is_supported_m(m))
        throw std::invalid_argument("trace_v: unsupported m=" + std::to_string(m) +
                                    "; supported: " + supported_m_list());
    if (m <= kMaxPhaseVectorQubits) return trace_v(build_bmatrix(m));
    // Doubling chain beyond the summation cap (tripled m never reaches it):
    // writing the diagonal through the chop recursion and summing the row
    // index first collapses the trace to a single closed-form entry,
    //   tr V_{2m} = sum_{i,j} (-1)^{|i|+|j|} (V_m)_{ij} = 2^m V_{m/2}(1..1, 1..1),
    // evaluated exactly in O(m). Cross-checked against summation for m <= 24.
    int half = m / 2, quarter = m / 4;
    BitString ones(quarter);
    for (int k = 0; k < quarter; ++k) ones.set(k, true);
    Mod4 entry = v_entry(quarter, ones, ones);
    GaussianInt scale(mpz_class(1) << half, 0);
    return scale.times_i_pow(entry.t);
}

int global_phase_t8_from_trace(const GaussianInt& tr, int m) {
    if (tr.is_zero()) throw std::runtime_error("global_phase_t8: tr V is zero, cannot normalize");
    mpz_class two_m = mpz_class(1) << m;
    if (tr.norm2() != two_m)
        throw std::runtime_error("global_phase_t8: |tr V|^2 != 2^m at m=" + std::to_string(m) +
                                 "; -V/tr V is not unitary");
    // tr V = omega^{t'} 2^{m/2}: even t' and |re|,|im| in {0, 2^{m/2}}, or odd
    // t' with |re| = |im| = 2^{(m-1)/2}.
    int tprime = -1;
    if (tr.im == 0)
        tprime = (tr.re > 0) ? 0 : 4;
    else if (tr.re == 0)
        tprime = (tr.im > 0) ? 2 : 6;
    else if (tr.re == tr.im)
        tprime = (tr.re > 0) ? 1 : 5;
    else if (tr.re == -tr.im)
        tprime = (tr.im > 0) ? 3 : 7;
    if (tprime < 0)
        throw std::runtime_error("global_phase_t8: tr V is not an eighth root times 2^{m/2}");
    // -1 / (omega^{t'} 2^{m/2}) = omega^{4 - t'} 2^{-m/2}
    return ((4 - tprime) % 8 + 8) % 8;
}

int global_phase_t8(int m) { return global_phase_t8_from_trace(trace_v(m), m); }

ExactScaledMatrix u_matrix(int m) {
    if (!is_supported_m(m))
        throw std::invalid_argument("u_matrix: unsupported m=" + std::to_string(m) +
                                    "; supported: " + supported_m_list());
    if (m > kMaxDenseMatrixQubits)
        throw std::invalid_argument("u_matrix: m=" + std::to_string(m) +
                                    " exceeds the dense cap (m <= " +
                                    std::to_string(kMaxDenseMatrixQubits) + ")");
    int t8 = global_phase_t8(m);
    UnitEntryMatrix v = v_matrix(m);
    ExactScaledMatrix u(v.dim(), m, t8);
    for (std::uint32_t r = 0; r < v.dim(); ++r)
        for (std::uint32_t c = 0; c < v.dim(); ++c) {
            GaussianInt one(1, 0);
            u.at(r, c) = one.times_i_pow(v.at(r, c).t);
        }
    return u;
}

} // namespace mub
