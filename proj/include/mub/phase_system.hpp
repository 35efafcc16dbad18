#pragma once

#include <cstdint>

#include "mub/bits.hpp"
#include "mub/bmatrix.hpp"
#include "mub/exact_matrix.hpp"
#include "mub/gaussian.hpp"
#include "mub/phase_types.hpp"

namespace mub {

// Phase p_j = i^{sum_kl b_kl j_k j_l} * (-1)^{sum_k b_kk j_k}, both sums taken
// over the integers (not mod 2). Returned as the exponent of i.
Mod4 phase_from_b(const BMatrix& b, const BitString& j);

// Same, for a linear index n (m <= 64).
Mod4 phase_from_b(const BMatrix& b, std::uint64_t n);

// All 2^m phases of B. Capped at kMaxPhaseVectorQubits.
PhaseVector phase_vector(const BMatrix& b);

// Row-major flattening: output index r*d + c holds entry (r,c). Applied to
// V_m it yields the phase diagonal of the 2m-qubit system.
PhaseVector chop(const UnitEntryMatrix& v);

// Sylvester-Hadamard matrix: H_0 = (1), H_{m+1} = [[H,H],[H,-H]]. Entries are
// +-1 (exponents 0/2); entry (i,j) = (-1)^{popcount(i & j)}.
UnitEntryMatrix sylvester(int m);

// Non-normalized generator V_m = H^{(x)m} P_m for any supported m that is
// materializable (capped at kMaxDenseHadamardQubits).
UnitEntryMatrix v_matrix(int m);

// Entry of V_m by the closed form: V_m[i][j] = (-1)^x (-i)^{j_1} with
// x = i.j + (j_1..j_{m/2}).(j_{m/2+1}..j_m) + ... + j_1 j_2. Doubling-chain m
// only; O(m) per call, no materialization.
Mod4 v_entry(int m, const BitString& i, const BitString& j);

// Same value, computed by the halving recursion
//   V_{2m}(i,j) = (-1)^{i.j} V_m(high(j), low(j)),  V_1(i,j) = (-1)^{ij}(-i)^j.
// Kept as an independent code path; agreement with v_entry and phase_from_b
// is a tested invariant.
Mod4 v_entry_recursive(int m, const BitString& i, const BitString& j);

// Exact trace of V_m by per-index diagonal summation (V)_{jj} = (-1)^{j.j} p_j.
// Works for every supported m up to the kMaxPhaseVectorQubits cap.
GaussianInt trace_v(int m);

// Same summation for an arbitrary valid B (the circuit compiler needs the
// trace of H^{(x)m} P_b even off the supported chain).
GaussianInt trace_v(const BMatrix& b);

// Exponent t8 of the global phase of U_m: -1/tr(V_m) = omega^{t8} 2^{-m/2}
// with omega = e^{i pi/4}. Throws if the trace cannot normalize the cycle
// (|tr V|^2 != 2^m, which would break unitarity of -V/tr V).
int global_phase_t8(int m);
int global_phase_t8_from_trace(const GaussianInt& tr, int m);

// Exact normalized generator U_m = -V_m / tr(V_m), represented as
// omega^{t8} 2^{-m/2} V_m. Materializable m only.
ExactScaledMatrix u_matrix(int m);

} // namespace mub
