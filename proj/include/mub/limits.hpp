#pragma once

#include <cstdint>
#include <string>

namespace mub {

// Register sizes supported by the construction. The doubling chain stops at
// 256 qubits; the tripling scheme is applied once to the 2/4/8-qubit seeds.
inline constexpr int kMaxQubits = 256;

// Materialization caps. Requests above a cap raise std::invalid_argument
// instead of silently truncating.
inline constexpr int kMaxPhaseVectorQubits = 24;   // 2^24 phase exponents
inline constexpr int kMaxDenseHadamardQubits = 13; // 8192 x 8192 signs
inline constexpr int kMaxDenseMatrixQubits = 10;   // dense complex / exact matrices

// Checks m against the doubling chain {1, 2, 4, ..., 256}.
bool is_doubling_m(int m);

// Checks m against the tripled sizes {6, 12, 24}.
bool is_tripled_m(int m);

// Any m the construction supports.
inline bool is_supported_m(int m) { return is_doubling_m(m) || is_tripled_m(m); }

// Sizes whose full MUB cycle is verified exactly by this code base.
inline bool is_exact_verified_m(int m) {
    return m == 1 || m == 2 || m == 4 || m == 6 || m == 8;
}

// "1, 2, 4, ..., 256 or 6, 12, 24" for error messages.
std::string supported_m_list();

} // namespace mub
