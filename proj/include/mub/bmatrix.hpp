#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mub/bits.hpp"
#include "mub/limits.hpp"

namespace mub {

// Symmetric m x m matrix over GF(2). It encodes the phase system of the
// generator: viewed as the adjacency matrix of a graph with loops, a loop at
// qubit k means a Phase gate on k and an edge {k,l} means a CPhase gate.
// Rows are bit-packed; entry (k,l) uses 0-based indices in the API, while
// dumps and the emitted circuits label qubits 1-based.
class BMatrix {
  public:
    BMatrix() = default;
    explicit BMatrix(int m);

    int size() const { return m_; }

    bool get(int k, int l) const;
    void set(int k, int l, bool v); // sets (k,l) and (l,k)

    bool is_symmetric() const; // always true through the public API; checked on parse

    // Row k as a bit string (used by the phase evaluators).
    const std::uint64_t* row_words(int k) const { return rows_.data() + k * wpr_; }
    int words_per_row() const { return wpr_; }

    int count_diagonal() const;
    int count_strict_upper() const;

    bool operator==(const BMatrix&) const = default;

  private:
    int m_ = 0;
    int wpr_ = 0; // 64-bit words per row
    std::vector<std::uint64_t> rows_;
};

struct GateCensus {
    int n_phase = 0;  // diagonal ones
    int n_cphase = 0; // strictly-upper ones
    bool operator==(const GateCensus&) const = default;
};

// B_1 = (1).
BMatrix seed_b1();

// Doubling step: B -> [[B, I], [I, 0]], size m -> 2m.
BMatrix doubled(const BMatrix& b);

// Tripling step: B -> [[B, B, B], [B, B, 0], [B, 0, 0]], size m -> 3m.
// Only the doubling-derived seeds B_2, B_4, B_8 are known to give MUBs.
BMatrix tripled(const BMatrix& b);

// B_m for m in {1,2,4,...,256} (doubling chain) or {6,12,24} (tripled).
// Throws std::invalid_argument for any other m, naming the supported set.
BMatrix build_bmatrix(int m);

GateCensus gate_census(const BMatrix& b);

// Text dump: "bmatrix m=<m>" then m lines of m characters '0'/'1'.
// Round trips bit-exactly.
std::string dump_bmatrix(const BMatrix& b);
BMatrix parse_bmatrix(const std::string& text);

} // namespace mub
