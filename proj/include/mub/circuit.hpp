#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mub/bmatrix.hpp"

namespace mub {

// Gate alphabet of the construction. Qubits are labeled 1..m to match the
// dump format; diagonal gates commute, so their order within a list is a
// canonicalization choice, not semantics.
struct Gate {
    enum class Kind { Phase, CPhase, Hadamard, GlobalPhase };

    Kind kind = Kind::Phase;
    int a = 0; // qubit (Phase/Hadamard/CPhase first qubit); 0 for GlobalPhase
    int b = 0; // CPhase second qubit (a < b); otherwise 0
    int t = 0; // Phase: exponent of i (0..3); GlobalPhase: exponent of e^{i pi/4} (0..7)

    static Gate phase(int qubit, int t4) { return {Kind::Phase, qubit, 0, t4}; }
    static Gate cphase(int q1, int q2) { return {Kind::CPhase, q1, q2, 0}; }
    static Gate hadamard(int qubit) { return {Kind::Hadamard, qubit, 0, 0}; }
    static Gate global_phase(int t8) { return {Kind::GlobalPhase, 0, 0, t8}; }

    bool operator==(const Gate&) const = default;
};

struct GateList {
    int m = 0;
    std::vector<Gate> gates;

    bool operator==(const GateList&) const = default;
};

struct CircuitParseError : std::runtime_error {
    CircuitParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
    int line;
};

// Gate order: diagonal gates sorted by (a, b) -- a Phase on qubit q sorts as
// (q, 0), so it precedes CPhase gates sourced at q -- then Hadamards by
// qubit, then global phases. Stable for duplicates.
void canonicalize(GateList& g);

// B -> netlist realizing U: Phase_k(-i) per diagonal one, CPhase_{k,l}(-1)
// per strictly-upper one, a Hadamard on every qubit (normalized inside
// evaluate), and the global phase computed from -1/tr V (never assumed).
GateList compile_circuit(const BMatrix& b);

// Canonical "mubcirc v1" text.
std::string emit(const GateList& g);

// Parses the emitted grammar; '#' starts a comment; gate order is
// re-canonicalized. Malformed input raises CircuitParseError with the
// offending 1-based line number.
GateList parse_circuit(const std::string& text);

// Dense unitary of the netlist, gates applied in sequence order (each gate
// left-multiplies the accumulated matrix). Hadamards are normalized here.
// Capped at kMaxDenseMatrixQubits.
Eigen::MatrixXcd evaluate(const GateList& g);

} // namespace mub
