#include "mub/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mub/phase_system.hpp"

namespace mub {

namespace {

int order_rank(const Gate& g) {
    switch (g.kind) {
        case Gate::Kind::Phase:
        case Gate::Kind::CPhase: return 0;
        case Gate::Kind::Hadamard: return 1;
        case Gate::Kind::GlobalPhase: return 2;
    }
    return 3;
}

} // namespace

void canonicalize(GateList& g) {
    std::stable_sort(g.gates.begin(), g.gates.end(), [](const Gate& x, const Gate& y) {
        int rx = order_rank(x), ry = order_rank(y);
        if (rx != ry) return rx < ry;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
}

GateList compile_circuit(const BMatrix& b) {
    int m = b.size();
    GateList g;
    g.m = m;
    for (int k = 0; k < m; ++k)
        if (b.get(k, k)) g.gates.push_back(Gate::phase(k + 1, 3)); // i^3 = -i
    for (int k = 0; k < m; ++k)
        for (int l = k + 1; l < m; ++l)
            if (b.get(k, l)) g.gates.push_back(Gate::cphase(k + 1, l + 1));
    for (int q = 1; q <= m; ++q) g.gates.push_back(Gate::hadamard(q));
    g.gates.push_back(Gate::global_phase(global_phase_t8_from_trace(trace_v(b), m)));
    canonicalize(g);
    return g;
}

std::string emit(const GateList& g) {
    GateList canon = g;
    canonicalize(canon);
    std::string out = "mubcirc v1\nqubits " + std::to_string(canon.m) + "\n";
    for (const Gate& gate : canon.gates) {
        switch (gate.kind) {
            case Gate::Kind::Phase:
                out += "phase " + std::to_string(gate.a) + " " + std::to_string(gate.t) + "\n";
                break;
            case Gate::Kind::CPhase:
                out += "cphase " + std::to_string(gate.a) + " " + std::to_string(gate.b) + "\n";
                break;
            case Gate::Kind::Hadamard:
                out += "h " + std::to_string(gate.a) + "\n";
                break;
            case Gate::Kind::GlobalPhase:
                out += "gphase " + std::to_string(gate.t) + "\n";
                break;
        }
    }
    return out;
}

GateList parse_circuit(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool have_magic = false, have_qubits = false;
    GateList g;

    auto parse_int = [&](const std::string& tok, const char* what) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (...) {
            throw CircuitParseError(lineno, std::string("expected ") + what + ", got '" + tok + "'");
        }
        if (pos != tok.size())
            throw CircuitParseError(lineno, std::string("expected ") + what + ", got '" + tok + "'");
        return v;
    };
    auto check_qubit = [&](int q) {
        if (q < 1 || q > g.m)
            throw CircuitParseError(lineno, "qubit " + std::to_string(q) + " out of range 1.." +
                                                std::to_string(g.m));
    };

    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string op;
        if (!(ls >> op)) continue; // blank or comment-only line

        std::vector<std::string> args;
        std::string tok;
        while (ls >> tok) args.push_back(tok);

        if (op == "mubcirc") {
            if (have_magic) throw CircuitParseError(lineno, "duplicate header");
            if (args.size() != 1 || args[0] != "v1")
                throw CircuitParseError(lineno, "unsupported format version");
            have_magic = true;
            continue;
        }
        if (!have_magic) throw CircuitParseError(lineno, "missing 'mubcirc v1' header");

        if (op == "qubits") {
            if (have_qubits) throw CircuitParseError(lineno, "duplicate qubits line");
            if (args.size() != 1) throw CircuitParseError(lineno, "qubits takes one argument");
            int m = parse_int(args[0], "qubit count");
            if (m < 1 || m > kMaxQubits)
                throw CircuitParseError(lineno, "qubit count out of range 1.." +
                                                    std::to_string(kMaxQubits));
            g.m = m;
            have_qubits = true;
            continue;
        }
        if (!have_qubits) throw CircuitParseError(lineno, "missing 'qubits' line");

        if (op == "phase") {
            if (args.size() != 2) throw CircuitParseError(lineno, "phase takes qubit and exponent");
            int q = parse_int(args[0], "qubit");
            int t = parse_int(args[1], "exponent");
            check_qubit(q);
            if (t < 0 || t > 3) throw CircuitParseError(lineno, "phase exponent must be 0..3");
            g.gates.push_back(Gate::phase(q, t));
        } else if (op == "cphase") {
            if (args.size() != 2) throw CircuitParseError(lineno, "cphase takes two qubits");
            int q1 = parse_int(args[0], "qubit");
            int q2 = parse_int(args[1], "qubit");
            check_qubit(q1);
            check_qubit(q2);
            if (q1 == q2) throw CircuitParseError(lineno, "cphase qubits must differ");
            if (q1 > q2) std::swap(q1, q2); // source and target are interchangeable
            g.gates.push_back(Gate::cphase(q1, q2));
        } else if (op == "h") {
            if (args.size() != 1) throw CircuitParseError(lineno, "h takes one qubit");
            int q = parse_int(args[0], "qubit");
            check_qubit(q);
            g.gates.push_back(Gate::hadamard(q));
        } else if (op == "gphase") {
            if (args.size() != 1) throw CircuitParseError(lineno, "gphase takes one exponent");
            int t = parse_int(args[0], "exponent");
            if (t < 0 || t > 7) throw CircuitParseError(lineno, "gphase exponent must be 0..7");
            g.gates.push_back(Gate::global_phase(t));
        } else {
            throw CircuitParseError(lineno, "unknown gate '" + op + "'");
        }
    }
    if (!have_magic) throw CircuitParseError(lineno ? lineno : 1, "missing 'mubcirc v1' header");
    if (!have_qubits) throw CircuitParseError(lineno ? lineno : 1, "missing 'qubits' line");
    canonicalize(g);
    return g;
}

Eigen::MatrixXcd evaluate(const GateList& g) {
    if (g.m > kMaxDenseMatrixQubits)
        throw std::invalid_argument("evaluate: m exceeds the dense cap (m <= " +
                                    std::to_string(kMaxDenseMatrixQubits) + ")");
    const Eigen::Index d = Eigen::Index{1} << g.m;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(d, d);
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    static constexpr std::complex<double> kI4[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

    for (const Gate& gate : g.gates) {
        switch (gate.kind) {
            case Gate::Kind::Phase: {
                Eigen::Index bit = Eigen::Index{1} << (gate.a - 1);
                for (Eigen::Index r = 0; r < d; ++r)
                    if (r & bit) u.row(r) *= kI4[gate.t & 3];
                break;
            }
            case Gate::Kind::CPhase: {
                Eigen::Index ba = Eigen::Index{1} << (gate.a - 1);
                Eigen::Index bb = Eigen::Index{1} << (gate.b - 1);
                for (Eigen::Index r = 0; r < d; ++r)
                    if ((r & ba) && (r & bb)) u.row(r) *= -1.0;
                break;
            }
            case Gate::Kind::Hadamard: {
                Eigen::Index bit = Eigen::Index{1} << (gate.a - 1);
                for (Eigen::Index r = 0; r < d; ++r) {
                    if (r & bit) continue;
                    Eigen::RowVectorXcd top = u.row(r);
                    Eigen::RowVectorXcd bot = u.row(r | bit);
                    u.row(r) = (top + bot) * inv_sqrt2;
                    u.row(r | bit) = (top - bot) * inv_sqrt2;
                }
                break;
            }
            case Gate::Kind::GlobalPhase: {
                u *= std::polar(1.0, std::numbers::pi * 0.25 * gate.t);
                break;
            }
        }
    }
    return u;
}

} // namespace mub
