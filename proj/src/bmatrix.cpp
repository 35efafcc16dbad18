#include "mub/bmatrix.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace mub {

bool is_doubling_m(int m) {
    if (m < 1 || m > kMaxQubits) return false;
    return (m & (m - 1)) == 0;
}

bool is_tripled_m(int m) { return m == 6 || m == 12 || m == 24; }

std::string supported_m_list() {
    return "1, 2, 4, 8, ..., 256 (doubling chain) or 6, 12, 24 (tripled)";
}

BMatrix::BMatrix(int m) : m_(m), wpr_((m + 63) / 64), rows_(static_cast<std::size_t>(m) * wpr_, 0) {
    if (m < 1) throw std::invalid_argument("BMatrix: size must be positive");
}

bool BMatrix::get(int k, int l) const {
    return (rows_[static_cast<std::size_t>(k) * wpr_ + (l >> 6)] >> (l & 63)) & 1u;
}

void BMatrix::set(int k, int l, bool v) {
    auto put = [&](int r, int c) {
        std::uint64_t bit = std::uint64_t{1} << (c & 63);
        auto& w = rows_[static_cast<std::size_t>(r) * wpr_ + (c >> 6)];
        if (v)
            w |= bit;
        else
            w &= ~bit;
    };
    put(k, l);
    put(l, k);
}

bool BMatrix::is_symmetric() const {
    for (int k = 0; k < m_; ++k)
        for (int l = k + 1; l < m_; ++l)
            if (get(k, l) != get(l, k)) return false;
    return true;
}

int BMatrix::count_diagonal() const {
    int n = 0;
    for (int k = 0; k < m_; ++k) n += get(k, k);
    return n;
}

int BMatrix::count_strict_upper() const {
    int n = 0;
    for (int k = 0; k < m_; ++k)
        for (int l = k + 1; l < m_; ++l) n += get(k, l);
    return n;
}

BMatrix seed_b1() {
    BMatrix b(1);
    b.set(0, 0, true);
    return b;
}

BMatrix doubled(const BMatrix& b) {
    int m = b.size();
    BMatrix out(2 * m);
    for (int k = 0; k < m; ++k) {
        for (int l = k; l < m; ++l)
            if (b.get(k, l)) out.set(k, l, true);
        out.set(k, m + k, true); // identity blocks
    }
    return out;
}

BMatrix tripled(const BMatrix& b) {
    int m = b.size();
    BMatrix out(3 * m);
    // block (i,j) is B for i+j <= 2, zero otherwise
    for (int bi = 0; bi < 3; ++bi)
        for (int bj = bi; bj < 3; ++bj) {
            if (bi + bj > 2) continue;
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    if (b.get(k, l)) out.set(bi * m + k, bj * m + l, true);
        }
    return out;
}

BMatrix build_bmatrix(int m) {
    if (is_doubling_m(m)) {
        BMatrix b = seed_b1();
        while (b.size() < m) b = doubled(b);
        return b;
    }
    if (is_tripled_m(m)) return tripled(build_bmatrix(m / 3));
    throw std::invalid_argument("build_bmatrix: unsupported m=" + std::to_string(m) +
                                "; supported: " + supported_m_list());
}

GateCensus gate_census(const BMatrix& b) {
    return {b.count_diagonal(), b.count_strict_upper()};
}

std::string dump_bmatrix(const BMatrix& b) {
    std::string out = "bmatrix m=" + std::to_string(b.size()) + "\n";
    for (int k = 0; k < b.size(); ++k) {
        for (int l = 0; l < b.size(); ++l) out += b.get(k, l) ? '1' : '0';
        out += '\n';
    }
    return out;
}

BMatrix parse_bmatrix(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("bmatrix parse: empty input");
    int m = 0;
    if (std::sscanf(header.c_str(), "bmatrix m=%d", &m) != 1 || m < 1)
        throw std::runtime_error("bmatrix parse: bad header '" + header + "'");
    std::vector<std::string> lines(m);
    for (int k = 0; k < m; ++k) {
        if (!std::getline(in, lines[k]) || static_cast<int>(lines[k].size()) != m)
            throw std::runtime_error("bmatrix parse: row " + std::to_string(k + 1) +
                                     " missing or wrong length");
        for (char c : lines[k])
            if (c != '0' && c != '1')
                throw std::runtime_error("bmatrix parse: bad character in row " +
                                         std::to_string(k + 1));
    }
    BMatrix b(m);
    for (int k = 0; k < m; ++k)
        for (int l = k; l < m; ++l) {
            if (lines[k][l] != lines[l][k])
                throw std::runtime_error("bmatrix parse: matrix is not symmetric");
            if (lines[k][l] == '1') b.set(k, l, true);
        }
    return b;
}

} // namespace mub
