#include "mub/phase_types.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace mub {

UnitEntryMatrix UnitEntryMatrix::identity(int m) {
    UnitEntryMatrix v(m);
    for (std::uint32_t r = 0; r < v.dim(); ++r)
        for (std::uint32_t c = 0; c < v.dim(); ++c)
            if (r != c) v.set_zero(r, c);
    return v;
}

std::string UnitEntryMatrix::dump() const {
    std::string out = "unitmatrix m=" + std::to_string(m_) + "\n";
    for (std::uint32_t r = 0; r < d_; ++r) {
        for (std::uint32_t c = 0; c < d_; ++c) {
            if (c) out += ' ';
            out += zero_at(r, c) ? std::string("0") : at(r, c).token();
        }
        out += '\n';
    }
    return out;
}

UnitEntryMatrix UnitEntryMatrix::parse(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("unitmatrix parse: empty input");
    int m = -1;
    if (std::sscanf(header.c_str(), "unitmatrix m=%d", &m) != 1 || m < 0)
        throw std::runtime_error("unitmatrix parse: bad header '" + header + "'");
    UnitEntryMatrix v(m);
    for (std::uint32_t r = 0; r < v.dim(); ++r)
        for (std::uint32_t c = 0; c < v.dim(); ++c) {
            std::string tok;
            if (!(in >> tok))
                throw std::runtime_error("unitmatrix parse: truncated at row " +
                                         std::to_string(r + 1));
            if (tok == "0") {
                v.set_zero(r, c);
                continue;
            }
            int t = -1;
            if (tok == "1") t = 0;
            else if (tok == "i") t = 1;
            else if (tok == "-1") t = 2;
            else if (tok == "-i") t = 3;
            if (t < 0) throw std::runtime_error("unitmatrix parse: bad token '" + tok + "'");
            v.set(r, c, Mod4(t));
        }
    return v;
}

} // namespace mub
