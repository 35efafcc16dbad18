#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mub {

// Bit string (j_1, ..., j_m) labeling a basis vector of an m-qubit register.
// j_1 is the LEAST significant bit of the linear index: n = sum_k j_k 2^{k-1}.
// Bits are stored packed in 64-bit words; bit k (0-based) lives at
// word k/64, position k%64. Handles m up to 256 and beyond.
class BitString {
  public:
    BitString() = default;
    explicit BitString(int m) : m_(m), w_((m + 63) / 64, 0) {}

    // Low m bits of n, j_1 = bit 0 of n.
    static BitString from_index(std::uint64_t n, int m) {
        BitString s(m);
        if (!s.w_.empty()) s.w_[0] = n;
        s.mask_top();
        return s;
    }

    int size() const { return m_; }

    bool get(int k) const { return (w_[k >> 6] >> (k & 63)) & 1u; }

    void set(int k, bool v) {
        std::uint64_t bit = std::uint64_t{1} << (k & 63);
        if (v)
            w_[k >> 6] |= bit;
        else
            w_[k >> 6] &= ~bit;
    }

    // Hamming weight.
    int weight() const {
        int n = 0;
        for (auto x : w_) n += std::popcount(x);
        return n;
    }

    // Integer dot product sum_k a_k b_k (not reduced mod anything).
    friend int dot(const BitString& a, const BitString& b) {
        if (a.m_ != b.m_) throw std::invalid_argument("BitString dot: length mismatch");
        int n = 0;
        for (std::size_t i = 0; i < a.w_.size(); ++i) n += std::popcount(a.w_[i] & b.w_[i]);
        return n;
    }

    // Bits (j_1, ..., j_{m/2}).
    BitString low_half() const {
        BitString r(m_ / 2);
        for (int k = 0; k < m_ / 2; ++k) r.set(k, get(k));
        return r;
    }

    // Bits (j_{m/2+1}, ..., j_m).
    BitString high_half() const {
        BitString r(m_ / 2);
        for (int k = 0; k < m_ / 2; ++k) r.set(k, get(m_ / 2 + k));
        return r;
    }

    std::uint64_t to_index() const {
        if (m_ > 64) throw std::logic_error("BitString index exceeds 64 bits");
        return w_.empty() ? 0 : w_[0];
    }

    // Packed words, least significant first; (m+63)/64 of them.
    const std::uint64_t* words() const { return w_.data(); }

    bool operator==(const BitString&) const = default;

  private:
    void mask_top() {
        int rem = m_ & 63;
        if (rem && !w_.empty()) w_.back() &= (std::uint64_t{1} << rem) - 1;
    }

    int m_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace mub
