#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mub {

// Gaussian integer a + bi with arbitrary-precision components. Backed by GMP,
// so products and the norm checks on matrix powers are exact at any size.
struct GaussianInt {
    mpz_class re = 0;
    mpz_class im = 0;

    GaussianInt() = default;
    GaussianInt(long a, long b) : re(a), im(b) {}
    GaussianInt(mpz_class a, mpz_class b) : re(std::move(a)), im(std::move(b)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianInt conj() const { return {re, -im}; }

    // |a+bi|^2 = a^2 + b^2.
    mpz_class norm2() const { return re * re + im * im; }

    // This value times i^t, t mod 4. Pure component swaps and sign flips.
    GaussianInt times_i_pow(int t) const {
        switch (((t % 4) + 4) % 4) {
            case 0: return *this;
            case 1: return {-im, re};
            case 2: return {-re, -im};
            default: return {im, -re};
        }
    }

    GaussianInt operator-() const { return {-re, -im}; }

    GaussianInt& operator+=(const GaussianInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    GaussianInt& operator-=(const GaussianInt& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
    friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }

    // (a+bi)(c+di) = (ac - bd) + (ad + bc)i.
    friend GaussianInt operator*(const GaussianInt& x, const GaussianInt& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }

    bool operator==(const GaussianInt&) const = default;

    // "a+bi" / "a-bi" with decimal components, e.g. "1+0i", "-3+2i", "0-16i".
    std::string str() const {
        std::string s = re.get_str();
        s += (im >= 0) ? "+" : "-";
        s += mpz_class(abs(im)).get_str();
        s += 'i';
        return s;
    }

    static GaussianInt parse(const std::string& tok) {
        if (tok.size() < 4 || tok.back() != 'i')
            throw std::runtime_error("GaussianInt parse: bad token '" + tok + "'");
        // find the sign separating the parts (skip a leading sign of re)
        std::size_t split = std::string::npos;
        for (std::size_t i = 1; i + 1 < tok.size(); ++i)
            if (tok[i] == '+' || tok[i] == '-') split = i;
        if (split == std::string::npos)
            throw std::runtime_error("GaussianInt parse: bad token '" + tok + "'");
        std::string im_part = tok.substr(split, tok.size() - split - 1);
        if (im_part[0] == '+') im_part.erase(0, 1); // mpz rejects a leading '+'
        GaussianInt g;
        try {
            g.re = mpz_class(tok.substr(0, split));
            g.im = mpz_class(im_part);
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("GaussianInt parse: bad token '" + tok + "'");
        }
        return g;
    }

    // Exact power with non-negative exponent.
    GaussianInt pow(std::uint64_t k) const {
        GaussianInt acc(1, 0);
        GaussianInt base = *this;
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }
};

} // namespace mub
