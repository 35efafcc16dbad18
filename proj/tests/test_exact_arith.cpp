#include <doctest.h>

#include <string>
#include <vector>

#include "mub/exact_matrix.hpp"
#include "mub/phase_system.hpp"
#include "mub/rng.hpp"

using namespace mub;

// ---------------------------------------------------------------------------
// Reference bignum arithmetic, independent of GMP: decimal strings over
// base-10^9 limbs with schoolbook multiplication. Only used as the oracle for
// GaussianInt products.
namespace {

using Nat = std::vector<std::uint32_t>; // little-endian base 10^9
constexpr std::uint64_t kBase = 1000000000;

Nat nat_from_decimal(const std::string& s) {
    Nat n;
    for (int end = static_cast<int>(s.size()); end > 0; end -= 9) {
        int begin = std::max(0, end - 9);
        n.push_back(static_cast<std::uint32_t>(std::stoul(s.substr(begin, end - begin))));
    }
    while (n.size() > 1 && n.back() == 0) n.pop_back();
    return n;
}

std::string nat_to_decimal(const Nat& n) {
    std::string s = std::to_string(n.back());
    for (int i = static_cast<int>(n.size()) - 2; i >= 0; --i) {
        std::string part = std::to_string(n[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

Nat nat_mul(const Nat& a, const Nat& b) {
    std::vector<std::uint64_t> acc(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
            // keep headroom: 10^18 + carries fit in u64, flush eagerly
            if (acc[i + j] >= kBase * kBase) {
                acc[i + j + 1] += acc[i + j] / kBase;
                acc[i + j] %= kBase;
            }
        }
    Nat out(acc.size());
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < acc.size(); ++i) {
        std::uint64_t v = acc[i] + carry;
        out[i] = static_cast<std::uint32_t>(v % kBase);
        carry = v / kBase;
    }
    CHECK(carry == 0);
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

int nat_cmp(const Nat& a, const Nat& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

Nat nat_add(const Nat& a, const Nat& b) {
    Nat out;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        std::uint64_t v = carry;
        if (i < a.size()) v += a[i];
        if (i < b.size()) v += b[i];
        out.push_back(static_cast<std::uint32_t>(v % kBase));
        carry = v / kBase;
    }
    if (out.empty()) out.push_back(0);
    return out;
}

Nat nat_sub(const Nat& a, const Nat& b) { // requires a >= b
    Nat out;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t v = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        borrow = 0;
        if (v < 0) {
            v += kBase;
            borrow = 1;
        }
        out.push_back(static_cast<std::uint32_t>(v));
    }
    CHECK(borrow == 0);
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

struct SignedNat {
    bool neg = false;
    Nat mag{0};

    std::string str() const {
        if (mag.size() == 1 && mag[0] == 0) return "0";
        return (neg ? "-" : "") + nat_to_decimal(mag);
    }
};

SignedNat snat_mul(const SignedNat& a, const SignedNat& b) {
    return {a.neg != b.neg, nat_mul(a.mag, b.mag)};
}

SignedNat snat_add(const SignedNat& a, const SignedNat& b) {
    if (a.neg == b.neg) return {a.neg, nat_add(a.mag, b.mag)};
    int c = nat_cmp(a.mag, b.mag);
    if (c == 0) return {false, Nat{0}};
    return (c > 0) ? SignedNat{a.neg, nat_sub(a.mag, b.mag)}
                   : SignedNat{b.neg, nat_sub(b.mag, a.mag)};
}

SignedNat snat_neg(SignedNat a) {
    a.neg = !a.neg;
    return a;
}

std::string random_digits(Rng& rng, int count) {
    std::string s(1, static_cast<char>('1' + rng.below(9)));
    for (int i = 1; i < count; ++i) s += static_cast<char>('0' + rng.below(10));
    return s;
}

std::string mpz_str(const mpz_class& z) { return z.get_str(); }

ExactScaledMatrix random_exact(std::uint32_t d, Rng& rng) {
    ExactScaledMatrix a(d, static_cast<std::int64_t>(rng.below(5)),
                        static_cast<int>(rng.below(8)));
    for (std::uint32_t r = 0; r < d; ++r)
        for (std::uint32_t c = 0; c < d; ++c)
            a.at(r, c) = GaussianInt(static_cast<long>(rng.below(2001)) - 1000,
                                     static_cast<long>(rng.below(2001)) - 1000);
    return a;
}

UnitEntryMatrix random_unit(int m, Rng& rng) {
    UnitEntryMatrix v(m);
    for (std::uint32_t r = 0; r < v.dim(); ++r)
        for (std::uint32_t c = 0; c < v.dim(); ++c)
            v.set(r, c, Mod4(static_cast<int>(rng.below(4))));
    return v;
}

} // namespace

TEST_CASE("Gaussian products: small identities") {
    GaussianInt one_plus(1, 1), one_minus(1, -1), i(0, 1);
    CHECK((one_plus * one_minus) == GaussianInt(2, 0));
    CHECK((i * i) == GaussianInt(-1, 0));
    CHECK(GaussianInt(3, -2).conj() == GaussianInt(3, 2));
    CHECK(GaussianInt(3, 4).norm2() == 25);
    CHECK(GaussianInt(0, 1).pow(6) == GaussianInt(-1, 0));
}

TEST_CASE("Gaussian products match the schoolbook reference on 512-bit operands") {
    Rng rng(424242);
    for (int trial = 0; trial < 25; ++trial) {
        // ~155 decimal digits each = 512+ bits
        std::string sa = random_digits(rng, 155), sb = random_digits(rng, 150);
        std::string sc = random_digits(rng, 152), sd = random_digits(rng, 155);
        bool na = rng.below(2), nb = rng.below(2), nc = rng.below(2), nd = rng.below(2);

        GaussianInt x(mpz_class((na ? "-" : "") + sa), mpz_class((nb ? "-" : "") + sb));
        GaussianInt y(mpz_class((nc ? "-" : "") + sc), mpz_class((nd ? "-" : "") + sd));
        GaussianInt got = x * y;

        SignedNat A{na, nat_from_decimal(sa)}, B{nb, nat_from_decimal(sb)};
        SignedNat C{nc, nat_from_decimal(sc)}, D{nd, nat_from_decimal(sd)};
        SignedNat want_re = snat_add(snat_mul(A, C), snat_neg(snat_mul(B, D)));
        SignedNat want_im = snat_add(snat_mul(A, D), snat_mul(B, C));

        CHECK(mpz_str(got.re) == want_re.str());
        CHECK(mpz_str(got.im) == want_im.str());
    }
}

TEST_CASE("norm2 is multiplicative") {
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        GaussianInt x(static_cast<long>(rng.below(20001)) - 10000,
                      static_cast<long>(rng.below(20001)) - 10000);
        GaussianInt y(static_cast<long>(rng.below(20001)) - 10000,
                      static_cast<long>(rng.below(20001)) - 10000);
        CHECK((x * y).norm2() == x.norm2() * y.norm2());
    }
}

TEST_CASE("Gaussian token format round trips") {
    for (const char* tok : {"0+0i", "1+0i", "-1+2i", "3-4i", "-123456789012345678901234567890+7i"})
        CHECK(GaussianInt::parse(tok).str() == tok);
    CHECK_THROWS(GaussianInt::parse("7"));
    CHECK_THROWS(GaussianInt::parse("1+2j"));
    CHECK_THROWS(GaussianInt::parse("i"));
}

TEST_CASE("exact_matmul: identity, associativity, dimension checks") {
    Rng rng(5150);
    ExactScaledMatrix a = random_exact(4, rng);
    ExactScaledMatrix id = ExactScaledMatrix::identity(4);
    CHECK(exact_matmul(a, id) == a);

    ExactScaledMatrix b = random_exact(4, rng), c = random_exact(4, rng);
    CHECK(exact_matmul(exact_matmul(a, b), c) == exact_matmul(a, exact_matmul(b, c)));

    CHECK_THROWS_AS(exact_matmul(a, random_exact(8, rng)), std::invalid_argument);
}

TEST_CASE("U_1 cubes to the identity with s and t reduced") {
    ExactScaledMatrix u1 = u_matrix(1);
    CHECK(u1.scale_exponent() == 1);
    CHECK(u1.phase_exponent() == 3); // e^{i 3pi/4}
    ExactScaledMatrix cube = exact_matmul(exact_matmul(u1, u1), u1);
    CHECK(cube.reduced() == ExactScaledMatrix::identity(2));
}

TEST_CASE("U_2 to the fifth is the identity") {
    ExactScaledMatrix u2 = u_matrix(2);
    ExactScaledMatrix w = u2;
    for (int k = 1; k < 5; ++k) w = exact_matmul(w, u2);
    CHECK(w.reduced() == ExactScaledMatrix::identity(4));
}

TEST_CASE("squared V_2 has entry norms 2^{m(k-1)} = 4") {
    ExactScaledMatrix v2 = embed_unit(v_matrix(2));
    ExactScaledMatrix sq = exact_matmul(v2, v2);
    for (std::uint32_t r = 0; r < 4; ++r)
        for (std::uint32_t c = 0; c < 4; ++c) CHECK(sq.at(r, c).norm2() == 4);
}

TEST_CASE("unit_right_multiply equals exact_matmul with the unit matrix embedded") {
    Rng rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        ExactScaledMatrix a = random_exact(8, rng);
        UnitEntryMatrix v = random_unit(3, rng);
        CHECK(unit_right_multiply(a, v) == exact_matmul(a, embed_unit(v)));
    }
}

TEST_CASE("unit_right_multiply by the identity leaves the matrix unchanged") {
    Rng rng(8);
    ExactScaledMatrix a = random_exact(4, rng);
    CHECK(unit_right_multiply(a, UnitEntryMatrix::identity(2)) == a);
}

TEST_CASE("repeated unit_right_multiply matches an exact_matmul chain on V_4") {
    UnitEntryMatrix v4 = v_matrix(4);
    ExactScaledMatrix by_unit = embed_unit(v4);
    by_unit = unit_right_multiply(by_unit, v4);
    by_unit = unit_right_multiply(by_unit, v4);
    ExactScaledMatrix e = embed_unit(v4);
    ExactScaledMatrix by_matmul = exact_matmul(exact_matmul(e, e), e);
    CHECK(by_unit == by_matmul);
}

TEST_CASE("exact dump round trips") {
    Rng rng(606);
    ExactScaledMatrix a = random_exact(4, rng);
    CHECK(ExactScaledMatrix::parse(a.dump()) == a);
    ExactScaledMatrix u1 = u_matrix(1);
    std::string d = u1.dump();
    CHECK(d.substr(0, 18) == "exact d=2 s=1 t=3\n");
    CHECK(ExactScaledMatrix::parse(d) == u1);
    CHECK_THROWS(ExactScaledMatrix::parse("exact d=2 s=0\n"));
    CHECK_THROWS(ExactScaledMatrix::parse("exact d=2 s=0 t=0\n1+0i\n"));
}
