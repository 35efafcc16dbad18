#include <doctest.h>

#include "mub/bmatrix.hpp"
#include "mub/rng.hpp"

using namespace mub;

namespace {

BMatrix from_rows(const std::vector<std::string>& rows) {
    BMatrix b(static_cast<int>(rows.size()));
    for (int k = 0; k < b.size(); ++k)
        for (int l = k; l < b.size(); ++l)
            if (rows[k][l] == '1') b.set(k, l, true);
    return b;
}

BMatrix random_symmetric(int m, Rng& rng) {
    BMatrix b(m);
    for (int k = 0; k < m; ++k)
        for (int l = k; l < m; ++l)
            if (rng.below(2)) b.set(k, l, true);
    return b;
}

} // namespace

TEST_CASE("seed matrix is the 1x1 one") {
    BMatrix b = seed_b1();
    CHECK(b.size() == 1);
    CHECK(b.get(0, 0));
    CHECK(b.is_symmetric());
    CHECK(doubled(doubled(b)).size() == 4);
}

TEST_CASE("doubling reproduces the displayed 2x2 and 4x4 matrices") {
    CHECK(doubled(seed_b1()) == from_rows({"11", "10"}));
    CHECK(doubled(from_rows({"11", "10"})) == from_rows({"1110", "1001", "1000", "0100"}));
}

TEST_CASE("doubling and tripling preserve symmetry") {
    Rng rng(7001);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 1 + static_cast<int>(rng.below(9));
        BMatrix b = random_symmetric(m, rng);
        CHECK(doubled(b).is_symmetric());
        CHECK(tripled(b).is_symmetric());
    }
}

TEST_CASE("tripled B_2 matches the block assembly") {
    BMatrix b6 = tripled(build_bmatrix(2));
    BMatrix want = from_rows(
        {"111111", "101010", "111100", "101000", "110000", "100000"});
    CHECK(b6 == want);
    CHECK(b6.is_symmetric());
    CHECK(build_bmatrix(6) == b6);
}

TEST_CASE("build accepts exactly the supported sizes") {
    for (int m : {1, 2, 4, 8, 16, 32, 64, 128, 256, 6, 12, 24}) CHECK(build_bmatrix(m).size() == m);
    for (int m : {0, 3, 5, 7, 9, 10, 18, 48, 100, 257, 512, -1})
        CHECK_THROWS_AS(build_bmatrix(m), std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_bmatrix(3), doctest::Contains("256"), std::invalid_argument);
}

TEST_CASE("build is deterministic") {
    CHECK(build_bmatrix(16) == build_bmatrix(16));
    CHECK(build_bmatrix(24) == build_bmatrix(24));
}

TEST_CASE("gate census on the doubling chain is (1, m-1)") {
    CHECK(gate_census(build_bmatrix(1)) == GateCensus{1, 0});
    CHECK(gate_census(build_bmatrix(4)) == GateCensus{1, 3});
    GateCensus c8 = gate_census(build_bmatrix(8));
    CHECK(c8 == GateCensus{1, 7});
    CHECK(c8.n_phase + 2 * c8.n_cphase == 15); // total nonzeros 2m-1
    for (int m : {2, 16, 32, 64, 128, 256}) {
        GateCensus c = gate_census(build_bmatrix(m));
        CHECK(c.n_phase == 1);
        CHECK(c.n_cphase == m - 1);
    }
}

TEST_CASE("gate census of tripled matrices") {
    // counted from the block pattern [[B,B,B],[B,B,0],[B,0,0]]
    CHECK(gate_census(build_bmatrix(6)) == GateCensus{2, 8});
    CHECK(gate_census(build_bmatrix(12)) == GateCensus{2, 20});
    CHECK(gate_census(build_bmatrix(24)) == GateCensus{2, 44});
}

TEST_CASE("bmatrix dump round trips bit-exactly") {
    for (int m : {1, 2, 4, 6, 8, 24, 256}) {
        BMatrix b = build_bmatrix(m);
        CHECK(parse_bmatrix(dump_bmatrix(b)) == b);
    }
    CHECK(dump_bmatrix(build_bmatrix(2)) == "bmatrix m=2\n11\n10\n");
}

TEST_CASE("bmatrix parse rejects malformed input") {
    CHECK_THROWS(parse_bmatrix(""));
    CHECK_THROWS(parse_bmatrix("bmatrix m=0\n"));
    CHECK_THROWS(parse_bmatrix("nonsense\n11\n10\n"));
    CHECK_THROWS(parse_bmatrix("bmatrix m=2\n11\n1\n"));        // short row
    CHECK_THROWS(parse_bmatrix("bmatrix m=2\n11\n"));           // missing row
    CHECK_THROWS(parse_bmatrix("bmatrix m=2\n1x\n10\n"));       // bad character
    CHECK_THROWS(parse_bmatrix("bmatrix m=2\n11\n00\n"));       // asymmetric
}
