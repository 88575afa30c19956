#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/oracle.hpp"

using namespace padic;
using oracle::NaiveRing;

namespace {
NaiveRing ring1() { return NaiveRing(5, 2, 2, {1, 1, 1}); }
} // namespace

TEST_CASE("naive mul worked value x * x = [24,24]") {
    NaiveRing r = ring1();
    auto x = r.from({0, 1});
    CHECK(r.mul(x, x) == NaiveRing::Elt({24, 24}));
    CHECK(r.mul(r.one(), x) == x);
}

TEST_CASE("naive frob worked value sigma([3,7]) = [21,18]") {
    NaiveRing r = ring1();
    CHECK(r.frob(r.from({3, 7}), 1) == NaiveRing::Elt({21, 18}));
    // sigma^2 = id
    CHECK(r.frob(r.frob(r.from({3, 7}), 1), 1) == NaiveRing::Elt({3, 7}));
}

TEST_CASE("naive teich worked value teich(2) = 7 in (5,1,2)") {
    NaiveRing r(5, 1, 2, {0, 1});
    CHECK(r.teich(r.from({2})) == NaiveRing::Elt({7}));
    CHECK(r.teich(r.zero()) == r.zero());
    CHECK(r.teich(r.one()) == r.one());
}

TEST_CASE("naive inv inverts units and rejects non-units") {
    NaiveRing r = ring1();
    auto a = r.from({3, 7});
    CHECK(r.mul(a, r.inv(a)) == r.one());
    CHECK_THROWS_AS(r.inv(r.from({5, 10})), Error);
}

TEST_CASE("naive minpoly matches hand values") {
    NaiveRing r = ring1();
    CHECK(r.minpoly(r.from({0, 1})) == std::vector<mpz_class>({1, 1, 1}));
    CHECK(r.minpoly(r.from({3, 7})) == std::vector<mpz_class>({12, 1, 1}));
    CHECK(r.minpoly(r.from({13, 0})) == std::vector<mpz_class>({12, 1}));
}

TEST_CASE("naive solve_as solves the worked instance") {
    NaiveRing r = ring1();
    auto X = r.solve_as(r.one(), r.from({5, 0}), r.from({1, 21}));
    CHECK(X == NaiveRing::Elt({0, 1}));
}

TEST_CASE("element enumeration covers the ring uniquely") {
    NaiveRing r(2, 2, 1, {1, 1, 1});
    CHECK(r.cardinality() == 4);
    std::vector<NaiveRing::Elt> seen;
    for (long i = 0; i < 4; ++i) {
        auto e = r.element_at(i);
        for (const auto& s : seen) CHECK(!(s == e));
        seen.push_back(e);
    }
}

TEST_CASE("naive valuation") {
    NaiveRing r = ring1();
    CHECK(r.valuation(r.from({5, 10})) == 1);
    CHECK(r.valuation(r.from({5, 1})) == 0);
    CHECK(r.valuation(r.zero()) == 2);
}

TEST_CASE("naive pow by repeated squaring is consistent with mul") {
    NaiveRing r = ring1();
    auto a = r.from({3, 7});
    auto acc = r.one();
    for (int i = 0; i < 10; ++i) {
        CHECK(r.pow(a, i) == acc);
        acc = r.mul(acc, a);
    }
}
