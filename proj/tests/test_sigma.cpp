#include <catch2/catch_amalgamated.hpp>

#include "sturmlab/sigma.hpp"

using namespace sturmlab;

TEST_CASE("sigma of the constant sequence 1 is 1/gamma") {
    SigmaResult r = sigma(SeqSpec::constant(1), 128);
    CHECK_FALSE(r.truncated);
    CHECK(r.value.width() <= pow2(-128));
    // 1/gamma = (sqrt5 - 1)/2 = 0.618033988749894...
    CHECK(r.value.lo() > make_rat(618033988, 1000000000));
    CHECK(r.value.hi() < make_rat(618033989, 1000000000));
    // sigma satisfies sigma^2 + sigma - 1 = 0.
    CertReal v = r.value;
    CertReal res = v * v + v - Rat(1);
    CHECK(res.interval().contains(Rat(0)));
}

TEST_CASE("sigma of the constant sequence 2 is sqrt2 - 1") {
    SigmaResult r = sigma(SeqSpec::constant(2), 128);
    CHECK(r.value.lo() > make_rat(41421356, 100000000));
    CHECK(r.value.hi() < make_rat(41421357, 100000000));
}

TEST_CASE("sigma bound sigma <= 1/gamma") {
    for (SeqSpec s : {SeqSpec::constant(1), SeqSpec::constant(3), SeqSpec({4, 1}, {1, 2}),
                      SeqSpec::periodic({2, 1, 1})}) {
        SigmaResult r = sigma(s, 96);
        CHECK(r.value.lo() < make_rat(618033989, 1000000000));
        CHECK(r.value.lo() >= 0);
    }
}

TEST_CASE("sigma of a periodic word with a prefix ignores the prefix") {
    SigmaResult plain = sigma(SeqSpec::periodic({2, 1}), 96);
    SigmaResult shifted = sigma(SeqSpec({5, 3, 1}, {2, 1}), 96);
    CHECK(overlap(plain.value.interval(), shifted.value.interval()));
}

TEST_CASE("strictly increasing finite spec drives sigma to zero") {
    std::vector<long> pref;
    for (long j = 1; j <= 20; ++j) pref.push_back(j);
    SigmaResult r = sigma(SeqSpec::finite(pref), 18);
    CHECK(r.truncated);
    CHECK(r.value.hi() < make_rat(1, 9));
}

TEST_CASE("depth validation") {
    CHECK_THROWS_AS(sigma(SeqSpec::constant(1), 0), std::invalid_argument);
}
