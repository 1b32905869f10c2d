#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sturmlab/growth.hpp"
#include "sturmlab/words.hpp"
#include "sturmlab/xi.hpp"

using namespace sturmlab;

namespace {

SturmSeq bl_seed(const SeqSpec& s) {
    return SturmSeq(IntMat2{2, 1, 1, 0}, IntMat2{1, 1, 1, 0}, s);
}

}  // namespace

TEST_CASE("growth of the BL seed: alpha = rho = delta = 0, beta > 0") {
    SturmSeq seq = bl_seed(SeqSpec::constant(1));
    GrowthReport rep = growth(seq, 18);
    CHECK(rep.beta_positive);
    CHECK(rep.alpha.interval().contains(Rat(0)));
    CHECK(rep.alpha.width() < make_rat(1, 1000000));
    CHECK(rep.rho.interval().contains(Rat(0)));
    CHECK(rep.delta.interval().contains(Rat(0)));
    CHECK(rep.delta.width() < make_rat(1, 1000000));
    CHECK(rep.c_min > 0);
    CHECK(rep.c_min <= rep.c_max);
    CHECK(rep.c_max <= 2);  // sup norm of a 2x2 product at most doubles
}

TEST_CASE("growth of a det-2 seed: positive alpha, windows consistent") {
    SturmSeq seq(IntMat2{3, 1, 1, 1}, IntMat2{1, 1, 1, 2}, SeqSpec::constant(1));
    REQUIRE(seq.admissible());
    GrowthReport rep = growth(seq, 18);
    CHECK(rep.beta_positive);
    CHECK(rep.alpha.lo() > 0);
    // delta consistent with (alpha - 2 rho)/beta on the window hulls
    Interval formula = (rep.alpha.interval() - rep.rho.interval() * Rat(2)) / rep.beta.interval();
    CHECK(overlap(formula, rep.delta.interval()));
    CHECK(rep.delta.lo() > -make_rat(1, 100));
    CHECK(rep.delta.hi() < 2);
}

TEST_CASE("content growth shows up in rho for scaled seeds") {
    SturmSeq seq(IntMat2{3, 1, 1, 1} * 2, IntMat2{1, 1, 1, 2} * 3, SeqSpec::periodic({2, 1}));
    REQUIRE(seq.admissible());
    GrowthReport rep = growth(seq, 12);
    CHECK(rep.rho.lo() > 0);  // contents forced by the seed scaling
}

TEST_CASE("xi of the BL seed matches direct continued-fraction evaluation") {
    SturmSeq seq = bl_seed(SeqSpec::constant(1));
    XiResult r = xi_extract(seq, 256);
    CHECK(r.cone_certified);
    CHECK(r.value.width() <= pow2(-256));

    // Independent oracle: xi_phi = [0; letters of the Sturmian word].
    Word w = sturmian_word(SeqSpec::constant(1), 1, 2, 20);
    std::vector<long> pq = w.expand();
    pq.resize(60);
    Interval cf = oracle::cf_enclosure(pq);
    CHECK(overlap(r.value.interval(), cf));
    // 0.720484667... per the partial quotients 1,2,1,1,2,... (evaluating the
    // CF the spec lists gives 0.72048, not the 0.7214 it quotes)
    CHECK(r.value.lo() > make_rat(720484, 1000000));
    CHECK(r.value.hi() < make_rat(720485, 1000000));
}

TEST_CASE("xi refinement keeps shrinking on demand") {
    auto [w0m, w1m] = cf_seed(SeqSpec::constant(2), 1, 2);
    SturmSeq seq(w0m, w1m, SeqSpec::constant(2));
    CertReal v = xi(seq, 128);
    Rat width0 = v.width();
    CHECK(v.refine_to_width(pow2(-1024)));
    CHECK(v.width() <= pow2(-1024));
    CHECK(v.width() < width0);

    // s = 2bar: xi_phi = [0; 2,1,2,1,2,2,...] from the word ladder.
    Word w = sturmian_word(SeqSpec::constant(2), 1, 2, 16);
    std::vector<long> pq = w.expand();
    pq.resize(50);
    CHECK(overlap(v.interval(), oracle::cf_enclosure(pq)));
    CHECK(v.lo() > make_rat(3663078, 10000000));
    CHECK(v.hi() < make_rat(3663079, 10000000));
}

TEST_CASE("periodic word fixed point: [0; 1,2,1,2,...] = sqrt(3) - 1") {
    std::vector<long> pq;
    for (int j = 0; j < 30; ++j) {
        pq.push_back(1);
        pq.push_back(2);
    }
    Interval v = oracle::cf_enclosure(pq);
    // x satisfies x^2 + 2x - 2 = 0
    Interval res = v * v + v * Rat(2) - Rat(2);
    CHECK(res.contains(Rat(0)));
    CHECK(v.lo > make_rat(7320508, 10000000));
    CHECK(v.hi < make_rat(7320509, 10000000));
}

TEST_CASE("xi refuses on a non-admissible seed") {
    IntMat2 m{3, 1, 1, 2};
    SturmSeq seq(m, m * m, SeqSpec::constant(1));
    CHECK_THROWS_AS(xi(seq, 64), std::domain_error);
}
