#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sturmlab/exponents.hpp"

using namespace sturmlab;

namespace {

SturmSeq bl_seed(const SeqSpec& s) {
    return SturmSeq(IntMat2{2, 1, 1, 0}, IntMat2{1, 1, 1, 0}, s);
}

bool contains(const Interval& v, const Rat& x) { return v.contains(x); }

}  // namespace

TEST_CASE("quad approximant at the w_2 rung of the BL seed") {
    SturmSeq seq = bl_seed(SeqSpec::constant(1));
    CertReal x = xi(seq, 128);
    // b_{t_3} = U(w_2) = (-2, 2, 1): polynomial X^2 + 2X - 2, near root sqrt3 - 1.
    long i = seq.seq().t(3);
    auto qa = quad_approximant(seq, x, i);
    REQUIRE(qa.has_value());
    CHECK(qa->quadratic);
    IntPoint p = qa->poly;
    if (p.x2 < 0) p = -p;
    CHECK(p == IntPoint{-2, 2, 1});
    CHECK(qa->height == 2);
    CertReal shifted = qa->root_near + Rat(1);
    CertReal sq = shifted * shifted;
    sq.refine_bits(96);
    CHECK(sq.interval().contains(Rat(3)));
}

TEST_CASE("far roots stay away from xi") {
    SturmSeq seq = bl_seed(SeqSpec::constant(1));
    CertReal x = xi(seq, 256);
    auto list = quad_approximants(seq, x, 16);
    REQUIRE(list.size() >= 8);
    for (const auto& qa : list) {
        if (qa.i < 10) continue;
        Interval dist = abs((x - qa.root_far).interval());
        CHECK(dist.lo > make_rat(1, 10));
    }
}

TEST_CASE("U(w~_k)(xi)/H drops below 1e-6 by the 15th rung") {
    SturmSeq seq = bl_seed(SeqSpec::constant(1));
    CertReal x = xi(seq, 512);
    // P_k = U(w~_k) corresponds to z~ at the start of block k+1.
    long i = seq.seq().t(15);
    IntPoint p = seq.z_primitive(i);
    Interval val = detail::dot_err(p, x.interval());
    Rat h = Rat(sup_norm(p));
    CHECK(val.hi / h < make_rat(1, 1000000));
}

TEST_CASE("empirical exponents of the BL seed contain the theorem values") {
    SturmSeq seq = bl_seed(SeqSpec::constant(1));
    long i_max = seq.seq().t(17);
    ExponentSet set = empirical_exponents(seq, i_max, 256);

    REQUIRE(set.omega2_hat.valid);
    REQUIRE(set.lambda2_hat.valid);
    REQUIRE(set.omega2.valid);
    REQUIRE(set.lambda2.valid);
    // gamma^2 = 2.6180..., 1/gamma = 0.6180..., 2 gamma + 1 = 4.2360..., 1.
    CHECK(contains(set.omega2_hat.bracket, make_rat(2618034, 1000000)));
    CHECK(contains(set.lambda2_hat.bracket, make_rat(618034, 1000000)));
    CHECK(contains(set.omega2.bracket, make_rat(4236068, 1000000)));
    CHECK(contains(set.lambda2.bracket, Rat(1)));
    // Definitional orderings on brackets.
    CHECK(set.lambda_check.bracket.lo <= set.lambda2_hat.bracket.hi);
    CHECK(set.omega2_star_hat.bracket.lo <= set.omega2_hat.bracket.hi);
    // omega* brackets overlap omega brackets (Prop: omega* = omega).
    CHECK(overlap(set.omega2_star.bracket, set.omega2.bracket));
    CHECK(overlap(set.omega2_star_hat.bracket, set.omega2_hat.bracket));
    // beta0 display: lambda_check > 1/2 here.
    CHECK(set.beta0.has_value());
}

TEST_CASE("predicted exponents: BL point sigma = 1/gamma, delta = 0") {
    CertReal sigma = (sqrt_cert(Rat(5)) - Rat(1)) / Rat(2);
    PredictedExponents pred = predicted_exponents(sigma, CertReal(Rat(0)));
    // omega2_hat = gamma^2, lambda2_hat = 1/gamma, omega2 = 2 gamma + 1,
    // lambda_check = (1+sigma)/(2+sigma) = 1/gamma.
    CHECK(pred.omega2_hat.lo() > make_rat(261803398, 100000000));
    CHECK(pred.omega2_hat.hi() < make_rat(261803399, 100000000));
    CHECK(pred.lambda2_hat.lo() > make_rat(61803398, 100000000));
    CHECK(pred.lambda2_hat.hi() < make_rat(61803399, 100000000));
    REQUIRE(pred.omega2.has_value());
    CHECK(pred.omega2->lo() > make_rat(423606797, 100000000));
    CHECK(pred.omega2->hi() < make_rat(423606798, 100000000));
    REQUIRE(pred.lambda2.has_value());
    CHECK(pred.lambda2->interval().contains(Rat(1)));
    REQUIRE(pred.lambda_check.has_value());
    CHECK(pred.lambda_check->lo() > make_rat(61803398, 100000000));
    CHECK(pred.lambda_check->hi() < make_rat(61803399, 100000000));
}

TEST_CASE("predicted exponents collapse to the generic value at delta = sigma/(1+sigma)") {
    // sigma = 1/2, delta = 1/3: (1-d)(1+s) = 1 so omega2_hat = 2.
    PredictedExponents pred = predicted_exponents(CertReal(make_rat(1, 2)), CertReal(make_rat(1, 3)));
    CHECK(pred.omega2_hat.interval().contains(Rat(2)));
    CHECK(pred.omega2_hat.width() == 0);
}

TEST_CASE("Jarnik identity holds exactly on the closed forms") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<long> num(0, 40), den(60, 99);
    for (int t = 0; t < 50; ++t) {
        Rat sigma = make_rat(num(rng), den(rng));          // in [0, 2/3]
        if (sigma > make_rat(618, 1000)) sigma = make_rat(618, 1000);
        Rat bound = sigma / (1 + sigma);
        Rat delta = bound * make_rat(num(rng), 50);        // in [0, bound*4/5]
        if (delta > bound) delta = bound;
        Rat core = (1 - delta) * (1 + sigma);
        Rat omega_hat = 1 + core;
        Rat lambda_hat = core / omega_hat;
        CHECK(lambda_hat == 1 - 1 / omega_hat);
        PredictedExponents pred = predicted_exponents(CertReal(sigma), CertReal(delta));
        CHECK(pred.omega2_hat.interval().contains(omega_hat));
        CHECK(pred.lambda2_hat.interval().contains(lambda_hat));
    }
}

TEST_CASE("h(0) = 0 exactly and h(1/gamma), kappa match the closed forms") {
    CertReal h0 = h_sigma(CertReal(Rat(0)));
    CHECK(h0.lo() == 0);
    CHECK(h0.hi() == 0);

    CertReal gamma = golden_ratio();
    CertReal sigma = CertReal(Rat(1)) / gamma;
    CertReal h = h_sigma(sigma);
    h.refine_bits(128);
    // h(1/gamma) = 0.2623596947718...
    CHECK(h.lo() > make_rat(2623596, 10000000));
    CHECK(h.hi() < make_rat(2623598, 10000000));
    CertReal kappa = (CertReal(Rat(1)) - h) / gamma;
    kappa.refine_bits(128);
    // kappa = 0.4558867801028... ("0.4558..." in closed form)
    CHECK(kappa.lo() > make_rat(4558867, 10000000));
    CHECK(kappa.hi() < make_rat(4558868, 10000000));
    // acceptance-scale window 0.4559 +/- 0.0002
    CHECK(kappa.lo() > make_rat(4557, 10000));
    CHECK(kappa.hi() < make_rat(4561, 10000));
}

TEST_CASE("predicted exponents validate the delta range") {
    CHECK_THROWS_AS(predicted_exponents(CertReal(make_rat(1, 2)), CertReal(make_rat(1, 2))),
                    std::domain_error);
}
