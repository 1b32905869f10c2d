#include <catch2/catch_amalgamated.hpp>

#include "sturmlab/interval.hpp"

using namespace sturmlab;

TEST_CASE("interval arithmetic encloses") {
    Interval a(make_rat(1, 3), make_rat(1, 2));
    Interval b(make_rat(-1, 4), make_rat(1, 5));
    Interval s = a + b;
    CHECK(s.lo == make_rat(1, 3) - make_rat(1, 4));
    CHECK(s.hi == make_rat(1, 2) + make_rat(1, 5));
    Interval p = a * b;
    CHECK(p.contains(make_rat(1, 3) * make_rat(1, 5)));
    CHECK(p.contains(make_rat(1, 2) * make_rat(-1, 4)));
    CHECK_THROWS_AS(a / b, std::domain_error);
}

TEST_CASE("log and exp enclosures") {
    Interval lg = log_interval(Rat(2), 128);
    CHECK(lg.lo > make_rat(693147, 1000000));
    CHECK(lg.hi < make_rat(693148, 1000000));
    CHECK(lg.width() < pow2(-100));

    Interval ex = exp_interval(Rat(1), 128);
    CHECK(ex.lo > make_rat(2718281828, 1000000000));
    CHECK(ex.hi < make_rat(2718281829, 1000000000));

    // log(exp(x)) round trip stays an enclosure of x.
    Rat x = make_rat(-7, 3);
    Interval round = log_interval(exp_interval(x, 160), 160);
    CHECK(round.contains(x));
}

TEST_CASE("log of huge integers") {
    Int big = pow(Int(7), 20000);
    Interval lg = log_interval(big, 96);
    // 20000 * log 7 = 38918.202...
    CHECK(lg.lo > 38918);
    CHECK(lg.hi < 38919);
    CHECK(lg.width() < pow2(-40));
}

TEST_CASE("sqrt enclosure and refinement") {
    CertReal r = sqrt_cert(Rat(2));
    CHECK(r.lo() * r.lo() <= 2);
    CHECK(r.hi() * r.hi() >= 2);
    CHECK(r.refine_to_width(pow2(-300)));
    CHECK(r.width() <= pow2(-300));
    Rat mid = r.mid();
    CHECK(mid * mid > Rat(2) - pow2(-290));
    CHECK(mid * mid < Rat(2) + pow2(-290));
}

TEST_CASE("golden ratio") {
    CertReal g = golden_ratio();
    CHECK(g.refine_to_width(pow2(-128)));
    // gamma^2 = gamma + 1.
    CertReal lhs = g * g, rhs = g + Rat(1);
    CHECK(overlap(lhs.interval(), rhs.interval()));
    CHECK((g.interval().contains(make_rat(1618033988, 1000000000)) ||
           g.lo() > make_rat(1618033988, 1000000000)));
}

TEST_CASE("derived certreal refines through arithmetic") {
    CertReal a = sqrt_cert(Rat(2)), b = sqrt_cert(Rat(3));
    CertReal c = a * b;  // sqrt(6)
    CHECK(c.refine_to_width(pow2(-200)));
    Rat mid = c.mid();
    CHECK(mid * mid > Rat(6) - pow2(-190));
    CHECK(mid * mid < Rat(6) + pow2(-190));
}
