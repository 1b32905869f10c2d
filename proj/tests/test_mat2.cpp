#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sturmlab/mat2.hpp"

using namespace sturmlab;

namespace {

IntMat2 random_mat(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    return {Int(d(rng)), Int(d(rng)), Int(d(rng)), Int(d(rng))};
}

}  // namespace

TEST_CASE("adjugate and determinant") {
    IntMat2 m{2, 1, 1, 0};
    CHECK(m.adjugate() == IntMat2{0, -1, -1, 2});
    CHECK(m.det() == -1);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        IntMat2 x = random_mat(rng, 9);
        CHECK(x * x.adjugate() == IntMat2::identity() * x.det());
        CHECK(x.adjugate() * x == IntMat2::identity() * x.det());
    }
}

TEST_CASE("product example") {
    IntMat2 a{1, 1, 1, 0}, b{2, 1, 1, 0};
    CHECK(a * b == IntMat2{3, 1, 2, 1});
}

TEST_CASE("binary power matches repeated product") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        IntMat2 x = random_mat(rng, 5);
        IntMat2 acc = IntMat2::identity();
        for (unsigned long e = 0; e <= 6; ++e) {
            CHECK(pow(x, e) == acc);
            acc = acc * x;
        }
    }
}

TEST_CASE("content") {
    CHECK(content(IntMat2{6, -9, 3, 0}) == 3);
    CHECK_THROWS_AS(content(IntMat2{0, 0, 0, 0}), std::domain_error);

    RatMat2 m{make_rat(6, 5), make_rat(-9, 5), make_rat(3, 5), Rat(0)};
    Rat c = content(m);
    CHECK(c == make_rat(3, 5));
    IntMat2 p = primitive_part(m);
    CHECK(p == IntMat2{2, -3, 1, 0});
    CHECK(content(p) == 1);
}

TEST_CASE("content is supermultiplicative") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
        IntMat2 a = random_mat(rng, 9), b = random_mat(rng, 9);
        if (a.is_zero() || b.is_zero() || (a * b).is_zero()) continue;
        CHECK(content(a * b) % (content(a) * content(b)) == 0);
    }
}

TEST_CASE("rational inverse") {
    IntMat2 m{3, 1, 2, 1};
    RatMat2 inv = inverse(m);
    CHECK(to_rat(m) * inv == RatMat2::identity());
    CHECK_THROWS_AS(inverse(IntMat2{1, 2, 2, 4}), std::domain_error);
}

TEST_CASE("sup norm") {
    CHECK(sup_norm(IntMat2{3, -7, 2, 5}) == 7);
    CHECK(sup_norm(RatMat2{make_rat(1, 2), make_rat(-5, 3), Rat(0), Rat(1)}) == make_rat(5, 3));
}

TEST_CASE("J conjugation identity") {
    // J x J = -det(x) * transpose(x)^{-1} for invertible x.
    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) {
        IntMat2 x = random_mat(rng, 9);
        if (x.det() == 0) continue;
        RatMat2 lhs = to_rat(IntMat2::j() * x * IntMat2::j());
        RatMat2 rhs = inverse(to_rat(x).transpose()) * Rat(-x.det());
        CHECK(lhs == rhs);
    }
}
