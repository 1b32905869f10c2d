#include <catch2/catch_amalgamated.hpp>

#include "sturmlab/words.hpp"

using namespace sturmlab;

namespace {

Word from_string(const std::string& s) {
    Word w;
    for (char c : s) w = w + Word::letter(c - '0');
    return w;
}

std::string to_str(const Word& w) {
    std::string s;
    for (long v : w.expand()) s += static_cast<char>('0' + v);
    return s;
}

}  // namespace

TEST_CASE("fibonacci word ladder") {
    SeqSpec s = SeqSpec::constant(1);
    CHECK(to_str(sturmian_word(s, 1, 2, 1)) == "1");
    CHECK(to_str(sturmian_word(s, 1, 2, 2)) == "12");
    CHECK(to_str(sturmian_word(s, 1, 2, 3)) == "121");
    CHECK(to_str(sturmian_word(s, 1, 2, 4)) == "12112");
    CHECK(to_str(sturmian_word(s, 1, 2, 5)) == "12112121");
}

TEST_CASE("word lengths follow the continuants") {
    SeqSpec s({2, 1, 3}, {1, 2});
    auto p = s.p_seq(8);
    for (long k = 0; k <= 8; ++k)
        CHECK(sturmian_word(s, 1, 2, k).size() == p[static_cast<size_t>(k + 1)].get_si());
}

TEST_CASE("run table is normalized and consistent") {
    SeqSpec s = SeqSpec::constant(3);
    Word w = sturmian_word(s, 1, 2, 10);
    CHECK(w.size() > 100000);
    CHECK(static_cast<long>(w.expand().size()) == w.size());
    for (size_t j = 1; j < w.runs().size(); ++j)
        CHECK(w.runs()[j].first != w.runs()[j - 1].first);
    // b-runs never exceed max(s_1 - 1, s_k + 1).
    for (const auto& r : w.runs()) CHECK(r.second <= 4);
}

TEST_CASE("palindromic prefixes are palindromic prefixes") {
    for (SeqSpec s : {SeqSpec::constant(1), SeqSpec({2}, {1}), SeqSpec({3, 2}, {1, 2})}) {
        long count = 12;
        auto pis = palindromic_prefixes(s, 1, 2, count);
        Word master = sturmian_word(s, 1, 2, 14);
        REQUIRE(static_cast<long>(pis.size()) == count);
        for (long i = 0; i < count; ++i) {
            CHECK(pis[static_cast<size_t>(i)].is_palindrome());
            CHECK(pis[static_cast<size_t>(i)].is_prefix_of(master));
            if (i > 0)
                CHECK(pis[static_cast<size_t>(i - 1)].size() < pis[static_cast<size_t>(i)].size());
        }
    }
}

TEST_CASE("palindromic prefix recurrence pi_{i+1} = pi_i (pi_psi(i)^-1 pi_i)") {
    for (SeqSpec s : {SeqSpec::constant(1), SeqSpec({2}, {1}), SeqSpec({3, 2}, {1, 2}),
                      SeqSpec::constant(2)}) {
        long count = 14;
        auto pis = palindromic_prefixes(s, 1, 2, count);
        for (long i = 0; i + 1 < count; ++i) {
            long ps = s.psi(i);
            if (ps < 0) continue;  // below the construction window
            const Word& pi = pis[static_cast<size_t>(i)];
            const Word& pp = pis[static_cast<size_t>(ps)];
            REQUIRE(pp.is_prefix_of(pi));
            CHECK(pis[static_cast<size_t>(i + 1)] == pi + pp.quotient_of(pi));
        }
    }
}

TEST_CASE("phi morphism on letters and palindromes") {
    CHECK(phi_morphism(Word::letter(1)) == IntMat2{1, 1, 1, 0});
    CHECK(phi_morphism(Word::letter(2)) == IntMat2{2, 1, 1, 0});
    CHECK(phi_morphism(from_string("12")) == IntMat2{3, 1, 2, 1});
    CHECK(phi_morphism(Word()) == IntMat2::identity());

    // morphism property
    Word u = from_string("1221"), v = from_string("212");
    CHECK(phi_morphism(u + v) == phi_morphism(u) * phi_morphism(v));

    // palindrome => symmetric matrix
    CHECK(phi_morphism(from_string("121")).is_symmetric());
    SeqSpec s = SeqSpec::constant(1);
    for (const Word& pi : palindromic_prefixes(s, 1, 2, 10))
        CHECK(phi_morphism(pi).is_symmetric());
}

TEST_CASE("phi respects the matrix recurrence") {
    SeqSpec s({1, 2}, {2, 1});
    std::vector<IntMat2> w;
    for (long k = 0; k <= 8; ++k) w.push_back(phi_morphism(sturmian_word(s, 1, 2, k)));
    for (long k = 1; k < 8; ++k)
        CHECK(w[static_cast<size_t>(k + 1)] ==
              pow(w[static_cast<size_t>(k)], static_cast<unsigned long>(s.s(k + 1))) *
                  w[static_cast<size_t>(k - 1)]);
}
