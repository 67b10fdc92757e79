#include "helpers.hpp"

#include <doctest.h>
#include <schroder/patterns.hpp>

using namespace schroder;

namespace {

std::vector<oracle::Word> words(const std::vector<Pattern>& pats) {
    std::vector<oracle::Word> out;
    for (const auto& p : pats) out.push_back(W(p.word()));
    return out;
}

}  // namespace

TEST_SUITE("patterns") {

TEST_CASE("containment examples") {
    std::vector<int> w{3, 2, 4, 2, 1};
    CHECK(contains(w, Pattern::parse("231")));
    CHECK_FALSE(contains(w, Pattern::parse("101")));
    CHECK(contains(w, Pattern(w)));
    CHECK(avoids_all(P("5,3,6,8,7,4,9,1,11,12,10,2").word(), parse_patterns("2413,4213")));
    CHECK_FALSE(avoids_all(std::vector<int>{0, 0, 2, 1}, parse_patterns("021")));
    CHECK(avoids_all(std::vector<int>{3, 1, 2}, {}));
    CHECK(contains(std::vector<int>{1, 1}, Pattern::parse("00")));
    CHECK_FALSE(contains(std::vector<int>{1, 2}, Pattern::parse("00")));
}

TEST_CASE("pattern parsing") {
    CHECK(parse_patterns("2413,4213").size() == 2);
    CHECK(patterns_to_string(parse_patterns("2413,4213")) == "2413,4213");
    CHECK(patterns_to_string(parse_patterns("2413,4213"), '-') == "2413-4213");
    CHECK(parse_patterns("").empty());
    CHECK_THROWS_AS(Pattern::parse("24a3"), ValidationError);
    CHECK_THROWS_AS(Pattern::parse(""), ValidationError);
    CHECK_THROWS_AS(Pattern(std::vector<int>{}), ValidationError);
}

TEST_CASE("contains agrees with subset oracle") {
    const auto pats = parse_patterns("021,2413,4213,3142,00,101,231,1");
    for (int n = 0; n <= 6; ++n)
        for (const auto& w : oracle::inversion_sequences(n))
            for (const auto& pat : pats) CHECK(contains(w, pat) == oracle::contains(w, W(pat.word())));
    for (const auto& w : oracle::permutations(6))
        for (const auto& pat : pats) CHECK(contains(w, pat) == oracle::contains(w, W(pat.word())));
}

TEST_CASE("contains is monotone under extension") {
    const auto pat = Pattern::parse("2413");
    for (const auto& w : oracle::permutations(5))
        if (contains(w, pat))
            for (int extra = 0; extra <= 6; ++extra) {
                auto longer = w;
                longer.push_back(extra);
                CHECK(contains(longer, pat));
                longer.insert(longer.begin(), extra);
                CHECK(contains(longer, pat));
            }
}

TEST_CASE("class enumeration matches the oracle, lexicographic") {
    const std::vector<std::vector<Pattern>> classes{
        parse_patterns("2413,4213"), parse_patterns("2413,3142"), parse_patterns("2314,3214"),
        parse_patterns("3412,4312"), parse_patterns("123"), {}};
    for (int n = 0; n <= 7; ++n)
        for (const auto& pats : classes) {
            auto got = enumerate_avoiding_permutations(n, pats);
            auto want = oracle::avoiding_permutations(n, words(pats));
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) CHECK(W(got[i].word()) == want[i]);
        }
    for (int n = 0; n <= 7; ++n)
        for (const auto& pats : {parse_patterns("021"), parse_patterns("012"), parse_patterns("000")}) {
            auto got = enumerate_avoiding_inversion_sequences(n, pats);
            auto want = oracle::avoiding_inversion_sequences(n, words(pats));
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) CHECK(W(got[i].word()) == want[i]);
        }
}

TEST_CASE("class sizes") {
    CHECK(enumerate_avoiding_permutations(4, parse_patterns("2413,4213")).size() == 22);
    CHECK(enumerate_avoiding_permutations(3, parse_patterns("2413,4213")).size() == 6);
    CHECK(enumerate_avoiding_inversion_sequences(4, parse_patterns("021")).size() == 22);
    CHECK(enumerate_avoiding_inversion_sequences(3, parse_patterns("021")).size() == 6);
    auto one = enumerate_avoiding_inversion_sequences(1, parse_patterns("021"));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == E("0"));
    // 1806 is the seventh large Schroder number; the recurrence oracle agrees.
    const auto schroder = oracle::schroder(8);
    CHECK(schroder[6] == 1806);
    CHECK(enumerate_avoiding_permutations(7, parse_patterns("2413,3142")).size() == schroder[6]);
    CHECK(enumerate_avoiding_permutations(8, parse_patterns("2413,3142")).size() == 8558);
}

TEST_CASE("021 fast path equals the generic filter") {
    for (int n = 0; n <= 8; ++n) {
        std::vector<InversionSequence> generic;
        for_each_avoiding_inversion_sequence(n, parse_patterns("021"), [&](const InversionSequence& e) {
            generic.push_back(e);
            return true;
        });
        CHECK(enumerate_021_avoiding(n) == generic);
        for (const auto& e : generic) CHECK(avoids_021(e));
    }
}

TEST_CASE("worker count does not change the output") {
    const auto pats = parse_patterns("2413,4213");
    auto serial = enumerate_avoiding_permutations(8, pats, 1);
    CHECK(enumerate_avoiding_permutations(8, pats, 3) == serial);
    CHECK(enumerate_avoiding_permutations(8, pats, 16) == serial);
    auto seq1 = enumerate_avoiding_inversion_sequences(7, parse_patterns("012"), 1);
    CHECK(enumerate_avoiding_inversion_sequences(7, parse_patterns("012"), 4) == seq1);
}

TEST_CASE("visitor stops early") {
    int seen = 0;
    for_each_avoiding_permutation(6, {}, [&](const Permutation&) { return ++seen < 5; });
    CHECK(seen == 5);
}

}
