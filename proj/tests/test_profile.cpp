#include <doctest.h>

#include "apd/generators.hpp"
#include "apd/profile.hpp"
#include "apd/profile_io.hpp"

using namespace apd;

TEST_CASE("build_profile assigns indices in label order") {
    auto p = build_profile({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(p.num_candidates() == 3);
    CHECK(p.num_voters() == 2);
    CHECK(p.vote(0).test(0));
    CHECK(p.vote(0).test(1));
    CHECK(!p.vote(0).test(2));
    CHECK(p.index_of("c") == 2);
}

TEST_CASE("build_profile rejects duplicates and unknown labels") {
    CHECK_THROWS_AS(build_profile({"a", "a"}, {{"a"}}), std::invalid_argument);
    CHECK_THROWS_AS(build_profile({"a"}, {{"b"}}), std::invalid_argument);
}

TEST_CASE("empty and full votes are both accepted") {
    auto p = build_profile({"a"}, {{}, {"a"}});
    CHECK(p.vote(0).empty());
    CHECK(p.vote(1).is_full());
}

TEST_CASE("weak_order_equal merges exactly the trivial votes") {
    const std::size_t m = 3;
    CandSet empty(m);
    CandSet full = CandSet::full(m);
    CandSet a = CandSet::of(m, {0});
    CHECK(weak_order_equal(empty, full, m));
    CHECK(weak_order_equal(a, a, m));
    CHECK(!weak_order_equal(a, CandSet::of(m, {1}), m));
    CHECK(!weak_order_equal(a, full, m));
}

TEST_CASE("weak_order_equal is an equivalence relation on random votes") {
    SplitMix64 rng(7);
    const std::size_t m = 5;
    std::vector<CandSet> votes;
    for (int i = 0; i < 40; ++i) {
        CandSet v(m);
        for (std::size_t c = 0; c < m; ++c)
            if (rng.flip()) v.set(c);
        votes.push_back(v);
    }
    for (const auto& u : votes) {
        CHECK(weak_order_equal(u, u, m));
        for (const auto& v : votes) {
            CHECK(weak_order_equal(u, v, m) == weak_order_equal(v, u, m));
            for (const auto& w : votes)
                if (weak_order_equal(u, v, m) && weak_order_equal(v, w, m))
                    CHECK(weak_order_equal(u, w, m));
        }
    }
}

TEST_CASE("cumulative weights") {
    auto harmonic = WeightScheme::harmonic();
    CHECK(cumulative_weight(harmonic, 3) == Rational(11, 6));
    CHECK(cumulative_weight(harmonic, 0) == Rational(0));
    CHECK(cumulative_weight(WeightScheme::chamberlin_courant(), 5) == Rational(1));
    auto expl = WeightScheme::explicit_tail({Rational(1), Rational(1, 2)});
    CHECK(expl.weight(7) == Rational(1, 2));  // constant tail
    auto trunc = WeightScheme::truncated({Rational(1), Rational(1, 2)});
    CHECK(trunc.weight(3) == Rational(0));
    CHECK(cumulative_weight(trunc, 10) == Rational(3, 2));
}

TEST_CASE("cumulative weight is non-decreasing, strictly while weights positive") {
    for (auto scheme : {WeightScheme::harmonic(), WeightScheme::chamberlin_courant(),
                        WeightScheme::truncated({Rational(1), Rational(1, 2), Rational(1, 2)})}) {
        Rational prev = cumulative_weight(scheme, 0);
        for (std::size_t p = 1; p <= 8; ++p) {
            Rational cur = cumulative_weight(scheme, p);
            CHECK(!(cur < prev));
            if (!scheme.weight(p).is_zero()) CHECK(prev < cur);
            prev = cur;
        }
    }
}

TEST_CASE("weight scheme validation") {
    CHECK_THROWS_AS(WeightScheme::truncated({Rational(1, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(WeightScheme::explicit_tail({Rational(1), Rational(2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(WeightScheme::explicit_tail({Rational(1), Rational(-1, 2)}),
                    std::invalid_argument);
}

TEST_CASE("profile_stats") {
    auto p = build_profile({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"a", "d"}});
    auto st = profile_stats(p);
    CHECK(st.max_vote_size == 2);
    CHECK(st.max_candidate_degree == 3);
    CHECK(st.distinct_votes == 3);

    auto q = build_profile({"a"}, {{"a"}, {"a"}});
    auto st2 = profile_stats(q);
    CHECK(st2.max_vote_size == 1);
    CHECK(st2.max_candidate_degree == 2);
    CHECK(st2.distinct_votes == 1);

    auto r = build_profile({"a"}, {{}});
    auto st3 = profile_stats(r);
    CHECK(st3.max_vote_size == 0);
    CHECK(st3.max_candidate_degree == 0);
    CHECK(st3.distinct_votes == 1);
}

TEST_CASE("profile file round trip") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        GenSpec spec;
        spec.n = 1 + rng.below(6);
        spec.m = 1 + rng.below(6);
        spec.seed = rng.next();
        auto p = generate(spec);
        auto back = parse_profile(serialize_profile(p));
        CHECK(back == p);
    }
}

TEST_CASE("parser reports line numbers") {
    try {
        parse_profile("candidates: a,b\nvote: a\nvote: zz\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(parse_profile("vote: a\n"), ParseError);
    CHECK_THROWS_AS(parse_profile("candidates: a\n"), ParseError);
    CHECK_THROWS_AS(parse_profile("candidates: a,a\nvote: a\n"), ParseError);
    CHECK_THROWS_AS(parse_profile("candidates: a-b\nvote: a\n"), ParseError);

    auto p = parse_profile("# a comment\ncandidates:  a , b \n\nvote:\nvote: b,a\n");
    CHECK(p.num_voters() == 2);
    CHECK(p.vote(0).empty());
    CHECK(p.vote(1).count() == 2);
}
