#include <doctest.h>

#include <functional>

#include "apd/detection.hpp"
#include "apd/generators.hpp"
#include "apd/rules.hpp"

using namespace apd;

namespace {

ApprovalProfile prof(const std::vector<std::string>& labels,
                     const std::vector<std::vector<std::string>>& votes) {
    return build_profile(labels, votes);
}

Committee comm(const ApprovalProfile& p, const std::vector<std::string>& names) {
    std::vector<int> idx;
    for (const auto& s : names) idx.push_back(p.index_of(s));
    return Committee::of(p.num_candidates(), idx);
}

// recomputing the returned committee's score must reproduce the reported one
void check_solution(const ApprovalProfile& p, const RuleSpec& rule, const Solution& sol,
                    std::size_t k) {
    CHECK(sol.committee.size() == k);
    CHECK(score_rule(p, rule, sol.committee) == sol.score);
}

void oracle_sweep(StructureProperty structure, const RuleSpec& rule,
                  const std::function<Solution(const ApprovalProfile&, const DetectionResult&,
                                               std::size_t)>& algo,
                  int trials, std::uint64_t seed0, GenParams params = {}) {
    SplitMix64 rng(seed0);
    int done = 0;
    while (done < trials) {
        GenSpec spec;
        spec.structure = structure;
        spec.n = 1 + rng.below(8);
        spec.m = 1 + rng.below(8);
        spec.seed = rng.next();
        spec.params = params;
        auto p = generate(spec);
        std::size_t k = rng.below(std::min<std::size_t>(p.num_candidates(), 4) + 1);
        auto det = detect(p, structure);
        REQUIRE(det.holds());
        auto fast = algo(p, det, k);
        auto slow = brute_force(p, k, rule);
        CHECK(fast.score == slow.score);
        check_solution(p, rule, fast, k);
        ++done;
    }
}

}  // namespace

TEST_CASE("committees reject out-of-range candidates") {
    CHECK_THROWS_AS(Committee::of(3, {0, 3}), std::out_of_range);
    CHECK_THROWS_AS(Committee::of(3, {-1}), std::out_of_range);
    auto p = prof({"a", "b"}, {{"a"}});
    Committee wrong{CandSet::of(3, {0})};
    CHECK_THROWS_AS(score_wpav(p, WeightScheme::harmonic(), wrong), std::invalid_argument);
}

TEST_CASE("score_wpav and score_mav hand values") {
    auto p = prof({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
    CHECK(score_wpav(p, WeightScheme::harmonic(), comm(p, {"a", "b"})) == Rational(7, 2));

    auto single = prof({"a", "b"}, {{"a"}});
    CHECK(score_wpav(single, WeightScheme::harmonic(), comm(single, {"a"})) == Rational(1));

    auto disjoint = prof({"a", "b"}, {{"a"}});
    CHECK(score_wpav(disjoint, WeightScheme::harmonic(), comm(disjoint, {"b"})) == Rational(0));

    auto q = prof({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    CHECK(score_mav(q, comm(q, {"a", "c"})) == 2);
    auto exact = prof({"a", "b"}, {{"a", "b"}});
    CHECK(score_mav(exact, comm(exact, {"a", "b"})) == 0);
    auto empty = prof({"a", "b", "c"}, {{}});
    CHECK(score_mav(empty, comm(empty, {"a", "b"})) == 2);
}

TEST_CASE("mav identity: set-difference equals k + |v| - 2|W∩v|") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        GenSpec spec;
        spec.n = 1 + rng.below(6);
        spec.m = 1 + rng.below(7);
        spec.seed = rng.next();
        auto p = generate(spec);
        std::size_t k = rng.below(p.num_candidates() + 1);
        std::vector<int> mem;
        for (std::size_t c = 0; c < p.num_candidates() && mem.size() < k; ++c)
            if (rng.flip() || p.num_candidates() - c <= k - mem.size())
                mem.push_back(static_cast<int>(c));
        Committee w = Committee::of(p.num_candidates(), mem);
        long long direct = score_mav(p, w);
        long long formula = 0;
        for (const auto& v : p.votes())
            formula = std::max(formula,
                               static_cast<long long>(k) + static_cast<long long>(v.count()) -
                                   2 * static_cast<long long>(w.members.intersect_count(v)));
        CHECK(direct == formula);
    }
}

TEST_CASE("brute force oracle hand values") {
    auto p = prof({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
    auto sol = brute_force(p, 2, RuleSpec::pav());
    CHECK(sol.score == Rational(7, 2));
    REQUIRE(sol.optimal_set.has_value());
    CHECK(sol.optimal_set->size() == 3);

    auto q = prof({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    auto sol2 = brute_force(q, 2, RuleSpec::mav());
    CHECK(sol2.score == Rational(2));
    CHECK(sol2.optimal_set->size() == 4);

    // k = m: the full candidate set, trivially unique
    auto sol3 = brute_force(q, 4, RuleSpec::pav());
    CHECK(sol3.optimal_set->size() == 1);
    CHECK(sol3.committee.members.is_full());

    CHECK_THROWS_AS(brute_force(prof({"a"}, {{"a"}}), 0, RuleSpec::pav(), 0),
                    BudgetExceededError);
}

TEST_CASE("every member of the oracle's optimal set attains the optimum") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        GenSpec spec;
        spec.n = 1 + rng.below(5);
        spec.m = 1 + rng.below(6);
        spec.seed = rng.next();
        auto p = generate(spec);
        std::size_t k = rng.below(p.num_candidates() + 1);
        for (auto rule : {RuleSpec::pav(), RuleSpec::mav()}) {
            auto sol = brute_force(p, k, rule);
            REQUIRE(sol.optimal_set.has_value());
            CHECK(!sol.optimal_set->empty());
            for (const auto& members : *sol.optimal_set)
                CHECK(score_rule(p, rule, Committee{members}) == sol.score);
            // canonically sorted and deduplicated
            for (std::size_t i = 1; i < sol.optimal_set->size(); ++i)
                CHECK((*sol.optimal_set)[i - 1].members() < (*sol.optimal_set)[i].members());
        }
    }
}

TEST_CASE("padding: candidates approved by nobody never change a PAV score") {
    SplitMix64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        GenSpec spec;
        spec.n = 1 + rng.below(5);
        spec.m = 2 + rng.below(5);
        spec.seed = rng.next();
        auto p = generate(spec);
        CandSet approved(p.num_candidates());
        for (const auto& v : p.votes()) approved = approved | v;
        if (approved.is_full()) continue;
        int unloved = -1;
        for (std::size_t c = 0; c < p.num_candidates(); ++c)
            if (!approved.test(c)) {
                unloved = static_cast<int>(c);
                break;
            }
        std::vector<int> base;
        for (std::size_t c = 0; c < p.num_candidates() && base.size() < 2; ++c)
            if (static_cast<int>(c) != unloved) base.push_back(static_cast<int>(c));
        if (base.empty()) continue;
        auto w1 = Committee::of(p.num_candidates(), base);
        base.push_back(unloved);
        auto w2 = Committee::of(p.num_candidates(), base);
        CHECK(score_wpav(p, WeightScheme::harmonic(), w1) ==
              score_wpav(p, WeightScheme::harmonic(), w2));
    }
}

TEST_CASE("vi bounded-s hand values") {
    auto p = prof({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"a", "d"}});
    auto sol = pav_vi_bounded_s(p, {0, 1, 2}, 2);
    CHECK(sol.score == Rational(7, 2));
    check_solution(p, RuleSpec::pav(), sol, 2);

    auto single = prof({"a", "b"}, {{"a", "b"}});
    auto sol2 = pav_vi_bounded_s(single, {0}, 2);
    CHECK(sol2.score == Rational(3, 2));

    CHECK_THROWS_AS(pav_vi_bounded_s(prof({"a"}, {{"a"}, {}, {"a"}}), {0, 1, 2}, 1),
                    std::invalid_argument);
}

TEST_CASE("ci bounded-s hand values") {
    auto p = prof({"a", "b", "c"}, {{"a", "b", "c"}, {"a"}, {"b"}, {"c"}});
    auto sol = pav_ci_bounded_s(p, {0, 1, 2}, 2);
    CHECK(sol.score == Rational(7, 2));
    check_solution(p, RuleSpec::pav(), sol, 2);

    auto sol0 = pav_ci_bounded_s(p, {0, 1, 2}, 0);
    CHECK(sol0.score == Rational(0));
    CHECK(sol0.committee.size() == 0);
}

TEST_CASE("ci bounded-d hand values") {
    auto p = prof({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    auto sol = pav_ci_bounded_d(p, {0, 1, 2}, 1);
    CHECK(sol.score == Rational(2));
    CHECK(sol.committee.members.test(1));  // committee {b}
}

TEST_CASE("vi bounded-d hand values") {
    auto p = prof({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"a", "d"}});
    auto sol = pav_vi_bounded_d(p, {0, 1, 2}, 2);
    CHECK(sol.score == Rational(7, 2));

    auto single = prof({"a", "b", "c"}, {{"a", "b"}});
    auto sol2 = pav_vi_bounded_d(single, {0}, 3);
    CHECK(sol2.score == Rational(3, 2));  // u(min(k, |v|)) with padding
    CHECK(sol2.committee.size() == 3);
}

TEST_CASE("truncated schemes hand values") {
    auto cc = WeightScheme::chamberlin_courant();
    auto p = prof({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"a", "d"}});
    auto sol = wpav_truncated(p, {0, 1, 2}, AxisKind::Vi, cc, 2);
    CHECK(sol.score == Rational(3));
    check_solution(p, RuleSpec::wpav(cc), sol, 2);

    auto q = prof({"a", "b", "c"}, {{"a", "b", "c"}, {"a"}, {"b"}, {"c"}});
    auto sol2 = wpav_truncated(q, {0, 1, 2}, AxisKind::Ci, cc, 2);
    CHECK(sol2.score == Rational(3));

    CHECK_THROWS_AS(wpav_truncated(p, {0, 1, 2}, AxisKind::Vi, WeightScheme::harmonic(), 2),
                    std::invalid_argument);

    // no-truncation-in-range schemes match the bounded-s program
    SplitMix64 rng(12);
    auto wide = WeightScheme::truncated(
        {Rational(1), Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5),
         Rational(1, 6), Rational(1, 7), Rational(1, 8)});
    for (int trial = 0; trial < 30; ++trial) {
        GenSpec spec;
        spec.structure = StructureProperty::Vi;
        spec.n = 1 + rng.below(5);
        spec.m = 1 + rng.below(5);
        spec.seed = rng.next();
        auto r = generate(spec);
        std::size_t k = rng.below(std::min<std::size_t>(r.num_candidates(), 3) + 1);
        auto det = detect(r, StructureProperty::Vi);
        auto a = wpav_truncated(r, std::get<VoterOrder>(det.witness).order, AxisKind::Vi, wide, k);
        auto b = pav_vi_bounded_s(r, std::get<VoterOrder>(det.witness).order, k, wide);
        CHECK(a.score == b.score);
    }
}

TEST_CASE("vei committee hand values") {
    auto p = prof({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "d"}, {"c", "d"}});
    auto pav = vei_committee(p, {0, 1, 2}, 2, RuleSpec::pav());
    CHECK(pav.score == Rational(7, 2));
    CHECK(pav.committee.members == CandSet::of(4, {0, 3}));  // {a, d}
    auto mav = vei_committee(p, {0, 1, 2}, 2, RuleSpec::mav());
    CHECK(mav.score == Rational(2));

    // all-identical votes: top k of the universally approved block
    auto q = prof({"a", "b", "c"}, {{"a", "b"}, {"a", "b"}});
    auto sol = vei_committee(q, {0, 1}, 2, RuleSpec::pav());
    CHECK(sol.score == Rational(2) * cumulative_weight(WeightScheme::harmonic(), 2));
}

TEST_CASE("cei committee hand values") {
    auto p = prof({"a", "b", "c"}, {{"a", "b"}, {"a"}, {"c"}, {"b", "c"}});
    auto mav = cei_committee(p, {0, 1, 2}, 1, RuleSpec::mav());
    CHECK(mav.score == Rational(2));
    CHECK(mav.committee.members == CandSet::of(3, {1}));  // {b}

    auto pav = cei_committee(p, {0, 1, 2}, 2, RuleSpec::pav());
    auto oracle = brute_force(p, 2, RuleSpec::pav());
    CHECK(pav.score == oracle.score);

    auto full = prof({"a", "b", "c"}, {{"a", "b", "c"}});
    auto sol = cei_committee(full, {0, 1, 2}, 2, RuleSpec::pav());
    CHECK(sol.score == cumulative_weight(WeightScheme::harmonic(), 2));
}

TEST_CASE("wsc committee hand values") {
    auto p = prof({"a", "b", "c"}, {{"a", "b"}, {"b"}, {"b", "c"}});
    auto pav = wsc_committee(p, 1, RuleSpec::pav());
    CHECK(pav.score == Rational(3));
    CHECK(pav.committee.members == CandSet::of(3, {1}));
    auto mav = wsc_committee(p, 1, RuleSpec::mav());
    CHECK(mav.score == brute_force(p, 1, RuleSpec::mav()).score);

    auto two = prof({"a", "b"}, {{"a"}, {"b"}});
    CHECK(wsc_committee(two, 1, RuleSpec::pav()).score == Rational(1));
}

TEST_CASE("part committee hand values") {
    auto p = prof({"a", "b", "c"}, {{"a"}, {"a"}, {"b"}, {"c"}});
    auto pav = part_committee(p, 1, RuleSpec::pav());
    CHECK(pav.score == Rational(2));
    CHECK(pav.committee.members == CandSet::of(3, {0}));

    auto q = prof({"a", "b", "c"}, {{"a"}, {"b"}, {"c"}});
    CHECK(part_committee(q, 1, RuleSpec::mav()).score == Rational(2));

    CHECK_THROWS_AS(part_committee(prof({"a", "b"}, {{"a", "b"}, {"a"}}), 1, RuleSpec::pav()),
                    std::invalid_argument);
}

TEST_CASE("oracle sweeps: structured algorithms match brute force exactly") {
    GenParams s3;
    s3.max_vote_size = 3;
    GenParams d3;
    d3.max_degree = 3;
    GenParams d2;
    d2.max_degree = 2;

    oracle_sweep(StructureProperty::Vi, RuleSpec::pav(),
                 [](const ApprovalProfile& p, const DetectionResult& det, std::size_t k) {
                     return pav_vi_bounded_s(p, std::get<VoterOrder>(det.witness).order, k);
                 },
                 60, 1001, s3);
    oracle_sweep(StructureProperty::Ci, RuleSpec::pav(),
                 [](const ApprovalProfile& p, const DetectionResult& det, std::size_t k) {
                     return pav_ci_bounded_s(p, std::get<CandidateOrder>(det.witness).order, k);
                 },
                 60, 1002, s3);
    oracle_sweep(StructureProperty::Ci, RuleSpec::pav(),
                 [](const ApprovalProfile& p, const DetectionResult& det, std::size_t k) {
                     return pav_ci_bounded_d(p, std::get<CandidateOrder>(det.witness).order, k);
                 },
                 60, 1003, d3);
    oracle_sweep(StructureProperty::Vi, RuleSpec::pav(),
                 [](const ApprovalProfile& p, const DetectionResult& det, std::size_t k) {
                     return pav_vi_bounded_d(p, std::get<VoterOrder>(det.witness).order, k);
                 },
                 60, 1004, d2);

    auto cc = WeightScheme::chamberlin_courant();
    oracle_sweep(StructureProperty::Vi, RuleSpec::wpav(cc),
                 [&](const ApprovalProfile& p, const DetectionResult& det, std::size_t k) {
                     return wpav_truncated(p, std::get<VoterOrder>(det.witness).order,
                                           AxisKind::Vi, cc, k);
                 },
                 60, 1005);
    oracle_sweep(StructureProperty::Ci, RuleSpec::wpav(cc),
                 [&](const ApprovalProfile& p, const DetectionResult& det, std::size_t k) {
                     return wpav_truncated(p, std::get<CandidateOrder>(det.witness).order,
                                           AxisKind::Ci, cc, k);
                 },
                 60, 1006);

    for (auto rule : {RuleSpec::pav(), RuleSpec::mav()}) {
        oracle_sweep(StructureProperty::Vei, rule,
                     [&](const ApprovalProfile& p, const DetectionResult& det, std::size_t k) {
                         return vei_committee(p, std::get<VoterOrder>(det.witness).order, k, rule);
                     },
                     60, rule.is_mav() ? 1008 : 1007);
        oracle_sweep(StructureProperty::Cei, rule,
                     [&](const ApprovalProfile& p, const DetectionResult& det, std::size_t k) {
                         return cei_committee(p, std::get<CandidateOrder>(det.witness).order, k,
                                              rule);
                     },
                     60, rule.is_mav() ? 1010 : 1009);
        oracle_sweep(StructureProperty::Wsc, rule,
                     [&](const ApprovalProfile& p, const DetectionResult&, std::size_t k) {
                         return wsc_committee(p, k, rule);
                     },
                     60, rule.is_mav() ? 1012 : 1011);
        oracle_sweep(StructureProperty::Part, rule,
                     [&](const ApprovalProfile& p, const DetectionResult&, std::size_t k) {
                         return part_committee(p, k, rule);
                     },
                     60, rule.is_mav() ? 1014 : 1013);
    }
}

TEST_CASE("arbitrary non-increasing schemes run through every solver") {
    auto trunc3 = WeightScheme::truncated({Rational(1), Rational(2, 3), Rational(1, 3)});
    auto tail = WeightScheme::explicit_tail(
        {Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 4)});

    struct Cfg {
        StructureProperty structure;
        WeightScheme scheme;
        std::function<Solution(const ApprovalProfile&, const Witness&, std::size_t,
                               const WeightScheme&)> algo;
    };
    std::vector<Cfg> cfgs = {
        {StructureProperty::Vi, trunc3,
         [](const ApprovalProfile& p, const Witness& w, std::size_t k, const WeightScheme& s) {
             return wpav_truncated(p, std::get<VoterOrder>(w).order, AxisKind::Vi, s, k);
         }},
        {StructureProperty::Ci, trunc3,
         [](const ApprovalProfile& p, const Witness& w, std::size_t k, const WeightScheme& s) {
             return wpav_truncated(p, std::get<CandidateOrder>(w).order, AxisKind::Ci, s, k);
         }},
        {StructureProperty::Vi, tail,
         [](const ApprovalProfile& p, const Witness& w, std::size_t k, const WeightScheme& s) {
             return pav_vi_bounded_s(p, std::get<VoterOrder>(w).order, k, s);
         }},
        {StructureProperty::Ci, tail,
         [](const ApprovalProfile& p, const Witness& w, std::size_t k, const WeightScheme& s) {
             return pav_ci_bounded_s(p, std::get<CandidateOrder>(w).order, k, s);
         }},
        {StructureProperty::Ci, tail,
         [](const ApprovalProfile& p, const Witness& w, std::size_t k, const WeightScheme& s) {
             return pav_ci_bounded_d(p, std::get<CandidateOrder>(w).order, k, s);
         }},
        {StructureProperty::Vi, tail,
         [](const ApprovalProfile& p, const Witness& w, std::size_t k, const WeightScheme& s) {
             return pav_vi_bounded_d(p, std::get<VoterOrder>(w).order, k, s);
         }},
        {StructureProperty::Vei, tail,
         [](const ApprovalProfile& p, const Witness& w, std::size_t k, const WeightScheme& s) {
             return vei_committee(p, std::get<VoterOrder>(w).order, k, RuleSpec::wpav(s));
         }},
        {StructureProperty::Cei, trunc3,
         [](const ApprovalProfile& p, const Witness& w, std::size_t k, const WeightScheme& s) {
             return cei_committee(p, std::get<CandidateOrder>(w).order, k, RuleSpec::wpav(s));
         }},
        {StructureProperty::Wsc, tail,
         [](const ApprovalProfile& p, const Witness&, std::size_t k, const WeightScheme& s) {
             return wsc_committee(p, k, RuleSpec::wpav(s));
         }},
        {StructureProperty::Part, trunc3,
         [](const ApprovalProfile& p, const Witness&, std::size_t k, const WeightScheme& s) {
             return part_committee(p, k, RuleSpec::wpav(s));
         }},
    };
    std::uint64_t seed = 424000;
    for (const auto& cfg : cfgs) {
        SplitMix64 rng(seed++);
        for (int trial = 0; trial < 40; ++trial) {
            GenSpec spec;
            spec.structure = cfg.structure;
            spec.n = 1 + rng.below(7);
            spec.m = 1 + rng.below(7);
            spec.seed = rng.next();
            spec.params.max_vote_size = 4;
            spec.params.max_degree = 4;
            auto p = generate(spec);
            std::size_t k = rng.below(std::min<std::size_t>(p.num_candidates(), 4) + 1);
            auto det = detect(p, cfg.structure);
            REQUIRE(det.holds());
            auto fast = cfg.algo(p, det.witness, k, cfg.scheme);
            auto rule = RuleSpec::wpav(cfg.scheme);
            CHECK(fast.score == brute_force(p, k, rule).score);
            CHECK(score_rule(p, rule, fast.committee) == fast.score);
        }
    }
}

TEST_CASE("cross-algorithm agreement on 2PART profiles") {
    SplitMix64 rng(2020);
    for (int trial = 0; trial < 40; ++trial) {
        GenSpec spec;
        spec.structure = StructureProperty::TwoPart;
        spec.n = 2 + rng.below(6);
        spec.m = 2 + rng.below(6);
        spec.seed = rng.next();
        auto p = generate(spec);
        std::size_t k = rng.below(std::min<std::size_t>(p.num_candidates(), 4) + 1);
        auto vei = detect(p, StructureProperty::Vei);
        auto cei = detect(p, StructureProperty::Cei);
        REQUIRE(vei.holds());
        REQUIRE(cei.holds());
        for (auto rule : {RuleSpec::pav(), RuleSpec::mav()}) {
            auto a = vei_committee(p, std::get<VoterOrder>(vei.witness).order, k, rule);
            auto b = cei_committee(p, std::get<CandidateOrder>(cei.witness).order, k, rule);
            auto c = wsc_committee(p, k, rule);
            CHECK(a.score == b.score);
            CHECK(b.score == c.score);
        }
    }
}

TEST_CASE("solve dispatch") {
    auto part = prof({"a", "b", "c"}, {{"a"}, {"b"}, {"c"}});
    auto sol = solve(part, 1, RuleSpec::pav());
    CHECK(sol.algorithm == "part-greedy");
    CHECK(sol.score == brute_force(part, 1, RuleSpec::pav()).score);

    // unstructured: oracle fallback
    auto mess = prof({"a", "b", "c", "d", "e", "f"},
                     {{"a", "b", "e"}, {"a", "c"}, {"b", "c", "f"}, {"d", "f"}, {"a", "d"}});
    auto sol2 = solve(mess, 3, RuleSpec::pav());
    CHECK(sol2.algorithm == "oracle");

    // oracle infeasible and no structure: explicit failure
    SolveOptions tiny;
    tiny.oracle_budget = 2;
    CHECK_THROWS_AS(solve(mess, 3, RuleSpec::pav(), tiny), NoApplicableAlgorithmError);

    // forced strategy
    SolveOptions forced;
    forced.strategy = SolveStrategy::Force;
    forced.forced_algorithm = "oracle";
    CHECK(solve(part, 1, RuleSpec::pav(), forced).algorithm == "oracle");
    forced.forced_algorithm = "cei";
    CHECK_THROWS_AS(solve(mess, 2, RuleSpec::pav(), forced), NoApplicableAlgorithmError);
}

TEST_CASE("solvers are deterministic") {
    SplitMix64 rng(515151);
    for (int trial = 0; trial < 40; ++trial) {
        GenSpec spec;
        spec.n = 1 + rng.below(7);
        spec.m = 1 + rng.below(7);
        spec.seed = rng.next();
        spec.params.max_vote_size = 3;
        auto p = generate(spec);
        std::size_t k = rng.below(std::min<std::size_t>(p.num_candidates(), 4) + 1);
        for (auto rule : {RuleSpec::pav(), RuleSpec::mav()}) {
            auto a = solve(p, k, rule);
            auto b = solve(p, k, rule);
            CHECK(a.score == b.score);
            CHECK(a.committee.members == b.committee.members);
            CHECK(a.algorithm == b.algorithm);
        }
    }
}

TEST_CASE("single-candidate single-voter edge profile") {
    auto p = prof({"a"}, {{"a"}});
    CHECK(detect(p, StructureProperty::Part).holds());
    CHECK(detect(p, StructureProperty::Vei).holds());
    CHECK(detect(p, StructureProperty::Vi).holds());
    CHECK(detect(p, StructureProperty::Cei).holds());
    CHECK(detect(p, StructureProperty::Ci).holds());
    CHECK(detect(p, StructureProperty::Wsc).holds());
    CHECK(detect(p, StructureProperty::Ssc).holds());
    CHECK(!detect(p, StructureProperty::TwoPart).holds());
    CHECK(solve(p, 1, RuleSpec::pav()).score == Rational(1));
    CHECK(solve(p, 1, RuleSpec::mav()).score == Rational(0));
    CHECK(solve(p, 0, RuleSpec::pav()).score == Rational(0));
}

TEST_CASE("solve agrees with the oracle on random instances") {
    SplitMix64 rng(3030);
    for (int trial = 0; trial < 120; ++trial) {
        GenSpec spec;
        std::uint64_t which = rng.below(9);
        if (which > 0)
            spec.structure = std::vector<StructureProperty>{
                StructureProperty::TwoPart, StructureProperty::Part,  StructureProperty::Wsc,
                StructureProperty::Vei,     StructureProperty::Cei,   StructureProperty::Vi,
                StructureProperty::Ci,      StructureProperty::Due}[which - 1];
        spec.n = 2 + rng.below(6);
        spec.m = 2 + rng.below(6);
        spec.seed = rng.next();
        spec.params.max_vote_size = 3;
        auto p = generate(spec);
        std::size_t k = rng.below(std::min<std::size_t>(p.num_candidates(), 4) + 1);
        for (auto rule : {RuleSpec::pav(), RuleSpec::mav()}) {
            auto fast = solve(p, k, rule);
            auto slow = brute_force(p, k, rule);
            CHECK(fast.score == slow.score);
            check_solution(p, rule, fast, k);
        }
    }
}
