#include <doctest.h>

#include "apd/generators.hpp"

using namespace apd;

TEST_CASE("generation is deterministic for a fixed spec") {
    GenSpec spec;
    spec.structure = StructureProperty::Ci;
    spec.n = 4;
    spec.m = 5;
    spec.seed = 7;
    auto a = generate(spec);
    auto b = generate(spec);
    CHECK(a == b);
}

TEST_CASE("every structured generator satisfies its own detector") {
    struct Case {
        StructureProperty structure;
        std::vector<StructureProperty> detectors;
    };
    std::vector<Case> cases = {
        {StructureProperty::TwoPart, {StructureProperty::TwoPart}},
        {StructureProperty::Part, {StructureProperty::Part}},
        {StructureProperty::Vei, {StructureProperty::Vei, StructureProperty::Vi}},
        {StructureProperty::Vi, {StructureProperty::Vi}},
        {StructureProperty::Cei, {StructureProperty::Cei, StructureProperty::Ci}},
        {StructureProperty::Ci, {StructureProperty::Ci}},
        {StructureProperty::Wsc, {StructureProperty::Wsc}},
        // a uniformly Euclidean profile is both VI and CI
        {StructureProperty::Due, {StructureProperty::Vi, StructureProperty::Ci}},
    };
    SplitMix64 rng(2024);
    for (const auto& c : cases) {
        for (int trial = 0; trial < 150; ++trial) {
            GenSpec spec;
            spec.structure = c.structure;
            spec.n = 2 + rng.below(8);
            spec.m = 2 + rng.below(8);
            spec.seed = rng.next();
            auto p = generate(spec);
            for (auto d : c.detectors) {
                auto res = detect(p, d);
                REQUIRE(res.holds());
                CHECK(verify_witness(p, d, res.witness));
            }
        }
    }
}

TEST_CASE("size and degree bounds are honored") {
    SplitMix64 rng(4);
    for (int trial = 0; trial < 80; ++trial) {
        GenSpec spec;
        spec.structure = trial % 2 ? StructureProperty::Ci : StructureProperty::Vi;
        spec.n = 1 + rng.below(9);
        spec.m = 1 + rng.below(9);
        spec.seed = rng.next();
        spec.params.max_vote_size = 3;
        spec.params.max_degree = 3;
        auto p = generate(spec);
        auto st = profile_stats(p);
        CHECK(st.max_vote_size <= 3);
        CHECK(st.max_candidate_degree <= 3);
    }
}

TEST_CASE("unsatisfiable specs are rejected") {
    GenSpec spec;
    spec.structure = StructureProperty::TwoPart;
    spec.n = 1;
    spec.m = 3;
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);
    GenSpec zero;
    zero.n = 0;
    zero.m = 1;
    CHECK_THROWS_AS(generate(zero), std::invalid_argument);
    GenSpec due_detect;
    due_detect.structure = StructureProperty::Psc;
    due_detect.n = 2;
    due_detect.m = 2;
    CHECK_THROWS_AS(generate(due_detect), std::invalid_argument);
}
