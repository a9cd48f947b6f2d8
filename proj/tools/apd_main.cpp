// apd: structured approval profiles and exact committee selection.

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <optional>

#include "apd/detection.hpp"
#include "apd/generators.hpp"
#include "apd/profile_io.hpp"
#include "apd/refinements.hpp"
#include "apd/rules.hpp"

using json = nlohmann::json;
using namespace apd;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitSoftware = 70;

std::string label_list(const ApprovalProfile& p, const std::vector<int>& cands) {
    std::string out;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (i) out += ",";
        out += p.label(cands[i]);
    }
    return out;
}

std::string voter_list(const std::vector<int>& voters) {
    std::string out;
    for (std::size_t i = 0; i < voters.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(voters[i] + 1);  // voters print 1-based
    }
    return out;
}

std::string witness_text(const ApprovalProfile& p, const Witness& w) {
    if (auto* co = std::get_if<CandidateOrder>(&w)) return label_list(p, co->order);
    if (auto* vo = std::get_if<VoterOrder>(&w)) return voter_list(vo->order);
    if (auto* pa = std::get_if<CandidatePartition>(&w)) {
        std::string out;
        for (std::size_t i = 0; i < pa->parts.size(); ++i) {
            if (i) out += " | ";
            out += label_list(p, pa->parts[i].members());
        }
        return out;
    }
    if (auto* e = std::get_if<EuclideanEmbedding>(&w))
        return "embedding over " + std::to_string(e->voter_pos.size()) + " voters";
    return "";
}

WeightScheme parse_weights(const std::string& text) {
    if (text == "harmonic") return WeightScheme::harmonic();
    if (text == "cc") return WeightScheme::chamberlin_courant();
    std::vector<Rational> entries;
    std::string cur;
    std::stringstream ss(text);
    while (std::getline(ss, cur, ',')) entries.push_back(Rational::from_string(cur));
    if (entries.empty()) throw std::invalid_argument("empty weight list");
    // a list ending in zero continues with zeros; otherwise the last entry repeats
    if (entries.back().is_zero()) return WeightScheme::truncated(std::move(entries));
    return WeightScheme::explicit_tail(std::move(entries));
}

RuleSpec parse_rule(const std::string& rule, const std::string& weights) {
    if (rule == "mav") return RuleSpec::mav();
    if (rule == "pav") return RuleSpec::pav();
    if (rule == "wpav") return RuleSpec::wpav(parse_weights(weights));
    throw std::invalid_argument("unknown rule '" + rule + "'");
}

json score_json(const Rational& r) {
    return json{{"num", r.num().to_string()}, {"den", r.den().to_string()}};
}

int run_detect(const std::string& file, const std::string& property, bool as_json) {
    auto p = load_profile(file);
    std::vector<StructureProperty> props;
    if (property == "all") {
        for (auto prop : all_properties())
            if (prop != StructureProperty::Due) props.push_back(prop);
    } else {
        auto prop = property_from_name(property);
        if (!prop) {
            std::cerr << "unknown property '" << property << "'\n";
            return kExitUsage;
        }
        props.push_back(*prop);
    }

    json lines = json::array();
    int exit_code = kExitHolds;
    for (auto prop : props) {
        DetectionResult res;
        try {
            res = detect(p, prop);
        } catch (const UnsupportedPropertyError& e) {
            if (as_json) {
                std::cout << json{{"property", property_name(prop)},
                                  {"holds", "unsupported"},
                                  {"witness", nullptr},
                                  {"method", "unsupported"}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << property_name(prop) << ": unsupported (" << e.what() << ")\n";
            }
            return kExitUnknown;
        }
        std::string wtext = witness_text(p, res.witness);
        if (as_json) {
            json holds;
            if (res.verdict == Verdict::Holds)
                holds = true;
            else if (res.verdict == Verdict::Fails)
                holds = false;
            else
                holds = "unknown";
            lines.push_back(json{{"property", property_name(prop)},
                                 {"holds", holds},
                                 {"witness", res.holds() ? json(wtext) : json(nullptr)},
                                 {"method", res.method}});
        } else {
            std::cout << property_name(prop) << ": ";
            if (res.verdict == Verdict::Holds)
                std::cout << "holds" << (wtext.empty() ? "" : "  witness: " + wtext);
            else if (res.verdict == Verdict::Fails)
                std::cout << "fails";
            else
                std::cout << "unknown";
            std::cout << "\n";
        }
        if (props.size() == 1) {
            if (res.verdict == Verdict::Fails) exit_code = kExitFails;
            if (res.verdict == Verdict::Unknown) exit_code = kExitUnknown;
        }
    }
    if (as_json) std::cout << (props.size() == 1 ? lines[0].dump() : lines.dump()) << "\n";
    return exit_code;
}

int run_solve(const std::string& file, const RuleSpec& rule, std::size_t k,
              const std::string& algo, bool as_json) {
    auto p = load_profile(file);
    SolveOptions opts;
    if (algo == "auto") {
        opts.strategy = SolveStrategy::Auto;
    } else if (algo == "oracle") {
        opts.strategy = SolveStrategy::Oracle;
    } else {
        opts.strategy = SolveStrategy::Force;
        opts.forced_algorithm = algo;
    }
    Solution sol;
    try {
        sol = solve(p, k, rule, opts);
    } catch (const NoApplicableAlgorithmError& e) {
        std::cerr << "no applicable algorithm: " << e.what() << "\n";
        return kExitUnknown;
    }
    auto members = sol.committee.members.members();
    if (as_json) {
        std::cout << json{{"committee", label_list(p, members)},
                          {"score", score_json(sol.score)},
                          {"algorithm", sol.algorithm}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "committee: " << label_list(p, members) << "\n"
                  << "score: " << sol.score.to_string() << "\n"
                  << "algorithm: " << sol.algorithm << "\n";
    }
    return 0;
}

int run_score(const std::string& file, const RuleSpec& rule, const std::string& committee) {
    auto p = load_profile(file);
    std::vector<int> members;
    std::string cur;
    std::stringstream ss(committee);
    while (std::getline(ss, cur, ',')) {
        int idx = p.index_of(cur);
        if (idx < 0) {
            std::cerr << "unknown candidate '" << cur << "'\n";
            return kExitUsage;
        }
        members.push_back(idx);
    }
    auto w = Committee::of(p.num_candidates(), members);
    std::cout << score_rule(p, rule, w).to_string() << "\n";
    return 0;
}

int run_generate(const std::string& structure, std::size_t n, std::size_t m,
                 std::uint64_t seed, const std::string& out,
                 std::optional<std::size_t> max_s, std::optional<std::size_t> max_d) {
    GenSpec spec;
    if (structure != "unrestricted") {
        auto prop = property_from_name(structure);
        if (!prop) {
            std::cerr << "unknown structure '" << structure << "'\n";
            return kExitUsage;
        }
        spec.structure = *prop;
    }
    spec.n = n;
    spec.m = m;
    spec.seed = seed;
    spec.params.max_vote_size = max_s;
    spec.params.max_degree = max_d;
    auto p = generate(spec);
    if (out.empty())
        std::cout << serialize_profile(p);
    else
        save_profile(p, out);
    return 0;
}

struct CrosscheckCase {
    std::string name;
    RuleSpec rule;
    std::function<Solution(const ApprovalProfile&, std::size_t)> algo;
};

std::vector<CrosscheckCase> crosscheck_cases(StructureProperty structure) {
    auto cc = WeightScheme::chamberlin_courant();
    auto witness_of = [](const ApprovalProfile& p, StructureProperty prop) {
        auto det = detect(p, prop);
        if (!det.holds()) throw std::runtime_error("generated profile lost its structure");
        return det.witness;
    };
    std::vector<CrosscheckCase> cases;
    auto add_both_rules = [&](const std::string& tag,
                              std::function<Solution(const ApprovalProfile&, std::size_t,
                                                     const RuleSpec&)> fn) {
        for (auto rule : {RuleSpec::pav(), RuleSpec::mav()})
            cases.push_back({tag + (rule.is_mav() ? "/mav" : "/pav"), rule,
                             [fn, rule](const ApprovalProfile& p, std::size_t k) {
                                 return fn(p, k, rule);
                             }});
    };
    switch (structure) {
        case StructureProperty::Vi:
            cases.push_back({"vi-s/pav", RuleSpec::pav(),
                             [witness_of](const ApprovalProfile& p, std::size_t k) {
                                 return pav_vi_bounded_s(
                                     p,
                                     std::get<VoterOrder>(witness_of(p, StructureProperty::Vi)).order,
                                     k);
                             }});
            cases.push_back({"vi-d/pav", RuleSpec::pav(),
                             [witness_of](const ApprovalProfile& p, std::size_t k) {
                                 return pav_vi_bounded_d(
                                     p,
                                     std::get<VoterOrder>(witness_of(p, StructureProperty::Vi)).order,
                                     k);
                             }});
            cases.push_back(
                {"truncated-vi/cc", RuleSpec::wpav(cc),
                 [witness_of, cc](const ApprovalProfile& p, std::size_t k) {
                     return wpav_truncated(
                         p, std::get<VoterOrder>(witness_of(p, StructureProperty::Vi)).order,
                         AxisKind::Vi, cc, k);
                 }});
            break;
        case StructureProperty::Ci:
        case StructureProperty::Due:
            cases.push_back(
                {"ci-s/pav", RuleSpec::pav(),
                 [witness_of](const ApprovalProfile& p, std::size_t k) {
                     return pav_ci_bounded_s(
                         p, std::get<CandidateOrder>(witness_of(p, StructureProperty::Ci)).order,
                         k);
                 }});
            cases.push_back(
                {"ci-d/pav", RuleSpec::pav(),
                 [witness_of](const ApprovalProfile& p, std::size_t k) {
                     return pav_ci_bounded_d(
                         p, std::get<CandidateOrder>(witness_of(p, StructureProperty::Ci)).order,
                         k);
                 }});
            cases.push_back(
                {"truncated-ci/cc", RuleSpec::wpav(cc),
                 [witness_of, cc](const ApprovalProfile& p, std::size_t k) {
                     return wpav_truncated(
                         p, std::get<CandidateOrder>(witness_of(p, StructureProperty::Ci)).order,
                         AxisKind::Ci, cc, k);
                 }});
            break;
        case StructureProperty::Vei:
            add_both_rules("vei", [witness_of](const ApprovalProfile& p, std::size_t k,
                                               const RuleSpec& rule) {
                return vei_committee(
                    p, std::get<VoterOrder>(witness_of(p, StructureProperty::Vei)).order, k, rule);
            });
            break;
        case StructureProperty::Cei:
            add_both_rules("cei", [witness_of](const ApprovalProfile& p, std::size_t k,
                                               const RuleSpec& rule) {
                return cei_committee(
                    p, std::get<CandidateOrder>(witness_of(p, StructureProperty::Cei)).order, k,
                    rule);
            });
            break;
        case StructureProperty::Wsc:
        case StructureProperty::TwoPart:
            add_both_rules("wsc", [](const ApprovalProfile& p, std::size_t k,
                                     const RuleSpec& rule) { return wsc_committee(p, k, rule); });
            break;
        case StructureProperty::Part:
            add_both_rules("part",
                           [](const ApprovalProfile& p, std::size_t k, const RuleSpec& rule) {
                               return part_committee(p, k, rule);
                           });
            break;
        default:
            throw std::invalid_argument("crosscheck: unsupported structure");
    }
    return cases;
}

int run_crosscheck(const std::string& structure, int trials, std::uint64_t seed,
                   std::size_t max_n, std::size_t max_m, std::size_t max_k) {
    auto prop = property_from_name(structure);
    if (!prop) {
        std::cerr << "unknown structure '" << structure << "'\n";
        return kExitUsage;
    }
    std::vector<CrosscheckCase> cases;
    try {
        cases = crosscheck_cases(*prop);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    SplitMix64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        GenSpec spec;
        spec.structure = *prop;
        spec.n = 2 + rng.below(std::max<std::size_t>(1, max_n - 1));
        spec.m = 2 + rng.below(std::max<std::size_t>(1, max_m - 1));
        spec.seed = rng.next();
        spec.params.max_vote_size = 3;
        spec.params.max_degree = 3;
        auto p = generate(spec);
        std::size_t k = rng.below(std::min(p.num_candidates(), max_k) + 1);
        for (const auto& c : cases) {
            auto fast = c.algo(p, k);
            auto slow = brute_force(p, k, c.rule);
            Rational recomputed = score_rule(p, c.rule, fast.committee);
            if (!(fast.score == slow.score) || !(recomputed == fast.score)) {
                std::cerr << "MISMATCH " << c.name << " trial " << t << " k=" << k
                          << " algorithm=" << fast.score.to_string()
                          << " oracle=" << slow.score.to_string()
                          << " recomputed=" << recomputed.to_string() << "\nreproducer:\n"
                          << serialize_profile(p);
                return kExitFails;
            }
        }
    }
    std::cout << "crosscheck ok: " << structure << ", " << trials << " trials\n";
    return 0;
}

int run_embed(const std::string& file, const std::string& from) {
    auto p = load_profile(file);
    auto prop = property_from_name(from);
    if (!prop) {
        std::cerr << "unknown property '" << from << "'\n";
        return kExitUsage;
    }
    auto det = detect(p, *prop);
    if (!det.holds()) {
        std::cerr << "profile does not satisfy " << from << "\n";
        return kExitFails;
    }
    auto e = embed_from_witness(p, *prop, det.witness);
    for (std::size_t c = 0; c < p.num_candidates(); ++c)
        std::cout << "candidate " << p.label(static_cast<int>(c)) << ": "
                  << e.candidate_pos[c].to_string() << "\n";
    for (std::size_t i = 0; i < p.num_voters(); ++i) {
        std::cout << "voter " << (i + 1) << ": " << e.voter_pos[i].to_string();
        if (!e.uniform()) std::cout << "  radius: " << e.voter_radii[i].to_string();
        std::cout << "\n";
    }
    if (e.uniform()) std::cout << "radius: " << e.uniform_radius->to_string() << "\n";
    return 0;
}

int run_refine(const std::string& file, const std::string& target) {
    auto p = load_profile(file);
    auto det = detect(p, StructureProperty::Ci);
    if (!det.holds()) {
        std::cerr << "profile admits no " << target << " refinement (not CI)\n";
        return kExitFails;
    }
    const auto& axis = std::get<CandidateOrder>(det.witness).order;
    auto print_rankings = [&](const TotalOrderProfile& t) {
        for (std::size_t i = 0; i < t.rankings.size(); ++i) {
            std::cout << "voter " << (i + 1) << ": ";
            for (std::size_t r = 0; r < t.rankings[i].size(); ++r) {
                if (r) std::cout << ">";
                std::cout << p.label(t.rankings[i][r]);
            }
            std::cout << "\n";
        }
    };
    if (target == "psp") {
        auto t = refine_psp(p, axis);
        std::cout << "axis: " << label_list(p, axis) << "\n";
        print_rankings(t);
        return 0;
    }
    if (target == "pe") {
        auto emb = embed_from_witness(p, StructureProperty::Ci, det.witness);
        auto ref = refine_pe(p, emb);
        print_rankings(ref.profile);
        for (std::size_t c = 0; c < p.num_candidates(); ++c)
            std::cout << "candidate " << p.label(static_cast<int>(c)) << ": "
                      << ref.embedding.candidate_pos[c].to_string() << "\n";
        for (std::size_t i = 0; i < p.num_voters(); ++i)
            std::cout << "voter " << (i + 1) << ": " << ref.embedding.voter_pos[i].to_string()
                      << "  radius: " << ref.embedding.voter_radii[i].to_string() << "\n";
        return 0;
    }
    std::cerr << "unknown refinement target '" << target << "'\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structured approval profiles: detection, committees, refinements"};
    app.require_subcommand(1);

    std::string file, property = "all", rule_name = "pav", weights = "harmonic";
    std::string algo = "auto", committee, structure = "unrestricted", out, from, target;
    bool as_json = false;
    std::size_t k = 1, n = 4, m = 4, max_n = 8, max_m = 8, max_k = 4;
    std::uint64_t seed = 0;
    int trials = 100;
    std::optional<std::size_t> max_s, max_d;

    auto* detect_cmd = app.add_subcommand("detect", "recognize structure in a profile");
    detect_cmd->add_option("file", file)->required();
    detect_cmd->add_option("--property", property, "property name or 'all'");
    detect_cmd->add_flag("--json", as_json);

    auto* solve_cmd = app.add_subcommand("solve", "compute an optimal committee");
    solve_cmd->add_option("file", file)->required();
    solve_cmd->add_option("--rule", rule_name, "pav, mav or wpav");
    solve_cmd->add_option("--weights", weights, "harmonic, cc or a rational list");
    solve_cmd->add_option("-k,--committee-size", k)->required();
    solve_cmd->add_option("--algo", algo, "auto, oracle or an algorithm tag");
    solve_cmd->add_flag("--json", as_json);

    auto* score_cmd = app.add_subcommand("score", "score a given committee");
    score_cmd->add_option("file", file)->required();
    score_cmd->add_option("--rule", rule_name);
    score_cmd->add_option("--weights", weights);
    score_cmd->add_option("--committee", committee)->required();

    auto* gen_cmd = app.add_subcommand("generate", "emit a structured random profile");
    gen_cmd->add_option("--structure", structure, "structure name or 'unrestricted'");
    gen_cmd->add_option("-n,--voters", n);
    gen_cmd->add_option("-m,--candidates", m);
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("--out", out);
    gen_cmd->add_option("--max-vote-size", max_s);
    gen_cmd->add_option("--max-degree", max_d);

    auto* cross_cmd = app.add_subcommand("crosscheck", "structured algorithms vs brute force");
    cross_cmd->add_option("--structure", structure)->required();
    cross_cmd->add_option("--trials", trials);
    cross_cmd->add_option("--seed", seed);
    cross_cmd->add_option("--max-n", max_n);
    cross_cmd->add_option("--max-m", max_m);
    cross_cmd->add_option("--max-k", max_k);

    auto* embed_cmd = app.add_subcommand("embed", "embedding realizing a detected structure");
    embed_cmd->add_option("file", file)->required();
    embed_cmd->add_option("--from", from, "cei, vei, wsc, part or ci")->required();

    auto* refine_cmd = app.add_subcommand("refine", "total-order refinement of a CI profile");
    refine_cmd->add_option("file", file)->required();
    refine_cmd->add_option("--target", target, "psp or pe")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (detect_cmd->parsed()) return run_detect(file, property, as_json);
        if (solve_cmd->parsed())
            return run_solve(file, parse_rule(rule_name, weights), k, algo, as_json);
        if (score_cmd->parsed()) return run_score(file, parse_rule(rule_name, weights), committee);
        if (gen_cmd->parsed()) return run_generate(structure, n, m, seed, out, max_s, max_d);
        if (cross_cmd->parsed()) return run_crosscheck(structure, trials, seed, max_n, max_m, max_k);
        if (embed_cmd->parsed()) return run_embed(file, from);
        if (refine_cmd->parsed()) return run_refine(file, target);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const UnsupportedPropertyError& e) {
        std::cerr << e.what() << "\n";
        return kExitUnknown;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSoftware;
    }
    return kExitUsage;
}
