#include "apd/rules.hpp"

#include <algorithm>
#include <numeric>

#include "apd/detection.hpp"

namespace apd {

namespace {

void check_committee(const ApprovalProfile& p, const Committee& w) {
    if (w.members.universe() != p.num_candidates())
        throw std::invalid_argument("committee out of range");
}

std::vector<Rational> u_table(const WeightScheme& scheme, std::size_t up_to) {
    std::vector<Rational> u(up_to + 1);
    for (std::size_t j = 1; j <= up_to; ++j) u[j] = u[j - 1] + scheme.weight(j);
    return u;
}

unsigned long long binomial_capped(std::size_t n, std::size_t k,
                                   unsigned long long cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        if (result > cap) return cap + 1;
        result = result * (n - k + i) / i;
    }
    return result;
}

std::vector<int> smallest_from(const CandSet& pool, std::size_t how_many) {
    std::vector<int> out;
    for (std::size_t c = 0; c < pool.universe() && out.size() < how_many; ++c)
        if (pool.test(c)) out.push_back(static_cast<int>(c));
    return out;
}

}  // namespace

Rational score_wpav(const ApprovalProfile& p, const WeightScheme& scheme, const Committee& w) {
    check_committee(p, w);
    auto u = u_table(scheme, w.size());
    Rational total(0);
    for (const auto& v : p.votes()) total += u[w.members.intersect_count(v)];
    return total;
}

long long score_mav(const ApprovalProfile& p, const Committee& w) {
    check_committee(p, w);
    long long worst = 0;
    for (const auto& v : p.votes()) {
        long long dist = static_cast<long long>((w.members - v).count()) +
                         static_cast<long long>((v - w.members).count());
        worst = std::max(worst, dist);
    }
    return worst;
}

Rational score_rule(const ApprovalProfile& p, const RuleSpec& rule, const Committee& w) {
    return rule.is_mav() ? Rational(score_mav(p, w)) : score_wpav(p, rule.scheme, w);
}

Solution brute_force(const ApprovalProfile& p, std::size_t k, const RuleSpec& rule,
                     unsigned long long budget) {
    const std::size_t m = p.num_candidates();
    if (k > m) throw std::invalid_argument("committee size exceeds candidate count");
    if (binomial_capped(m, k, budget) > budget)
        throw BudgetExceededError("brute force: committee space exceeds budget");

    auto u = u_table(rule.scheme, k);
    std::optional<Rational> best;
    std::vector<CandSet> optima;

    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        Committee w{CandSet::of(m, pick)};
        Rational sc;
        if (rule.is_mav()) {
            sc = Rational(score_mav(p, w));
        } else {
            Rational total(0);
            for (const auto& v : p.votes()) total += u[w.members.intersect_count(v)];
            sc = total;
        }
        if (!best || rule.better(sc, *best)) {
            best = sc;
            optima.clear();
            optima.push_back(w.members);
        } else if (sc == *best) {
            optima.push_back(w.members);
        }
        // next k-combination in lexicographic order
        if (k == 0) break;
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == static_cast<int>(m - k + i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return Solution{*best, Committee{optima.front()}, "oracle", optima};
}

Solution vei_committee(const ApprovalProfile& p, const std::vector<int>& vei_order,
                       std::size_t k, const RuleSpec& rule) {
    if (!verify_witness(p, StructureProperty::Vei, VoterOrder{vei_order}))
        throw std::invalid_argument("vei_committee: invalid witness");
    const std::size_t m = p.num_candidates();
    if (k > m) throw std::invalid_argument("committee size exceeds candidate count");

    const CandSet& u = p.vote(static_cast<std::size_t>(vei_order.front()));
    const CandSet& w = p.vote(static_cast<std::size_t>(vei_order.back()));
    CandSet both = u & w, only_u = u - w, only_w = w - u;
    CandSet approved = u | w;
    CandSet rest = approved.complement();

    const std::string tag = "vei-extremal";
    auto finish = [&](std::vector<int> members) {
        Committee c = Committee::of(m, members);
        return Solution{score_rule(p, rule, c), c, tag, std::nullopt};
    };

    std::size_t t = both.count() + only_u.count() + only_w.count();
    if (t < k) {
        auto members = approved.members();
        auto pad = smallest_from(rest, k - t);
        members.insert(members.end(), pad.begin(), pad.end());
        return finish(std::move(members));
    }
    if (both.count() >= k) return finish(smallest_from(both, k));

    // order the prefix block and the suffix block by approver count
    auto by_support = [&](const CandSet& block) {
        auto mem = block.members();
        std::vector<std::pair<int, int>> cnt;  // (-approvers, index)
        for (int c : mem) {
            int deg = 0;
            for (const auto& v : p.votes()) deg += v.test(static_cast<std::size_t>(c));
            cnt.push_back({-deg, c});
        }
        std::sort(cnt.begin(), cnt.end());
        std::vector<int> out;
        for (auto& [d, c] : cnt) out.push_back(c);
        return out;
    };
    auto c2 = by_support(only_u);
    auto c3 = by_support(only_w);

    std::size_t base = both.count();
    std::size_t need = k - base;
    std::optional<Rational> best_score;
    std::vector<int> best_members;
    std::size_t p_lo = need > c3.size() ? need - c3.size() : 0;
    std::size_t p_hi = std::min(need, c2.size());
    for (std::size_t taken2 = p_lo; taken2 <= p_hi; ++taken2) {
        std::size_t taken3 = need - taken2;
        std::vector<int> members = both.members();
        members.insert(members.end(), c2.begin(), c2.begin() + static_cast<long>(taken2));
        members.insert(members.end(), c3.begin(), c3.begin() + static_cast<long>(taken3));
        Committee c = Committee::of(m, members);
        Rational sc = score_rule(p, rule, c);
        if (!best_score || rule.better(sc, *best_score)) {
            best_score = sc;
            best_members = std::move(members);
        }
    }
    return finish(std::move(best_members));
}

Solution cei_committee(const ApprovalProfile& p, const std::vector<int>& cei_axis,
                       std::size_t k, const RuleSpec& rule) {
    if (!verify_witness(p, StructureProperty::Cei, CandidateOrder{cei_axis}))
        throw std::invalid_argument("cei_committee: invalid witness");
    const std::size_t m = p.num_candidates();
    if (k > m) throw std::invalid_argument("committee size exceeds candidate count");

    std::vector<int> pos(m);
    for (std::size_t i = 0; i < m; ++i)
        pos[static_cast<std::size_t>(cei_axis[i])] = static_cast<int>(i);

    // prefix votes bucketed by rightmost position, suffix votes by leftmost
    std::vector<long long> prefix_at(m, 0), suffix_at(m, 0);
    long long empty_votes = 0;
    for (const auto& v : p.votes()) {
        if (v.empty()) {
            ++empty_votes;
            continue;
        }
        int lo = static_cast<int>(m), hi = -1;
        for (std::size_t c = 0; c < m; ++c)
            if (v.test(c)) {
                lo = std::min(lo, pos[c]);
                hi = std::max(hi, pos[c]);
            }
        if (v.test(static_cast<std::size_t>(cei_axis[0])))
            ++prefix_at[static_cast<std::size_t>(hi)];
        else
            ++suffix_at[static_cast<std::size_t>(lo)];
    }

    const std::string tag = "cei-scan";
    auto feasible = [&](std::size_t j, std::size_t taken) {
        return taken <= j + 1 && k - taken <= m - 1 - j;
    };

    // one table column per committee-prefix size; backpointers say whether
    // the candidate at each position was taken
    std::vector<std::vector<char>> took(m, std::vector<char>(k + 1, 0));

    if (!rule.is_mav()) {
        auto u = u_table(rule.scheme, k);
        std::vector<std::optional<Rational>> cur(k + 1), nxt(k + 1);
        if (feasible(0, 0)) cur[0] = Rational(prefix_at[0]) * u[0];
        if (k >= 1 && feasible(0, 1)) {
            cur[1] = Rational(prefix_at[0]) * u[1];
            took[0][1] = 1;
        }
        for (std::size_t j = 1; j < m; ++j) {
            std::fill(nxt.begin(), nxt.end(), std::nullopt);
            for (std::size_t taken = 0; taken <= k; ++taken) {
                if (!feasible(j, taken)) continue;
                Rational add_pref = Rational(prefix_at[j]) * u[taken];
                std::optional<Rational> skip, take;
                if (cur[taken])
                    skip = *cur[taken] + add_pref + Rational(suffix_at[j]) * u[k - taken];
                if (taken >= 1 && cur[taken - 1])
                    take = *cur[taken - 1] + add_pref + Rational(suffix_at[j]) * u[k - taken + 1];
                if (take && (!skip || *skip < *take)) {
                    nxt[taken] = take;
                    took[j][taken] = 1;
                } else {
                    nxt[taken] = skip;
                }
            }
            cur.swap(nxt);
        }
        if (!cur[k]) throw std::logic_error("cei_committee: no feasible state");
        std::vector<int> members;
        std::size_t taken = k;
        for (std::size_t j = m; j-- > 0;) {
            if (took[j][taken]) {
                members.push_back(cei_axis[j]);
                --taken;
            }
        }
        Committee c = Committee::of(m, members);
        Rational sc = *cur[k];  // empty votes add u(0) = 0
        return Solution{sc, c, tag, std::nullopt};
    }

    // MAV: a prefix vote ending at position j has symmetric difference
    // (j+1) + k - 2*taken; a suffix vote starting at j has size m - j, so its
    // difference is (m - j) - (k - taken_left) + taken_left.
    const long long infeas = -1;
    auto dist_prefix = [&](std::size_t j, long long taken) {
        return static_cast<long long>(j) + 1 + static_cast<long long>(k) - 2 * taken;
    };
    auto dist_suffix = [&](std::size_t j, long long taken_left) {
        return static_cast<long long>(m - j) - static_cast<long long>(k) + 2 * taken_left;
    };
    std::vector<long long> cur(k + 1, infeas), nxt(k + 1, infeas);
    if (feasible(0, 0)) cur[0] = prefix_at[0] > 0 ? dist_prefix(0, 0) : 0;
    if (k >= 1 && feasible(0, 1)) {
        cur[1] = prefix_at[0] > 0 ? dist_prefix(0, 1) : 0;
        took[0][1] = 1;
    }
    for (std::size_t j = 1; j < m; ++j) {
        std::fill(nxt.begin(), nxt.end(), infeas);
        for (std::size_t taken = 0; taken <= k; ++taken) {
            if (!feasible(j, taken)) continue;
            long long skip = infeas, take = infeas;
            if (cur[taken] != infeas) {
                skip = cur[taken];
                if (prefix_at[j] > 0)
                    skip = std::max(skip, dist_prefix(j, static_cast<long long>(taken)));
                if (suffix_at[j] > 0)
                    skip = std::max(skip, dist_suffix(j, static_cast<long long>(taken)));
            }
            if (taken >= 1 && cur[taken - 1] != infeas) {
                take = cur[taken - 1];
                if (prefix_at[j] > 0)
                    take = std::max(take, dist_prefix(j, static_cast<long long>(taken)));
                if (suffix_at[j] > 0)
                    take = std::max(take, dist_suffix(j, static_cast<long long>(taken) - 1));
            }
            if (take != infeas && (skip == infeas || take < skip)) {
                nxt[taken] = take;
                took[j][taken] = 1;
            } else {
                nxt[taken] = skip;
            }
        }
        cur.swap(nxt);
    }
    if (cur[k] == infeas) throw std::logic_error("cei_committee: no feasible state");
    long long score = cur[k];
    if (empty_votes > 0) score = std::max(score, static_cast<long long>(k));
    std::vector<int> members;
    std::size_t taken = k;
    for (std::size_t j = m; j-- > 0;) {
        if (took[j][taken]) {
            members.push_back(cei_axis[j]);
            --taken;
        }
    }
    Committee c = Committee::of(m, members);
    return Solution{Rational(score), c, tag, std::nullopt};
}

Solution wsc_committee(const ApprovalProfile& p, std::size_t k, const RuleSpec& rule) {
    auto ch = wsc_characterize(p);
    if (!ch) throw std::invalid_argument("wsc_committee: profile is not WSC");
    const std::size_t m = p.num_candidates();
    if (k > m) throw std::invalid_argument("committee size exceeds candidate count");

    const CandSet* blocks[4] = {&ch->triple.both, &ch->triple.only_u, &ch->triple.only_w,
                                &ch->triple.neither};
    std::size_t cap[4];
    for (int b = 0; b < 4; ++b) cap[b] = blocks[b]->count();

    // distinct vote classes with multiplicities and per-block membership
    struct VoteClass {
        bool covers[4];
        std::size_t size;
        long long mult;
    };
    std::vector<CandSet> reps;
    std::vector<VoteClass> classes;
    for (const auto& v : p.votes()) {
        bool found = false;
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (reps[i] == v) {
                ++classes[i].mult;
                found = true;
                break;
            }
        if (found) continue;
        VoteClass vc{};
        vc.mult = 1;
        vc.size = v.count();
        for (int b = 0; b < 4; ++b) {
            if (blocks[b]->empty()) {
                vc.covers[b] = false;
            } else if (blocks[b]->subset_of(v)) {
                vc.covers[b] = true;
            } else if (!blocks[b]->intersects(v)) {
                vc.covers[b] = false;
            } else {
                throw std::logic_error("wsc_committee: vote is not a union of blocks");
            }
        }
        reps.push_back(v);
        classes.push_back(vc);
    }

    auto u = u_table(rule.scheme, k);
    std::optional<Rational> best;
    std::size_t best_take[4] = {0, 0, 0, 0};
    for (std::size_t k0 = 0; k0 <= std::min(cap[0], k); ++k0)
        for (std::size_t k1 = 0; k0 + k1 <= k && k1 <= cap[1]; ++k1)
            for (std::size_t k2 = 0; k0 + k1 + k2 <= k && k2 <= cap[2]; ++k2) {
                std::size_t k3 = k - k0 - k1 - k2;
                if (k3 > cap[3]) continue;
                std::size_t take[4] = {k0, k1, k2, k3};
                Rational sc;
                if (rule.is_mav()) {
                    long long worst = 0;
                    for (const auto& vc : classes) {
                        long long inter = 0;
                        for (int b = 0; b < 4; ++b)
                            if (vc.covers[b]) inter += static_cast<long long>(take[b]);
                        worst = std::max(worst, static_cast<long long>(k) +
                                                    static_cast<long long>(vc.size) - 2 * inter);
                    }
                    sc = Rational(worst);
                } else {
                    Rational total(0);
                    for (const auto& vc : classes) {
                        std::size_t inter = 0;
                        for (int b = 0; b < 4; ++b)
                            if (vc.covers[b]) inter += take[b];
                        total += Rational(vc.mult) * u[inter];
                    }
                    sc = total;
                }
                if (!best || rule.better(sc, *best)) {
                    best = sc;
                    for (int b = 0; b < 4; ++b) best_take[b] = take[b];
                }
            }

    std::vector<int> members;
    for (int b = 0; b < 4; ++b) {
        auto extra = smallest_from(*blocks[b], best_take[b]);
        members.insert(members.end(), extra.begin(), extra.end());
    }
    Committee c = Committee::of(m, members);
    return Solution{*best, c, "wsc-blocks", std::nullopt};
}

Solution part_committee(const ApprovalProfile& p, std::size_t k, const RuleSpec& rule) {
    auto det = detect(p, StructureProperty::Part);
    if (!det.holds()) throw std::invalid_argument("part_committee: profile is not PART");
    const auto& parts = std::get<CandidatePartition>(det.witness).parts;
    const std::size_t m = p.num_candidates();
    if (k > m) throw std::invalid_argument("committee size exceeds candidate count");

    std::vector<long long> mult(parts.size(), 0);
    for (const auto& v : p.votes())
        for (std::size_t j = 0; j < parts.size(); ++j)
            if (v == parts[j]) {
                ++mult[j];
                break;
            }

    std::vector<std::size_t> chosen(parts.size(), 0);
    if (!rule.is_mav()) {
        // utilities are separable and concave across disjoint parts, so the
        // greedy marginal pick is exact
        for (std::size_t step = 0; step < k; ++step) {
            std::optional<Rational> best_gain;
            std::size_t best_j = 0;
            for (std::size_t j = 0; j < parts.size(); ++j) {
                if (chosen[j] >= parts[j].count()) continue;
                Rational gain = Rational(mult[j]) * rule.scheme.weight(chosen[j] + 1);
                if (!best_gain || *best_gain < gain) {
                    best_gain = gain;
                    best_j = j;
                }
            }
            ++chosen[best_j];
        }
    } else {
        // smallest t with per-part quotas q_j = ceil((|P_j| + k - t) / 2)
        // satisfying q_j <= |P_j| and sum q_j <= k
        for (long long t = 0;; ++t) {
            bool ok = true;
            std::size_t total = 0;
            std::vector<std::size_t> quota(parts.size(), 0);
            for (std::size_t j = 0; j < parts.size() && ok; ++j) {
                long long need = static_cast<long long>(parts[j].count()) +
                                 static_cast<long long>(k) - t;
                std::size_t q = need <= 0 ? 0 : static_cast<std::size_t>((need + 1) / 2);
                if (q > parts[j].count()) ok = false;
                quota[j] = q;
                total += q;
            }
            if (ok && total <= k) {
                chosen = quota;
                std::size_t spare = k - total;
                for (std::size_t j = 0; j < parts.size() && spare > 0; ++j) {
                    std::size_t room = parts[j].count() - chosen[j];
                    std::size_t add = std::min(room, spare);
                    chosen[j] += add;
                    spare -= add;
                }
                break;
            }
            if (t > static_cast<long long>(k + m))
                throw std::logic_error("part_committee: no feasible MAV bound");
        }
    }

    std::vector<int> members;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        auto extra = smallest_from(parts[j], chosen[j]);
        members.insert(members.end(), extra.begin(), extra.end());
    }
    Committee c = Committee::of(m, members);
    return Solution{score_rule(p, rule, c), c,
                    rule.is_mav() ? "part-quota" : "part-greedy", std::nullopt};
}

Solution solve(const ApprovalProfile& p, std::size_t k, const RuleSpec& rule,
               const SolveOptions& opts) {
    const std::size_t m = p.num_candidates();
    const std::size_t n = p.num_voters();
    if (k > m) throw std::invalid_argument("committee size exceeds candidate count");

    auto oracle_ok = [&] {
        return binomial_capped(m, k, opts.oracle_budget) <= opts.oracle_budget;
    };

    if (opts.strategy == SolveStrategy::Oracle) return brute_force(p, k, rule, opts.oracle_budget);

    if (opts.strategy == SolveStrategy::Force) {
        const std::string& name = opts.forced_algorithm;
        if (name == "oracle") return brute_force(p, k, rule, opts.oracle_budget);
        auto need = [&](StructureProperty prop) {
            auto det = detect(p, prop);
            if (!det.holds())
                throw NoApplicableAlgorithmError(std::string("profile does not satisfy ") +
                                                 property_name(prop));
            return det;
        };
        if (name == "wsc") return wsc_committee(p, k, rule);
        if (name == "part") return part_committee(p, k, rule);
        if (name == "vei")
            return vei_committee(p, std::get<VoterOrder>(need(StructureProperty::Vei).witness).order,
                                 k, rule);
        if (name == "cei")
            return cei_committee(
                p, std::get<CandidateOrder>(need(StructureProperty::Cei).witness).order, k, rule);
        if (name == "vi-s")
            return pav_vi_bounded_s(
                p, std::get<VoterOrder>(need(StructureProperty::Vi).witness).order, k, rule.scheme);
        if (name == "ci-s")
            return pav_ci_bounded_s(
                p, std::get<CandidateOrder>(need(StructureProperty::Ci).witness).order, k,
                rule.scheme);
        if (name == "ci-d")
            return pav_ci_bounded_d(
                p, std::get<CandidateOrder>(need(StructureProperty::Ci).witness).order, k,
                rule.scheme);
        if (name == "vi-d")
            return pav_vi_bounded_d(
                p, std::get<VoterOrder>(need(StructureProperty::Vi).witness).order, k, rule.scheme);
        if (name == "truncated-vi")
            return wpav_truncated(p, std::get<VoterOrder>(need(StructureProperty::Vi).witness).order,
                                  AxisKind::Vi, rule.scheme, k);
        if (name == "truncated-ci")
            return wpav_truncated(
                p, std::get<CandidateOrder>(need(StructureProperty::Ci).witness).order,
                AxisKind::Ci, rule.scheme, k);
        throw NoApplicableAlgorithmError("unknown algorithm '" + name + "'");
    }

    // Auto: cheapest structure first
    if (detect(p, StructureProperty::TwoPart).holds()) return wsc_committee(p, k, rule);
    if (detect(p, StructureProperty::Part).holds()) return part_committee(p, k, rule);
    if (wsc_characterize(p)) return wsc_committee(p, k, rule);
    if (auto det = detect(p, StructureProperty::Vei); det.holds())
        return vei_committee(p, std::get<VoterOrder>(det.witness).order, k, rule);
    if (auto det = detect(p, StructureProperty::Cei); det.holds())
        return cei_committee(p, std::get<CandidateOrder>(det.witness).order, k, rule);

    if (!rule.is_mav()) {
        auto stats = profile_stats(p);
        const unsigned long long s = stats.max_vote_size;
        const unsigned long long d = stats.max_candidate_degree;
        auto det_ci = detect(p, StructureProperty::Ci);
        auto det_vi = detect(p, StructureProperty::Vi);

        if (rule.scheme.is_truncated()) {
            if (det_ci.holds())
                return wpav_truncated(p, std::get<CandidateOrder>(det_ci.witness).order,
                                      AxisKind::Ci, rule.scheme, k);
            if (det_vi.holds())
                return wpav_truncated(p, std::get<VoterOrder>(det_vi.witness).order, AxisKind::Vi,
                                      rule.scheme, k);
        }

        auto pow_capped = [](unsigned long long base, unsigned long long exp,
                             unsigned long long cap) {
            unsigned long long r = 1;
            for (unsigned long long i = 0; i < exp; ++i) {
                if (r > cap / std::max(1ULL, base)) return cap + 1;
                r *= base;
            }
            return r;
        };
        const unsigned long long cap = 50000000ULL;
        struct Candidate {
            unsigned long long cost;
            int which;  // 0 ci-s, 1 vi-s, 2 ci-d, 3 vi-d
        };
        std::vector<Candidate> cands;
        if (det_ci.holds()) {
            auto c1 = pow_capped(2, s, cap);
            if (c1 <= cap / std::max<unsigned long long>(1, m * (k + 1)))
                cands.push_back({c1 * m * (k + 1), 0});
            auto c2 = pow_capped(k + 1, d, 2000);
            if (c2 <= 2000) cands.push_back({c2 * c2 * m, 2});
        }
        if (det_vi.holds()) {
            auto c1 = pow_capped(4, s, cap);
            if (c1 <= cap / std::max<unsigned long long>(1, n * (k + 1)))
                cands.push_back({c1 * n * (k + 1), 1});
            auto c2 = pow_capped(k + 1, d * d, 2000);
            if (c2 <= 2000) cands.push_back({c2 * c2 * n, 3});
        }
        if (!cands.empty()) {
            auto best = *std::min_element(cands.begin(), cands.end(),
                                          [](auto& a, auto& b) { return a.cost < b.cost; });
            switch (best.which) {
                case 0:
                    return pav_ci_bounded_s(p, std::get<CandidateOrder>(det_ci.witness).order, k,
                                            rule.scheme);
                case 1:
                    return pav_vi_bounded_s(p, std::get<VoterOrder>(det_vi.witness).order, k,
                                            rule.scheme);
                case 2:
                    return pav_ci_bounded_d(p, std::get<CandidateOrder>(det_ci.witness).order, k,
                                            rule.scheme);
                case 3:
                    return pav_vi_bounded_d(p, std::get<VoterOrder>(det_vi.witness).order, k,
                                            rule.scheme);
            }
        }
    }

    if (oracle_ok()) return brute_force(p, k, rule, opts.oracle_budget);
    throw NoApplicableAlgorithmError("no applicable algorithm within budget");
}

}  // namespace apd
