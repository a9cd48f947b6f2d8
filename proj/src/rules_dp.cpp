#include <algorithm>
#include <map>
#include <numeric>

#include "apd/detection.hpp"
#include "apd/rules.hpp"

// Dynamic programs over interval structure. All tables hold
// std::optional<Rational>: an empty cell is unreachable, never a sentinel
// number. Each table keeps backpointers; reconstruction walks them and is
// deterministic because predecessors are scanned in a fixed order and only
// strict improvements replace a cell.

namespace apd {

namespace {

std::vector<Rational> u_table(const WeightScheme& scheme, std::size_t up_to) {
    std::vector<Rational> u(up_to + 1);
    for (std::size_t j = 1; j <= up_to; ++j) u[j] = u[j - 1] + scheme.weight(j);
    return u;
}

std::vector<int> pad_members(const ApprovalProfile& p, std::vector<int> members,
                             std::size_t k, const CandSet& approved) {
    for (std::size_t c = 0; c < p.num_candidates() && members.size() < k; ++c)
        if (!approved.test(c)) members.push_back(static_cast<int>(c));
    if (members.size() != k) throw std::logic_error("padding failed to reach size k");
    return members;
}

struct MaskTable {
    // value[mask][l]
    std::vector<std::vector<std::optional<Rational>>> value;
    std::vector<std::vector<std::uint32_t>> back;

    MaskTable(std::size_t masks, std::size_t k)
        : value(masks, std::vector<std::optional<Rational>>(k + 1)),
          back(masks, std::vector<std::uint32_t>(k + 1, 0)) {}
};

}  // namespace

Solution pav_vi_bounded_s(const ApprovalProfile& p, const std::vector<int>& vi_order,
                          std::size_t k, const WeightScheme& scheme) {
    if (!verify_witness(p, StructureProperty::Vi, VoterOrder{vi_order}))
        throw std::invalid_argument("pav_vi_bounded_s: invalid witness");
    const std::size_t m = p.num_candidates();
    const std::size_t n = p.num_voters();
    if (k > m) throw std::invalid_argument("committee size exceeds candidate count");

    CandSet approved(m);
    for (const auto& v : p.votes()) approved = approved | v;
    const std::size_t lstar = std::min(k, approved.count());

    std::vector<std::vector<int>> vote_list(n);
    for (std::size_t t = 0; t < n; ++t) {
        vote_list[t] = p.vote(static_cast<std::size_t>(vi_order[t])).members();
        if (vote_list[t].size() > 25)
            throw BudgetExceededError("pav_vi_bounded_s: vote too large for mask table");
    }
    auto u = u_table(scheme, k);

    std::vector<MaskTable> dp;
    dp.reserve(n);
    dp.emplace_back(1u << vote_list[0].size(), k);
    for (std::uint32_t a = 0; a < (1u << vote_list[0].size()); ++a) {
        std::size_t pa = static_cast<std::size_t>(__builtin_popcount(a));
        if (pa <= k) dp[0].value[a][pa] = u[pa];
    }

    for (std::size_t t = 1; t < n; ++t) {
        const auto& cur = vote_list[t];
        const auto& prev = vote_list[t - 1];
        const CandSet& prev_set = p.vote(static_cast<std::size_t>(vi_order[t - 1]));

        // bit of each shared candidate in the previous vote's mask space
        std::vector<int> prev_bit(cur.size(), -1);
        for (std::size_t b = 0; b < cur.size(); ++b) {
            if (!prev_set.test(static_cast<std::size_t>(cur[b]))) continue;
            for (std::size_t pb = 0; pb < prev.size(); ++pb)
                if (prev[pb] == cur[b]) {
                    prev_bit[b] = static_cast<int>(pb);
                    break;
                }
        }
        std::uint32_t avail = 0;  // previous-vote candidates absent from this vote
        const CandSet& cur_set = p.vote(static_cast<std::size_t>(vi_order[t]));
        for (std::size_t pb = 0; pb < prev.size(); ++pb)
            if (!cur_set.test(static_cast<std::size_t>(prev[pb]))) avail |= 1u << pb;

        dp.emplace_back(1u << cur.size(), k);
        auto& table = dp[t];
        const auto& ptab = dp[t - 1];
        for (std::uint32_t a = 0; a < (1u << cur.size()); ++a) {
            std::size_t pa = static_cast<std::size_t>(__builtin_popcount(a));
            if (pa > k) continue;
            std::uint32_t base_prev = 0;
            std::size_t fresh = 0;
            for (std::size_t b = 0; b < cur.size(); ++b) {
                if (!(a & (1u << b))) continue;
                if (prev_bit[b] >= 0)
                    base_prev |= 1u << prev_bit[b];
                else
                    ++fresh;
            }
            for (std::size_t l = std::max(pa, fresh); l <= k; ++l) {
                std::optional<Rational> best;
                std::uint32_t best_pred = 0;
                std::uint32_t d = 0;
                // ascending submask enumeration of avail
                while (true) {
                    const auto& cell = ptab.value[base_prev | d][l - fresh];
                    if (cell && (!best || *best < *cell)) {
                        best = *cell;
                        best_pred = base_prev | d;
                    }
                    if (d == avail) break;
                    d = (d - avail) & avail;
                }
                if (best) {
                    table.value[a][l] = *best + u[pa];
                    table.back[a][l] = best_pred;
                }
            }
        }
    }

    std::optional<Rational> best;
    std::uint32_t best_mask = 0;
    for (std::uint32_t a = 0; a < (1u << vote_list[n - 1].size()); ++a) {
        const auto& cell = dp[n - 1].value[a][lstar];
        if (cell && (!best || *best < *cell)) {
            best = *cell;
            best_mask = a;
        }
    }
    if (!best) throw std::logic_error("pav_vi_bounded_s: no reachable final state");

    std::vector<int> members;
    std::uint32_t mask = best_mask;
    std::size_t l = lstar;
    for (std::size_t t = n; t-- > 1;) {
        const auto& cur = vote_list[t];
        const CandSet& prev_set = p.vote(static_cast<std::size_t>(vi_order[t - 1]));
        std::size_t fresh = 0;
        for (std::size_t b = 0; b < cur.size(); ++b)
            if ((mask & (1u << b)) && !prev_set.test(static_cast<std::size_t>(cur[b]))) {
                members.push_back(cur[b]);
                ++fresh;
            }
        mask = dp[t].back[mask][l];
        l -= fresh;
    }
    for (std::size_t b = 0; b < vote_list[0].size(); ++b)
        if (mask & (1u << b)) members.push_back(vote_list[0][b]);

    members = pad_members(p, std::move(members), k, approved);
    return Solution{*best, Committee::of(m, members), "vi-dp-s", std::nullopt};
}

Solution pav_ci_bounded_s(const ApprovalProfile& p, const std::vector<int>& ci_axis,
                          std::size_t k, const WeightScheme& scheme) {
    if (!verify_witness(p, StructureProperty::Ci, CandidateOrder{ci_axis}))
        throw std::invalid_argument("pav_ci_bounded_s: invalid witness");
    const std::size_t m = p.num_candidates();
    if (k > m) throw std::invalid_argument("committee size exceeds candidate count");

    std::size_t s = profile_stats(p).max_vote_size;
    if (s == 0) {
        std::vector<int> members;
        for (std::size_t c = 0; c < k; ++c) members.push_back(static_cast<int>(c));
        return Solution{Rational(0), Committee::of(m, members), "ci-dp-s", std::nullopt};
    }
    if (s > 25) throw BudgetExceededError("pav_ci_bounded_s: vote size too large for windows");

    std::vector<int> pos(m);
    for (std::size_t i = 0; i < m; ++i)
        pos[static_cast<std::size_t>(ci_axis[i])] = static_cast<int>(i);
    auto u = u_table(scheme, std::max(k, s));

    // vote spans in axis positions
    std::vector<std::pair<int, int>> span;
    for (const auto& v : p.votes()) {
        if (v.empty()) continue;
        int lo = static_cast<int>(m), hi = -1;
        for (std::size_t c = 0; c < m; ++c)
            if (v.test(c)) {
                lo = std::min(lo, pos[c]);
                hi = std::max(hi, pos[c]);
            }
        span.push_back({lo, hi});
    }

    // per-position vote lists for the marginal tables; window bit b at
    // position j maps to axis position j - (s-1) + b
    const std::uint32_t nmask = 1u << s;
    std::vector<std::vector<Rational>> marg(m, std::vector<Rational>(nmask, Rational(0)));
    for (std::size_t j = 0; j < m; ++j) {
        for (auto [lo, hi] : span) {
            if (lo > static_cast<int>(j) || hi < static_cast<int>(j)) continue;
            std::uint32_t wm = 0;
            for (std::size_t b = 0; b < s; ++b) {
                int q = static_cast<int>(j) - static_cast<int>(s) + 1 + static_cast<int>(b);
                if (q >= lo && q <= hi) wm |= 1u << b;
            }
            for (std::uint32_t a = 0; a < nmask; ++a)
                marg[j][a] += u[static_cast<std::size_t>(__builtin_popcount(a & wm))];
        }
    }

    auto invalid_bits = [&](std::size_t j) -> std::uint32_t {
        // window positions falling left of the axis must stay empty
        if (j >= s - 1) return 0;
        return (1u << (s - 1 - j)) - 1;
    };
    const std::uint32_t top = 1u << (s - 1);

    std::vector<MaskTable> dp;
    dp.reserve(m);
    dp.emplace_back(nmask, k);
    dp[0].value[0][0] = Rational(0);
    if (k >= 1) dp[0].value[top][1] = marg[0][top];

    for (std::size_t j = 1; j < m; ++j) {
        dp.emplace_back(nmask, k);
        auto& table = dp[j];
        const auto& ptab = dp[j - 1];
        const bool dropped_valid = j >= s;  // axis position j - s exists
        for (std::uint32_t a = 0; a < nmask; ++a) {
            if (a & invalid_bits(j)) continue;
            const bool take = a & top;
            std::uint32_t core = (a & ~top) << 1;
            if (core >= nmask) continue;  // shifted out of the window
            for (std::size_t l = take ? 1 : 0; l <= k; ++l) {
                std::optional<Rational> best;
                std::uint32_t best_pred = 0;
                for (int with_dropped = 0; with_dropped <= (dropped_valid ? 1 : 0);
                     ++with_dropped) {
                    std::uint32_t pred = core | static_cast<std::uint32_t>(with_dropped);
                    if (pred & invalid_bits(j - 1)) continue;
                    const auto& cell = ptab.value[pred][l - (take ? 1 : 0)];
                    if (cell && (!best || *best < *cell)) {
                        best = *cell;
                        best_pred = pred;
                    }
                }
                if (best) {
                    table.value[a][l] = take ? *best + marg[j][a] - marg[j][a & ~top] : *best;
                    table.back[a][l] = best_pred;
                }
            }
        }
    }

    std::optional<Rational> best;
    std::uint32_t best_mask = 0;
    for (std::uint32_t a = 0; a < nmask; ++a) {
        if (a & invalid_bits(m - 1)) continue;
        const auto& cell = dp[m - 1].value[a][k];
        if (cell && (!best || *best < *cell)) {
            best = *cell;
            best_mask = a;
        }
    }
    if (!best) throw std::logic_error("pav_ci_bounded_s: no reachable final state");

    std::vector<int> members;
    std::uint32_t mask = best_mask;
    std::size_t l = k;
    for (std::size_t j = m; j-- > 0;) {
        bool take = mask & top;
        if (take) members.push_back(ci_axis[j]);
        if (j > 0) {
            mask = dp[j].back[mask][l];
            l -= take ? 1 : 0;
        }
    }
    return Solution{*best, Committee::of(m, members), "ci-dp-s", std::nullopt};
}

namespace {

// shared machinery for the degree-bounded sweeps: sparse states keyed by
// per-interval counts, merged by maximum
struct SweepState {
    Rational value;
    std::vector<int> prev_key;
    int choice = 0;  // take flag or encoded new-group counts index
};

using StateMap = std::map<std::vector<int>, SweepState>;

void merge_state(StateMap& into, std::vector<int> key, const Rational& val,
                 std::vector<int> prev_key, int choice) {
    auto it = into.find(key);
    if (it == into.end()) {
        into.emplace(std::move(key), SweepState{val, std::move(prev_key), choice});
    } else if (it->second.value < val) {
        it->second = SweepState{val, std::move(prev_key), choice};
    }
}

}  // namespace

Solution pav_ci_bounded_d(const ApprovalProfile& p, const std::vector<int>& ci_axis,
                          std::size_t k, const WeightScheme& scheme) {
    if (!verify_witness(p, StructureProperty::Ci, CandidateOrder{ci_axis}))
        throw std::invalid_argument("pav_ci_bounded_d: invalid witness");
    const std::size_t m = p.num_candidates();
    const std::size_t n = p.num_voters();
    if (k > m) throw std::invalid_argument("committee size exceeds candidate count");

    std::vector<int> pos(m);
    for (std::size_t i = 0; i < m; ++i)
        pos[static_cast<std::size_t>(ci_axis[i])] = static_cast<int>(i);
    auto u = u_table(scheme, k);

    // voter spans over axis positions; empty votes contribute nothing
    std::vector<int> vb(n, -1), ve(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (p.vote(i).empty()) continue;
        int lo = static_cast<int>(m), hi = -1;
        for (std::size_t c = 0; c < m; ++c)
            if (p.vote(i).test(c)) {
                lo = std::min(lo, pos[c]);
                hi = std::max(hi, pos[c]);
            }
        vb[i] = lo;
        ve[i] = hi;
    }
    std::vector<std::vector<int>> active(m);
    for (std::size_t i = 0; i < n; ++i)
        for (int j = vb[i]; j >= 0 && j <= ve[i]; ++j)
            active[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));

    // state key: counts aligned with active[j], then committee size
    StateMap cur;
    cur.emplace(std::vector<int>{0}, SweepState{Rational(0), {}, 0});
    std::vector<StateMap> trail(m);

    for (std::size_t j = 0; j < m; ++j) {
        StateMap next;
        const auto& act = active[j];
        const auto& prev_act = j > 0 ? active[j - 1] : std::vector<int>{};
        for (const auto& [key, st] : cur) {
            const std::size_t size_so_far = static_cast<std::size_t>(key.back());
            for (int take = 0; take <= 1; ++take) {
                std::size_t new_size = size_so_far + static_cast<std::size_t>(take);
                if (new_size > k) continue;
                if (k - new_size > m - 1 - j) continue;  // not enough candidates left
                std::vector<int> counts;
                counts.reserve(act.size() + 1);
                Rational val = st.value;
                for (std::size_t x = 0; x < act.size(); ++x) {
                    int voter = act[x];
                    int cnt = take;
                    if (vb[static_cast<std::size_t>(voter)] < static_cast<int>(j)) {
                        auto it = std::lower_bound(prev_act.begin(), prev_act.end(), voter);
                        cnt = key[static_cast<std::size_t>(it - prev_act.begin())] + take;
                    }
                    counts.push_back(cnt);
                    if (ve[static_cast<std::size_t>(voter)] == static_cast<int>(j))
                        val += u[static_cast<std::size_t>(cnt)];
                }
                counts.push_back(static_cast<int>(new_size));
                merge_state(next, std::move(counts), val, key, take);
            }
        }
        trail[j] = next;
        cur = std::move(next);
    }

    std::optional<Rational> best;
    const std::vector<int>* best_key = nullptr;
    for (const auto& [key, st] : cur) {
        if (key.back() != static_cast<int>(k)) continue;
        if (!best || *best < st.value) {
            best = st.value;
            best_key = &key;
        }
    }
    if (!best) throw std::logic_error("pav_ci_bounded_d: no reachable final state");

    std::vector<int> members;
    std::vector<int> key = *best_key;
    for (std::size_t j = m; j-- > 0;) {
        const auto& st = trail[j].at(key);
        if (st.choice) members.push_back(ci_axis[j]);
        key = st.prev_key;
    }
    return Solution{*best, Committee::of(m, members), "ci-dp-d", std::nullopt};
}

Solution pav_vi_bounded_d(const ApprovalProfile& p, const std::vector<int>& vi_order,
                          std::size_t k, const WeightScheme& scheme) {
    if (!verify_witness(p, StructureProperty::Vi, VoterOrder{vi_order}))
        throw std::invalid_argument("pav_vi_bounded_d: invalid witness");
    const std::size_t m = p.num_candidates();
    const std::size_t n = p.num_voters();
    if (k > m) throw std::invalid_argument("committee size exceeds candidate count");

    std::vector<int> vpos(n);
    for (std::size_t i = 0; i < n; ++i)
        vpos[static_cast<std::size_t>(vi_order[i])] = static_cast<int>(i);

    // candidate approver intervals over voter positions, grouped by span
    CandSet approved(m);
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (std::size_t c = 0; c < m; ++c) {
        int lo = static_cast<int>(n), hi = -1;
        for (std::size_t i = 0; i < n; ++i)
            if (p.vote(i).test(c)) {
                lo = std::min(lo, vpos[i]);
                hi = std::max(hi, vpos[i]);
            }
        if (hi < 0) continue;
        approved.set(c);
        groups[{lo, hi}].push_back(static_cast<int>(c));
    }
    const std::size_t lstar = std::min(k, approved.count());
    auto u = u_table(scheme, k);

    std::vector<std::pair<int, int>> group_span;
    std::vector<std::vector<int>> group_members;
    for (auto& [sp, mem] : groups) {
        group_span.push_back(sp);
        group_members.push_back(mem);
    }
    std::vector<std::vector<int>> alive(n);  // group ids alive at each voter position
    for (std::size_t g = 0; g < group_span.size(); ++g)
        for (int t = group_span[g].first; t <= group_span[g].second; ++t)
            alive[static_cast<std::size_t>(t)].push_back(static_cast<int>(g));

    StateMap cur;
    cur.emplace(std::vector<int>{0}, SweepState{Rational(0), {}, 0});
    std::vector<StateMap> trail(n);
    // per step remember the newborn groups to decode choices
    std::vector<std::vector<int>> newborn(n);

    for (std::size_t t = 0; t < n; ++t) {
        const auto& al = alive[t];
        const auto& prev_al = t > 0 ? alive[t - 1] : std::vector<int>{};
        for (int g : al)
            if (group_span[static_cast<std::size_t>(g)].first == static_cast<int>(t))
                newborn[t].push_back(g);

        StateMap next;
        for (const auto& [key, st] : cur) {
            const std::size_t size_so_far = static_cast<std::size_t>(key.back());
            // enumerate counts for the newborn groups by odometer
            std::vector<int> pick(newborn[t].size(), 0);
            while (true) {
                std::size_t added = 0;
                for (std::size_t x = 0; x < pick.size(); ++x)
                    added += static_cast<std::size_t>(pick[x]);
                if (size_so_far + added <= k) {
                    std::vector<int> counts;
                    counts.reserve(al.size() + 1);
                    std::size_t total_here = 0;
                    for (int g : al) {
                        int cnt;
                        if (group_span[static_cast<std::size_t>(g)].first == static_cast<int>(t)) {
                            auto it = std::find(newborn[t].begin(), newborn[t].end(), g);
                            cnt = pick[static_cast<std::size_t>(it - newborn[t].begin())];
                        } else {
                            auto it = std::lower_bound(prev_al.begin(), prev_al.end(), g);
                            cnt = key[static_cast<std::size_t>(it - prev_al.begin())];
                        }
                        counts.push_back(cnt);
                        total_here += static_cast<std::size_t>(cnt);
                    }
                    counts.push_back(static_cast<int>(size_so_far + added));
                    Rational val = st.value + u[total_here];
                    // encode the odometer so the choice can be replayed
                    int code = 0;
                    for (std::size_t x = pick.size(); x-- > 0;)
                        code = code * (static_cast<int>(k) + 1) + pick[x];
                    merge_state(next, std::move(counts), val, key, code);
                }
                // advance odometer
                std::size_t x = 0;
                for (; x < pick.size(); ++x) {
                    int cap = std::min<int>(
                        static_cast<int>(
                            group_members[static_cast<std::size_t>(newborn[t][x])].size()),
                        static_cast<int>(k));
                    if (pick[x] < cap) {
                        ++pick[x];
                        std::fill(pick.begin(), pick.begin() + static_cast<long>(x), 0);
                        break;
                    }
                }
                if (x == pick.size()) break;
            }
        }
        trail[t] = next;
        cur = std::move(next);
    }

    std::optional<Rational> best;
    const std::vector<int>* best_key = nullptr;
    for (const auto& [key, st] : cur) {
        if (key.back() != static_cast<int>(lstar)) continue;
        if (!best || *best < st.value) {
            best = st.value;
            best_key = &key;
        }
    }
    if (!best) throw std::logic_error("pav_vi_bounded_d: no reachable final state");

    // walk back decoding per-step newborn counts
    std::vector<int> members;
    std::vector<int> key = *best_key;
    for (std::size_t t = n; t-- > 0;) {
        const auto& st = trail[t].at(key);
        int code = st.choice;
        for (std::size_t x = 0; x < newborn[t].size(); ++x) {
            int cnt = code % (static_cast<int>(k) + 1);
            code /= static_cast<int>(k) + 1;
            const auto& mem = group_members[static_cast<std::size_t>(newborn[t][x])];
            for (int y = 0; y < cnt; ++y) members.push_back(mem[static_cast<std::size_t>(y)]);
        }
        key = st.prev_key;
    }
    members = pad_members(p, std::move(members), k, approved);
    return Solution{*best, Committee::of(m, members), "vi-dp-d", std::nullopt};
}

Solution wpav_truncated(const ApprovalProfile& p, const std::vector<int>& order,
                        AxisKind axis, const WeightScheme& scheme, std::size_t k) {
    if (!scheme.is_truncated())
        throw std::invalid_argument("wpav_truncated: scheme has no zero tail");
    const std::size_t m = p.num_candidates();
    const std::size_t n = p.num_voters();
    if (k > m) throw std::invalid_argument("committee size exceeds candidate count");
    const std::size_t cutoff = scheme.cutoff();
    auto u = u_table(scheme, std::max(k, m));

    if (axis == AxisKind::Ci) {
        if (!verify_witness(p, StructureProperty::Ci, CandidateOrder{order}))
            throw std::invalid_argument("wpav_truncated: invalid CI witness");
        // credited set = the `cutoff` rightmost committee members; adding a
        // candidate changes only votes containing it, and within them the
        // credited set meets the vote in a suffix run, which makes the
        // marginal exact
        auto tfun = [&](const std::vector<int>& credited, int candidate) {
            Rational total(0);
            for (const auto& v : p.votes()) {
                if (!v.test(static_cast<std::size_t>(candidate))) continue;
                std::size_t inter = 0;
                for (int q : credited)
                    if (v.test(static_cast<std::size_t>(order[static_cast<std::size_t>(q)])))
                        ++inter;
                total += u[inter];
            }
            return total;
        };

        StateMap cur;
        cur.emplace(std::vector<int>{0}, SweepState{Rational(0), {}, 0});
        std::vector<StateMap> trail(m);
        for (std::size_t j = 0; j < m; ++j) {
            StateMap next;
            for (const auto& [key, st] : cur) {
                std::vector<int> credited(key.begin(), key.end() - 1);
                std::size_t l = static_cast<std::size_t>(key.back());
                // skip candidate j
                merge_state(next, key, st.value, key, 0);
                if (l < k) {
                    std::vector<int> grown = credited;
                    if (grown.size() == cutoff) grown.erase(grown.begin());
                    grown.push_back(static_cast<int>(j));
                    Rational val =
                        st.value + tfun(grown, order[j]) - tfun(credited, order[j]);
                    std::vector<int> nkey = grown;
                    nkey.push_back(static_cast<int>(l + 1));
                    merge_state(next, std::move(nkey), val, key, 1);
                }
            }
            trail[j] = next;
            cur = std::move(next);
        }
        std::optional<Rational> best;
        const std::vector<int>* best_key = nullptr;
        for (const auto& [key, st] : cur) {
            if (key.back() != static_cast<int>(k)) continue;
            if (!best || *best < st.value) {
                best = st.value;
                best_key = &key;
            }
        }
        if (!best) throw std::logic_error("wpav_truncated: no reachable final state");
        std::vector<int> members;
        std::vector<int> key = *best_key;
        for (std::size_t j = m; j-- > 0;) {
            const auto& st = trail[j].at(key);
            if (st.choice) members.push_back(order[j]);
            key = st.prev_key;
        }
        return Solution{*best, Committee::of(m, members), "wpav-truncated-ci", std::nullopt};
    }

    // VI axis
    if (!verify_witness(p, StructureProperty::Vi, VoterOrder{order}))
        throw std::invalid_argument("wpav_truncated: invalid VI witness");

    CandSet approved(m);
    for (const auto& v : p.votes()) approved = approved | v;
    const std::size_t lstar = std::min(k, approved.count());

    std::vector<std::vector<int>> vote_list(n);
    for (std::size_t t = 0; t < n; ++t) {
        vote_list[t] = p.vote(static_cast<std::size_t>(order[t])).members();
        if (vote_list[t].size() > 25)
            throw BudgetExceededError("wpav_truncated: vote too large for mask table");
    }

    // dp[t] keyed by (credited mask over vote t, committee size); the mask
    // has at most `cutoff` bits; extra committee members of the current vote
    // may stay uncredited because their weights are zero anyway
    struct TruncBack {
        std::uint32_t pred;
        int uncounted;
    };
    std::vector<std::vector<std::vector<std::optional<Rational>>>> dp(n);
    std::vector<std::vector<std::vector<TruncBack>>> back(n);
    for (std::size_t t = 0; t < n; ++t) {
        dp[t].assign(1u << vote_list[t].size(),
                     std::vector<std::optional<Rational>>(k + 1));
        back[t].assign(1u << vote_list[t].size(),
                       std::vector<TruncBack>(k + 1, TruncBack{0, 0}));
    }

    for (std::uint32_t a = 0; a < (1u << vote_list[0].size()); ++a) {
        std::size_t pa = static_cast<std::size_t>(__builtin_popcount(a));
        for (std::size_t l = pa; l <= std::min(k, vote_list[0].size()); ++l) {
            if (pa != std::min(cutoff, l)) continue;
            dp[0][a][l] = u[l];
            back[0][a][l] = TruncBack{0, static_cast<int>(l - pa)};
        }
    }

    for (std::size_t t = 1; t < n; ++t) {
        const auto& cur_list = vote_list[t];
        const auto& prev_list = vote_list[t - 1];
        const CandSet& prev_set = p.vote(static_cast<std::size_t>(order[t - 1]));

        std::vector<int> prev_bit(cur_list.size(), -1);
        for (std::size_t b = 0; b < cur_list.size(); ++b) {
            if (!prev_set.test(static_cast<std::size_t>(cur_list[b]))) continue;
            for (std::size_t pb = 0; pb < prev_list.size(); ++pb)
                if (prev_list[pb] == cur_list[b]) prev_bit[b] = static_cast<int>(pb);
        }

        for (std::uint32_t a = 0; a < (1u << cur_list.size()); ++a) {
            std::size_t pa = static_cast<std::size_t>(__builtin_popcount(a));
            if (pa > cutoff || pa > k) continue;
            std::uint32_t base_prev = 0;
            std::size_t fresh_credited = 0, outside = 0;
            for (std::size_t b = 0; b < cur_list.size(); ++b) {
                bool in_a = a & (1u << b);
                if (in_a && prev_bit[b] >= 0) base_prev |= 1u << prev_bit[b];
                if (in_a && prev_bit[b] < 0) ++fresh_credited;
                if (!in_a && prev_bit[b] < 0) ++outside;  // could join uncredited
            }
            // predecessor credited sets extend the forced part by any other
            // previous-vote candidates up to the cutoff; restricting the
            // extension to candidates leaving the next vote would lose
            // optimal credit assignments, so the full vote is eligible
            std::vector<int> extend_bits;
            for (std::size_t pb = 0; pb < prev_list.size(); ++pb)
                if (!(base_prev & (1u << pb))) extend_bits.push_back(static_cast<int>(pb));
            const std::size_t cap =
                cutoff - static_cast<std::size_t>(__builtin_popcount(base_prev));
            std::vector<std::uint32_t> preds;
            std::vector<std::size_t> idx;
            auto emit_subsets = [&](auto&& self, std::size_t start, std::uint32_t mask,
                                    std::size_t left) -> void {
                preds.push_back(base_prev | mask);
                if (left == 0) return;
                for (std::size_t x = start; x < extend_bits.size(); ++x)
                    self(self, x + 1,
                         mask | (1u << static_cast<std::uint32_t>(extend_bits[x])), left - 1);
            };
            emit_subsets(emit_subsets, 0, 0, cap);

            for (std::size_t l = 0; l <= k; ++l) {
                std::optional<Rational> best;
                TruncBack bestbp{0, 0};
                for (std::size_t r = 0; r <= outside; ++r) {
                    if (fresh_credited + r > l) continue;
                    std::size_t pl = l - fresh_credited - r;
                    for (std::uint32_t pred : preds) {
                        const auto& cell = dp[t - 1][pred][pl];
                        if (cell && (!best || *best < *cell)) {
                            best = *cell;
                            bestbp = TruncBack{pred, static_cast<int>(r)};
                        }
                    }
                }
                if (best) {
                    dp[t][a][l] = *best + u[pa];
                    back[t][a][l] = bestbp;
                }
            }
        }
    }

    std::optional<Rational> best;
    std::uint32_t best_mask = 0;
    for (std::uint32_t a = 0; a < (1u << vote_list[n - 1].size()); ++a) {
        const auto& cell = dp[n - 1][a][lstar];
        if (cell && (!best || *best < *cell)) {
            best = *cell;
            best_mask = a;
        }
    }
    if (!best) throw std::logic_error("wpav_truncated: no reachable final state");

    std::vector<int> members;
    std::uint32_t mask = best_mask;
    std::size_t l = lstar;
    for (std::size_t t = n; t-- > 0;) {
        const auto& cur_list = vote_list[t];
        const CandSet* prev_set =
            t > 0 ? &p.vote(static_cast<std::size_t>(order[t - 1])) : nullptr;
        TruncBack bp = back[t][mask][l];
        std::size_t fresh = 0;
        // credited candidates new at this step
        for (std::size_t b = 0; b < cur_list.size(); ++b) {
            if (!(mask & (1u << b))) continue;
            if (!prev_set || !prev_set->test(static_cast<std::size_t>(cur_list[b]))) {
                if (prev_set) members.push_back(cur_list[b]);
                ++fresh;
            }
        }
        if (!prev_set) {
            // base voter: credited mask plus the uncredited remainder
            for (std::size_t b = 0; b < cur_list.size(); ++b)
                if (mask & (1u << b)) members.push_back(cur_list[b]);
            int want = bp.uncounted;
            for (std::size_t b = 0; b < cur_list.size() && want > 0; ++b)
                if (!(mask & (1u << b))) {
                    members.push_back(cur_list[b]);
                    --want;
                }
            break;
        }
        // uncredited newcomers: outside both the previous vote and the mask
        int want = bp.uncounted;
        for (std::size_t b = 0; b < cur_list.size() && want > 0; ++b) {
            if (mask & (1u << b)) continue;
            if (prev_set->test(static_cast<std::size_t>(cur_list[b]))) continue;
            members.push_back(cur_list[b]);
            --want;
        }
        l -= fresh + static_cast<std::size_t>(bp.uncounted);
        mask = bp.pred;
    }

    members = pad_members(p, std::move(members), k, approved);
    return Solution{*best, Committee::of(m, members), "wpav-truncated-vi", std::nullopt};
}

}  // namespace apd
