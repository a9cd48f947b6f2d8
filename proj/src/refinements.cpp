#include "apd/refinements.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace apd {

namespace {

Rational abs_diff(const Rational& a, const Rational& b) {
    Rational d = a - b;
    return d.sign() < 0 ? -d : d;
}

bool is_permutation_of(const std::vector<int>& order, std::size_t n) {
    if (order.size() != n) return false;
    std::vector<char> seen(n, 0);
    for (int x : order) {
        if (x < 0 || static_cast<std::size_t>(x) >= n || seen[static_cast<std::size_t>(x)])
            return false;
        seen[static_cast<std::size_t>(x)] = 1;
    }
    return true;
}

}  // namespace

bool verify_refinement(const ApprovalProfile& p, const TotalOrderProfile& t) {
    if (t.num_voters() != p.num_voters())
        throw std::invalid_argument("refinement: voter count mismatch");
    const std::size_t m = p.num_candidates();
    for (std::size_t i = 0; i < p.num_voters(); ++i) {
        if (!is_permutation_of(t.rankings[i], m))
            throw std::invalid_argument("refinement: ranking is not a permutation");
        const std::size_t approved = p.vote(i).count();
        for (std::size_t r = 0; r < m; ++r) {
            bool in = p.vote(i).test(static_cast<std::size_t>(t.rankings[i][r]));
            if (in != (r < approved)) return false;
        }
    }
    return true;
}

bool verify_single_peaked(const TotalOrderProfile& t, const std::vector<int>& axis) {
    const std::size_t m = axis.size();
    std::vector<int> pos(m);
    for (std::size_t i = 0; i < m; ++i) pos[static_cast<std::size_t>(axis[i])] = static_cast<int>(i);
    for (const auto& ranking : t.rankings) {
        if (ranking.size() != m) return false;
        int lo = pos[static_cast<std::size_t>(ranking[0])];
        int hi = lo;
        for (std::size_t r = 1; r < m; ++r) {
            int q = pos[static_cast<std::size_t>(ranking[r])];
            if (q == lo - 1)
                lo = q;
            else if (q == hi + 1)
                hi = q;
            else
                return false;
        }
    }
    return true;
}

bool verify_single_peaked_triples(const TotalOrderProfile& t, const std::vector<int>& axis) {
    const std::size_t m = axis.size();
    for (const auto& ranking : t.rankings) {
        std::vector<int> rank(m);
        for (std::size_t r = 0; r < m; ++r)
            rank[static_cast<std::size_t>(ranking[r])] = static_cast<int>(r);
        for (std::size_t x = 0; x + 2 < m; ++x)
            for (std::size_t y = x + 1; y + 1 < m; ++y)
                for (std::size_t z = y + 1; z < m; ++z) {
                    int a = axis[x], b = axis[y], c = axis[z];
                    // a ◁ b ◁ c: a ≻ b implies b ≻ c, and c ≻ b implies b ≻ a
                    if (rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)] &&
                        rank[static_cast<std::size_t>(b)] > rank[static_cast<std::size_t>(c)])
                        return false;
                    if (rank[static_cast<std::size_t>(c)] < rank[static_cast<std::size_t>(b)] &&
                        rank[static_cast<std::size_t>(b)] > rank[static_cast<std::size_t>(a)])
                        return false;
                }
    }
    return true;
}

bool verify_single_crossing(const TotalOrderProfile& t, const std::vector<int>& voter_order) {
    if (!is_permutation_of(voter_order, t.num_voters())) return false;
    if (t.rankings.empty()) return true;
    const std::size_t m = t.rankings[0].size();
    std::vector<std::vector<int>> rank(t.num_voters(), std::vector<int>(m));
    for (std::size_t i = 0; i < t.num_voters(); ++i)
        for (std::size_t r = 0; r < m; ++r)
            rank[i][static_cast<std::size_t>(t.rankings[i][r])] = static_cast<int>(r);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            int flips = 0;
            bool prev = false, have_prev = false;
            for (int voter : voter_order) {
                bool a_over_b = rank[static_cast<std::size_t>(voter)][a] <
                                rank[static_cast<std::size_t>(voter)][b];
                if (have_prev && a_over_b != prev) ++flips;
                prev = a_over_b;
                have_prev = true;
            }
            if (flips > 1) return false;
        }
    return true;
}

bool verify_strict_euclidean(const TotalOrderProfile& t, const EuclideanEmbedding& e) {
    if (t.num_voters() != e.voter_pos.size()) return false;
    const std::size_t m = e.candidate_pos.size();
    for (std::size_t i = 0; i < t.num_voters(); ++i) {
        if (t.rankings[i].size() != m) return false;
        for (std::size_t r = 0; r + 1 < m; ++r) {
            Rational dc = abs_diff(e.voter_pos[i],
                                   e.candidate_pos[static_cast<std::size_t>(t.rankings[i][r])]);
            Rational dd = abs_diff(
                e.voter_pos[i], e.candidate_pos[static_cast<std::size_t>(t.rankings[i][r + 1])]);
            if (!(dc < dd)) return false;
        }
    }
    return true;
}

TotalOrderProfile refine_psp(const ApprovalProfile& p, const std::vector<int>& ci_axis) {
    if (!verify_witness(p, StructureProperty::Ci, CandidateOrder{ci_axis}))
        throw std::invalid_argument("refine_psp: axis is not a CI witness");
    const std::size_t m = p.num_candidates();
    std::vector<int> pos(m);
    for (std::size_t i = 0; i < m; ++i)
        pos[static_cast<std::size_t>(ci_axis[i])] = static_cast<int>(i);

    TotalOrderProfile out;
    for (const auto& v : p.votes()) {
        int lo = 0, hi = 0;
        if (!v.empty()) {
            lo = static_cast<int>(m);
            hi = -1;
            for (std::size_t c = 0; c < m; ++c)
                if (v.test(c)) {
                    lo = std::min(lo, pos[c]);
                    hi = std::max(hi, pos[c]);
                }
        }
        std::vector<int> ranking;
        ranking.reserve(m);
        for (int q = lo; q <= hi; ++q) ranking.push_back(ci_axis[static_cast<std::size_t>(q)]);
        for (int q = hi + 1; q < static_cast<int>(m); ++q)
            ranking.push_back(ci_axis[static_cast<std::size_t>(q)]);
        for (int q = lo - 1; q >= 0; --q) ranking.push_back(ci_axis[static_cast<std::size_t>(q)]);
        out.rankings.push_back(std::move(ranking));
    }
    return out;
}

std::vector<int> voter_position_order(const EuclideanEmbedding& e) {
    std::vector<int> order(e.voter_pos.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return e.voter_pos[static_cast<std::size_t>(a)] < e.voter_pos[static_cast<std::size_t>(b)];
    });
    return order;
}

EuclideanRefinement refine_pe(const ApprovalProfile& p, const EuclideanEmbedding& e) {
    if (!verify_witness(p, StructureProperty::De, Witness{e}))
        throw std::invalid_argument("refine_pe: embedding fails DE verification");
    const std::size_t m = p.num_candidates();
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t d = c + 1; d < m; ++d)
            if (e.candidate_pos[c] == e.candidate_pos[d])
                throw std::invalid_argument(
                    "refine_pe: coincident candidate positions cannot realize a strict ranking");

    EuclideanRefinement out;
    for (std::size_t i = 0; i < p.num_voters(); ++i) {
        std::vector<int> ranking(m);
        std::iota(ranking.begin(), ranking.end(), 0);
        std::sort(ranking.begin(), ranking.end(), [&](int c, int d) {
            Rational dc = abs_diff(e.voter_pos[i], e.candidate_pos[static_cast<std::size_t>(c)]);
            Rational dd = abs_diff(e.voter_pos[i], e.candidate_pos[static_cast<std::size_t>(d)]);
            if (dc != dd) return dc < dd;
            // equidistant: the candidate with the smaller coordinate wins
            return e.candidate_pos[static_cast<std::size_t>(c)] <
                   e.candidate_pos[static_cast<std::size_t>(d)];
        });
        out.profile.rankings.push_back(std::move(ranking));
    }

    // epsilon must preserve every strict distance comparison; a left shift
    // breaks all exact ties toward the smaller coordinate
    std::optional<Rational> min_gap;
    for (std::size_t i = 0; i < p.num_voters(); ++i)
        for (std::size_t c = 0; c < m; ++c)
            for (std::size_t d = c + 1; d < m; ++d) {
                Rational gap = abs_diff(abs_diff(e.voter_pos[i], e.candidate_pos[c]),
                                        abs_diff(e.voter_pos[i], e.candidate_pos[d]));
                if (!gap.is_zero() && (!min_gap || gap < *min_gap)) min_gap = gap;
            }
    Rational eps = min_gap ? *min_gap * Rational(1, 4) : Rational(1, 4);

    out.embedding = e;
    for (auto& x : out.embedding.voter_pos) x = x - eps;

    if (!verify_strict_euclidean(out.profile, out.embedding))
        throw std::logic_error("refine_pe: perturbed embedding does not realize the ranking");
    return out;
}

Verdict psc_exhaustive(const ApprovalProfile& p, unsigned long long pair_budget) {
    const std::size_t n = p.num_voters();
    const std::size_t m = p.num_candidates();

    auto factorial = [](std::size_t k) -> unsigned long long {
        if (k > 20) return ~0ULL;  // saturate: way over any sensible budget
        unsigned long long f = 1;
        for (std::size_t i = 2; i <= k; ++i) f *= i;
        return f;
    };
    unsigned long long refinements = 1;
    for (const auto& v : p.votes()) {
        unsigned long long per = factorial(v.count()) * factorial(m - v.count());
        if (refinements > pair_budget / std::max(1ULL, per)) return Verdict::Unknown;
        refinements *= per;
    }
    unsigned long long orders = factorial(n);
    if (refinements > pair_budget / std::max(1ULL, orders)) return Verdict::Unknown;

    // per-voter refinement choices: approved block permutation x disapproved
    // block permutation
    std::vector<std::vector<int>> approved(n), disapproved(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < m; ++c)
            (p.vote(i).test(c) ? approved[i] : disapproved[i]).push_back(static_cast<int>(c));
        std::sort(approved[i].begin(), approved[i].end());
        std::sort(disapproved[i].begin(), disapproved[i].end());
    }

    TotalOrderProfile t;
    t.rankings.resize(n);

    std::vector<int> voter_order(n);
    auto try_orders = [&]() {
        std::iota(voter_order.begin(), voter_order.end(), 0);
        do {
            if (n > 1 && voter_order.front() > voter_order.back()) continue;
            if (verify_single_crossing(t, voter_order)) return true;
        } while (std::next_permutation(voter_order.begin(), voter_order.end()));
        return false;
    };

    // odometer over per-voter refinements
    auto rec = [&](auto&& self, std::size_t voter) -> bool {
        if (voter == n) return try_orders();
        std::vector<int> ap = approved[voter];
        do {
            std::vector<int> dis = disapproved[voter];
            do {
                t.rankings[voter] = ap;
                t.rankings[voter].insert(t.rankings[voter].end(), dis.begin(), dis.end());
                if (self(self, voter + 1)) return true;
            } while (std::next_permutation(dis.begin(), dis.end()));
        } while (std::next_permutation(ap.begin(), ap.end()));
        return false;
    };
    return rec(rec, 0) ? Verdict::Holds : Verdict::Fails;
}

}  // namespace apd
