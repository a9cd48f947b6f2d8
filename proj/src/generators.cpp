#include "apd/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace apd {

namespace {

std::vector<std::string> make_labels(std::size_t m) {
    std::vector<std::string> labels;
    labels.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (m <= 26)
            labels.push_back(std::string(1, static_cast<char>('a' + i)));
        else
            labels.push_back("c" + std::to_string(i));
    }
    return labels;
}

std::vector<int> shuffled(std::size_t n, SplitMix64& rng) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = n; i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);
    return order;
}

ApprovalProfile finish(std::vector<std::string> labels, std::vector<CandSet> votes,
                       SplitMix64& rng) {
    // shuffle voters so witness orders are non-trivial
    auto order = shuffled(votes.size(), rng);
    std::vector<CandSet> shuffled_votes;
    shuffled_votes.reserve(votes.size());
    for (int i : order) shuffled_votes.push_back(votes[static_cast<std::size_t>(i)]);
    return ApprovalProfile(std::move(labels), std::move(shuffled_votes));
}

ApprovalProfile gen_unrestricted(const GenSpec& spec, SplitMix64& rng) {
    std::vector<CandSet> votes;
    std::vector<std::size_t> degree(spec.m, 0);
    for (std::size_t i = 0; i < spec.n; ++i) {
        CandSet v(spec.m);
        if (spec.params.max_vote_size) {
            std::size_t want = rng.below(std::min(*spec.params.max_vote_size, spec.m) + 1);
            auto order = shuffled(spec.m, rng);
            for (std::size_t x = 0; x < spec.m && v.count() < want; ++x) {
                std::size_t c = static_cast<std::size_t>(order[x]);
                if (!spec.params.max_degree || degree[c] < *spec.params.max_degree) v.set(c);
            }
        } else {
            for (std::size_t c = 0; c < spec.m; ++c) {
                if (!rng.flip()) continue;
                if (spec.params.max_degree && degree[c] >= *spec.params.max_degree) continue;
                v.set(c);
            }
        }
        for (std::size_t c = 0; c < spec.m; ++c)
            if (v.test(c)) ++degree[c];
        votes.push_back(std::move(v));
    }
    return ApprovalProfile(make_labels(spec.m), std::move(votes));
}

// votes are intervals on a hidden candidate axis
ApprovalProfile gen_ci(const GenSpec& spec, SplitMix64& rng) {
    auto axis = shuffled(spec.m, rng);
    std::vector<std::size_t> degree(spec.m, 0);  // by axis position
    std::vector<CandSet> votes;
    const std::size_t smax = spec.params.max_vote_size
                                 ? std::min(*spec.params.max_vote_size, spec.m)
                                 : spec.m;
    for (std::size_t i = 0; i < spec.n; ++i) {
        CandSet v(spec.m);
        for (int attempt = 0; attempt < 24; ++attempt) {
            std::size_t len = rng.below(smax + 1);
            if (len == 0) break;  // empty vote
            std::size_t start = rng.below(spec.m - len + 1);
            bool ok = true;
            if (spec.params.max_degree)
                for (std::size_t q = start; q < start + len && ok; ++q)
                    ok = degree[q] < *spec.params.max_degree;
            if (!ok) continue;
            for (std::size_t q = start; q < start + len; ++q) {
                v.set(static_cast<std::size_t>(axis[q]));
                ++degree[q];
            }
            break;
        }
        votes.push_back(std::move(v));
    }
    return finish(make_labels(spec.m), std::move(votes), rng);
}

// candidate approver sets are intervals on a hidden voter order
ApprovalProfile gen_vi(const GenSpec& spec, SplitMix64& rng) {
    auto order = shuffled(spec.n, rng);
    std::vector<std::size_t> load(spec.n, 0);  // vote size per voter position
    std::vector<CandSet> votes(spec.n, CandSet(spec.m));
    const std::size_t dmax =
        spec.params.max_degree ? std::min(*spec.params.max_degree, spec.n) : spec.n;
    for (std::size_t c = 0; c < spec.m; ++c) {
        for (int attempt = 0; attempt < 24; ++attempt) {
            std::size_t len = rng.below(dmax + 1);
            if (len == 0) break;  // approved by nobody
            std::size_t start = rng.below(spec.n - len + 1);
            bool ok = true;
            if (spec.params.max_vote_size)
                for (std::size_t q = start; q < start + len && ok; ++q)
                    ok = load[q] < *spec.params.max_vote_size;
            if (!ok) continue;
            for (std::size_t q = start; q < start + len; ++q) {
                votes[static_cast<std::size_t>(order[q])].set(c);
                ++load[q];
            }
            break;
        }
    }
    return ApprovalProfile(make_labels(spec.m), std::move(votes));
}

ApprovalProfile gen_cei(const GenSpec& spec, SplitMix64& rng) {
    auto axis = shuffled(spec.m, rng);
    std::vector<CandSet> votes;
    const std::size_t smax = spec.params.max_vote_size
                                 ? std::min(*spec.params.max_vote_size, spec.m)
                                 : spec.m;
    for (std::size_t i = 0; i < spec.n; ++i) {
        CandSet v(spec.m);
        std::size_t len = rng.below(smax + 1);
        bool from_left = rng.flip();
        for (std::size_t x = 0; x < len; ++x) {
            std::size_t q = from_left ? x : spec.m - 1 - x;
            v.set(static_cast<std::size_t>(axis[q]));
        }
        votes.push_back(std::move(v));
    }
    return finish(make_labels(spec.m), std::move(votes), rng);
}

ApprovalProfile gen_vei(const GenSpec& spec, SplitMix64& rng) {
    auto order = shuffled(spec.n, rng);
    std::vector<CandSet> votes(spec.n, CandSet(spec.m));
    const std::size_t dmax =
        spec.params.max_degree ? std::min(*spec.params.max_degree, spec.n) : spec.n;
    for (std::size_t c = 0; c < spec.m; ++c) {
        std::size_t len = rng.below(dmax + 1);
        bool from_left = rng.flip();
        for (std::size_t x = 0; x < len; ++x) {
            std::size_t q = from_left ? x : spec.n - 1 - x;
            votes[static_cast<std::size_t>(order[q])].set(c);
        }
    }
    return ApprovalProfile(make_labels(spec.m), std::move(votes));
}

ApprovalProfile gen_due(const GenSpec& spec, SplitMix64& rng) {
    const std::size_t spread = std::max<std::size_t>(spec.params.spread, 2);
    for (int attempt = 0;; ++attempt) {
        std::vector<long long> vp(spec.n), cp(spec.m);
        for (auto& x : vp) x = static_cast<long long>(rng.below(spread + 1));
        for (auto& x : cp) x = static_cast<long long>(rng.below(spread + 1));
        long long radius = static_cast<long long>(rng.below(spread / 2 + 1));
        if (attempt >= 50) radius = static_cast<long long>(spread);  // force non-degenerate
        std::vector<CandSet> votes;
        bool any = false;
        for (std::size_t i = 0; i < spec.n; ++i) {
            CandSet v(spec.m);
            for (std::size_t c = 0; c < spec.m; ++c)
                if (std::abs(vp[i] - cp[c]) <= radius) v.set(c);
            any |= !v.empty();
            votes.push_back(std::move(v));
        }
        if (any) return ApprovalProfile(make_labels(spec.m), std::move(votes));
    }
}

ApprovalProfile gen_wsc(const GenSpec& spec, SplitMix64& rng) {
    CandSet u(spec.m), w(spec.m);
    for (std::size_t c = 0; c < spec.m; ++c) {
        if (rng.flip()) u.set(c);
        if (rng.flip()) w.set(c);
    }
    CandSet mid = rng.flip() ? (u & w) : (u | w);
    std::vector<CandSet> votes;
    for (std::size_t i = 0; i < spec.n; ++i) {
        switch (rng.below(3)) {
            case 0: votes.push_back(u); break;
            case 1: votes.push_back(mid); break;
            default: votes.push_back(w); break;
        }
    }
    return ApprovalProfile(make_labels(spec.m), std::move(votes));
}

ApprovalProfile gen_two_part(const GenSpec& spec, SplitMix64& rng) {
    if (spec.m < 2 || spec.n < 2)
        throw std::invalid_argument("generate: 2PART needs at least 2 candidates and 2 voters");
    CandSet v(spec.m);
    // proper bipartition: both sides non-empty
    std::size_t size = 1 + rng.below(spec.m - 1);
    auto order = shuffled(spec.m, rng);
    for (std::size_t x = 0; x < size; ++x) v.set(static_cast<std::size_t>(order[x]));
    CandSet other = v.complement();
    std::vector<CandSet> votes{v, other};
    for (std::size_t i = 2; i < spec.n; ++i) votes.push_back(rng.flip() ? v : other);
    return finish(make_labels(spec.m), std::move(votes), rng);
}

ApprovalProfile gen_part(const GenSpec& spec, SplitMix64& rng) {
    const std::size_t parts = 1 + rng.below(std::min(spec.n, spec.m));
    std::vector<CandSet> part_set(parts, CandSet(spec.m));
    auto order = shuffled(spec.m, rng);
    for (std::size_t x = 0; x < spec.m; ++x) {
        std::size_t j = x < parts ? x : rng.below(parts);
        part_set[j].set(static_cast<std::size_t>(order[x]));
    }
    std::vector<CandSet> votes;
    for (std::size_t i = 0; i < spec.n; ++i)
        votes.push_back(part_set[i < parts ? i : rng.below(parts)]);
    return finish(make_labels(spec.m), std::move(votes), rng);
}

}  // namespace

ApprovalProfile generate(const GenSpec& spec) {
    if (spec.n < 1 || spec.m < 1)
        throw std::invalid_argument("generate: n and m must be at least 1");
    SplitMix64 rng(spec.seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    if (!spec.structure) return gen_unrestricted(spec, rng);
    switch (*spec.structure) {
        case StructureProperty::Ci: return gen_ci(spec, rng);
        case StructureProperty::Vi: return gen_vi(spec, rng);
        case StructureProperty::Cei: return gen_cei(spec, rng);
        case StructureProperty::Vei: return gen_vei(spec, rng);
        case StructureProperty::Due: return gen_due(spec, rng);
        case StructureProperty::Wsc: return gen_wsc(spec, rng);
        case StructureProperty::TwoPart: return gen_two_part(spec, rng);
        case StructureProperty::Part: return gen_part(spec, rng);
        default:
            throw std::invalid_argument("generate: unsupported structure");
    }
}

}  // namespace apd
