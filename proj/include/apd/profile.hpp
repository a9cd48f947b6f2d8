#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "apd/candset.hpp"
#include "apd/rational.hpp"

namespace apd {

// A dichotomous profile: n approval votes over m labelled candidates.
// Vote order and multiplicity are significant (witness orders refer to
// positions). Immutable after construction.
class ApprovalProfile {
public:
    ApprovalProfile(std::vector<std::string> labels, std::vector<CandSet> votes);

    std::size_t num_candidates() const { return labels_.size(); }
    std::size_t num_voters() const { return votes_.size(); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int c) const { return labels_.at(static_cast<std::size_t>(c)); }
    int index_of(const std::string& label) const;  // -1 if unknown

    const CandSet& vote(std::size_t i) const { return votes_[i]; }
    const std::vector<CandSet>& votes() const { return votes_; }

    friend bool operator==(const ApprovalProfile& a, const ApprovalProfile& b) {
        return a.labels_ == b.labels_ && a.votes_ == b.votes_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<CandSet> votes_;
};

// Committee of exactly k candidates, k == members.count().
struct Committee {
    CandSet members;

    std::size_t size() const { return members.count(); }
    static Committee of(std::size_t m, const std::vector<int>& cands) {
        return Committee{CandSet::of(m, cands)};
    }
};

// Infinite non-increasing weight sequence with w_1 = 1. Truncated schemes
// continue with zeros after entry i0; explicit schemes continue with their
// last listed value.
class WeightScheme {
public:
    enum class Kind { Harmonic, Truncated, Explicit };

    static WeightScheme harmonic();
    static WeightScheme truncated(std::vector<Rational> entries);
    static WeightScheme explicit_tail(std::vector<Rational> entries);
    // (1, 0, ...): Chamberlin-Courant on dichotomous preferences
    static WeightScheme chamberlin_courant();

    Kind kind() const { return kind_; }
    bool is_truncated() const { return kind_ == Kind::Truncated; }
    // cutoff index for truncated schemes: w_i = 0 for i > cutoff
    std::size_t cutoff() const { return entries_.size(); }

    // 1-based weight w_j
    Rational weight(std::size_t j) const;

    std::string to_string() const;

private:
    Kind kind_;
    std::vector<Rational> entries_;

    WeightScheme(Kind kind, std::vector<Rational> entries);
};

// u_w(p) = sum of the first p weights; u_w(0) = 0.
Rational cumulative_weight(const WeightScheme& scheme, std::size_t p);

ApprovalProfile build_profile(const std::vector<std::string>& labels,
                              const std::vector<std::vector<std::string>>& votes);

// true iff the two votes induce the same dichotomous weak order
// (all trivial votes, i.e. empty or full, collapse to the empty order)
bool weak_order_equal(const CandSet& u, const CandSet& v, std::size_t m);

bool is_trivial_vote(const CandSet& v);

struct ProfileStats {
    std::size_t max_vote_size = 0;       // s
    std::size_t max_candidate_degree = 0;  // d
    std::size_t distinct_votes = 0;
};

ProfileStats profile_stats(const ApprovalProfile& p);

}  // namespace apd
