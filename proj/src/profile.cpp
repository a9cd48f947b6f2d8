#include "apd/profile.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace apd {

ApprovalProfile::ApprovalProfile(std::vector<std::string> labels,
                                 std::vector<CandSet> votes)
    : labels_(std::move(labels)), votes_(std::move(votes)) {
    if (labels_.empty()) throw std::invalid_argument("profile: no candidates");
    if (votes_.empty()) throw std::invalid_argument("profile: no votes");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second)
            throw std::invalid_argument("profile: duplicate candidate label '" + l + "'");
    for (const auto& v : votes_)
        if (v.universe() != labels_.size())
            throw std::invalid_argument("profile: vote universe mismatch");
}

int ApprovalProfile::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return -1;
}

ApprovalProfile build_profile(const std::vector<std::string>& labels,
                              const std::vector<std::vector<std::string>>& votes) {
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!index.emplace(labels[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate candidate label '" + labels[i] + "'");
    }
    std::vector<CandSet> sets;
    sets.reserve(votes.size());
    for (const auto& v : votes) {
        CandSet s(labels.size());
        for (const auto& name : v) {
            auto it = index.find(name);
            if (it == index.end())
                throw std::invalid_argument("unknown candidate label '" + name + "' in vote");
            s.set(static_cast<std::size_t>(it->second));
        }
        sets.push_back(std::move(s));
    }
    return ApprovalProfile(labels, std::move(sets));
}

bool is_trivial_vote(const CandSet& v) { return v.empty() || v.is_full(); }

bool weak_order_equal(const CandSet& u, const CandSet& v, std::size_t) {
    if (u == v) return true;
    return is_trivial_vote(u) && is_trivial_vote(v);
}

ProfileStats profile_stats(const ApprovalProfile& p) {
    ProfileStats st;
    std::unordered_set<CandSet, CandSetHash> distinct;
    std::vector<std::size_t> degree(p.num_candidates(), 0);
    for (const auto& v : p.votes()) {
        st.max_vote_size = std::max(st.max_vote_size, v.count());
        distinct.insert(v);
        for (std::size_t c = 0; c < p.num_candidates(); ++c)
            if (v.test(c)) ++degree[c];
    }
    for (auto d : degree) st.max_candidate_degree = std::max(st.max_candidate_degree, d);
    st.distinct_votes = distinct.size();
    return st;
}

WeightScheme::WeightScheme(Kind kind, std::vector<Rational> entries)
    : kind_(kind), entries_(std::move(entries)) {
    if (kind_ != Kind::Harmonic) {
        if (entries_.empty())
            throw std::invalid_argument("weight scheme: needs at least one entry");
        if (entries_.front() != Rational(1))
            throw std::invalid_argument("weight scheme: w_1 must equal 1");
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i].sign() < 0)
                throw std::invalid_argument("weight scheme: negative weight");
            if (i > 0 && entries_[i] > entries_[i - 1])
                throw std::invalid_argument("weight scheme: weights must be non-increasing");
        }
    }
}

WeightScheme WeightScheme::harmonic() { return WeightScheme(Kind::Harmonic, {}); }

WeightScheme WeightScheme::truncated(std::vector<Rational> entries) {
    // drop listed trailing zeros; the zero tail is implied
    while (!entries.empty() && entries.back().is_zero()) entries.pop_back();
    return WeightScheme(Kind::Truncated, std::move(entries));
}

WeightScheme WeightScheme::explicit_tail(std::vector<Rational> entries) {
    return WeightScheme(Kind::Explicit, std::move(entries));
}

WeightScheme WeightScheme::chamberlin_courant() {
    return truncated({Rational(1)});
}

Rational WeightScheme::weight(std::size_t j) const {
    if (j == 0) throw std::invalid_argument("weight index is 1-based");
    switch (kind_) {
        case Kind::Harmonic:
            return Rational(1, static_cast<long long>(j));
        case Kind::Truncated:
            return j <= entries_.size() ? entries_[j - 1] : Rational(0);
        case Kind::Explicit:
            return j <= entries_.size() ? entries_[j - 1] : entries_.back();
    }
    return Rational(0);
}

std::string WeightScheme::to_string() const {
    switch (kind_) {
        case Kind::Harmonic:
            return "harmonic";
        case Kind::Truncated: {
            std::string s = "truncated(";
            for (std::size_t i = 0; i < entries_.size(); ++i) {
                if (i) s += ",";
                s += entries_[i].to_string();
            }
            return s + ",0,...)";
        }
        case Kind::Explicit: {
            std::string s = "explicit(";
            for (std::size_t i = 0; i < entries_.size(); ++i) {
                if (i) s += ",";
                s += entries_[i].to_string();
            }
            return s + ",...)";
        }
    }
    return "?";
}

Rational cumulative_weight(const WeightScheme& scheme, std::size_t p) {
    Rational sum(0);
    for (std::size_t j = 1; j <= p; ++j) {
        if (scheme.is_truncated() && j > scheme.cutoff()) break;
        sum += scheme.weight(j);
    }
    return sum;
}

}  // namespace apd
