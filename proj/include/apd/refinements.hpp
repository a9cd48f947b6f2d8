#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "apd/detection.hpp"
#include "apd/profile.hpp"

namespace apd {

// Profile of total orders: rankings[i][r] is voter i's r-th choice.
struct TotalOrderProfile {
    std::vector<std::vector<int>> rankings;

    std::size_t num_voters() const { return rankings.size(); }
};

// true iff every ranking places all approved candidates of its vote above
// all disapproved ones
bool verify_refinement(const ApprovalProfile& p, const TotalOrderProfile& t);

// prefix-contiguity formulation: every prefix of each ranking is an interval
// of the axis
bool verify_single_peaked(const TotalOrderProfile& t, const std::vector<int>& axis);

// literal triple formulation (a ◁ b ◁ c and a ≻ b imply b ≻ c); agrees with
// verify_single_peaked on all inputs
bool verify_single_peaked_triples(const TotalOrderProfile& t, const std::vector<int>& axis);

// along the voter order, each candidate pair's preference flips at most once
bool verify_single_crossing(const TotalOrderProfile& t, const std::vector<int>& voter_order);

// c ≻_i d exactly when voter i sits strictly closer to c than to d
bool verify_strict_euclidean(const TotalOrderProfile& t, const EuclideanEmbedding& e);

// Single-peaked refinement of a CI profile: each vote is an interval on the
// axis; rank it left to right, then sweep right of the interval, then left.
TotalOrderProfile refine_psp(const ApprovalProfile& p, const std::vector<int>& ci_axis);

struct EuclideanRefinement {
    TotalOrderProfile profile;
    EuclideanEmbedding embedding;  // voter positions shifted by -epsilon
};

// 1-Euclidean refinement from a per-voter-radius embedding: rank by distance
// with ties broken toward the smaller coordinate, then shift voters left by
// an epsilon small enough that strict distances realize exactly that order.
EuclideanRefinement refine_pe(const ApprovalProfile& p, const EuclideanEmbedding& e);

// voter indices sorted by embedding position (ties by index)
std::vector<int> voter_position_order(const EuclideanEmbedding& e);

// Exhaustive "possibly single-crossing" decider for tiny instances: tries
// every refinement against every voter order, up to pair_budget pairs.
Verdict psc_exhaustive(const ApprovalProfile& p, unsigned long long pair_budget = 1000000);

}  // namespace apd
