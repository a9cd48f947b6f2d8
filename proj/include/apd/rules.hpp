#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "apd/candset.hpp"
#include "apd/profile.hpp"
#include "apd/rational.hpp"

namespace apd {

struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoApplicableAlgorithmError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Committee selection rule: w-PAV maximizes the sum of cumulative weights of
// intersection sizes, MAV minimizes the worst symmetric difference.
struct RuleSpec {
    enum class Kind { WPav, Mav };

    Kind kind = Kind::WPav;
    WeightScheme scheme = WeightScheme::harmonic();

    static RuleSpec pav() { return {Kind::WPav, WeightScheme::harmonic()}; }
    static RuleSpec wpav(WeightScheme s) { return {Kind::WPav, std::move(s)}; }
    static RuleSpec mav() { return {Kind::Mav, WeightScheme::harmonic()}; }

    bool is_mav() const { return kind == Kind::Mav; }
    // true when `a` is a strictly better score than `b` under this rule
    bool better(const Rational& a, const Rational& b) const {
        return is_mav() ? a < b : b < a;
    }
};

struct Solution {
    Rational score;
    Committee committee;
    std::string algorithm;
    // every optimal committee; filled by the brute-force oracle only
    std::optional<std::vector<CandSet>> optimal_set;
};

Rational score_wpav(const ApprovalProfile& p, const WeightScheme& scheme, const Committee& w);
long long score_mav(const ApprovalProfile& p, const Committee& w);
Rational score_rule(const ApprovalProfile& p, const RuleSpec& rule, const Committee& w);

// Enumerates all size-k committees; the returned committee is the
// lexicographically smallest optimum and optimal_set lists every optimum.
// Throws BudgetExceededError when C(m, k) exceeds the budget.
Solution brute_force(const ApprovalProfile& p, std::size_t k, const RuleSpec& rule,
                     unsigned long long budget = 10000000ULL);

// Structured solvers. Every DP stores backpointers and reconstructs a
// deterministic optimal committee; scores are exact rationals.

// w-PAV on a VI order; cost grows as 4^s with s the largest vote size.
Solution pav_vi_bounded_s(const ApprovalProfile& p, const std::vector<int>& vi_order,
                          std::size_t k, const WeightScheme& scheme = WeightScheme::harmonic());

// w-PAV on a CI axis; cost grows as 2^s.
Solution pav_ci_bounded_s(const ApprovalProfile& p, const std::vector<int>& ci_axis,
                          std::size_t k, const WeightScheme& scheme = WeightScheme::harmonic());

// w-PAV on a CI axis; cost grows as (k+1)^d with d the largest candidate degree.
Solution pav_ci_bounded_d(const ApprovalProfile& p, const std::vector<int>& ci_axis,
                          std::size_t k, const WeightScheme& scheme = WeightScheme::harmonic());

// w-PAV on a VI order; cost grows as (k+1)^(d^2).
Solution pav_vi_bounded_d(const ApprovalProfile& p, const std::vector<int>& vi_order,
                          std::size_t k, const WeightScheme& scheme = WeightScheme::harmonic());

enum class AxisKind { Vi, Ci };

// w-PAV for truncated weight vectors (w_i = 0 beyond the cutoff); polynomial
// for a fixed cutoff. With weights (1, 0, ...) this is Chamberlin-Courant.
Solution wpav_truncated(const ApprovalProfile& p, const std::vector<int>& order,
                        AxisKind axis, const WeightScheme& scheme, std::size_t k);

// PAV/MAV on a VEI order via the universally-approved / prefix / suffix split.
Solution vei_committee(const ApprovalProfile& p, const std::vector<int>& vei_order,
                       std::size_t k, const RuleSpec& rule);

// PAV/MAV on a CEI axis via a left-to-right scan over committee prefix sizes.
Solution cei_committee(const ApprovalProfile& p, const std::vector<int>& cei_axis,
                       std::size_t k, const RuleSpec& rule);

// PAV/MAV for WSC profiles: candidates inside each block are interchangeable,
// so only per-block counts are enumerated.
Solution wsc_committee(const ApprovalProfile& p, std::size_t k, const RuleSpec& rule);

// PAV (exact greedy) and MAV (quota feasibility scan) for partition profiles.
Solution part_committee(const ApprovalProfile& p, std::size_t k, const RuleSpec& rule);

enum class SolveStrategy { Auto, Oracle, Force };

struct SolveOptions {
    SolveStrategy strategy = SolveStrategy::Auto;
    std::string forced_algorithm;  // one of the algorithm tags, for Force
    unsigned long long oracle_budget = 10000000ULL;
};

// Detection-driven dispatch: 2PART, PART, WSC, VEI, CEI, then the CI/VI
// programs when s or d is small or the scheme is truncated, then the oracle.
// Throws NoApplicableAlgorithmError when nothing fits the budget.
Solution solve(const ApprovalProfile& p, std::size_t k, const RuleSpec& rule,
               const SolveOptions& opts = {});

}  // namespace apd
