#include "apd/detection.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "apd/consecutive_ones.hpp"

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

std::vector<int> canonical_order(std::vector<int> order) {
    std::vector<int> rev(order.rbegin(), order.rend());
    return rev < order ? rev : order;
}

// positions of set bits of `who` under ranking `pos`; returns (lo, hi, count)
struct Span {
    int lo = 0, hi = -1, count = 0;
};

Span span_of(const CandSet& who, const std::vector<int>& pos) {
    Span s;
    s.lo = static_cast<int>(pos.size());
    for (std::size_t i = 0; i < who.universe(); ++i) {
        if (who.test(i)) {
            s.lo = std::min(s.lo, pos[i]);
            s.hi = std::max(s.hi, pos[i]);
            ++s.count;
        }
    }
    return s;
}

bool contiguous(const Span& s) { return s.count == 0 || s.hi - s.lo + 1 == s.count; }

bool extremal(const Span& s, std::size_t total) {
    return s.count == 0 || (contiguous(s) && (s.lo == 0 || s.hi == static_cast<int>(total) - 1));
}

CandSet approvers_of(const ApprovalProfile& p, std::size_t candidate) {
    CandSet a(p.num_voters());
    for (std::size_t i = 0; i < p.num_voters(); ++i)
        if (p.vote(i).test(candidate)) a.set(i);
    return a;
}

std::vector<int> positions_from_order(const std::vector<int>& order) {
    std::vector<int> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    return pos;
}

bool verify_vi_order(const ApprovalProfile& p, const std::vector<int>& order, bool extremal_req) {
    if (!is_permutation_of(order, p.num_voters())) return false;
    auto pos = positions_from_order(order);
    for (std::size_t c = 0; c < p.num_candidates(); ++c) {
        Span s = span_of(approvers_of(p, c), pos);
        if (extremal_req ? !extremal(s, p.num_voters()) : !contiguous(s)) return false;
    }
    return true;
}

bool verify_ci_order(const ApprovalProfile& p, const std::vector<int>& order, bool extremal_req) {
    if (!is_permutation_of(order, p.num_candidates())) return false;
    auto pos = positions_from_order(order);
    for (const auto& v : p.votes()) {
        Span s = span_of(v, pos);
        if (extremal_req ? !extremal(s, p.num_candidates()) : !contiguous(s)) return false;
    }
    return true;
}

// weak single-crossing: per candidate pair the votes split into V1 (a yes,
// b no), V2 (b yes, a no) and V3 (the rest); along the order the classes
// must read V1* V3* V2* or V2* V3* V1*.
bool verify_wsc_order(const ApprovalProfile& p, const std::vector<int>& order) {
    if (!is_permutation_of(order, p.num_voters())) return false;
    const std::size_t m = p.num_candidates();
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            auto label = [&](const CandSet& v) -> int {
                bool ia = v.test(a), ib = v.test(b);
                if (ia && !ib) return 1;
                if (!ia && ib) return 2;
                return 3;
            };
            auto matches = [&](int first) {
                int stage = 0;  // 0: first block, 1: middle, 2: last block
                for (int voter : order) {
                    int l = label(p.vote(static_cast<std::size_t>(voter)));
                    if (l == first) {
                        if (stage > 0) return false;
                    } else if (l == 3) {
                        if (stage == 0) stage = 1;
                        if (stage > 1) return false;
                    } else {
                        stage = 2;
                    }
                }
                return true;
            };
            if (!matches(1) && !matches(2)) return false;
        }
    }
    return true;
}

// seemingly single-crossing: only the relative order of V1 and V2 votes is
// constrained
bool verify_ssc_order(const ApprovalProfile& p, const std::vector<int>& order) {
    if (!is_permutation_of(order, p.num_voters())) return false;
    const std::size_t m = p.num_candidates();
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            int max1 = -1, min1 = static_cast<int>(order.size());
            int max2 = -1, min2 = static_cast<int>(order.size());
            for (std::size_t posn = 0; posn < order.size(); ++posn) {
                const CandSet& v = p.vote(static_cast<std::size_t>(order[posn]));
                bool ia = v.test(a), ib = v.test(b);
                if (ia && !ib) {
                    max1 = std::max(max1, static_cast<int>(posn));
                    min1 = std::min(min1, static_cast<int>(posn));
                } else if (!ia && ib) {
                    max2 = std::max(max2, static_cast<int>(posn));
                    min2 = std::min(min2, static_cast<int>(posn));
                }
            }
            if (max1 >= 0 && max2 >= 0 && !(max1 < min2 || max2 < min1)) return false;
        }
    }
    return true;
}

bool verify_partition(const ApprovalProfile& p, const std::vector<CandSet>& parts,
                      bool allow_empty_parts) {
    const std::size_t m = p.num_candidates();
    CandSet seen(m);
    std::size_t total = 0;
    for (const auto& part : parts) {
        if (!allow_empty_parts && part.empty()) return false;
        if (seen.intersects(part)) return false;
        seen = seen | part;
        total += part.count();
    }
    if (total != m || !seen.is_full()) return false;
    // the distinct votes must be exactly the parts
    for (const auto& v : p.votes()) {
        bool found = false;
        for (const auto& part : parts)
            if (v == part) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    for (const auto& part : parts) {
        bool found = false;
        for (const auto& v : p.votes())
            if (v == part) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

bool verify_embedding(const ApprovalProfile& p, const EuclideanEmbedding& e, bool uniform) {
    if (e.voter_pos.size() != p.num_voters() || e.candidate_pos.size() != p.num_candidates())
        return false;
    if (uniform && !e.uniform_radius) return false;
    if (!uniform && e.voter_radii.size() != p.num_voters()) return false;
    for (std::size_t i = 0; i < p.num_voters(); ++i) {
        Rational r = uniform ? *e.uniform_radius : e.voter_radii[i];
        if (r.sign() < 0) return false;
        for (std::size_t c = 0; c < p.num_candidates(); ++c) {
            bool within = !(r < abs_diff(e.voter_pos[i], e.candidate_pos[c]));
            if (within != p.vote(i).test(c)) return false;
        }
    }
    return true;
}

std::vector<CandSet> distinct_votes(const ApprovalProfile& p) {
    std::vector<CandSet> out;
    for (const auto& v : p.votes()) {
        bool seen = false;
        for (const auto& d : out)
            if (d == v) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(v);
    }
    return out;
}

DetectionResult detect_two_part(const ApprovalProfile& p) {
    DetectionResult res{StructureProperty::TwoPart, Verdict::Fails, {}, "partition-scan"};
    auto d = distinct_votes(p);
    if (d.size() != 2) return res;
    if (d[0].intersects(d[1])) return res;
    if (!(d[0] | d[1]).is_full()) return res;
    res.verdict = Verdict::Holds;
    res.witness = CandidatePartition{{d[0], d[1]}};
    return res;
}

DetectionResult detect_part(const ApprovalProfile& p) {
    DetectionResult res{StructureProperty::Part, Verdict::Fails, {}, "partition-scan"};
    auto d = distinct_votes(p);
    CandSet seen(p.num_candidates());
    std::size_t total = 0;
    for (const auto& v : d) {
        if (v.empty()) return res;  // parts must be non-empty
        if (seen.intersects(v)) return res;
        seen = seen | v;
        total += v.count();
    }
    if (total != p.num_candidates()) return res;
    res.verdict = Verdict::Holds;
    res.witness = CandidatePartition{std::move(d)};
    return res;
}

BinaryMatrix vote_matrix(const ApprovalProfile& p, bool with_complements) {
    const std::size_t n = p.num_voters(), m = p.num_candidates();
    BinaryMatrix mat(with_complements ? 2 * n : n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < m; ++c) {
            bool in = p.vote(i).test(c);
            mat.set(i, c, in);
            if (with_complements) mat.set(n + i, c, !in);
        }
    return mat;
}

BinaryMatrix approver_matrix(const ApprovalProfile& p, bool with_complements) {
    const std::size_t n = p.num_voters(), m = p.num_candidates();
    BinaryMatrix mat(with_complements ? 2 * m : m, n);
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t i = 0; i < n; ++i) {
            bool in = p.vote(i).test(c);
            mat.set(c, i, in);
            if (with_complements) mat.set(m + c, i, !in);
        }
    return mat;
}

DetectionResult detect_interval(const ApprovalProfile& p, StructureProperty prop) {
    const bool candidate_axis = prop == StructureProperty::Ci || prop == StructureProperty::Cei;
    const bool extremal_req = prop == StructureProperty::Cei || prop == StructureProperty::Vei;
    BinaryMatrix mat = candidate_axis ? vote_matrix(p, extremal_req)
                                      : approver_matrix(p, extremal_req);
    DetectionResult res{prop, Verdict::Fails, {}, "consecutive-ones"};
    auto order = c1p_column_order(mat);
    if (!order) return res;
    res.verdict = Verdict::Holds;
    if (candidate_axis)
        res.witness = CandidateOrder{canonical_order(*order)};
    else
        res.witness = VoterOrder{canonical_order(*order)};
    return res;
}

}  // namespace

const char* property_name(StructureProperty p) {
    switch (p) {
        case StructureProperty::TwoPart: return "2part";
        case StructureProperty::Part: return "part";
        case StructureProperty::Vei: return "vei";
        case StructureProperty::Vi: return "vi";
        case StructureProperty::Cei: return "cei";
        case StructureProperty::Ci: return "ci";
        case StructureProperty::Wsc: return "wsc";
        case StructureProperty::Ssc: return "ssc";
        case StructureProperty::Psc: return "psc";
        case StructureProperty::Psp: return "psp";
        case StructureProperty::Pe: return "pe";
        case StructureProperty::De: return "de";
        case StructureProperty::Due: return "due";
    }
    return "?";
}

std::optional<StructureProperty> property_from_name(const std::string& name) {
    for (auto p : all_properties())
        if (name == property_name(p)) return p;
    return std::nullopt;
}

std::vector<StructureProperty> all_properties() {
    return {StructureProperty::TwoPart, StructureProperty::Part, StructureProperty::Vei,
            StructureProperty::Vi,      StructureProperty::Cei,  StructureProperty::Ci,
            StructureProperty::Wsc,     StructureProperty::Ssc,  StructureProperty::Psc,
            StructureProperty::Psp,     StructureProperty::Pe,   StructureProperty::De,
            StructureProperty::Due};
}

std::optional<WscCharacterization> wsc_characterize(const ApprovalProfile& p) {
    const std::size_t m = p.num_candidates();

    std::vector<CandSet> nontrivial;  // distinct non-trivial votes, first occurrence
    bool trivial_present = false, empty_present = false, full_present = false;
    for (const auto& v : p.votes()) {
        if (is_trivial_vote(v)) {
            trivial_present = true;
            empty_present |= v.empty();
            full_present |= v.is_full();
            continue;
        }
        bool seen = false;
        for (const auto& d : nontrivial)
            if (d == v) {
                seen = true;
                break;
            }
        if (!seen) nontrivial.push_back(v);
    }

    CandSet u, w;
    auto middle = WscTriple::Middle::Absent;

    if (nontrivial.size() > 3) return std::nullopt;
    if (nontrivial.size() == 3) {
        if (trivial_present) return std::nullopt;  // four weak-order classes
        bool found = false;
        for (std::size_t mid = 0; mid < 3 && !found; ++mid) {
            std::size_t x = mid == 0 ? 1 : 0;
            std::size_t y = mid == 2 ? 1 : 2;
            const CandSet& cu = nontrivial[x];
            const CandSet& cw = nontrivial[y];
            if (nontrivial[mid] == (cu & cw)) {
                u = cu;
                w = cw;
                middle = WscTriple::Middle::Intersection;
                found = true;
            } else if (nontrivial[mid] == (cu | cw)) {
                u = cu;
                w = cw;
                middle = WscTriple::Middle::Union;
                found = true;
            }
        }
        if (!found) return std::nullopt;
    } else if (nontrivial.size() == 2) {
        u = nontrivial[0];
        w = nontrivial[1];
        if (trivial_present) {
            // the trivial class must act as the middle: its (empty) weak
            // order has to match u∩w or u∪w; when both match, full votes
            // want the union reading (they are u∪w as sets)
            if (full_present && (u | w).is_full())
                middle = WscTriple::Middle::Union;
            else if ((u & w).empty())
                middle = WscTriple::Middle::Intersection;
            else if ((u | w).is_full())
                middle = WscTriple::Middle::Union;
            else
                return std::nullopt;
        }
    } else if (nontrivial.size() == 1) {
        u = nontrivial[0];
        if (trivial_present)
            w = empty_present ? CandSet(m) : CandSet::full(m);
        else
            w = u;
    } else {
        u = w = empty_present ? CandSet(m) : CandSet::full(m);
    }

    WscCharacterization out;
    out.triple.u = u;
    out.triple.w = w;
    out.triple.middle_kind = middle;
    out.triple.both = u & w;
    out.triple.only_u = u - w;
    out.triple.only_w = w - u;
    out.triple.neither = (u | w).complement();

    std::vector<int> ublock, mblock, wblock;
    for (std::size_t i = 0; i < p.num_voters(); ++i) {
        if (p.vote(i) == u)
            ublock.push_back(static_cast<int>(i));
        else if (p.vote(i) == w)
            wblock.push_back(static_cast<int>(i));
        else
            mblock.push_back(static_cast<int>(i));
    }
    out.voter_order = ublock;
    out.voter_order.insert(out.voter_order.end(), mblock.begin(), mblock.end());
    out.voter_order.insert(out.voter_order.end(), wblock.begin(), wblock.end());
    return out;
}

SscSearchResult detect_ssc_exhaustive(const ApprovalProfile& p, std::size_t class_limit) {
    SscSearchResult result;

    std::vector<CandSet> classes;
    std::vector<std::vector<int>> members;
    for (std::size_t i = 0; i < p.num_voters(); ++i) {
        bool found = false;
        for (std::size_t c = 0; c < classes.size(); ++c)
            if (classes[c] == p.vote(i)) {
                members[c].push_back(static_cast<int>(i));
                found = true;
                break;
            }
        if (!found) {
            classes.push_back(p.vote(i));
            members.push_back({static_cast<int>(i)});
        }
    }
    if (classes.size() > class_limit) {
        result.verdict = Verdict::Unknown;
        return result;
    }

    const std::size_t m = p.num_candidates();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) pairs.emplace_back(a, b);

    std::vector<int> perm(classes.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (perm.size() > 1 && perm.front() > perm.back()) continue;  // reversal symmetry
        bool ok = true;
        for (auto [a, b] : pairs) {
            int max1 = -1, min1 = static_cast<int>(perm.size());
            int max2 = -1, min2 = static_cast<int>(perm.size());
            for (std::size_t posn = 0; posn < perm.size(); ++posn) {
                const CandSet& v = classes[static_cast<std::size_t>(perm[posn])];
                bool ia = v.test(a), ib = v.test(b);
                if (ia && !ib) {
                    max1 = std::max(max1, static_cast<int>(posn));
                    min1 = std::min(min1, static_cast<int>(posn));
                } else if (!ia && ib) {
                    max2 = std::max(max2, static_cast<int>(posn));
                    min2 = std::min(min2, static_cast<int>(posn));
                }
            }
            if (max1 >= 0 && max2 >= 0 && !(max1 < min2 || max2 < min1)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<int> order;
            for (int cls : perm)
                for (int voter : members[static_cast<std::size_t>(cls)]) order.push_back(voter);
            result.verdict = Verdict::Holds;
            result.order = canonical_order(std::move(order));
            return result;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    result.verdict = Verdict::Fails;
    return result;
}

DetectionResult detect(const ApprovalProfile& p, StructureProperty prop,
                       const DetectOptions& opts) {
    switch (prop) {
        case StructureProperty::TwoPart:
            return detect_two_part(p);
        case StructureProperty::Part:
            return detect_part(p);
        case StructureProperty::Ci:
        case StructureProperty::Cei:
        case StructureProperty::Vi:
        case StructureProperty::Vei:
            return detect_interval(p, prop);
        case StructureProperty::Wsc: {
            DetectionResult res{prop, Verdict::Fails, {}, "wsc-characterization"};
            if (auto ch = wsc_characterize(p)) {
                res.verdict = Verdict::Holds;
                res.witness = VoterOrder{canonical_order(ch->voter_order)};
            }
            return res;
        }
        case StructureProperty::Ssc:
        case StructureProperty::Psc: {
            DetectionResult res{prop, Verdict::Unknown, {},
                                prop == StructureProperty::Psc ? "alias:ssc exhaustive"
                                                               : "exhaustive"};
            auto found = detect_ssc_exhaustive(p, opts.ssc_class_limit);
            res.verdict = found.verdict;
            if (found.order) res.witness = VoterOrder{*found.order};
            return res;
        }
        case StructureProperty::Psp:
        case StructureProperty::Pe:
        case StructureProperty::De: {
            DetectionResult res = detect_interval(p, StructureProperty::Ci);
            res.property = prop;
            res.method = "alias:ci";
            return res;
        }
        case StructureProperty::Due:
            throw UnsupportedPropertyError("DUE recognition is not supported");
    }
    throw std::invalid_argument("detect: unknown property");
}

bool verify_witness(const ApprovalProfile& p, StructureProperty prop, const Witness& w) {
    switch (prop) {
        case StructureProperty::Vi:
        case StructureProperty::Vei:
            if (auto* vo = std::get_if<VoterOrder>(&w))
                return verify_vi_order(p, vo->order, prop == StructureProperty::Vei);
            throw std::invalid_argument("witness: expected a voter order");
        case StructureProperty::Ssc:
        case StructureProperty::Psc:
            if (auto* vo = std::get_if<VoterOrder>(&w)) return verify_ssc_order(p, vo->order);
            throw std::invalid_argument("witness: expected a voter order");
        case StructureProperty::Wsc:
            if (auto* vo = std::get_if<VoterOrder>(&w)) return verify_wsc_order(p, vo->order);
            throw std::invalid_argument("witness: expected a voter order");
        case StructureProperty::Ci:
        case StructureProperty::Cei:
            if (auto* co = std::get_if<CandidateOrder>(&w))
                return verify_ci_order(p, co->order, prop == StructureProperty::Cei);
            throw std::invalid_argument("witness: expected a candidate order");
        case StructureProperty::Psp:
        case StructureProperty::Pe:
            if (auto* co = std::get_if<CandidateOrder>(&w))
                return verify_ci_order(p, co->order, false);
            throw std::invalid_argument("witness: expected a candidate order");
        case StructureProperty::De:
            if (auto* co = std::get_if<CandidateOrder>(&w))
                return verify_ci_order(p, co->order, false);
            if (auto* e = std::get_if<EuclideanEmbedding>(&w))
                return verify_embedding(p, *e, /*uniform=*/false);
            throw std::invalid_argument("witness: expected a candidate order or embedding");
        case StructureProperty::Due:
            if (auto* e = std::get_if<EuclideanEmbedding>(&w))
                return verify_embedding(p, *e, /*uniform=*/true);
            throw std::invalid_argument("witness: expected an embedding");
        case StructureProperty::Part:
            if (auto* pa = std::get_if<CandidatePartition>(&w))
                return verify_partition(p, pa->parts, /*allow_empty_parts=*/false);
            throw std::invalid_argument("witness: expected a partition");
        case StructureProperty::TwoPart:
            if (auto* pa = std::get_if<CandidatePartition>(&w))
                return pa->parts.size() == 2 &&
                       verify_partition(p, pa->parts, /*allow_empty_parts=*/true);
            throw std::invalid_argument("witness: expected a partition");
    }
    throw std::invalid_argument("verify_witness: unknown property");
}

namespace {

EuclideanEmbedding embed_cei(const ApprovalProfile& p, const std::vector<int>& axis) {
    const long long m = static_cast<long long>(p.num_candidates());
    EuclideanEmbedding e;
    e.candidate_pos.resize(p.num_candidates());
    for (long long i = 0; i < m; ++i)
        e.candidate_pos[static_cast<std::size_t>(axis[static_cast<std::size_t>(i)])] =
            Rational(i + 1);
    e.uniform_radius = Rational(m);
    auto pos = positions_from_order(axis);
    for (const auto& v : p.votes()) {
        if (v.empty()) {
            e.voter_pos.push_back(Rational(3 * m + 10));
            continue;
        }
        Span s = span_of(v, pos);
        if (s.lo == 0) {
            // prefix of length hi+1, voter sits left of the axis
            e.voter_pos.push_back(Rational(s.hi + 1 - m));
        } else {
            // suffix starting at lo (1-based lo+1), voter sits right
            e.voter_pos.push_back(Rational(s.lo + 1 + m));
        }
    }
    return e;
}

EuclideanEmbedding embed_vei(const ApprovalProfile& p, const std::vector<int>& order) {
    const long long n = static_cast<long long>(p.num_voters());
    EuclideanEmbedding e;
    e.voter_pos.resize(p.num_voters());
    for (long long i = 0; i < n; ++i)
        e.voter_pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] =
            Rational(i + 1);
    e.uniform_radius = Rational(n);
    auto pos = positions_from_order(order);
    for (std::size_t c = 0; c < p.num_candidates(); ++c) {
        Span s = span_of(approvers_of(p, c), pos);
        if (s.count == 0) {
            e.candidate_pos.push_back(Rational(3 * n + 10));
        } else if (s.lo == 0) {
            e.candidate_pos.push_back(Rational(s.hi + 1 - n));
        } else {
            e.candidate_pos.push_back(Rational(s.lo + 1 + n));
        }
    }
    return e;
}

EuclideanEmbedding embed_wsc(const ApprovalProfile& p) {
    auto ch = wsc_characterize(p);
    if (!ch) throw std::invalid_argument("embed: profile is not WSC");
    const auto& t = ch->triple;

    bool full_vote = false;
    for (const auto& v : p.votes()) full_vote |= v.is_full();

    // Blocks sit at small rational positions; a full vote forces the
    // otherwise-faraway "approved by nobody among u,w" block to move near.
    const bool near_neither = full_vote && !t.neither.empty();
    if (near_neither && !t.both.empty())
        throw std::logic_error("embed: inconsistent WSC characterization");

    Rational p_only_u(1), p_both(5, 2), p_only_w(4);
    Rational p_neither = near_neither ? Rational(5, 2) : Rational(10);
    Rational radius(1);
    if (t.middle_kind == WscTriple::Middle::Union) radius = Rational(2);
    if (near_neither && !t.only_u.empty() && !t.only_w.empty()) radius = Rational(2);

    EuclideanEmbedding e;
    e.uniform_radius = radius;
    e.candidate_pos.resize(p.num_candidates());
    std::vector<std::pair<const CandSet*, Rational>> blocks = {
        {&t.only_u, p_only_u}, {&t.both, p_both}, {&t.only_w, p_only_w}, {&t.neither, p_neither}};
    for (auto& [set, at] : blocks)
        for (std::size_t c = 0; c < p.num_candidates(); ++c)
            if (set->test(c)) e.candidate_pos[c] = at;

    // probe a small grid of rational positions for each voter
    std::vector<Rational> probes;
    for (long long num : {-10, -5, -4, -2, -1, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 20, 40})
        probes.push_back(Rational(num, 2));  // halves
    for (long long num : {3, 7, 13}) probes.push_back(Rational(num, 4));  // quarters

    for (const auto& v : p.votes()) {
        bool placed = false;
        for (const auto& x : probes) {
            bool ok = true;
            for (std::size_t c = 0; c < p.num_candidates() && ok; ++c) {
                bool within = !(radius < abs_diff(x, e.candidate_pos[c]));
                ok = within == v.test(c);
            }
            if (ok) {
                e.voter_pos.push_back(x);
                placed = true;
                break;
            }
        }
        if (!placed) throw std::logic_error("embed: no position found for WSC voter");
    }
    return e;
}

EuclideanEmbedding embed_part(const ApprovalProfile& p, const std::vector<CandSet>& parts) {
    Rational radius(0);
    for (const auto& part : parts) {
        Rational half(static_cast<long long>(part.count()) - 1, 2);
        if (radius < half) radius = half;
    }
    Rational gap = radius * Rational(2) + Rational(1);

    EuclideanEmbedding e;
    e.uniform_radius = radius;
    e.candidate_pos.resize(p.num_candidates());
    std::vector<Rational> centers(parts.size());
    Rational start(0);
    for (std::size_t j = 0; j < parts.size(); ++j) {
        auto membs = parts[j].members();
        for (std::size_t i = 0; i < membs.size(); ++i)
            e.candidate_pos[static_cast<std::size_t>(membs[i])] =
                start + Rational(static_cast<long long>(i));
        centers[j] = start + Rational(static_cast<long long>(membs.size()) - 1, 2);
        start = start + Rational(static_cast<long long>(membs.size())) + gap;
    }
    for (const auto& v : p.votes()) {
        bool found = false;
        for (std::size_t j = 0; j < parts.size(); ++j)
            if (v == parts[j]) {
                e.voter_pos.push_back(centers[j]);
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("embed: vote is not one of the parts");
    }
    return e;
}

EuclideanEmbedding embed_ci(const ApprovalProfile& p, const std::vector<int>& axis) {
    EuclideanEmbedding e;
    e.candidate_pos.resize(p.num_candidates());
    for (std::size_t i = 0; i < axis.size(); ++i)
        e.candidate_pos[static_cast<std::size_t>(axis[i])] =
            Rational(static_cast<long long>(i) + 1);
    auto pos = positions_from_order(axis);
    for (const auto& v : p.votes()) {
        if (v.empty()) {
            e.voter_pos.push_back(Rational(static_cast<long long>(p.num_candidates()) + 2));
            e.voter_radii.push_back(Rational(0));
            continue;
        }
        Span s = span_of(v, pos);
        e.voter_pos.push_back(Rational(s.lo + s.hi + 2, 2));
        e.voter_radii.push_back(Rational(s.hi - s.lo, 2));
    }
    return e;
}

}  // namespace

EuclideanEmbedding embed_from_witness(const ApprovalProfile& p, StructureProperty prop,
                                      const Witness& w) {
    if (!verify_witness(p, prop, w)) throw std::invalid_argument("embed: invalid witness");
    switch (prop) {
        case StructureProperty::Cei:
            return embed_cei(p, std::get<CandidateOrder>(w).order);
        case StructureProperty::Vei:
            return embed_vei(p, std::get<VoterOrder>(w).order);
        case StructureProperty::Wsc:
            return embed_wsc(p);
        case StructureProperty::Part:
            return embed_part(p, std::get<CandidatePartition>(w).parts);
        case StructureProperty::Ci:
            return embed_ci(p, std::get<CandidateOrder>(w).order);
        default:
            throw std::invalid_argument("embed: unsupported property");
    }
}

std::vector<std::vector<int>> enumerate_witness_orders(const ApprovalProfile& p,
                                                       StructureProperty prop,
                                                       std::size_t limit) {
    const bool voter_axis = prop == StructureProperty::Vei || prop == StructureProperty::Vi;
    const bool candidate_axis = prop == StructureProperty::Cei || prop == StructureProperty::Ci;
    if (!voter_axis && !candidate_axis)
        throw std::invalid_argument("enumerate_witness_orders: property has no order witness");
    const std::size_t n = voter_axis ? p.num_voters() : p.num_candidates();
    if (n > limit) throw std::invalid_argument("enumerate_witness_orders: size over limit");

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> found;
    do {
        Witness w;
        if (voter_axis)
            w = VoterOrder{perm};
        else
            w = CandidateOrder{perm};
        if (verify_witness(p, prop, w)) found.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

}  // namespace apd
