#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "apd/candset.hpp"
#include "apd/profile.hpp"
#include "apd/rational.hpp"

namespace apd {

enum class StructureProperty {
    TwoPart,  // two complementary votes
    Part,     // votes form an exact partition of the candidates
    Vei,      // voter extremal interval
    Vi,       // voter interval
    Cei,      // candidate extremal interval
    Ci,       // candidate interval
    Wsc,      // weakly single-crossing
    Ssc,      // seemingly single-crossing
    Psc,      // possibly single-crossing (same class as SSC)
    Psp,      // possibly single-peaked (same class as CI)
    Pe,       // possibly 1-Euclidean (same class as CI)
    De,       // dichotomous Euclidean, per-voter radii (same class as CI)
    Due,      // dichotomous uniformly Euclidean
};

const char* property_name(StructureProperty p);
std::optional<StructureProperty> property_from_name(const std::string& name);
std::vector<StructureProperty> all_properties();

enum class Verdict { Holds, Fails, Unknown };

struct UnsupportedPropertyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One-dimensional embedding of voters and candidates with either one shared
// radius or one radius per voter.
struct EuclideanEmbedding {
    std::vector<Rational> voter_pos;
    std::vector<Rational> candidate_pos;
    std::optional<Rational> uniform_radius;  // set for DUE-style embeddings
    std::vector<Rational> voter_radii;       // set for DE-style embeddings

    bool uniform() const { return uniform_radius.has_value(); }
    Rational radius_for(std::size_t voter) const {
        return uniform() ? *uniform_radius : voter_radii.at(voter);
    }
};

// The three-vote structure behind weakly single-crossing profiles: extreme
// votes u and w, an optional middle whose weak order matches u∩w or u∪w, and
// the induced candidate blocks.
struct WscTriple {
    enum class Middle { Absent, Intersection, Union };

    CandSet u;
    CandSet w;
    Middle middle_kind = Middle::Absent;

    CandSet both;     // u ∩ w
    CandSet only_u;   // u \ w
    CandSet only_w;   // w \ u
    CandSet neither;  // complement of u ∪ w
};

struct WscCharacterization {
    WscTriple triple;
    std::vector<int> voter_order;  // u block, middle/trivial block, w block
};

struct VoterOrder {
    std::vector<int> order;
};
struct CandidateOrder {
    std::vector<int> order;
};
struct CandidatePartition {
    std::vector<CandSet> parts;
};

using Witness = std::variant<std::monostate, VoterOrder, CandidateOrder, WscTriple,
                             EuclideanEmbedding, CandidatePartition>;

struct DetectionResult {
    StructureProperty property;
    Verdict verdict = Verdict::Fails;
    Witness witness;
    std::string method;

    bool holds() const { return verdict == Verdict::Holds; }
};

struct DetectOptions {
    // exhaustive SSC search runs when the profile has at most this many
    // distinct votes; larger instances come back Unknown
    std::size_t ssc_class_limit = 9;
};

// Recognizes the property and returns a machine-checkable witness when it
// holds. DUE recognition is not implemented and throws
// UnsupportedPropertyError; SSC/PSC beyond the class limit report Unknown.
DetectionResult detect(const ApprovalProfile& p, StructureProperty prop,
                       const DetectOptions& opts = {});

// Literal check of the defining condition for the given witness shape.
// Accepted shapes: voter order for VI/VEI/SSC/WSC, candidate order for
// CI/CEI (and the PSP/PE/DE aliases), embedding for DUE/DE, partition for
// PART/2PART. Throws std::invalid_argument on a shape mismatch.
bool verify_witness(const ApprovalProfile& p, StructureProperty prop, const Witness& w);

std::optional<WscCharacterization> wsc_characterize(const ApprovalProfile& p);

// Builds a Euclidean embedding realizing a verified witness: CEI/VEI/WSC/PART
// yield a uniform radius, CI yields per-voter radii.
EuclideanEmbedding embed_from_witness(const ApprovalProfile& p, StructureProperty prop,
                                      const Witness& w);

struct SscSearchResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<std::vector<int>> order;
};

// Tries all voter orderings modulo reversal and duplicate votes.
SscSearchResult detect_ssc_exhaustive(const ApprovalProfile& p, std::size_t class_limit = 9);

// All orders passing verify_witness, found by exhaustive enumeration.
// Throws std::invalid_argument when the instance exceeds the limit
// (n! orders for VEI/VI, m! for CEI/CI).
std::vector<std::vector<int>> enumerate_witness_orders(const ApprovalProfile& p,
                                                       StructureProperty prop,
                                                       std::size_t limit);

}  // namespace apd
