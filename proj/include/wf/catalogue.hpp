#pragma once

#include <string>
#include <vector>

#include "wf/floerblocks.hpp"
#include "wf/onesets.hpp"
#include "wf/webgraph.hpp"

namespace wf {

enum class Family {
  Unknot,
  Unlink,
  Theta,
  ThetaPlusUnknot,
  Tetrahedron,
  Prism,
  Handcuff,
  TwistedHandcuff,
  HopfHandcuff,
  BraidClosure,
  PetersenEmbedding,
  Unknown
};

struct FamilyId {
  Family family = Family::Unknown;
  int n = 0;  // component count (unlink), prism size, or braid strands
  bool operator==(const FamilyId&) const = default;
};

std::string family_name(const FamilyId& f);

// Structural recognition; spatial tags may refine (handcuff embeddings,
// braid closures) but never override structure. Throws
// std::invalid_argument on a tag/structure contradiction.
FamilyId recognize(const WebGraph& web);

// Structural type of a 1-set within its family.
enum class OneSetType {
  RungMatching,   // c-edges form a matching leaving two equal r-cycles
  RingType,       // single r-cycle
  Other
};
OneSetType classify_oneset(const WebGraph& web, const OneSet& s);

struct HomologyAnswer {
  std::string flavour;         // check | hat | bar | tilde | reduced
  bool known = false;          // false: not tabulated, nothing fabricated
  bool zero = false;
  GradedModule total;          // total over contributing spin-c classes
  int spinc_count = 0;         // tabulated class count
  int naive_spinc_count = 0;   // 2^(#c-components) from the cover shadow
  bool discrepancy = false;    // tabulated and naive counts disagree
  std::string total_rank;      // "0", "2", ... or "infinite (tower)"
  std::string provenance;      // quoted tabulated answer
};

// The tabulated Floer group for a recognized family and 1-set.
HomologyAnswer homology(const WebGraph& web, const OneSet& s,
                        const std::string& flavour);

struct FramedRankResult {
  long long value = 0;
  std::string note;  // nonempty when the value is vacuous or not tabulated
};

// Rank of the framed (cone) homology based at an edge, by summation over
// based 1-sets: for each, the spin-c multiplicity from the cover shadow
// (or one representative per 1-set when restricted) times the rank of the
// mapping cone of the basepoint dot operator on the tabulated tower
// module. Only tower-model families (unlinks, theta ⊔ unknot) are
// supported.
FramedRankResult framed_rank(const WebGraph& web,
                             const std::string& basepoint_edge,
                             bool restrict_spinc = false);

enum class VanishingRule { Bridge, ThreePoint, PscOdd, Excision, None };

struct VanishingVerdict {
  enum class V { Zero, Nonzero, Unknown } verdict = V::Unknown;
  VanishingRule rule = VanishingRule::None;
  int total_rank = -1;  // >= 0 only for Nonzero verdicts with known rank
};

VanishingVerdict vanishing_check(const WebGraph& web, const OneSet& s);

}  // namespace wf
