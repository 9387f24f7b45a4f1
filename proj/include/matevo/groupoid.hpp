#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matevo/errors.hpp"
#include "matevo/groups.hpp"

namespace matevo::groupoid {

using ObjectId = int;
using ArrowId = int;
inline constexpr ArrowId kUndefined = -1;

struct Arrow {
  ObjectId src;
  ObjectId tgt;
};

// ---------------------------------------------------------------------------
// FiniteGroupoid
//
// Exact composition-table groupoid. Composition follows the convention
// source(g*h) = source(h), target(g*h) = target(g): g*h means "h then g".
// Construction checks index consistency only; axioms are the job of
// validate_groupoid.
// ---------------------------------------------------------------------------
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;
  FiniteGroupoid(std::vector<std::string> object_names,
                 std::vector<std::string> arrow_names,
                 std::vector<Arrow> arrows, std::vector<ArrowId> identity,
                 std::vector<ArrowId> inverse,
                 std::vector<ArrowId> compose_table);

  int object_count() const { return static_cast<int>(object_names_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  const std::string& object_name(ObjectId x) const { return object_names_[x]; }
  const std::string& arrow_name(ArrowId g) const { return arrow_names_[g]; }
  ObjectId source(ArrowId g) const { return arrows_[g].src; }
  ObjectId target(ArrowId g) const { return arrows_[g].tgt; }
  ArrowId identity(ObjectId x) const { return identity_[x]; }
  ArrowId inverse(ArrowId g) const { return inverse_[g]; }
  ArrowId compose(ArrowId g, ArrowId h) const {
    return compose_[static_cast<std::size_t>(g) * arrows_.size() + h];
  }

  /// -1 when the name is unknown.
  ObjectId object_index(const std::string& name) const;
  ArrowId arrow_index(const std::string& name) const;

  const std::vector<ArrowId>& arrows_by_source(ObjectId x) const {
    return by_source_[x];
  }
  const std::vector<ArrowId>& arrows_by_target(ObjectId x) const {
    return by_target_[x];
  }

 private:
  std::vector<std::string> object_names_;
  std::vector<std::string> arrow_names_;
  std::vector<Arrow> arrows_;
  std::vector<ArrowId> identity_;
  std::vector<ArrowId> inverse_;
  std::vector<ArrowId> compose_;  // arrow_count^2, kUndefined where undefined
  std::vector<std::vector<ArrowId>> by_source_;
  std::vector<std::vector<ArrowId>> by_target_;
};

/// Subset structure over a parent groupoid: a base of objects and a set of
/// arrows, both sorted.
struct FiniteSubgroupoid {
  std::vector<ObjectId> base;
  std::vector<ArrowId> arrows;
};

struct Violation {
  std::string family;  // compose-domain | compose-endpoints | associativity
                       // | identity | inverse | structure
  std::string detail;
};

struct ValidationResult {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the groupoid axioms on every applicable tuple; records the first
/// violating tuple per axiom family.
ValidationResult validate_groupoid(const FiniteGroupoid& g);

/// Subgroupoid validity: base covers all endpoints, identities of the base
/// are present, arrows closed under composition and inverse.
ValidationResult validate_subgroupoid(const FiniteGroupoid& g,
                                      const FiniteSubgroupoid& h);

/// Partition of the objects into orbits (blocks sorted, lexicographic by
/// first member).
std::vector<std::vector<ObjectId>> orbits(const FiniteGroupoid& g);

/// Arrows with source(g) = target(g) = x. Throws ConfigError for unknown x.
std::vector<ArrowId> isotropy_group(const FiniteGroupoid& g, ObjectId x);

bool is_transitive(const FiniteGroupoid& g);

/// Isotropy of a subgroupoid at x (ids into the parent).
std::vector<ArrowId> sub_isotropy(const FiniteGroupoid& g,
                                  const FiniteSubgroupoid& h, ObjectId x);

struct ConjugationWitness {
  ArrowId g = kUndefined;
  ArrowId h = kUndefined;
  ArrowId conjugate = kUndefined;
};

/// True iff g*h*g^-1 stays in h for every g in the parent and every h in the
/// subgroupoid's isotropy at source(g). On failure the first witness triple
/// is reported.
bool is_normal_subgroupoid(const FiniteGroupoid& g, const FiniteSubgroupoid& h,
                           ConjugationWitness* witness = nullptr);

/// Largest subgroupoid of g in which h is normal, computed in the equality
/// form: an arrow a belongs to it iff conjugation by a maps the isotropy of
/// h at source(a) onto the isotropy of h at target(a). Requires the base of
/// h to be all objects of g.
FiniteSubgroupoid normalizoid(const FiniteGroupoid& g,
                              const FiniteSubgroupoid& h);

/// Brute-force verifier for the transitive-subgroupoid normality criterion:
/// every isotropy group of h is a normal subgroup of the matching isotropy
/// group of g.
bool all_isotropy_normal(const FiniteGroupoid& g, const FiniteSubgroupoid& h);

/// { a in g(x,x) : a * h(x,x) * a^-1 = h(x,x) }, the group-theoretic
/// normalizer computed by exhaustive conjugation. Sorted.
std::vector<ArrowId> isotropy_normalizer(const FiniteGroupoid& g,
                                         const FiniteSubgroupoid& h,
                                         ObjectId x);

/// Standalone groupoid carved out of a subgroupoid, with the id mapping
/// back to the parent.
struct ExtractedGroupoid {
  FiniteGroupoid groupoid;
  std::vector<ArrowId> to_parent;    // new id -> parent id
  std::vector<ArrowId> from_parent;  // parent id -> new id or kUndefined
  std::vector<ObjectId> object_to_parent;
};

ExtractedGroupoid extract_groupoid(const FiniteGroupoid& parent,
                                   const FiniteSubgroupoid& sub);

/// Translate a subgroupoid expressed in parent ids into the extracted
/// groupoid's ids. Throws ConfigError if an arrow is missing there.
FiniteSubgroupoid map_into_extracted(const ExtractedGroupoid& extracted,
                                     const FiniteSubgroupoid& sub);

// --- constructors ---------------------------------------------------------

FiniteGroupoid pair_groupoid(const std::vector<std::string>& objects);

FiniteGroupoid trivial_groupoid(const std::vector<std::string>& objects,
                                const FiniteGroup& group);

/// Arrow id layout used by trivial_groupoid.
inline ArrowId trivial_arrow_id(int object_count, int group_order, int src,
                                int tgt, int elem) {
  return (src * object_count + tgt) * group_order + elem;
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

/// Smallest subgroupoid containing the seed arrows; identities for every
/// object are always included, so the base is the full object set.
FiniteSubgroupoid closure(const FiniteGroupoid& g,
                          const std::vector<ArrowId>& seeds);

FiniteSubgroupoid full_subgroupoid(const FiniteGroupoid& g);

// --- seeded random pairs for brute-force verification ----------------------

struct RandomPair {
  FiniteGroupoid groupoid;   // trivial groupoid over a group of order <= 8
  FiniteSubgroupoid sub;     // transitive over the full base
  std::string description;
};

/// Deterministic generator: trivial groupoid X x X x G (|X| <= 5, |G| <= 8)
/// plus a transitive subgroupoid grown by closure from a random spanning
/// chain and a few extra arrows.
RandomPair random_transitive_pair(std::uint64_t seed);

/// The two-object trivial groupoid over S3 together with the subgroupoid
/// that is S3 at x, trivial at y, with no cross arrows. Its normalizoid has
/// twelve arrows and is not transitive.
RandomPair s3_counterexample();

}  // namespace matevo::groupoid
