#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "prlab/constructions.hpp"
#include "prlab/module.hpp"

namespace prlab {

struct ClosurePolicy {
  /// Direct sums are formed while the total number of indecomposable summands stays <= sum_bound.
  std::size_t sum_bound = 2;
  std::size_t max_module_size = kDefaultMaxModuleSize;
  bool submodules = true;
  bool quotients = true;
  bool injective_hulls = true;
  bool direct_sums = true;
};

struct ClosureCertificate {
  bool has_zero_and_regular = false;
  bool pairwise_non_isomorphic = false;
  bool submodules = false;
  bool quotients = false;
  bool injective_hulls = false;
  bool direct_sums = false;
  friend bool operator==(const ClosureCertificate&, const ClosureCertificate&) = default;
};

inline constexpr std::size_t kNoRep = std::numeric_limits<std::size_t>::max();

/// A submodule of a representative together with the classification of the
/// submodule and of the quotient by it.
struct SubEntry {
  Submodule sub;
  std::size_t sub_rep = kNoRep;
  ModuleHom incl;  // reps[sub_rep] -> M with image sub
  std::size_t quot_rep = kNoRep;
  ModuleHom proj;  // M -> reps[quot_rep] with kernel sub
};

struct HullEntry {
  std::size_t rep = kNoRep;
  ModuleHom embed;  // M -> reps[rep]
};

struct Classification {
  std::size_t rep;
  ModuleHom iso;  // m -> reps[rep]
};

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;

/// A finite set of pairwise non-isomorphic representatives with cached
/// hom groups, submodule lattices and hulls. All preradical semantics are
/// relative to a universe.
class Universe {
 public:
  /// Least closure of {0, R} and the seeds under the enabled constructions.
  /// Throws BudgetExceeded naming the construction that left the size cap.
  static UniversePtr build(RingPtr ring, const std::vector<ModulePtr>& seeds, ClosurePolicy policy = {});
  /// Uses the given representatives in the given order; no closure is performed.
  static UniversePtr from_reps(RingPtr ring, std::vector<ModulePtr> reps, ClosurePolicy policy);

  const FiniteRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const ClosurePolicy& policy() const { return policy_; }
  std::size_t size() const { return reps_.size(); }
  const std::vector<ModulePtr>& reps() const { return reps_; }
  const ModulePtr& rep(std::size_t i) const { return reps_.at(i); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  /// Rep index for a label, "R" or "0"; kNoRep when unknown.
  std::size_t find_label(const std::string& label) const;
  std::size_t zero_index() const { return zero_; }
  std::size_t regular_index() const { return regular_; }
  /// Number of indecomposable summands of rep i.
  std::size_t indecomposables(std::size_t i) const { return ind_.at(i); }

  const HomGroup& homs(std::size_t from, std::size_t to) const { return homs_.at(from * size() + to); }
  /// Submodules of rep i in canonical order.
  const std::vector<SubEntry>& subs(std::size_t i) const { return subs_.at(i); }
  std::size_t sub_index(std::size_t i, const Submodule& s) const;
  const SubEntry& entry(std::size_t i, const Submodule& s) const { return subs(i)[sub_index(i, s)]; }
  /// Indices into subs(i) of the fully invariant submodules.
  const std::vector<std::size_t>& fully_invariant(std::size_t i) const { return fi_.at(i); }
  /// Hull of rep i; absent when hulls are not part of the closure.
  const std::optional<HullEntry>& hull(std::size_t i) const { return hulls_.at(i); }

  /// Throws NotInUniverse when no rep is isomorphic to m.
  Classification classify(const ModulePtr& m) const;
  std::optional<Classification> try_classify(const ModulePtr& m) const;

  const ClosureCertificate& certificate() const { return certificate_; }
  /// Recomputes every closure property from scratch.
  ClosureCertificate verify() const;

 private:
  Universe() = default;
  void build_caches();
  void assign_labels();

  RingPtr ring_;
  ClosurePolicy policy_;
  std::vector<ModulePtr> reps_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> fingerprint_;
  std::vector<std::size_t> ind_;
  std::size_t zero_ = kNoRep;
  std::size_t regular_ = kNoRep;
  std::vector<HomGroup> homs_;
  std::vector<std::vector<SubEntry>> subs_;
  std::vector<std::vector<std::size_t>> fi_;
  std::vector<std::optional<HullEntry>> hulls_;
  ClosureCertificate certificate_;
};

/// Fingerprint used to bucket modules before an isomorphism search:
/// invariant factors followed by |{x : r x = 0}| for every ring element r.
std::vector<std::size_t> module_fingerprint(const FinModule& m);

}  // namespace prlab
