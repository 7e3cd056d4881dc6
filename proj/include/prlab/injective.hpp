#pragma once

#include <cstddef>

#include "prlab/module.hpp"

namespace prlab {

/// Hom_Z(R, Q/Z) as a left module; an injective cogenerator.
ModulePtr character_module(const RingPtr& ring);

struct InjectiveHull {
  ModulePtr module;
  ModuleHom embed;  // M -> E(M), injective with essential image
};

inline constexpr std::size_t kDefaultHullBudget = 4096;

/// Injective hull as a complement inside a power of the character module.
/// Throws BudgetExceeded when the ambient power would exceed `budget` elements.
InjectiveHull injective_hull(const ModulePtr& m, std::size_t budget = kDefaultHullBudget);

/// Baer's criterion over all left ideals.
bool is_injective(const ModulePtr& m);
/// m is k-injective: every hom from a submodule of k into m extends to k.
bool is_rel_injective(const ModulePtr& m, const ModulePtr& k);
bool is_quasi_injective(const ModulePtr& m);
/// m is fully invariant in E(m).
bool fuchs_criterion(const ModulePtr& m);

}  // namespace prlab
