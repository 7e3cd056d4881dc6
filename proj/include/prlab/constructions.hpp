#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "prlab/module.hpp"

namespace prlab {

/// A submodule realized as a module in invariant-factor coordinates.
struct SubmoduleModule {
  ModulePtr module;
  ModuleHom incl;  // module -> parent
};

struct QuotientModule {
  ModulePtr module;
  ModuleHom proj;  // parent -> module
};

struct DirectSum {
  ModulePtr module;
  std::vector<ModuleHom> inj;
  std::vector<ModuleHom> proj;
};

SubmoduleModule submodule_as_module(const Submodule& s);
QuotientModule quotient(const Submodule& s);
/// Biproduct of the parts, re-coordinatized to invariant factors.
DirectSum direct_sum(const std::vector<ModulePtr>& parts);
/// The same module with its additive group in divisibility-chain form.
SubmoduleModule normalize_module(const ModulePtr& m);

/// Calls f on every hom a -> b; stops early when f returns false.
void for_each_hom(const ModulePtr& a, const ModulePtr& b, const std::function<bool(const ModuleHom&)>& f);
std::vector<ModuleHom> hom_set(const ModulePtr& a, const ModulePtr& b);
std::size_t hom_count(const ModulePtr& a, const ModulePtr& b);

/// Hom(a, b) as an abelian group: its order and an additive generating set.
struct HomGroup {
  std::size_t count = 0;
  std::vector<ModuleHom> gens;
};
HomGroup hom_group(const ModulePtr& a, const ModulePtr& b);
/// Order of the subgroup of Hom(a, b) generated by `gens`.
std::size_t hom_span_size(const ModulePtr& a, const ModulePtr& b, const std::vector<ModuleHom>& gens);

/// Splits m into indecomposable summands using idempotent endomorphisms.
/// Summands are returned as modules in canonical order of discovery.
std::vector<ModulePtr> decompose(const ModulePtr& m);

std::optional<ModuleHom> find_isomorphism(const ModulePtr& a, const ModulePtr& b);
bool is_isomorphic(const ModulePtr& a, const ModulePtr& b);

}  // namespace prlab
