#pragma once

#include <vector>

#include "prlab/module.hpp"

namespace prlab {

/// All submodules in canonical order (size, then canonical generators).
std::vector<Submodule> submodules(const ModulePtr& m);
/// Submodules invariant under every endomorphism, in canonical order.
std::vector<Submodule> fully_invariant_submodules(const ModulePtr& m);
bool is_fully_invariant(const Submodule& s);

/// N is essential in its parent: it meets every nonzero submodule.
bool is_essential(const Submodule& n);
bool is_simple(const ModulePtr& m);

Submodule socle(const ModulePtr& m);
/// Intersection of the maximal submodules, computed as J(R) M.
Submodule jacobson(const ModulePtr& m);
/// Elements whose annihilator is an essential left ideal.
Submodule singular(const ModulePtr& m);

/// Jacobson radical of the ring as an element set.
ElementSet ring_jacobson(const FiniteRing& r);
/// Maximal proper submodules (by definition, from the full lattice).
std::vector<Submodule> maximal_submodules(const ModulePtr& m);

}  // namespace prlab
