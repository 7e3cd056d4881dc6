#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "prlab/preradical.hpp"
#include "prlab/report.hpp"

namespace prlab {

// Everything here is relative to the universe of the preradical; modules are
// representatives given by index and submodules live in those reps.

struct DensityCert {
  std::size_t rep = kNoRep;
  Submodule sub;
  std::size_t quot_rep = kNoRep;
  bool dense = false;
};

/// N is sigma-dense in M: sigma(M/N) = M/N.
DensityCert is_dense(const Preradical& sigma, std::size_t m, const Submodule& n);
/// N is sigma-pure in M: M/N is sigma-torsion-free.
bool is_pure(const Preradical& sigma, std::size_t m, const Submodule& n);

enum class InjectivityMode { definitional, purity, baer };

const char* to_string(InjectivityMode m);

struct InjectivityResult {
  bool holds = true;
  /// A dense pair K <= N (N a rep) with a hom K -> M that does not extend.
  std::optional<std::size_t> n_rep;
  std::optional<Submodule> k;
};

/// definitional: every hom from K into m extends along K <= N, for all dense
/// pairs of the universe. purity: m is sigma-pure in E(m). baer: the
/// definitional test with N = R only.
InjectivityResult is_sigma_injective(const Preradical& sigma, std::size_t m, InjectivityMode mode);

struct SigmaHull {
  std::size_t rep = kNoRep;
  std::size_t ambient = kNoRep;  // E(M)
  ModuleHom ambient_embed;        // M -> E(M)
  Submodule purified;             // E_sigma(M) inside E(M)
  std::size_t hull_rep = kNoRep;  // rep of E_sigma(M)
  ModuleHom embed;                // M -> reps[hull_rep]
};

SigmaHull sigma_injective_hull(const Preradical& sigma, std::size_t m);

/// First K in canonical order with N meet K = 0, N + K essential and
/// sigma-dense in M.
std::optional<Submodule> pseudocomplement(const Preradical& sigma, std::size_t m, const Submodule& n);
/// Indices into subs(m) of the submodules that admit a pseudocomplement.
std::vector<std::size_t> subp(const Preradical& sigma, std::size_t m);

/// Torsion-free and sigma-injective (definitional).
bool is_absolutely_pure(const Preradical& sigma, std::size_t m);
/// Every hom from K into M extends uniquely along every dense pair K <= N.
bool unique_extension_check(const Preradical& sigma, std::size_t m);

struct Localization {
  std::size_t rep = kNoRep;
  std::size_t q_rep = kNoRep;  // Q(M) = E_sigma(M / sigma(M))
  ModuleHom eta;               // M -> reps[q_rep]
};

Localization localize(const Preradical& sigma, std::size_t m);

/// Q(f) for f: M -> N: the homs Q(M) -> Q(N) with g eta_M = eta_N f.
std::vector<ModuleHom> localize_hom(const Preradical& sigma, const ModuleHom& f, std::size_t m, std::size_t n);

/// Evaluates the localization statements relative to the universe.
CheckReport localization_report(const Preradical& sigma);

}  // namespace prlab
