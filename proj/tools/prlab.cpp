#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "prlab/checks.hpp"
#include "prlab/errors.hpp"
#include "prlab/expr.hpp"
#include "prlab/json_io.hpp"
#include "prlab/relative.hpp"

using namespace prlab;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string ring;
  std::string universe;
  std::vector<std::string> seeds;
  std::size_t sum_bound = 2;
  std::size_t max_size = kDefaultMaxModuleSize;
  std::string expr;
  std::string module;
  std::string sub;
  std::string filter;
  std::string mode = "definitional";
  std::string out;
  std::string format = "table";
  std::string claim;
  std::size_t budget = 5000;
  std::size_t pair_limit = 80;
};

// A command's result: the JSON document and its table rendering.
struct Output {
  Json json;
  std::string table;
  int code = kOk;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParameter("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_json(const std::string& path) {
  try {
    return parse_json(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.message, e.position);
  }
}

RingPtr load_ring(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) return ring_from_json(load_json(spec));
  return builtin_ring(spec);
}

UniversePtr load_universe(const Options& o) {
  if (!o.universe.empty()) {
    if (!o.ring.empty()) throw InvalidParameter("--ring and --universe are mutually exclusive");
    return universe_from_json(load_json(o.universe));
  }
  const RingPtr ring = load_ring(o.ring.empty() ? "z4" : o.ring);
  std::vector<ModulePtr> seeds;
  for (const auto& s : o.seeds) seeds.push_back(module_from_json(load_json(s), ring));
  ClosurePolicy p;
  p.sum_bound = o.sum_bound;
  p.max_module_size = o.max_size;
  return Universe::build(ring, seeds, p);
}

std::size_t module_index(const Universe& u, const std::string& label) {
  if (label.empty()) throw InvalidParameter("--module is required");
  const std::size_t i = u.find_label(label);
  if (i == kNoRep) throw InvalidParameter("unknown module '" + label + "'");
  return i;
}

Preradical expression(const UniversePtr& u, const Options& o) {
  if (o.expr.empty()) throw InvalidParameter("--expr is required");
  return eval_expr(u, o.expr);
}

std::string coords_text(const Shape& shape, Elem x) {
  const auto c = shape.decode(x);
  if (c.size() == 1) return std::to_string(c[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

// "<g1, g2> ~ label"
std::string sub_text(const Universe& u, std::size_t m, const Submodule& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.canon().size(); ++i)
    out += (i ? ", " : "") + coords_text(s.parent().shape(), s.canon()[i]);
  return out + "> ~ " + u.label(u.entry(m, s).sub_rep);
}

Json sub_json(const Universe& u, std::size_t m, const Submodule& s) {
  return {{"generators", to_json(s)}, {"size", s.size()}, {"iso_type", u.label(u.entry(m, s).sub_rep)}};
}

Json hom_json(const ModuleHom& f) {
  Json images = Json::array();
  for (Elem x : f.matrix()) images.push_back(f.cod().shape().decode(x));
  const bool id = f.dom_ptr() == f.cod_ptr() && f == ModuleHom::identity(f.dom_ptr());
  return {{"basis_images", images}, {"identity", id}};
}

std::string hom_text(const ModuleHom& f) {
  if (f.dom_ptr() == f.cod_ptr() && f == ModuleHom::identity(f.dom_ptr())) return "id";
  std::string s = "e_i -> [";
  const auto m = f.matrix();
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? ", " : "") + coords_text(f.cod().shape(), m[i]);
  return s + "]";
}

std::string table_text(const Preradical& p) {
  const Universe& u = p.universe();
  std::string s;
  for (std::size_t i = 0; i < u.size(); ++i) s += "  " + u.label(i) + ": " + sub_text(u, i, p.value(i)) + "\n";
  return s;
}

std::string universe_name(const Universe& u) {
  return u.ring().name() + " sum_bound=" + std::to_string(u.policy().sum_bound) + " reps=" + std::to_string(u.size());
}

std::string yes(bool b) { return b ? "yes" : "no"; }

// ------------------------------------------------------------------ ring

Output ring_define(const Options& o) {
  if (o.ring.empty()) throw InvalidParameter("--ring is required");
  const RingPtr r = load_ring(o.ring);
  std::string t = "ring " + r->name() + ": order " + std::to_string(r->size()) + ", commutative " +
                  yes(r->is_commutative()) + ", " + std::to_string(r->left_ideals().size()) + " left ideals\n";
  return {to_json(*r), t};
}

Output ring_list(const Options&) {
  Json j = Json::array();
  std::string t;
  for (const auto& [pattern, desc] : std::vector<std::pair<std::string, std::string>>{
           {"z<n>", "integers modulo n"},
           {"z<n>xz<m>", "product of two cyclic rings"},
           {"t2f<p>", "upper triangular 2x2 matrices over F_p, p prime"}}) {
    j.push_back({{"pattern", pattern}, {"description", desc}});
    t += pattern + "\t" + desc + "\n";
  }
  return {j, t};
}

// ------------------------------------------------------------------ universe

Output universe_build(const Options& o) {
  const auto u = load_universe(o);
  std::string t = universe_name(*u) + "\n";
  for (std::size_t i = 0; i < u->size(); ++i)
    t += "  " + std::to_string(i) + " " + u->label(i) + " |M|=" + std::to_string(u->rep(i)->size()) +
         " submodules=" + std::to_string(u->subs(i).size()) + "\n";
  return {to_json(*u), t};
}

Output universe_verify(const Options& o) {
  const auto u = load_universe(o);
  const ClosureCertificate c = u->verify();
  const std::vector<std::pair<std::string, bool>> flags{{"has_zero_and_regular", c.has_zero_and_regular},
                                                        {"pairwise_non_isomorphic", c.pairwise_non_isomorphic},
                                                        {"submodules", c.submodules},
                                                        {"quotients", c.quotients},
                                                        {"injective_hulls", c.injective_hulls},
                                                        {"direct_sums", c.direct_sums}};
  Json j = Json::object();
  std::string t = universe_name(*u) + "\n";
  bool all = true;
  for (const auto& [k, v] : flags) {
    j[k] = v;
    t += "  " + k + ": " + yes(v) + "\n";
    all = all && v;
  }
  return {{{"universe", universe_name(*u)}, {"closure_certificate", j}, {"closed", all}}, t, all ? kOk : kCheckFailed};
}

// ------------------------------------------------------------------ pr

Output pr_eval(const Options& o) {
  const auto u = load_universe(o);
  const auto p = expression(u, o);
  if (!o.module.empty()) {
    const std::size_t m = module_index(*u, o.module);
    return {{{"module", u->label(m)}, {"value", sub_json(*u, m, p.value(m))}},
            u->label(m) + ": " + sub_text(*u, m, p.value(m)) + "\n"};
  }
  return {to_json(p), table_text(p)};
}

Output pr_traits(const Options& o) {
  const auto u = load_universe(o);
  const auto tr = traits(expression(u, o));
  std::string t;
  for (const auto& [name, r] : tr.items()) {
    t += name + ": " + yes(r->holds);
    if (r->witness) t += "  (" + u->label(r->witness->rep) + ": " + r->witness->detail + ")";
    t += "\n";
  }
  return {to_json(tr, *u), t};
}

Output pr_closure(const Options& o) {
  const auto u = load_universe(o);
  const auto p = expression(u, o);
  Json j = Json::object();
  std::string t;
  for (const auto& [name, q] : std::vector<std::pair<std::string, Preradical>>{
           {"hat", hat(p)}, {"bar", bar(p)}, {"tilde", tilde(p)}, {"circ", circ(p)}, {"sq", square(p)}}) {
    j[name] = to_json(q)["values"];
    t += name + ":\n" + table_text(q);
  }
  return {j, t};
}

// ------------------------------------------------------------------ filters

Json witness_json(const FilterCheck& c) {
  if (!c.witness) return nullptr;
  Json w = {{"axiom", c.witness->axiom}, {"ideals", c.witness->ideals}};
  if (c.witness->element) w["element"] = *c.witness->element;
  return w;
}

Output filters_list(const Options& o) {
  const RingPtr r = o.universe.empty() ? load_ring(o.ring.empty() ? "z4" : o.ring) : load_universe(o)->ring_ptr();
  const auto fs = enumerate_linear_filters(r);
  Json arr = Json::array();
  std::size_t gab = 0;
  std::string t;
  for (const auto& f : fs) {
    arr.push_back(to_json(f));
    const bool g = is_gabriel_filter(f);
    gab += g;
    t += "{";
    for (std::size_t i = 0; i < f.ideals().size(); ++i) t += (i ? "," : "") + std::to_string(f.ideals()[i]);
    t += std::string("}") + (g ? " gabriel" : "") + "\n";
  }
  t += std::to_string(fs.size()) + " linear, " + std::to_string(gab) + " gabriel\n";
  return {{{"ring", r->name()}, {"linear", fs.size()}, {"gabriel", gab}, {"filters", arr}}, t};
}

Output filters_check(const Options& o) {
  Filter f;
  if (!o.filter.empty()) {
    const RingPtr r = o.universe.empty() ? load_ring(o.ring.empty() ? "z4" : o.ring) : load_universe(o)->ring_ptr();
    f = filter_from_json(load_json(o.filter), r);
  } else {
    f = filter_of(expression(load_universe(o), o));
  }
  const FilterCheck lin = check_linear(f), gab = check_gabriel(f);
  Json j = to_json(f);
  j["linear_witness"] = witness_json(lin);
  j["gabriel_witness"] = witness_json(gab);
  std::string t = "ideals {";
  for (std::size_t i = 0; i < f.ideals().size(); ++i) t += (i ? "," : "") + std::to_string(f.ideals()[i]);
  t += "}\nlinear: " + yes(lin.holds) + (lin.witness ? " (" + lin.witness->axiom + ")" : "") +
       "\ngabriel: " + yes(gab.holds) + (gab.witness ? " (" + gab.witness->axiom + ")" : "") + "\n";
  return {j, t};
}

// ------------------------------------------------------------------ rel

struct RelArgs {
  UniversePtr u;
  Preradical sigma;
  std::size_t m;
};

RelArgs rel_args(const Options& o) {
  auto u = load_universe(o);
  auto p = expression(u, o);
  return {u, p, module_index(*u, o.module)};
}

const Submodule& sub_option(const RelArgs& a, const Options& o) {
  if (o.sub.empty()) throw InvalidParameter("--sub is required");
  return resolve_submodule(*a.u, a.m, o.sub);
}

Output rel_dense(const Options& o) {
  const auto a = rel_args(o);
  const auto c = is_dense(a.sigma, a.m, sub_option(a, o));
  return {{{"module", a.u->label(a.m)}, {"sub", sub_json(*a.u, a.m, c.sub)}, {"quotient", a.u->label(c.quot_rep)},
           {"dense", c.dense}},
          "dense: " + yes(c.dense) + " (M/N ~ " + a.u->label(c.quot_rep) + ")\n"};
}

Output rel_pure(const Options& o) {
  const auto a = rel_args(o);
  const Submodule& n = sub_option(a, o);
  const bool p = is_pure(a.sigma, a.m, n);
  return {{{"module", a.u->label(a.m)}, {"sub", sub_json(*a.u, a.m, n)}, {"pure", p}}, "pure: " + yes(p) + "\n"};
}

Output rel_purify(const Options& o) {
  const auto a = rel_args(o);
  const Submodule& n = sub_option(a, o);
  const Submodule p = purification(a.sigma, a.m, n);
  return {{{"module", a.u->label(a.m)}, {"sub", sub_json(*a.u, a.m, n)}, {"purification", sub_json(*a.u, a.m, p)}},
          "purification: " + sub_text(*a.u, a.m, p) + "\n"};
}

Output rel_injective(const Options& o) {
  const auto a = rel_args(o);
  InjectivityMode mode;
  if (o.mode == "definitional")
    mode = InjectivityMode::definitional;
  else if (o.mode == "purity")
    mode = InjectivityMode::purity;
  else if (o.mode == "baer")
    mode = InjectivityMode::baer;
  else
    throw InvalidParameter("unknown mode '" + o.mode + "'");
  const auto r = is_sigma_injective(a.sigma, a.m, mode);
  Json j = {{"module", a.u->label(a.m)}, {"mode", to_string(mode)}, {"injective", r.holds}};
  std::string t = "sigma-injective (" + std::string(to_string(mode)) + "): " + yes(r.holds) + "\n";
  if (r.n_rep) {
    Json w = {{"n", a.u->label(*r.n_rep)}};
    if (r.k) w["k"] = sub_json(*a.u, *r.n_rep, *r.k);
    j["witness"] = w;
    t += "  witness N = " + a.u->label(*r.n_rep) + (r.k ? ", K = " + sub_text(*a.u, *r.n_rep, *r.k) : "") + "\n";
  }
  return {j, t};
}

Output rel_hull(const Options& o) {
  const auto a = rel_args(o);
  const auto h = sigma_injective_hull(a.sigma, a.m);
  return {{{"module", a.u->label(a.m)},
           {"injective_hull", a.u->label(h.ambient)},
           {"sigma_hull", a.u->label(h.hull_rep)},
           {"embed", hom_json(h.embed)}},
          "E(M) = " + a.u->label(h.ambient) + ", E_sigma(M) = " + a.u->label(h.hull_rep) + ", embed " +
              hom_text(h.embed) + "\n"};
}

Output rel_pseudo(const Options& o) {
  const auto a = rel_args(o);
  if (!o.sub.empty()) {
    const Submodule& n = sub_option(a, o);
    const auto k = pseudocomplement(a.sigma, a.m, n);
    return {{{"module", a.u->label(a.m)},
             {"sub", sub_json(*a.u, a.m, n)},
             {"pseudocomplement", k ? sub_json(*a.u, a.m, *k) : Json(nullptr)}},
            "pseudocomplement: " + (k ? sub_text(*a.u, a.m, *k) : std::string("none")) + "\n"};
  }
  Json arr = Json::array();
  std::string t;
  for (std::size_t k : subp(a.sigma, a.m)) {
    const Submodule& s = a.u->subs(a.m)[k].sub;
    arr.push_back(sub_json(*a.u, a.m, s));
    t += "  #" + std::to_string(k) + " " + sub_text(*a.u, a.m, s) + "\n";
  }
  return {{{"module", a.u->label(a.m)}, {"subp", arr}}, t};
}

Output rel_localize(const Options& o) {
  const auto a = rel_args(o);
  const auto l = localize(a.sigma, a.m);
  return {{{"module", a.u->label(a.m)}, {"q", a.u->label(l.q_rep)}, {"eta", hom_json(l.eta)}},
          "Q = " + a.u->label(l.q_rep) + ", eta = " + hom_text(l.eta) + "\n"};
}

// ------------------------------------------------------------------ check / enumerate

std::string report_text(const CheckReport& r) {
  std::string t;
  for (const auto& c : r.claims) {
    t += std::string(to_string(c.status)) + (c.expected_fail ? " (expected)" : "") + "  " + c.id + "  [" +
         std::to_string(c.instances) + "]";
    if (!c.witness.empty()) t += "  " + c.witness;
    t += "\n";
  }
  if (!r.claims.empty()) t += "universe: " + r.claims.front().universe + "\n";
  return t;
}

CheckOptions check_options(const Options& o) {
  CheckOptions c;
  c.enumeration_budget = o.budget;
  c.pair_limit = o.pair_limit;
  return c;
}

Output check_all_cmd(const Options& o) {
  const auto r = check_all(load_universe(o), check_options(o));
  return {to_json(r), report_text(r), r.ok() ? kOk : kCheckFailed};
}

Output check_claim_cmd(const Options& o) {
  const auto r = check_claim(load_universe(o), o.claim, check_options(o));
  return {to_json(r), report_text(r), r.ok() ? kOk : kCheckFailed};
}

Output check_list_cmd(const Options&) {
  Json j = Json::array();
  std::string t;
  for (const auto& c : claim_registry()) {
    j.push_back({{"claim_id", c.id}, {"statement", c.statement}, {"hypotheses", c.hypotheses},
                 {"expected_fail", c.expected_fail}});
    t += c.id + (c.expected_fail ? " (expected fail)" : "") + "\n  " + c.statement + "\n  hypotheses: " + c.hypotheses +
         "\n";
  }
  return {j, t};
}

Output enumerate_cmd(const Options& o) {
  const auto u = load_universe(o);
  const auto all = enumerate_preradicals(u, o.budget);
  Json arr = Json::array();
  std::string t = universe_name(*u) + ": " + std::to_string(all.size()) + " preradicals\n";
  for (std::size_t k = 0; k < all.size(); ++k) {
    arr.push_back(to_json(all[k])["values"]);
    t += "#" + std::to_string(k) + "\n" + table_text(all[k]);
  }
  return {{{"universe", universe_name(*u)}, {"count", all.size()}, {"tables", arr}}, t};
}

// ------------------------------------------------------------------ wiring

using Handler = std::function<Output(const Options&)>;

void emit(const Output& out, const Options& o) {
  const std::string text = o.format == "json" ? out.json.dump(2) + "\n" : out.table;
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InvalidParameter("cannot write '" + o.out + "'");
  f << text;
  if (!f) throw InvalidParameter("cannot write '" + o.out + "'");
}

enum Flag : unsigned {
  kRing = 1,
  kUniverse = 2,
  kBuild = 4,  // --seeds, --sum-bound, --max-size
  kExpr = 8,
  kModule = 16,
  kSub = 32,
  kBudget = 64,
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prlab: preradicals over finite rings"};
  app.require_subcommand(1);
  Options o;
  Handler chosen;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, unsigned flags, Handler h) {
    CLI::App* c = parent->add_subcommand(name, desc);
    if (flags & kRing) c->add_option("--ring", o.ring, "ring JSON path or builtin name (default z4)");
    if (flags & kUniverse) c->add_option("--universe", o.universe, "universe JSON path");
    if (flags & kBuild) {
      c->add_option("--seeds", o.seeds, "seed module JSON paths");
      c->add_option("--sum-bound", o.sum_bound, "max indecomposable summands in direct sums")->check(CLI::PositiveNumber);
      c->add_option("--max-size", o.max_size, "module cardinality cap")->check(CLI::PositiveNumber);
    }
    if (flags & kExpr) c->add_option("--expr", o.expr, "preradical expression");
    if (flags & kModule) c->add_option("--module", o.module, "module label");
    if (flags & kSub) c->add_option("--sub", o.sub, "submodule: label of a fully invariant submodule or #k");
    if (flags & kBudget) {
      c->add_option("--budget", o.budget, "enumeration budget");
      c->add_option("--pair-limit", o.pair_limit, "tables used by claims over pairs");
    }
    c->add_option("--out", o.out, "write output to this path");
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));
    c->callback([&chosen, h] { chosen = h; });
    return c;
  };
  auto group = [&](const std::string& name, const std::string& desc) {
    CLI::App* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    return g;
  };

  const unsigned u = kRing | kUniverse | kBuild;

  CLI::App* ring = group("ring", "ring definitions");
  leaf(ring, "define", "validate a ring and print its JSON", kRing, ring_define);
  leaf(ring, "list", "list builtin ring names", 0, ring_list);

  CLI::App* uni = group("universe", "module universes");
  leaf(uni, "build", "build a closed universe", kRing | kBuild, universe_build);
  leaf(uni, "verify", "recheck every closure property", u, universe_verify);

  CLI::App* pr = group("pr", "preradical expressions");
  leaf(pr, "eval", "evaluate an expression", u | kExpr | kModule, pr_eval);
  leaf(pr, "traits", "classify an expression", u | kExpr, pr_traits);
  leaf(pr, "closure", "hat, bar, tilde, circ and square of an expression", u | kExpr, pr_closure);

  CLI::App* fl = group("filters", "filters of left ideals");
  leaf(fl, "list", "all linear filters", kRing | kUniverse, filters_list);
  leaf(fl, "check", "check the filter of an expression or a filter file", u | kExpr, filters_check)
      ->add_option("--filter", o.filter, "filter JSON path");

  CLI::App* rel = group("rel", "relative notions");
  leaf(rel, "dense", "sigma-density of a submodule", u | kExpr | kModule | kSub, rel_dense);
  leaf(rel, "pure", "sigma-purity of a submodule", u | kExpr | kModule | kSub, rel_pure);
  leaf(rel, "purify", "purification of a submodule", u | kExpr | kModule | kSub, rel_purify);
  leaf(rel, "injective", "sigma-injectivity", u | kExpr | kModule, rel_injective)
      ->add_option("--mode", o.mode, "definitional, purity or baer")
      ->check(CLI::IsMember({"definitional", "purity", "baer"}));
  leaf(rel, "hull", "sigma-injective hull", u | kExpr | kModule, rel_hull);
  leaf(rel, "pseudo", "sigma-pseudocomplements", u | kExpr | kModule | kSub, rel_pseudo);
  leaf(rel, "localize", "localization Q and eta", u | kExpr | kModule, rel_localize);

  CLI::App* chk = group("check", "claim checks");
  leaf(chk, "all", "run every claim", u | kBudget, check_all_cmd);
  leaf(chk, "claim", "run one claim", u | kBudget, check_claim_cmd)->add_option("id", o.claim, "claim id")->required();
  leaf(chk, "list", "list claim ids", 0, check_list_cmd);

  leaf(&app, "enumerate", "enumerate every preradical", u | kBudget, enumerate_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  try {
    const Output out = chosen(o);
    emit(out, o);
    return out.code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
