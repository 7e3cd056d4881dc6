#include "prlab/json_io.hpp"

#include "prlab/errors.hpp"

namespace prlab {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("malformed ") + what + " document: " + e.what());
  }
}

const char* family_name(RingFamily k) {
  switch (k) {
    case RingFamily::cyclic: return "cyclic";
    case RingFamily::product_cyclic: return "product_cyclic";
    case RingFamily::upper_triangular: return "upper_triangular";
    case RingFamily::generic: break;
  }
  return "generic";
}

RingFamily family_kind(const std::string& s) {
  if (s == "cyclic") return RingFamily::cyclic;
  if (s == "product_cyclic") return RingFamily::product_cyclic;
  if (s == "upper_triangular") return RingFamily::upper_triangular;
  if (s == "generic") return RingFamily::generic;
  throw InvalidParameter("unknown ring family '" + s + "'");
}

Json coords(const Shape& shape, Elem x) { return shape.decode(x); }

Elem encode(const Shape& shape, const Json& j) {
  const auto c = j.get<std::vector<std::int64_t>>();
  if (c.size() != shape.rank()) throw InvalidParameter("coordinate vector of the wrong length");
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] < 0 || c[i] >= shape.factors()[i]) throw InvalidParameter("coordinate out of range");
  return shape.encode(c);
}

ClaimStatus status_from(const std::string& s) {
  if (s == "pass") return ClaimStatus::pass;
  if (s == "fail") return ClaimStatus::fail;
  if (s == "not-applicable") return ClaimStatus::not_applicable;
  throw InvalidParameter("unknown claim status '" + s + "'");
}

std::size_t rep_of(const Universe& u, const std::string& label) {
  const std::size_t i = u.find_label(label);
  if (i == kNoRep) throw InvalidParameter("unknown module '" + label + "'");
  return i;
}

TraitResult* trait_slot(TraitReport& t, const std::string& name) {
  for (const auto& [n, p] : t.items())
    if (n == name) return const_cast<TraitResult*>(p);
  return nullptr;
}

bool same(const TraitResult& a, const TraitResult& b) {
  if (a.holds != b.holds || a.witness.has_value() != b.witness.has_value()) return false;
  if (!a.witness) return true;
  return a.witness->rep == b.witness->rep && a.witness->sub == b.witness->sub && a.witness->detail == b.witness->detail;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

Json to_json(const FiniteRing& r) {
  Json j;
  j["name"] = r.name();
  j["invariant_factors"] = r.invariant_factors();
  j["mult_table"] = r.structure_constants();
  j["one"] = r.one_coords();
  const auto& f = r.family();
  if (f.kind != RingFamily::generic) {
    Json fj;
    fj["kind"] = family_name(f.kind);
    fj["a"] = f.a;
    fj["b"] = f.b;
    fj["idempotent"] = f.idempotent;
    j["family"] = fj;
  }
  return j;
}

RingPtr ring_from_json(const Json& j) {
  return guarded("ring", [&] {
    RingFamilyInfo fam;
    if (j.contains("family")) {
      const Json& f = j.at("family");
      fam.kind = family_kind(f.at("kind").get<std::string>());
      fam.a = f.at("a").get<std::int64_t>();
      fam.b = f.at("b").get<std::int64_t>();
      fam.idempotent = f.at("idempotent").get<std::vector<std::int64_t>>();
    }
    return FiniteRing::create(j.at("name").get<std::string>(), j.at("invariant_factors").get<std::vector<std::int64_t>>(),
                              j.at("mult_table").get<StructureConstants>(), j.at("one").get<std::vector<std::int64_t>>(),
                              fam);
  });
}

Json to_json(const FinModule& m) {
  Json j;
  j["ring"] = m.ring().name();
  j["invariant_factors"] = m.invariant_factors();
  Json action = Json::array();
  for (const auto& a : m.action()) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c));
      rows.push_back(row);
    }
    action.push_back(rows);
  }
  j["action"] = action;
  Json gens = Json::array();
  for (Elem g : m.gens()) gens.push_back(coords(m.shape(), g));
  j["gens"] = gens;
  return j;
}

ModulePtr module_from_json(const Json& j, const RingPtr& ring) {
  return guarded("module", [&] {
    if (j.at("ring").get<std::string>() != ring->name())
      throw InvalidParameter("module over ring '" + j.at("ring").get<std::string>() + "', expected '" + ring->name() +
                             "'");
    const auto factors = j.at("invariant_factors").get<std::vector<std::int64_t>>();
    std::vector<IntMatrix> action;
    for (const Json& mj : j.at("action")) {
      const auto rows = mj.get<std::vector<std::vector<std::int64_t>>>();
      IntMatrix a(rows.size(), rows.empty() ? 0 : rows[0].size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != a.cols()) throw InvalidParameter("ragged action matrix");
        for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = rows[r][c];
      }
      action.push_back(a);
    }
    const Shape shape(factors);
    std::vector<Elem> gens;
    if (j.contains("gens"))
      for (const Json& g : j.at("gens")) gens.push_back(encode(shape, g));
    return FinModule::create(ring, factors, std::move(action), std::move(gens));
  });
}

Json to_json(const Submodule& s) {
  Json j = Json::array();
  for (Elem g : s.canon()) j.push_back(coords(s.parent().shape(), g));
  return j;
}

Submodule submodule_from_json(const Json& j, const ModulePtr& parent) {
  return guarded("submodule", [&] {
    std::vector<Elem> gens;
    for (const Json& g : j) gens.push_back(encode(parent->shape(), g));
    return Submodule::generated(parent, gens);
  });
}

Json to_json(const Universe& u) {
  Json j;
  j["format"] = "prlab-universe";
  j["hom_cache"] = "rebuilt";
  j["ring"] = to_json(u.ring());
  const auto& p = u.policy();
  j["policy"] = {{"sum_bound", p.sum_bound},
                 {"max_module_size", p.max_module_size},
                 {"close_under",
                  {{"submodules", p.submodules},
                   {"quotients", p.quotients},
                   {"injective_hulls", p.injective_hulls},
                   {"direct_sums", p.direct_sums}}}};
  Json labels = Json::array(), reps = Json::array();
  for (std::size_t i = 0; i < u.size(); ++i) {
    labels.push_back(u.label(i));
    reps.push_back(to_json(*u.rep(i)));
  }
  j["labels"] = labels;
  j["reps"] = reps;
  const auto& c = u.certificate();
  j["closure_certificate"] = {{"has_zero_and_regular", c.has_zero_and_regular},
                              {"pairwise_non_isomorphic", c.pairwise_non_isomorphic},
                              {"submodules", c.submodules},
                              {"quotients", c.quotients},
                              {"injective_hulls", c.injective_hulls},
                              {"direct_sums", c.direct_sums}};
  return j;
}

UniversePtr universe_from_json(const Json& j) {
  return guarded("universe", [&] {
    if (j.at("format").get<std::string>() != "prlab-universe") throw InvalidParameter("not a universe document");
    const RingPtr ring = ring_from_json(j.at("ring"));
    const Json& pj = j.at("policy");
    ClosurePolicy p;
    p.sum_bound = pj.at("sum_bound").get<std::size_t>();
    p.max_module_size = pj.at("max_module_size").get<std::size_t>();
    const Json& cu = pj.at("close_under");
    p.submodules = cu.at("submodules").get<bool>();
    p.quotients = cu.at("quotients").get<bool>();
    p.injective_hulls = cu.at("injective_hulls").get<bool>();
    p.direct_sums = cu.at("direct_sums").get<bool>();
    std::vector<ModulePtr> reps;
    for (const Json& m : j.at("reps")) reps.push_back(module_from_json(m, ring));
    UniversePtr u = Universe::from_reps(ring, std::move(reps), p);
    const auto labels = j.at("labels").get<std::vector<std::string>>();
    for (std::size_t i = 0; i < u->size(); ++i)
      if (i >= labels.size() || labels[i] != u->label(i))
        throw InvalidParameter("stored label of rep " + std::to_string(i) + " does not match");
    if (to_json(*u).at("closure_certificate") != j.at("closure_certificate"))
      throw InvalidParameter("stored closure certificate does not match the recomputed one");
    return u;
  });
}

Json to_json(const Preradical& p) {
  const Universe& u = p.universe();
  Json values = Json::object();
  for (std::size_t i = 0; i < u.size(); ++i) values[u.label(i)] = to_json(p.value(i));
  return {{"ring", u.ring().name()}, {"values", values}};
}

Preradical preradical_from_json(const Json& j, const UniversePtr& u) {
  return guarded("preradical", [&] {
    if (j.at("ring").get<std::string>() != u->ring().name()) throw UniverseMismatch("preradical over a different ring");
    const Json& v = j.at("values");
    if (v.size() != u->size()) throw InvalidParameter("preradical table has the wrong number of modules");
    std::vector<Submodule> subs;
    for (std::size_t i = 0; i < u->size(); ++i) subs.push_back(submodule_from_json(v.at(u->label(i)), u->rep(i)));
    return Preradical::from_submodules(u, subs);
  });
}

Json to_json(const Filter& f) {
  const FiniteRing& r = f.ring();
  Json ideals = Json::array();
  for (std::size_t k : f.ideals()) {
    Json gens = Json::array();
    for (Elem g : r.canonical_generators(r.left_ideals()[k])) gens.push_back(coords(r.shape(), g));
    ideals.push_back(gens);
  }
  return {{"ring", r.name()},
          {"ideals", ideals},
          {"flags", {{"linear", is_linear_filter(f)}, {"gabriel", is_gabriel_filter(f)}}}};
}

Filter filter_from_json(const Json& j, const RingPtr& ring) {
  return guarded("filter", [&] {
    if (j.at("ring").get<std::string>() != ring->name()) throw InvalidParameter("filter over a different ring");
    std::vector<std::size_t> ideals;
    for (const Json& ij : j.at("ideals")) {
      std::vector<Elem> gens;
      for (const Json& g : ij) gens.push_back(encode(ring->shape(), g));
      ideals.push_back(ideal_index(*ring, ring->left_ideal_span(gens)));
    }
    Filter f(ring, std::move(ideals));
    if (j.contains("flags")) {
      const Json& fl = j.at("flags");
      if (fl.at("linear").get<bool>() != is_linear_filter(f) || fl.at("gabriel").get<bool>() != is_gabriel_filter(f))
        throw InvalidParameter("stored filter flags do not match");
    }
    return f;
  });
}

Json to_json(const TraitReport& t, const Universe& u) {
  Json j = Json::object();
  for (const auto& [name, r] : t.items()) {
    Json e = {{"holds", r->holds}};
    if (r->witness) {
      Json w = {{"module", u.label(r->witness->rep)}};
      if (r->witness->sub) w["sub"] = to_json(*r->witness->sub);
      w["detail"] = r->witness->detail;
      e["witness"] = w;
    }
    j[name] = e;
  }
  return j;
}

TraitReport trait_report_from_json(const Json& j, const UniversePtr& u) {
  return guarded("trait report", [&] {
    TraitReport t;
    for (const auto& [name, e] : j.items()) {
      TraitResult* slot = trait_slot(t, name);
      if (!slot) throw InvalidParameter("unknown trait '" + name + "'");
      slot->holds = e.at("holds").get<bool>();
      if (e.contains("witness")) {
        const Json& w = e.at("witness");
        Witness wit;
        wit.rep = rep_of(*u, w.at("module").get<std::string>());
        if (w.contains("sub")) wit.sub = submodule_from_json(w.at("sub"), u->rep(wit.rep));
        wit.detail = w.at("detail").get<std::string>();
        slot->witness = wit;
      }
    }
    return t;
  });
}

bool operator==(const TraitReport& a, const TraitReport& b) {
  const auto x = a.items(), y = b.items();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!same(*x[i].second, *y[i].second)) return false;
  return true;
}

Json to_json(const CheckReport& r) {
  Json j = Json::array();
  for (const auto& c : r.claims)
    j.push_back({{"claim_id", c.id},
                 {"hypotheses", c.hypotheses},
                 {"universe", c.universe},
                 {"status", to_string(c.status)},
                 {"instances", c.instances},
                 {"witness", c.witness},
                 {"expected_fail", c.expected_fail}});
  return j;
}

CheckReport check_report_from_json(const Json& j) {
  return guarded("check report", [&] {
    CheckReport r;
    for (const Json& c : j) {
      ClaimResult x;
      x.id = c.at("claim_id").get<std::string>();
      x.hypotheses = c.at("hypotheses").get<std::string>();
      x.universe = c.at("universe").get<std::string>();
      x.status = status_from(c.at("status").get<std::string>());
      x.instances = c.at("instances").get<std::size_t>();
      x.witness = c.at("witness").get<std::string>();
      x.expected_fail = c.at("expected_fail").get<bool>();
      r.claims.push_back(std::move(x));
    }
    return r;
  });
}

}  // namespace prlab
