#include "ramsplit/io.hpp"

#include <initializer_list>
#include <sstream>

#include "ramsplit/errors.hpp"

namespace ramsplit::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

void expect_object(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
}

void allow_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  expect_object(j, where);
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) fail(where, "unknown key \"" + k + "\"");
  }
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  expect_object(j, where);
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

const Json* optional_field(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::int64_t as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

bool as_bool(const Json& j, const std::string& where) {
  if (!j.is_boolean()) fail(where, "expected a boolean");
  return j.get<bool>();
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

PrimeModulus modulus_from(const Json& j, const std::string& where) {
  try {
    return PrimeModulus(as_int(j, where));
  } catch (const NotPrime& e) {
    fail(where, e.what());
  }
}

void check_schema(const Json& j, const char* schema) {
  std::string got = as_string(field(j, "schema", "document"), "schema");
  if (got != schema) fail("schema", "expected " + std::string(schema) + ", got " + got);
}

std::string sign_str(Sign s) { return s == Sign::Plus ? "+" : "-"; }
Sign sign_from(const Json& j, const std::string& where) {
  std::string s = as_string(j, where);
  if (s == "+") return Sign::Plus;
  if (s == "-") return Sign::Minus;
  fail(where, "sign must be \"+\" or \"-\"");
}

std::string kind_str(ComponentKind k) { return k == ComponentKind::Original ? "original" : "exceptional"; }
ComponentKind kind_from(const Json& j, const std::string& where) {
  std::string s = as_string(j, where);
  if (s == "original") return ComponentKind::Original;
  if (s == "exceptional") return ComponentKind::Exceptional;
  fail(where, "kind must be \"original\" or \"exceptional\"");
}

std::string coeff_kind_str(CoefficientKind k) {
  switch (k) {
    case CoefficientKind::Unit: return "unit";
    case CoefficientKind::NonUnit: return "non-unit";
    case CoefficientKind::Divisible: return "divisible";
  }
  return "unit";
}
CoefficientKind coeff_kind_from(const Json& j, const std::string& where) {
  std::string s = as_string(j, where);
  if (s == "unit") return CoefficientKind::Unit;
  if (s == "non-unit") return CoefficientKind::NonUnit;
  if (s == "divisible") return CoefficientKind::Divisible;
  fail(where, "coefficient kind must be unit, non-unit or divisible");
}

template <class Id>
Json id_sets(const std::vector<std::set<Id>>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) {
    Json a = Json::array();
    for (const auto& id : s) a.push_back(id.str());
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<std::set<ComponentId>> id_sets_from(const Json& j, const std::string& where) {
  std::vector<std::set<ComponentId>> out;
  for (const auto& a : as_array(j, where)) {
    std::set<ComponentId> s;
    for (const auto& id : as_array(a, where)) s.insert(ComponentId(as_string(id, where)));
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<Scalar> opt_scalar(PrimeModulus m, const Json& j, const char* key, const std::string& where) {
  if (const Json* v = optional_field(j, key)) return Scalar(m, as_int(*v, where));
  return std::nullopt;
}

Json opt_scalar_json(const std::optional<Scalar>& s) { return s ? Json(s->value()) : Json(nullptr); }

Json glue_choice_json(const GlueChoice& c) {
  return {{"divisor", c.divisor.str()}, {"coefficients", {to_json(c.coefficients[0]), to_json(c.coefficients[1])}}};
}

GlueChoice glue_choice_from(const Json& j, const std::string& where) {
  allow_keys(j, {"divisor", "coefficients"}, where);
  const Json& cs = as_array(field(j, "coefficients", where), where);
  if (cs.size() != 2) fail(where, "coefficients must have two entries");
  return {DivisorId(as_string(field(j, "divisor", where), where)),
          {char_class_from_json(cs[0]), char_class_from_json(cs[1])}};
}

AssignmentRule rule_from(PrimeModulus m, const std::string& s, const std::string& where) {
  using K = AssignmentRule::Kind;
  if (s == "seed") return AssignmentRule::of(K::Seed);
  if (s == "I") return AssignmentRule::of(K::I);
  if (s == "A") return AssignmentRule::of(K::A);
  if (s == "B") return AssignmentRule::of(K::B);
  if (s == "C") return AssignmentRule::of(K::C);
  if (s == "GW-fill") return AssignmentRule::of(K::GWFill);
  if (s == "ColdGlue(+)") return {K::ColdGlue, std::nullopt, Sign::Plus};
  if (s == "ColdGlue(-)") return {K::ColdGlue, std::nullopt, Sign::Minus};
  if (s.size() > 4 && s.rfind("II(", 0) == 0 && s.back() == ')') {
    try {
      std::size_t used = 0;
      std::string digits = s.substr(3, s.size() - 4);
      std::int64_t n = std::stoll(digits, &used);
      if (used == digits.size()) return {K::II, Scalar(m, n), std::nullopt};
    } catch (const std::exception&) {
    }
  }
  fail(where, "unknown rule \"" + s + "\"");
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

Json to_json(const CharClass& c) {
  Json terms = Json::object();
  for (const auto& [g, coeff] : c.terms()) terms[g.key()] = coeff;
  return {{"modulus", c.modulus().ell()}, {"terms", terms}};
}

CharClass char_class_from_json(const Json& j) {
  const std::string where = "character class";
  allow_keys(j, {"modulus", "terms"}, where);
  PrimeModulus m = modulus_from(field(j, "modulus", where), where);
  const Json& terms = field(j, "terms", where);
  expect_object(terms, where);
  CharClass::Terms t;
  for (const auto& [key, coeff] : terms.items()) {
    t[GeneratorId::parse(key)] = as_int(coeff, where + " term " + key);
  }
  try {
    return CharClass(m, t);
  } catch (const SpaceMismatch& e) {
    fail(where, e.what());
  }
}

Json to_json(const LocalWitt& w) { return {{"residue", w.residue.value()}, {"value", to_json(w.value)}}; }

LocalWitt witt_from_json(PrimeModulus m, const Json& j) {
  const std::string where = "local datum";
  allow_keys(j, {"residue", "value"}, where);
  return {Scalar(m, as_int(field(j, "residue", where), where)), char_class_from_json(field(j, "value", where))};
}

// ---------------------------------------------------------------------------

Json to_json(const Model& m) {
  Json comps = Json::object(), points = Json::object(), markers = Json::object(), divisors = Json::object();
  for (const auto& [id, c] : m.components()) {
    Json o = {{"kind", kind_str(c.kind)}, {"residue_field", c.residue_field}};
    if (c.sign) o["sign"] = sign_str(*c.sign);
    comps[id.str()] = std::move(o);
  }
  for (const auto& [id, p] : m.points()) {
    points[id.str()] = {{"incident", {p.incident[0].str(), p.incident[1].str()}}, {"residue_field", p.residue_field}};
  }
  for (const auto& [id, mk] : m.markers()) {
    markers[id.str()] = {{"component", mk.component.str()}, {"residue_field", mk.residue_field}};
  }
  for (const auto& [id, d] : m.horizontals()) {
    Json o = {{"location", d.location.str()}, {"residue_field", d.residue_field}};
    if (d.coefficients) {
      Json cs = Json::array();
      for (const auto& c : *d.coefficients) cs.push_back({{"kind", coeff_kind_str(c.kind)}, {"kummer", to_json(c.kummer)}});
      o["coefficients"] = std::move(cs);
    }
    divisors[id.str()] = std::move(o);
  }
  return {{"schema", kModelSchema},  {"modulus", m.modulus().ell()}, {"components", comps},
          {"points", points},        {"markers", markers},           {"divisors", divisors}};
}

Model model_from_json(const Json& j) {
  allow_keys(j, {"schema", "modulus", "components", "points", "markers", "divisors"}, "model");
  check_schema(j, kModelSchema);
  Model m(modulus_from(field(j, "modulus", "model"), "model modulus"));

  const Json& comps = field(j, "components", "model");
  expect_object(comps, "components");
  for (const auto& [id, c] : comps.items()) {
    const std::string where = "component " + id;
    allow_keys(c, {"kind", "residue_field", "sign"}, where);
    std::optional<Sign> sign;
    if (const Json* s = optional_field(c, "sign")) sign = sign_from(*s, where);
    m.add_component({ComponentId(id), kind_from(field(c, "kind", where), where),
                     as_string(field(c, "residue_field", where), where), sign});
  }
  if (const Json* points = optional_field(j, "points")) {
    expect_object(*points, "points");
    for (const auto& [id, p] : points->items()) {
      const std::string where = "point " + id;
      allow_keys(p, {"incident", "residue_field"}, where);
      const Json& inc = as_array(field(p, "incident", where), where);
      if (inc.size() != 2) fail(where, "a point lies on exactly two components");
      m.add_point({LocationId(id),
                   {ComponentId(as_string(inc[0], where)), ComponentId(as_string(inc[1], where))},
                   as_string(field(p, "residue_field", where), where)});
    }
  }
  if (const Json* markers = optional_field(j, "markers")) {
    expect_object(*markers, "markers");
    for (const auto& [id, mk] : markers->items()) {
      const std::string where = "marker " + id;
      allow_keys(mk, {"component", "residue_field"}, where);
      m.add_marker({LocationId(id), ComponentId(as_string(field(mk, "component", where), where)),
                    as_string(field(mk, "residue_field", where), where)});
    }
  }
  if (const Json* divisors = optional_field(j, "divisors")) {
    expect_object(*divisors, "divisors");
    for (const auto& [id, d] : divisors->items()) {
      const std::string where = "divisor " + id;
      allow_keys(d, {"location", "residue_field", "coefficients"}, where);
      std::optional<std::array<Coefficient, 2>> coeffs;
      if (const Json* cs = optional_field(d, "coefficients")) {
        if (!cs->is_array() || cs->size() != 2) fail(where, "coefficients must be a pair");
        auto one = [&](const Json& c) {
          allow_keys(c, {"kind", "kummer"}, where);
          return Coefficient{coeff_kind_from(field(c, "kind", where), where),
                             char_class_from_json(field(c, "kummer", where))};
        };
        coeffs = std::array<Coefficient, 2>{one((*cs)[0]), one((*cs)[1])};
      }
      m.add_horizontal({DivisorId(id), LocationId(as_string(field(d, "location", where), where)),
                        as_string(field(d, "residue_field", where), where), coeffs});
    }
  }
  return m;
}

Json to_json(const RamificationData& rd) {
  auto side = [](const auto& map) {
    Json out = Json::object();
    for (const auto& [id, r] : map) {
      Json locals = Json::object();
      for (const auto& [at, w] : r.locals) locals[at.str()] = to_json(w);
      out[id.str()] = std::move(locals);
    }
    return out;
  };
  return {{"schema", kAlphaSchema},
          {"modulus", rd.modulus().ell()},
          {"vertical", side(rd.vertical())},
          {"horizontal", side(rd.horizontal())}};
}

RamificationData alpha_from_json(const Json& j) {
  allow_keys(j, {"schema", "modulus", "vertical", "horizontal"}, "alpha");
  check_schema(j, kAlphaSchema);
  PrimeModulus m = modulus_from(field(j, "modulus", "alpha"), "alpha modulus");
  RamificationData rd(m);
  auto read = [&](const char* key, auto setter) {
    const Json* side = optional_field(j, key);
    if (!side) return;
    expect_object(*side, key);
    for (const auto& [id, locals] : side->items()) {
      expect_object(locals, std::string(key) + " " + id);
      ResidueCharacter r;
      for (const auto& [at, w] : locals.items()) r.locals.emplace(LocationId(at), witt_from_json(m, w));
      setter(id, std::move(r));
    }
  };
  read("vertical", [&](const std::string& id, ResidueCharacter r) { rd.set_vertical(ComponentId(id), std::move(r)); });
  read("horizontal",
       [&](const std::string& id, ResidueCharacter r) { rd.set_horizontal(DivisorId(id), std::move(r)); });
  return rd;
}

// ---------------------------------------------------------------------------

Json to_json(const BlowupTrace& t) {
  Json out = Json::array();
  for (const auto& s : t.steps) {
    out.push_back({{"location", s.location.str()},
                   {"singular", s.singular},
                   {"reason", to_string(s.reason)},
                   {"exceptional", s.exceptional.str()},
                   {"exceptional_ramified", s.exceptional_ramified},
                   {"multiple", opt_scalar_json(s.multiple)}});
  }
  return out;
}

BlowupTrace trace_from_json(PrimeModulus m, const Json& j) {
  BlowupTrace t;
  for (const auto& s : as_array(j, "trace")) {
    const std::string where = "trace step";
    allow_keys(s, {"location", "singular", "reason", "exceptional", "exceptional_ramified", "multiple"}, where);
    std::string reason = as_string(field(s, "reason", where), where);
    BlowupReason r;
    if (reason == "bipartite-repair") {
      r = BlowupReason::BipartiteRepair;
    } else if (reason == "cycle-break") {
      r = BlowupReason::CycleBreak;
    } else if (reason == "connecting-break") {
      r = BlowupReason::ConnectingBreak;
    } else if (reason == "padding") {
      r = BlowupReason::Padding;
    } else {
      fail(where, "unknown reason " + reason);
    }
    t.steps.push_back({LocationId(as_string(field(s, "location", where), where)),
                       as_bool(field(s, "singular", where), where), r,
                       ComponentId(as_string(field(s, "exceptional", where), where)),
                       as_bool(field(s, "exceptional_ramified", where), where), opt_scalar(m, s, "multiple", where)});
  }
  return t;
}

Json to_json(const Decomposition& d) {
  Json roles = Json::object();
  for (const auto& [z, r] : d.point_roles) roles[z.str()] = to_string(r);
  return {{"isolated_trees", id_sets(d.isolated_trees)},
          {"cycle_clusters", id_sets(d.cycle_clusters)},
          {"connecting_paths", id_sets(d.connecting_paths)},
          {"tails", id_sets(d.tails)},
          {"point_roles", roles}};
}

Decomposition decomposition_from_json(const Json& j) {
  const std::string where = "decomposition";
  allow_keys(j, {"isolated_trees", "cycle_clusters", "connecting_paths", "tails", "point_roles"}, where);
  Decomposition d;
  d.isolated_trees = id_sets_from(field(j, "isolated_trees", where), where);
  d.cycle_clusters = id_sets_from(field(j, "cycle_clusters", where), where);
  d.connecting_paths = id_sets_from(field(j, "connecting_paths", where), where);
  d.tails = id_sets_from(field(j, "tails", where), where);
  const Json& roles = field(j, "point_roles", where);
  expect_object(roles, where);
  for (const auto& [z, r] : roles.items()) {
    std::string s = as_string(r, where);
    PointRole role;
    if (s == "isolated-tree") {
      role = PointRole::IsolatedTree;
    } else if (s == "cycle") {
      role = PointRole::Cycle;
    } else if (s == "connecting") {
      role = PointRole::Connecting;
    } else if (s == "tail") {
      role = PointRole::Tail;
    } else {
      fail(where, "unknown role " + s);
    }
    d.point_roles.emplace(LocationId(z), role);
  }
  return d;
}

Json to_json(const SplittingCharacter& psi) {
  Json comps = Json::object();
  for (const auto& [id, p] : psi.components) {
    Json locals = Json::object(), rules = Json::object();
    for (const auto& [at, w] : p.locals) locals[at.str()] = to_json(w);
    for (const auto& [at, r] : p.rules) rules[at.str()] = to_string(r);
    comps[id.str()] = {{"global_marker", opt_scalar_json(p.global_marker)},
                       {"locals", locals},
                       {"rules", rules},
                       {"order", p.order}};
  }
  Json choices = Json::object();
  for (const auto& [z, c] : psi.choices) choices[z.str()] = glue_choice_json(c);
  Json certs = Json::array();
  for (const auto& c : psi.certificates) {
    certs.push_back({{"point", c.point.str()},
                     {"first", c.first.str()},
                     {"second", c.second.str()},
                     {"choice", glue_choice_json(c.choice)},
                     {"left", to_json(c.left)},
                     {"right", to_json(c.right)},
                     {"theta_circ", to_json(c.theta_circ)},
                     {"omega", c.omega.value()}});
  }
  return {{"modulus", psi.modulus.ell()}, {"components", comps}, {"choices", choices}, {"certificates", certs}};
}

SplittingCharacter psi_from_json(const Json& j) {
  const std::string where = "psi";
  allow_keys(j, {"modulus", "components", "choices", "certificates"}, where);
  PrimeModulus m = modulus_from(field(j, "modulus", where), where);
  SplittingCharacter psi(m);
  const Json& comps = field(j, "components", where);
  expect_object(comps, where);
  for (const auto& [id, c] : comps.items()) {
    const std::string w = "psi on " + id;
    allow_keys(c, {"global_marker", "locals", "rules", "order"}, w);
    ComponentPsi p;
    p.global_marker = opt_scalar(m, c, "global_marker", w);
    p.order = as_int(field(c, "order", w), w);
    const Json& locals = field(c, "locals", w);
    expect_object(locals, w);
    for (const auto& [at, l] : locals.items()) p.locals.emplace(LocationId(at), witt_from_json(m, l));
    const Json& rules = field(c, "rules", w);
    expect_object(rules, w);
    for (const auto& [at, r] : rules.items()) p.rules.emplace(LocationId(at), rule_from(m, as_string(r, w), w));
    psi.components.emplace(ComponentId(id), std::move(p));
  }
  const Json& choices = field(j, "choices", where);
  expect_object(choices, where);
  for (const auto& [z, c] : choices.items()) psi.choices.emplace(LocationId(z), glue_choice_from(c, "choice at " + z));
  for (const auto& c : as_array(field(j, "certificates", where), where)) {
    const std::string w = "certificate";
    allow_keys(c, {"point", "first", "second", "choice", "left", "right", "theta_circ", "omega"}, w);
    psi.certificates.push_back({LocationId(as_string(field(c, "point", w), w)),
                                ComponentId(as_string(field(c, "first", w), w)),
                                ComponentId(as_string(field(c, "second", w), w)),
                                glue_choice_from(field(c, "choice", w), w),
                                witt_from_json(m, field(c, "left", w)),
                                witt_from_json(m, field(c, "right", w)),
                                char_class_from_json(field(c, "theta_circ", w)),
                                Scalar(m, as_int(field(c, "omega", w), w))});
  }
  return psi;
}

Json to_json(const VerificationReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"divisor", e.divisor},
                       {"vertical", e.vertical},
                       {"case", std::string(1, e.tree_case)},
                       {"general_case", e.general_case ? Json(*e.general_case) : Json(nullptr)},
                       {"e", e.e},
                       {"residue_killed", e.residue_killed},
                       {"trace", e.trace}});
  }
  Json failures = Json::array();
  for (const auto& z : r.glue_failures) failures.push_back(z.str());
  return {{"passed", r.passed()}, {"entries", entries}, {"glue_failures", failures}};
}

VerificationReport report_from_json(const Json& j) {
  const std::string where = "report";
  allow_keys(j, {"passed", "entries", "glue_failures"}, where);
  VerificationReport r;
  for (const auto& e : as_array(field(j, "entries", where), where)) {
    allow_keys(e, {"divisor", "vertical", "case", "general_case", "e", "residue_killed", "trace"}, where);
    std::string c = as_string(field(e, "case", where), where);
    if (c.size() != 1 || c[0] < 'a' || c[0] > 'd') fail(where, "case must be a, b, c or d");
    std::optional<std::string> general;
    if (const Json* g = optional_field(e, "general_case")) general = as_string(*g, where);
    r.entries.push_back({as_string(field(e, "divisor", where), where), as_bool(field(e, "vertical", where), where),
                         c[0], general, as_int(field(e, "e", where), where),
                         as_bool(field(e, "residue_killed", where), where),
                         as_string(field(e, "trace", where), where)});
  }
  for (const auto& z : as_array(field(j, "glue_failures", where), where)) {
    r.glue_failures.emplace_back(as_string(z, where));
  }
  if (as_bool(field(j, "passed", where), where) != r.passed()) fail(where, "\"passed\" disagrees with the entries");
  return r;
}

Json to_json(const SplitResult& r) {
  return {{"schema", kResultSchema},
          {"model", to_json(r.model)},
          {"alpha", to_json(r.rd)},
          {"psi", to_json(r.psi)},
          {"report", to_json(r.report)},
          {"trace", to_json(r.trace)},
          {"decomposition", to_json(r.decomposition)}};
}

SplitResult result_from_json(const Json& j) {
  allow_keys(j, {"schema", "model", "alpha", "psi", "report", "trace", "decomposition"}, "result");
  check_schema(j, kResultSchema);
  Model m = model_from_json(field(j, "model", "result"));
  RamificationData rd = alpha_from_json(field(j, "alpha", "result"));
  SplittingCharacter psi = psi_from_json(field(j, "psi", "result"));
  VerificationReport report = report_from_json(field(j, "report", "result"));
  BlowupTrace trace = trace_from_json(rd.modulus(), field(j, "trace", "result"));
  Decomposition dec = decomposition_from_json(field(j, "decomposition", "result"));
  return {std::move(m), std::move(rd), std::move(psi), std::move(report), std::move(trace), std::move(dec)};
}

Json bundle(const Model& m, const RamificationData& rd) { return {{"model", to_json(m)}, {"alpha", to_json(rd)}}; }

Inputs read_inputs(const std::vector<std::string>& texts) {
  Inputs in;
  auto take_model = [&](const Json& j) {
    if (in.model) fail("input", "more than one model given");
    in.model = model_from_json(j);
  };
  auto take_alpha = [&](const Json& j) {
    if (in.alpha) fail("input", "more than one alpha given");
    in.alpha = alpha_from_json(j);
  };
  for (const auto& text : texts) {
    Json j = parse(text);
    expect_object(j, "input");
    if (j.contains("schema")) {
      std::string s = as_string(j["schema"], "schema");
      if (s == kModelSchema) {
        take_model(j);
      } else if (s == kAlphaSchema) {
        take_alpha(j);
      } else if (s == kResultSchema) {
        take_model(field(j, "model", "result"));
        take_alpha(field(j, "alpha", "result"));
      } else {
        fail("input", "unsupported schema " + s);
      }
    } else if (j.contains("model") || j.contains("alpha")) {
      if (const Json* mj = optional_field(j, "model")) take_model(*mj);
      if (const Json* aj = optional_field(j, "alpha")) take_alpha(*aj);
    } else {
      fail("input", "no \"schema\" field and not a model/alpha bundle");
    }
  }
  return in;
}

// ---------------------------------------------------------------------------

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const Model& m, const RamificationData* rd) {
  std::ostringstream os;
  os << "graph dual {\n  node [shape=box];\n";
  for (const auto& [id, c] : m.components()) {
    const bool ram = rd && rd->ramified(id);
    std::string label = id.str();
    if (c.sign) label += " (" + sign_str(*c.sign) + ")";
    if (c.kind == ComponentKind::Exceptional) label += "\\nexceptional";
    if (ram) label += "\\nramified";
    os << "  " << quoted(id.str()) << " [label=" << quoted(label);
    if (ram) os << ", peripheries=2";
    if (c.kind == ComponentKind::Exceptional) os << ", style=dashed";
    os << "];\n";
  }
  for (const auto& [id, mk] : m.markers()) {
    const auto* d = m.horizontal_at(id);
    std::string label = id.str();
    if (d) label += "\\n" + d->id.str();
    const bool ram = rd && d && rd->ramified(d->id);
    os << "  " << quoted(id.str()) << " [shape=point, xlabel=" << quoted(label);
    if (ram) os << ", color=red";
    os << "];\n";
    os << "  " << quoted(mk.component.str()) << " -- " << quoted(id.str()) << " [style=dotted];\n";
  }
  for (const auto& [id, p] : m.points()) {
    std::string color = "black";
    std::string kind;
    if (rd && p.incident[0] != p.incident[1] && rd->ramified(p.incident[0]) && rd->ramified(p.incident[1])) {
      PointKind k = classify_point(m, *rd, id).kind;
      kind = to_string(k);
      color = k == PointKind::Hot ? "red" : k == PointKind::Cold ? "blue" : "darkgreen";
    }
    std::string label = kind.empty() ? id.str() : id.str() + " " + kind;
    os << "  " << quoted(p.incident[0].str()) << " -- " << quoted(p.incident[1].str()) << " [label=" << quoted(label)
       << ", color=" << color << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ramsplit::io
