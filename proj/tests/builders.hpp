#pragma once

// Small helpers for writing configurations by hand in tests.

#include <string>

#include "oracles.hpp"
#include "ramsplit/brauer.hpp"
#include "ramsplit/engine.hpp"
#include "ramsplit/model.hpp"

namespace rs_test {

using namespace ramsplit;

/// Components get field "k(<id>)", locations "k(<id>)" as well.
struct Config {
  PrimeModulus mod;
  Model m;
  RamificationData rd;

  explicit Config(std::int64_t ell) : mod(ell), m(mod), rd(mod) {}

  ComponentId comp(const std::string& id) {
    m.add_component({ComponentId(id), ComponentKind::Original, "k(" + id + ")", std::nullopt});
    return ComponentId(id);
  }
  LocationId point(const std::string& id, const std::string& a, const std::string& b) {
    m.add_point({LocationId(id), {ComponentId(a), ComponentId(b)}, "k(" + id + ")"});
    return LocationId(id);
  }
  LocationId marker(const std::string& id, const std::string& on) {
    m.add_marker({LocationId(id), ComponentId(on), "k(" + id + ")"});
    return LocationId(id);
  }

  /// Generator `name` of the residue field at a location.
  CharClass gen(const std::string& at, const std::string& name, std::int64_t coeff = 1) const {
    return CharClass::generator(mod, {"k(" + at + ")", name}, coeff);
  }
  CharClass zero() const { return CharClass(mod); }
  Scalar s(std::int64_t v) const { return Scalar(mod, v); }

  /// Make `c` ramified with the given datum at `at`.
  void set(const std::string& c, const std::string& at, std::int64_t residue, const CharClass& value) {
    ResidueCharacter r;
    if (auto it = rd.vertical().find(ComponentId(c)); it != rd.vertical().end()) r = it->second;
    r.locals.insert_or_assign(LocationId(at), LocalWitt{s(residue), value});
    rd.set_vertical(ComponentId(c), r);
  }
  /// Ramified horizontal divisor at a marker.
  void horizontal(const std::string& id, const std::string& at, const CharClass& value) {
    m.add_horizontal({DivisorId(id), LocationId(at), "k(" + id + ")", std::nullopt});
    ResidueCharacter r;
    r.locals.emplace(LocationId(at), LocalWitt{s(0), value});
    rd.set_horizontal(DivisorId(id), r);
  }

  RamificationData data() const { return normalized(m, rd); }
};

/// The oracle graph as a model: components "V0".., one point per parallel
/// edge named "e<u><v>.<k>".
inline Model model_of(const oracle::Graph& g, std::int64_t ell = 3) {
  Model m{PrimeModulus(ell)};
  for (int v = 0; v < g.n; ++v) {
    std::string id = "V" + std::to_string(v);
    m.add_component({ComponentId(id), ComponentKind::Original, "k(" + id + ")", std::nullopt});
  }
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      for (int k = 0; k < g.mult[u][v]; ++k) {
        std::string id = "e" + std::to_string(u) + std::to_string(v) + "." + std::to_string(k);
        m.add_point({LocationId(id), {ComponentId("V" + std::to_string(u)), ComponentId("V" + std::to_string(v))},
                     "k(" + id + ")"});
      }
  return m;
}

inline std::set<ComponentId> all_components(const Model& m) {
  std::set<ComponentId> out;
  for (const auto& [id, c] : m.components()) out.insert(id);
  return out;
}

}  // namespace rs_test
