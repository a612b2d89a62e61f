#include "ramsplit/engine.hpp"
#include "ramsplit/errors.hpp"

namespace ramsplit {

bool VerificationReport::passed() const {
  if (!glue_failures.empty()) return false;
  for (const auto& e : entries) {
    if (!e.residue_killed) return false;
  }
  return true;
}

namespace {

DivisorVerdict check_vertical(const Model& m, const RamificationData& rd, const SplittingCharacter& psi,
                              const ComponentId& c) {
  DivisorVerdict v{c.str(), true, 'a', std::nullopt, 1, false, ""};
  auto it = psi.components.find(c);
  if (it == psi.components.end() || !it->second.global_marker) {
    v.trace = "no global marker for psi on " + c.str();
    return v;
  }
  const ComponentPsi& p = it->second;
  if (!p.global_marker->is_unit()) {
    v.trace = "global marker is zero: <psi> does not contain theta";
    return v;
  }
  for (const auto& loc : m.locations_on(c)) {
    auto jt = p.locals.find(loc);
    if (jt == p.locals.end()) {
      v.trace = "psi has no local at " + loc.str();
      return v;
    }
    if (!(jt->second == *p.global_marker * rd.local(c, loc))) {
      v.trace = "psi at " + loc.str() + " is not " + std::to_string(p.global_marker->value()) + "*theta";
      return v;
    }
  }
  v.residue_killed = true;
  v.trace = "psi = " + std::to_string(p.global_marker->value()) + "*theta, restriction vanishes";
  return v;
}

DivisorVerdict check_horizontal(const Model& m, const RamificationData& rd, const SplittingCharacter& psi,
                                const DivisorId& d) {
  const PrimeModulus mod = rd.modulus();
  DivisorVerdict v{d.str(), false, 'b', std::nullopt, 1, false, ""};
  const LocationId at = m.horizontals().at(d).location;
  if (!m.is_marker(at)) {
    v.trace = "divisor does not sit at a marker";
    return v;
  }
  const ComponentId host = m.markers().at(at).component;
  const LocalWitt theta = rd.local(d, at);
  auto it = psi.components.find(host);
  const LocalWitt* w = nullptr;
  if (it != psi.components.end()) {
    auto jt = it->second.locals.find(at);
    if (jt != it->second.locals.end()) w = &jt->second;
  }
  if (!w) {
    v.tree_case = rd.ramified(host) ? 'd' : 'c';
    v.trace = "psi on " + host.str() + " has no local at " + at.str();
    return v;
  }
  if (w->residue.is_unit()) {
    v.tree_case = 'b';
    v.e = mod.ell();
    v.residue_killed = true;
    v.trace = "psi ramified along the divisor: e = l kills an order-l residue";
    return v;
  }
  if (!rd.ramified(host)) {
    v.tree_case = 'c';
    v.residue_killed = w->value == theta.value && theta.residue.is_zero();
    v.trace = v.residue_killed ? "psi at " + at.str() + " equals theta_D"
                               : "psi at " + at.str() + " differs from theta_D";
    return v;
  }
  v.tree_case = 'd';
  if (!theta.residue.is_zero() || !rd.local(host, at).residue.is_zero()) {
    v.trace = "theta_D or theta_" + host.str() + " ramified at " + at.str();
    return v;
  }
  auto n = solve_ratio(theta.value, w->value);
  v.residue_killed = n.has_value();
  v.trace = v.residue_killed ? "theta_D lies on the line of psi at " + at.str()
                             : "line mismatch: theta_D not in <psi> at " + at.str();
  return v;
}

}  // namespace

VerificationReport verify_splitting(const Model& m, const RamificationData& rd, const SplittingCharacter& psi) {
  VerificationReport report;
  const auto ram = rd.ramified_components();
  const bool general = betti(m, ram) > 0;
  std::set<ComponentId> cyclic;
  if (general) {
    const Decomposition dec = decompose(m, ram);
    for (const auto* groups : {&dec.cycle_clusters, &dec.connecting_paths}) {
      for (const auto& g : *groups) cyclic.insert(g.begin(), g.end());
    }
  }

  for (const auto& c : ram) {
    DivisorVerdict v = check_vertical(m, rd, psi, c);
    if (general) v.general_case = cyclic.count(c) ? "ii" : "i";
    report.entries.push_back(std::move(v));
  }
  for (const auto& [d, r] : rd.horizontal()) {
    DivisorVerdict v = check_horizontal(m, rd, psi, d);
    if (general) {
      const LocationId at = m.horizontals().at(d).location;
      const ComponentId host = m.is_marker(at) ? m.markers().at(at).component : ComponentId();
      if (v.tree_case == 'b') {
        v.general_case = "iii";
      } else if (!rd.ramified(host)) {
        v.general_case = "iv";
      } else {
        v.general_case = cyclic.count(host) ? "v" : "i";
      }
    }
    report.entries.push_back(std::move(v));
  }

  for (const auto& [z, p] : m.points()) {
    try {
      if (!glue_check(m, psi, z)) report.glue_failures.push_back(z);
    } catch (const MissingLocal&) {
      report.glue_failures.push_back(z);
    }
  }
  return report;
}

}  // namespace ramsplit
