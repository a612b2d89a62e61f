#include "ramsplit/engine.hpp"
#include "ramsplit/errors.hpp"

namespace ramsplit {

std::string to_string(const AssignmentRule& r) {
  using K = AssignmentRule::Kind;
  switch (r.kind) {
    case K::Seed: return "seed";
    case K::I: return "I";
    case K::II: return "II(" + (r.n ? std::to_string(r.n->value()) : std::string("?")) + ")";
    case K::A: return "A";
    case K::B: return "B";
    case K::C: return "C";
    case K::GWFill: return "GW-fill";
    case K::ColdGlue: return std::string("ColdGlue(") + (r.sign == Sign::Minus ? "-" : "+") + ")";
  }
  return "unknown";
}

GluingCertificate cold_glue(const Model& m, const RamificationData& rd, const LocationId& z) {
  if (!m.is_singular(z)) {
    if (!m.has_location(z)) throw UnknownLocation("unknown location " + z.str());
    throw NotCold(z.str() + " is not a singular point");
  }
  const auto& [c1, c2] = m.points().at(z).incident;
  const LocalWitt w1 = rd.local(c1, z);
  const LocalWitt w2 = rd.local(c2, z);
  if (!rd.ramified(c1) || !rd.ramified(c2) || !w1.residue.is_unit() || !w2.residue.is_unit()) {
    throw NotCold(z.str() + " is not a cold point");
  }
  // Write the unramified parts as [a_i]*w with w the residue of C1. Choosing
  // the divisor b1*pi1 + a2*pi2 with b1 = a1^-1 moves both sides to the
  // common unramified part [a1/a2]*w.
  const Scalar w = w1.residue;
  const Scalar w_inv = w.inverse();
  const CharClass a1 = w_inv * w1.value;
  const CharClass a2 = w_inv * w2.value;
  GlueChoice choice{DivisorId(z.str() + "/D"), {-a1, a2}};
  LocalWitt left = w1;
  LocalWitt right = Scalar(w.modulus(), -1) * w2;
  CharClass theta_circ = left.value - w * a2;
  return {z, c1, c2, choice, left, right, theta_circ, w};
}

namespace {

// side_first = theta + (pi_second')*w and side_second = theta + (pi_first')*w,
// where pi' = coefficient * pi shifts the unramified part by -w*[coefficient].
bool sides_glue(const LocalWitt& first, const LocalWitt& second, const GlueChoice& choice,
                const CharClass* theta_circ, const Scalar* omega) {
  if (!(first.residue == second.residue)) return false;
  if (omega && !(first.residue == *omega)) return false;
  try {
    const Scalar& w = first.residue;
    CharClass t1 = first.value - w * choice.coefficients[1];
    CharClass t2 = second.value - w * choice.coefficients[0];
    if (!(t1 == t2)) return false;
    return !theta_circ || t1 == *theta_circ;
  } catch (const SpaceMismatch&) {
    return false;
  } catch (const ModulusMismatch&) {
    return false;
  }
}

}  // namespace

bool glue_check(const GluingCertificate& cert) {
  return sides_glue(cert.left, cert.right, cert.choice, &cert.theta_circ, &cert.omega);
}

bool glue_check(const Model& m, const SplittingCharacter& psi, const LocationId& z) {
  if (!m.is_singular(z)) {
    if (!m.has_location(z)) throw UnknownLocation("unknown location " + z.str());
    throw NotSingular(z.str() + " is not a singular point");
  }
  const auto& [c1, c2] = m.points().at(z).incident;
  auto local = [&](const ComponentId& c) -> const LocalWitt& {
    auto it = psi.components.find(c);
    if (it == psi.components.end()) throw MissingLocal("psi has no data on " + c.str());
    auto jt = it->second.locals.find(z);
    if (jt == it->second.locals.end()) throw MissingLocal("psi on " + c.str() + " has no local at " + z.str());
    return jt->second;
  };
  const LocalWitt& first = local(c1);
  const LocalWitt& second = local(c2);
  auto it = psi.choices.find(z);
  if (it != psi.choices.end()) return sides_glue(first, second, it->second, nullptr, nullptr);
  GlueChoice trivial{DivisorId(z.str() + "/D"), {CharClass(psi.modulus), CharClass(psi.modulus)}};
  return sides_glue(first, second, trivial, nullptr, nullptr);
}

std::int64_t LiftedCharacter::order() const {
  for (const auto& [at, w] : constraints_) {
    if (!w.is_zero()) return modulus_.ell();
  }
  return 1;
}

LocalWitt LiftedCharacter::restriction(const LocationId& at) const {
  auto it = constraints_.find(at);
  return it == constraints_.end() ? LocalWitt::zero(modulus_) : it->second;
}

LiftedCharacter grunwald_wang_lift(PrimeModulus modulus, const std::string& space,
                                   const std::vector<std::pair<LocationId, LocalWitt>>& locals) {
  LiftedCharacter out(modulus, space);
  for (const auto& [at, w] : locals) {
    auto [it, inserted] = out.constraints_.emplace(at, w);
    if (!inserted && !(it->second == w)) {
      throw InconsistentLocals("conflicting local constraints at " + at.str());
    }
  }
  return out;
}

std::map<ComponentId, LiftedCharacter> lambda_lift(const Model& m, const SplittingCharacter& psi) {
  std::map<ComponentId, LiftedCharacter> out;
  for (const auto& [id, p] : psi.components) {
    std::vector<std::pair<LocationId, LocalWitt>> locals(p.locals.begin(), p.locals.end());
    out.emplace(id, grunwald_wang_lift(psi.modulus, m.component(id).residue_field, locals));
  }
  return out;
}

}  // namespace ramsplit
