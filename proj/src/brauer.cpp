#include "ramsplit/brauer.hpp"

#include <algorithm>

#include "ramsplit/errors.hpp"

namespace ramsplit {

std::set<ComponentId> RamificationData::ramified_components() const {
  std::set<ComponentId> out;
  for (const auto& [id, r] : vertical_) out.insert(id);
  return out;
}

LocalWitt RamificationData::local(const ComponentId& id, const LocationId& at) const {
  auto it = vertical_.find(id);
  if (it == vertical_.end()) return LocalWitt::zero(modulus_);
  auto jt = it->second.locals.find(at);
  return jt == it->second.locals.end() ? LocalWitt::zero(modulus_) : jt->second;
}

LocalWitt RamificationData::local(const DivisorId& id, const LocationId& at) const {
  auto it = horizontal_.find(id);
  if (it == horizontal_.end()) return LocalWitt::zero(modulus_);
  auto jt = it->second.locals.find(at);
  return jt == it->second.locals.end() ? LocalWitt::zero(modulus_) : jt->second;
}

RamificationData normalized(const Model& m, const RamificationData& rd) {
  RamificationData out = rd;
  for (const auto& [id, r] : rd.vertical()) {
    if (!m.has_component(id)) continue;
    ResidueCharacter filled = r;
    for (const auto& loc : m.locations_on(id)) {
      filled.locals.emplace(loc, LocalWitt::zero(rd.modulus()));
    }
    out.set_vertical(id, std::move(filled));
  }
  return out;
}

std::string to_string(PointKind k) {
  switch (k) {
    case PointKind::Hot: return "hot";
    case PointKind::Cold: return "cold";
    case PointKind::Neutral: return "neutral";
  }
  return "unknown";
}

namespace {

void check_local(const Model& m, const std::string& owner, const LocationId& at, const LocalWitt& w,
                 std::vector<Violation>& out) {
  if (!(w.residue.modulus() == m.modulus()) || !(w.value.modulus() == m.modulus())) {
    out.push_back({ViolationKind::ModulusMismatch, owner, "local at " + at.str() + " has the wrong modulus"});
    return;
  }
  const auto& field = m.location_field(at);
  if (w.value.space() && *w.value.space() != field) {
    out.push_back({ViolationKind::SpaceMismatch, owner,
                   "value at " + at.str() + " lives in " + *w.value.space() + ", expected " + field});
  }
}

// Ramified divisors through a location with their residues there.
std::vector<std::pair<std::string, Scalar>> residues_at(const Model& m, const RamificationData& rd,
                                                        const LocationId& at) {
  std::vector<std::pair<std::string, Scalar>> out;
  for (const auto& c : m.components_at(at)) {
    if (rd.ramified(c)) out.emplace_back(c.str(), rd.local(c, at).residue);
  }
  if (const auto* d = m.horizontal_at(at); d && rd.ramified(d->id)) {
    out.emplace_back(d->id.str(), rd.local(d->id, at).residue);
  }
  return out;
}

}  // namespace

std::vector<Violation> validate_reciprocity(const Model& m, const RamificationData& rd) {
  std::vector<Violation> out;
  if (!(rd.modulus() == m.modulus())) {
    out.push_back({ViolationKind::ModulusMismatch, "",
                   "ramification data mod " + std::to_string(rd.modulus().ell()) + " on a model mod " +
                       std::to_string(m.modulus().ell())});
    return out;
  }

  for (const auto& [id, r] : rd.vertical()) {
    if (!m.has_component(id)) {
      out.push_back({ViolationKind::UnknownDivisor, id.str(), "no such vertical component"});
      continue;
    }
    auto on = m.locations_on(id);
    for (const auto& [at, w] : r.locals) {
      if (!std::binary_search(on.begin(), on.end(), at)) {
        out.push_back({ViolationKind::ForeignLocal, id.str(), "location " + at.str() + " is not on this component"});
        continue;
      }
      check_local(m, id.str(), at, w, out);
    }
  }

  for (const auto& [id, r] : rd.horizontal()) {
    if (!m.has_divisor(id)) {
      out.push_back({ViolationKind::UnknownDivisor, id.str(), "no such horizontal divisor"});
      continue;
    }
    const auto& d = m.horizontals().at(id);
    if (!m.is_marker(d.location)) {
      out.push_back({ViolationKind::HorizontalNotAtMarker, id.str(),
                     "ramified horizontal divisor must sit at a nonsingular marker"});
    }
    if (r.locals.size() != 1 || !r.locals.count(d.location)) {
      out.push_back({ViolationKind::HorizontalLocals, id.str(), "needs exactly one local, at " + d.location.str()});
      continue;
    }
    const LocalWitt& w = r.locals.begin()->second;
    if (m.has_location(d.location)) check_local(m, id.str(), d.location, w, out);
    if (!w.residue.is_zero()) {
      out.push_back({ViolationKind::HorizontalLocals, id.str(), "residue field is complete: residue must be 0"});
    }
    if (w.value.is_zero()) {
      out.push_back({ViolationKind::HorizontalLocals, id.str(), "ramified divisor with zero character"});
    }
  }
  if (!out.empty()) return out;

  auto check_location = [&](const LocationId& at) {
    auto res = residues_at(m, rd, at);
    if (res.size() == 2) {
      if (!(res[0].second + res[1].second).is_zero()) {
        out.push_back({ViolationKind::ReciprocitySum, at.str(),
                       "residues of " + res[0].first + " and " + res[1].first + " sum to " +
                           std::to_string((res[0].second + res[1].second).value())});
      }
    } else if (res.size() == 1 && !res[0].second.is_zero()) {
      out.push_back({ViolationKind::SingleResidue, at.str(),
                     "only " + res[0].first + " is ramified here but its residue is " +
                         std::to_string(res[0].second.value())});
    }
  };
  for (const auto& [at, p] : m.points()) check_location(at);
  for (const auto& [at, mk] : m.markers()) check_location(at);
  return out;
}

std::vector<RamifiedMeeting> doubly_ramified(const Model& m, const RamificationData& rd) {
  std::vector<RamifiedMeeting> out;
  for (const auto& [at, p] : m.points()) {
    const auto& [a, b] = p.incident;
    if (a != b && rd.ramified(a) && rd.ramified(b)) {
      out.push_back({at, a.str(), b.str(), rd.local(a, at), rd.local(b, at)});
    }
  }
  for (const auto& [at, mk] : m.markers()) {
    const auto* d = m.horizontal_at(at);
    if (d && rd.ramified(mk.component) && rd.ramified(d->id)) {
      out.push_back({at, mk.component.str(), d->id.str(), rd.local(mk.component, at), rd.local(d->id, at)});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.at < y.at; });
  return out;
}

PointClass classify(const RamifiedMeeting& meeting) {
  const auto& r1 = meeting.first_local.residue;
  const auto& r2 = meeting.second_local.residue;
  if (r1.is_unit() && r2.is_unit()) return {PointKind::Cold, meeting, std::nullopt};
  // Reciprocity makes "one residue zero" imply "both zero" on valid data.
  if (!same_line(meeting.first_local.value, meeting.second_local.value)) {
    return {PointKind::Hot, meeting, std::nullopt};
  }
  return {PointKind::Neutral, meeting, solve_ratio(meeting.first_local.value, meeting.second_local.value)};
}

PointClass classify_point(const Model& m, const RamificationData& rd, const LocationId& z) {
  if (!m.has_location(z)) throw UnknownLocation("unknown location " + z.str());
  for (const auto& meeting : doubly_ramified(m, rd)) {
    if (meeting.at == z) return classify(meeting);
  }
  throw NotDoublyRamified(z.str() + " is not a meeting of two ramified divisors");
}

void require_valid(const Model& m, const RamificationData& rd) {
  std::vector<std::string> messages;
  for (const auto& v : validate_model(m)) messages.push_back(to_string(v));
  if (messages.empty()) {
    for (const auto& v : validate_reciprocity(m, rd)) messages.push_back(to_string(v));
  }
  if (!messages.empty()) throw ValidationError(std::move(messages));
}

IndexReport index_criterion(const Model& m, const RamificationData& rd) {
  require_valid(m, rd);
  if (rd.empty()) return {IndexVerdict::Unramified, std::nullopt};
  for (const auto& meeting : doubly_ramified(m, rd)) {
    if (classify(meeting).kind == PointKind::Hot) return {IndexVerdict::EllSquared, meeting.at};
  }
  return {IndexVerdict::Ell, std::nullopt};
}

}  // namespace ramsplit
