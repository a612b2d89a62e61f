#include "ramsplit/model.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "graph.hpp"
#include "ramsplit/errors.hpp"

namespace ramsplit {

// ---------------------------------------------------------------------------
// Model

void Model::add_component(VerticalComponent c) {
  auto id = c.id;
  components_.insert_or_assign(id, std::move(c));
}

void Model::add_point(SingularPoint p) {
  if (p.incident[1] < p.incident[0]) std::swap(p.incident[0], p.incident[1]);
  auto id = p.id;
  points_.insert_or_assign(id, std::move(p));
}

void Model::add_marker(Marker m) {
  auto id = m.id;
  markers_.insert_or_assign(id, std::move(m));
}

void Model::add_horizontal(DistinguishedDivisor d) {
  auto id = d.id;
  horizontals_.insert_or_assign(id, std::move(d));
}

void Model::remove_point(const LocationId& id) { points_.erase(id); }
void Model::remove_marker(const LocationId& id) { markers_.erase(id); }

void Model::set_sign(const ComponentId& id, std::optional<Sign> sign) {
  auto it = components_.find(id);
  if (it == components_.end()) throw UnknownComponent(id.str());
  it->second.sign = sign;
}

void Model::clear_signs() {
  for (auto& [id, c] : components_) c.sign.reset();
}

const VerticalComponent& Model::component(const ComponentId& id) const {
  auto it = components_.find(id);
  if (it == components_.end()) throw UnknownComponent("unknown component " + id.str());
  return it->second;
}

const std::string& Model::location_field(const LocationId& id) const {
  if (auto it = points_.find(id); it != points_.end()) return it->second.residue_field;
  if (auto it = markers_.find(id); it != markers_.end()) return it->second.residue_field;
  throw UnknownLocation("unknown location " + id.str());
}

std::vector<ComponentId> Model::components_at(const LocationId& id) const {
  if (auto it = points_.find(id); it != points_.end()) {
    return {it->second.incident[0], it->second.incident[1]};
  }
  if (auto it = markers_.find(id); it != markers_.end()) return {it->second.component};
  throw UnknownLocation("unknown location " + id.str());
}

std::vector<LocationId> Model::locations_on(const ComponentId& id) const {
  std::vector<LocationId> out;
  for (const auto& [pid, p] : points_) {
    if (p.incident[0] == id || p.incident[1] == id) out.push_back(pid);
  }
  for (const auto& [mid, mk] : markers_) {
    if (mk.component == id) out.push_back(mid);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const DistinguishedDivisor* Model::horizontal_at(const LocationId& id) const {
  for (const auto& [did, d] : horizontals_) {
    if (d.location == id) return &d;
  }
  return nullptr;
}

ComponentId Model::fresh_component_id(const std::string& prefix) const {
  for (int n = 1;; ++n) {
    ComponentId id(prefix + std::to_string(n));
    if (!components_.count(id) && !horizontals_.count(DivisorId(id.str()))) return id;
  }
}

LocationId Model::fresh_location_id(const std::string& base) const {
  LocationId id(base);
  for (int n = 2; has_location(id); ++n) id = LocationId(base + "." + std::to_string(n));
  return id;
}

std::string Model::fresh_field(const std::string& base) const {
  std::set<std::string> used;
  for (const auto& [id, c] : components_) used.insert(c.residue_field);
  for (const auto& [id, p] : points_) used.insert(p.residue_field);
  for (const auto& [id, mk] : markers_) used.insert(mk.residue_field);
  for (const auto& [id, d] : horizontals_) used.insert(d.residue_field);
  std::string label = base;
  for (int n = 2; used.count(label); ++n) label = base + "." + std::to_string(n);
  return label;
}

// ---------------------------------------------------------------------------
// Graph views

namespace detail {

Multigraph induced(const Model& m, const std::set<ComponentId>& subset) {
  Multigraph g;
  for (const auto& id : subset) {
    g.index[id] = static_cast<int>(g.vertices.size());
    g.vertices.push_back(id);
  }
  g.incident.resize(g.vertices.size());
  for (const auto& [pid, p] : m.points()) {
    auto a = g.index.find(p.incident[0]);
    auto b = g.index.find(p.incident[1]);
    if (a == g.index.end() || b == g.index.end() || a->second == b->second) continue;
    int e = static_cast<int>(g.edges.size());
    g.edges.push_back({a->second, b->second, pid});
    g.incident[a->second].push_back(e);
    g.incident[b->second].push_back(e);
  }
  return g;
}

Multigraph whole(const Model& m) {
  std::set<ComponentId> all;
  for (const auto& [id, c] : m.components()) all.insert(id);
  return induced(m, all);
}

int connected_components(const Multigraph& g, std::vector<int>& label) {
  label.assign(g.vertices.size(), -1);
  int count = 0;
  for (int s = 0; s < static_cast<int>(g.vertices.size()); ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = count;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e : g.incident[u]) {
        int w = g.other(e, u);
        if (label[w] < 0) {
          label[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return count;
}

std::vector<bool> bridges(const Multigraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<bool> is_bridge(g.edges.size(), false);
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  // Iterative DFS keyed on the entering edge so parallel edges count as back edges.
  struct Frame {
    int vertex;
    int via_edge;
    std::size_t next;
  };
  for (int s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    std::vector<Frame> stack{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < g.incident[f.vertex].size()) {
        int e = g.incident[f.vertex][f.next++];
        if (e == f.via_edge) continue;
        int w = g.other(e, f.vertex);
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.vertex] = std::min(low[f.vertex], disc[w]);
        }
      } else {
        int v = f.vertex;
        int via = f.via_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int parent = stack.back().vertex;
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] > disc[parent]) is_bridge[via] = true;
        }
      }
    }
  }
  return is_bridge;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Validation

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NoComponents: return "NoComponents";
    case ViolationKind::DuplicateId: return "DuplicateId";
    case ViolationKind::SelfIntersection: return "SelfIntersection";
    case ViolationKind::UnknownComponent: return "UnknownComponent";
    case ViolationKind::UnknownLocation: return "UnknownLocation";
    case ViolationKind::Disconnected: return "Disconnected";
    case ViolationKind::DuplicateAttachment: return "DuplicateAttachment";
    case ViolationKind::CoefficientsAtMarker: return "CoefficientsAtMarker";
    case ViolationKind::MissingCoefficients: return "MissingCoefficients";
    case ViolationKind::NonUnitCoefficient: return "NonUnitCoefficient";
    case ViolationKind::BadFieldLabel: return "BadFieldLabel";
    case ViolationKind::InvalidSign: return "InvalidSign";
    case ViolationKind::ModulusMismatch: return "ModulusMismatch";
    case ViolationKind::UnknownDivisor: return "UnknownDivisor";
    case ViolationKind::ForeignLocal: return "ForeignLocal";
    case ViolationKind::SpaceMismatch: return "SpaceMismatch";
    case ViolationKind::ReciprocitySum: return "ReciprocitySum";
    case ViolationKind::SingleResidue: return "SingleResidue";
    case ViolationKind::HorizontalNotAtMarker: return "HorizontalNotAtMarker";
    case ViolationKind::HorizontalLocals: return "HorizontalLocals";
  }
  return "Unknown";
}

std::string to_string(const Violation& v) {
  return to_string(v.kind) + "(" + v.subject + "): " + v.detail;
}

namespace {

bool bad_field(const std::string& label) {
  return label.empty() || label.find(':') != std::string::npos;
}

}  // namespace

std::vector<Violation> validate_model(const Model& m) {
  std::vector<Violation> out;
  auto report = [&](ViolationKind k, const std::string& subject, std::string detail) {
    out.push_back({k, subject, std::move(detail)});
  };

  if (m.components().empty()) report(ViolationKind::NoComponents, "", "model has no components");

  for (const auto& [id, c] : m.components()) {
    if (bad_field(c.residue_field)) report(ViolationKind::BadFieldLabel, id.str(), "bad field label");
    if (m.has_divisor(DivisorId(id.str()))) {
      report(ViolationKind::DuplicateId, id.str(), "id used by a component and a divisor");
    }
  }
  for (const auto& [id, p] : m.points()) {
    if (m.is_marker(id)) report(ViolationKind::DuplicateId, id.str(), "id used by a point and a marker");
    if (bad_field(p.residue_field)) report(ViolationKind::BadFieldLabel, id.str(), "bad field label");
    for (const auto& c : p.incident) {
      if (!m.has_component(c)) {
        report(ViolationKind::UnknownComponent, id.str(), "point lies on unknown component " + c.str());
      }
    }
    if (p.incident[0] == p.incident[1]) {
      report(ViolationKind::SelfIntersection, id.str(),
             "point lists component " + p.incident[0].str() + " twice");
    }
  }
  for (const auto& [id, mk] : m.markers()) {
    if (bad_field(mk.residue_field)) report(ViolationKind::BadFieldLabel, id.str(), "bad field label");
    if (!m.has_component(mk.component)) {
      report(ViolationKind::UnknownComponent, id.str(), "marker on unknown component " + mk.component.str());
    }
  }

  std::map<LocationId, DivisorId> attached;
  for (const auto& [id, d] : m.horizontals()) {
    if (bad_field(d.residue_field)) report(ViolationKind::BadFieldLabel, id.str(), "bad field label");
    if (!m.has_location(d.location)) {
      report(ViolationKind::UnknownLocation, id.str(), "divisor attached at unknown location " + d.location.str());
      continue;
    }
    if (auto [it, fresh] = attached.emplace(d.location, id); !fresh) {
      report(ViolationKind::DuplicateAttachment, id.str(),
             "location " + d.location.str() + " already carries " + it->second.str());
    }
    if (m.is_marker(d.location)) {
      if (d.coefficients) {
        report(ViolationKind::CoefficientsAtMarker, id.str(), "coefficients are only meaningful at singular points");
      }
      continue;
    }
    if (!d.coefficients) {
      report(ViolationKind::MissingCoefficients, id.str(), "divisor at a singular point needs its coefficient pair");
      continue;
    }
    const auto& field = m.location_field(d.location);
    for (const auto& c : *d.coefficients) {
      if (c.kind != CoefficientKind::Unit) {
        report(ViolationKind::NonUnitCoefficient, id.str(), "coefficients at a singular point must be units");
      }
      if (c.kummer.space() && *c.kummer.space() != field) {
        report(ViolationKind::SpaceMismatch, id.str(), "coefficient class outside " + field);
      }
      if (!(c.kummer.modulus() == m.modulus())) {
        report(ViolationKind::ModulusMismatch, id.str(), "coefficient class has the wrong modulus");
      }
    }
  }

  auto g = detail::whole(m);
  std::vector<int> label;
  if (!g.vertices.empty() && detail::connected_components(g, label) > 1) {
    report(ViolationKind::Disconnected, "", "dual graph is not connected");
  }

  bool any_sign = std::any_of(m.components().begin(), m.components().end(),
                              [](const auto& kv) { return kv.second.sign.has_value(); });
  if (any_sign) {
    for (const auto& [id, c] : m.components()) {
      if (!c.sign) report(ViolationKind::InvalidSign, id.str(), "partial sign assignment");
    }
    for (const auto& [id, p] : m.points()) {
      if (!m.has_component(p.incident[0]) || !m.has_component(p.incident[1])) continue;
      auto s0 = m.component(p.incident[0]).sign;
      auto s1 = m.component(p.incident[1]).sign;
      if (s0 && s1 && *s0 == *s1) {
        report(ViolationKind::InvalidSign, id.str(), "adjacent components share a sign");
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Betti number and two-colouring

int betti(const Model& m, const std::set<ComponentId>& subgraph) {
  for (const auto& c : subgraph) m.component(c);
  auto g = detail::induced(m, subgraph);
  std::vector<int> label;
  int n = detail::connected_components(g, label);
  return static_cast<int>(g.edges.size()) - static_cast<int>(g.vertices.size()) + n;
}

Coloring two_color(const Model& m) {
  auto g = detail::whole(m);
  const int n = static_cast<int>(g.vertices.size());
  std::vector<int> color(n, -1), depth(n, 0), parent_edge(n, -1);

  // Self-intersections never enter the multigraph; report them as 1-cycles.
  for (const auto& [pid, p] : m.points()) {
    if (p.incident[0] == p.incident[1]) return Coloring{{}, {pid}};
  }

  std::vector<int> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = i;
  std::stable_partition(roots.begin(), roots.end(), [&](int v) {
    return m.component(g.vertices[v]).kind == ComponentKind::Original;
  });

  Coloring out;
  for (int root : roots) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int e : g.incident[u]) {
        int w = g.other(e, u);
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          depth[w] = depth[u] + 1;
          parent_edge[w] = e;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          // Closing edge first, then tree edges from w up to the meeting
          // point and back down to u.
          std::vector<LocationId> up_w, up_u;
          int a = w, b = u;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              up_w.push_back(g.edges[parent_edge[a]].id);
              a = g.other(parent_edge[a], a);
            } else {
              up_u.push_back(g.edges[parent_edge[b]].id);
              b = g.other(parent_edge[b], b);
            }
          }
          out.odd_cycle.push_back(g.edges[e].id);
          out.odd_cycle.insert(out.odd_cycle.end(), up_w.begin(), up_w.end());
          out.odd_cycle.insert(out.odd_cycle.end(), up_u.rbegin(), up_u.rend());
          out.signs.clear();
          return out;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) out.signs[g.vertices[v]] = color[v] == 0 ? Sign::Plus : Sign::Minus;
  return out;
}

Model with_signs(Model m, const Coloring& c) {
  m.clear_signs();
  for (const auto& [id, s] : c.signs) m.set_sign(id, s);
  return m;
}

// ---------------------------------------------------------------------------
// Blow-ups

BlowupResult blow_up(const Model& m, const LocationId& at) {
  BlowupResult result{m, {}};
  Model& out = result.model;
  BlowupMap& map = result.map;
  map.center = at;

  const bool singular = m.is_singular(at);
  if (!singular && !m.is_marker(at)) throw UnknownLocation("cannot blow up unknown location " + at.str());
  map.center_was_singular = singular;

  const std::string field = m.location_field(at);
  const std::vector<ComponentId> through = m.components_at(at);
  const ComponentId e = m.fresh_component_id("E");
  map.exceptional = e;

  if (singular) {
    out.remove_point(at);
  } else {
    out.remove_marker(at);
  }
  out.add_component({e, ComponentKind::Exceptional, m.fresh_field("k(" + e.str() + ")"), std::nullopt});
  for (const auto& c : through) {
    LocationId p = out.fresh_location_id(at.str() + "/" + c.str());
    out.add_point({p, {c, e}, field});
    map.side_points[c] = p;
  }
  if (const DistinguishedDivisor* d = m.horizontal_at(at)) {
    LocationId mk = out.fresh_location_id(at.str() + "/" + e.str());
    out.add_marker({mk, e, field});
    DistinguishedDivisor moved = *d;
    moved.location = mk;
    moved.coefficients.reset();
    out.add_horizontal(moved);
    map.moved_horizontals[d->id] = mk;
  }
  out.clear_signs();
  return result;
}

// ---------------------------------------------------------------------------
// Distinguished divisors

DistinguishedFlags distinguished_flags(CoefficientKind first, CoefficientKind second) {
  DistinguishedFlags f;
  f.regular = first == CoefficientKind::Unit || second == CoefficientKind::Unit;
  f.horizontal = first != CoefficientKind::Divisible && second != CoefficientKind::Divisible;
  f.transverse = first == CoefficientKind::Unit && second == CoefficientKind::Unit;
  return f;
}

DistinguishedFlags check_distinguished(const Model& m, const std::array<CoefficientKind, 2>& coeffs,
                                       const LocationId& at) {
  if (m.is_marker(at)) throw NotSingular(at.str() + " is a nonsingular marker");
  if (!m.is_singular(at)) throw UnknownLocation("unknown location " + at.str());
  return distinguished_flags(coeffs[0], coeffs[1]);
}

}  // namespace ramsplit
