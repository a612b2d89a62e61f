#include <algorithm>
#include <deque>
#include <stdexcept>

#include "graph.hpp"
#include "ramsplit/engine.hpp"
#include "ramsplit/errors.hpp"

namespace ramsplit {

std::string to_string(BlowupReason r) {
  switch (r) {
    case BlowupReason::BipartiteRepair: return "bipartite-repair";
    case BlowupReason::CycleBreak: return "cycle-break";
    case BlowupReason::ConnectingBreak: return "connecting-break";
    case BlowupReason::Padding: return "padding";
  }
  return "unknown";
}

namespace {

struct Through {
  std::string name;
  LocalWitt local;
};

std::vector<Through> ramified_through(const Model& m, const RamificationData& rd, const LocationId& at) {
  std::vector<Through> out;
  for (const auto& c : m.components_at(at)) {
    if (rd.ramified(c)) out.push_back({c.str(), rd.local(c, at)});
  }
  if (const auto* d = m.horizontal_at(at); d && rd.ramified(d->id)) {
    out.push_back({d->id.str(), rd.local(d->id, at)});
  }
  return out;
}

// Ratio n with v_second = n * v_first at a point joining two ramified components.
std::optional<Scalar> neutral_ratio(const Model& m, const RamificationData& rd, const LocationId& z) {
  const auto& [a, b] = m.points().at(z).incident;
  return solve_ratio(rd.local(b, z).value, rd.local(a, z).value);
}

}  // namespace

ResidueBlowup blowup_residue(const Model& m, const RamificationData& rd, const LocationId& at) {
  if (!m.has_location(at)) throw UnknownLocation("cannot blow up unknown location " + at.str());
  const PrimeModulus mod = rd.modulus();
  const auto through = ramified_through(m, rd, at);

  bool cold = false;
  if (through.size() == 2) {
    PointClass cls = classify(RamifiedMeeting{at, through[0].name, through[1].name, through[0].local, through[1].local});
    if (cls.kind == PointKind::Hot) {
      throw HotBlowupUnsupported("cannot blow up the hot point " + at.str());
    }
    cold = cls.kind == PointKind::Cold;
  }

  auto [model, map] = blow_up(m, at);
  RamificationData out(mod);
  for (const auto& [id, r] : rd.vertical()) {
    ResidueCharacter moved = r;
    if (auto it = moved.locals.find(at); it != moved.locals.end()) {
      LocalWitt w = it->second;
      moved.locals.erase(it);
      moved.locals.insert_or_assign(map.side_points.at(id), w);
    }
    out.set_vertical(id, std::move(moved));
  }
  for (const auto& [id, r] : rd.horizontal()) {
    if (auto it = map.moved_horizontals.find(id); it != map.moved_horizontals.end()) {
      ResidueCharacter moved;
      moved.locals.emplace(it->second, rd.local(id, at));
      out.set_horizontal(id, std::move(moved));
    } else {
      out.set_horizontal(id, r);
    }
  }

  const ComponentId e = map.exceptional;
  ResidueCharacter theta_e;
  if (cold) {
    const auto& incident = m.points().at(at).incident;
    const Scalar w = rd.local(incident[0], at).residue;
    const CharClass t = through[0].local.value + through[1].local.value;
    for (const auto& loc : model.locations_on(e)) theta_e.locals.emplace(loc, LocalWitt{Scalar::zero(mod), t});
    theta_e.locals.insert_or_assign(map.side_points.at(incident[0]), LocalWitt{-w, t});
    theta_e.locals.insert_or_assign(map.side_points.at(incident[1]), LocalWitt{w, t});
  } else {
    CharClass s(mod);
    for (const auto& t : through) s = s + t.local.value;
    if (!s.is_zero()) {
      for (const auto& loc : model.locations_on(e)) theta_e.locals.emplace(loc, LocalWitt{Scalar::zero(mod), s});
    }
  }
  const bool ramified = !theta_e.locals.empty();
  if (ramified) out.set_vertical(e, std::move(theta_e));

  std::optional<Scalar> multiple;
  if (map.center_was_singular && through.size() == 2 && !cold) {
    if (auto n = neutral_ratio(m, rd, at)) multiple = *n + Scalar::one(mod);
  }
  return {model, normalized(model, out), map, ramified, multiple};
}

namespace {

// Preference for keeping an edge out of the subdivisions: higher is kept.
int badness(const Model& m, const RamificationData& rd, const LocationId& z) {
  const auto& [a, b] = m.points().at(z).incident;
  const bool ra = rd.ramified(a), rb = rd.ramified(b);
  if (!ra && !rb) return 0;
  if (ra != rb) return 1;
  PointClass cls = classify(RamifiedMeeting{z, a.str(), b.str(), rd.local(a, z), rd.local(b, z)});
  switch (cls.kind) {
    case PointKind::Cold: return 2;
    case PointKind::Hot: return 5;
    case PointKind::Neutral: break;
  }
  auto n = neutral_ratio(m, rd, z);
  return n && (*n + Scalar::one(rd.modulus())).is_zero() ? 4 : 3;
}

bool fully_signed(const Model& m) {
  return std::all_of(m.components().begin(), m.components().end(),
                     [](const auto& kv) { return kv.second.sign.has_value(); });
}

void record(Staged& s, const LocationId& at, BlowupReason reason, const ResidueBlowup& b,
            const BlowupObserver& observer, std::optional<Scalar> multiple) {
  BlowupStep step{at, b.map.center_was_singular, reason, b.map.exceptional, b.exceptional_ramified, multiple};
  s.model = b.model;
  s.rd = b.rd;
  s.trace.steps.push_back(step);
  if (observer) observer(s.model, s.rd, step);
}

}  // namespace

Staged make_acceptable(const Model& m, const RamificationData& rd, const BlowupObserver& observer) {
  Staged s{m, rd, {}};
  auto g = detail::whole(m);
  const int n = static_cast<int>(g.vertices.size());

  // Maximum spanning forest under badness: every non-tree edge is the cheapest
  // edge on its fundamental cycle, so only those get subdivided.
  std::vector<int> order(g.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::vector<int> bad(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) bad[i] = badness(m, rd, g.edges[i].id);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return bad[x] > bad[y]; });

  detail::UnionFind uf(n);
  std::vector<std::vector<int>> tree(n);
  std::vector<int> non_tree;
  for (int e : order) {
    if (uf.unite(g.edges[e].u, g.edges[e].v)) {
      tree[g.edges[e].u].push_back(e);
      tree[g.edges[e].v].push_back(e);
    } else {
      non_tree.push_back(e);
    }
  }
  std::vector<int> color(n, -1);
  for (int root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int e : tree[u]) {
        int w = g.other(e, u);
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        }
      }
    }
  }
  std::vector<LocationId> odd;
  for (int e : non_tree) {
    if (color[g.edges[e].u] == color[g.edges[e].v]) odd.push_back(g.edges[e].id);
  }
  std::sort(odd.begin(), odd.end());
  for (const auto& z : odd) {
    ResidueBlowup b = blowup_residue(s.model, s.rd, z);
    record(s, z, BlowupReason::BipartiteRepair, b, observer, b.multiple);
  }

  if (odd.empty() && fully_signed(s.model)) return s;
  Coloring c = two_color(s.model);
  if (!c.bipartite()) throw std::logic_error("subdivision left an odd cycle");
  s.model = with_signs(s.model, c);
  return s;
}

namespace {

// Number of cycle clusters in the piece of the ramified graph containing
// `from` once the bridge z is removed.
int clusters_beyond(const Model& m, const std::set<ComponentId>& ram, const Decomposition& dec,
                    const LocationId& z, const ComponentId& from) {
  auto g = detail::induced(m, ram);
  std::vector<bool> seen(g.vertices.size(), false);
  std::deque<int> queue{g.index.at(from)};
  seen[queue.front()] = true;
  std::set<ComponentId> reached;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    reached.insert(g.vertices[u]);
    for (int e : g.incident[u]) {
      if (g.edges[e].id == z) continue;
      int w = g.other(e, u);
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  int count = 0;
  for (const auto& cluster : dec.cycle_clusters) {
    if (reached.count(*cluster.begin())) ++count;
  }
  return count;
}

}  // namespace

Staged reduce_betti(const Model& m, const RamificationData& rd, const BlowupObserver& observer) {
  for (const auto& meeting : doubly_ramified(m, rd)) {
    if (classify(meeting).kind == PointKind::Hot) throw IndexTooLarge(meeting.at.str());
  }
  Staged s{m, rd, {}};
  const PrimeModulus mod = rd.modulus();

  for (int round = 0;; ++round) {
    if (round > 100000) throw std::logic_error("reduce_betti did not terminate");
    const auto ram = s.rd.ramified_components();
    const Decomposition dec = decompose(s.model, ram);

    std::optional<LocationId> target;
    BlowupReason reason = BlowupReason::CycleBreak;
    for (PointRole wanted : {PointRole::Cycle, PointRole::Connecting}) {
      for (const auto& [z, role] : dec.point_roles) {
        if (role != wanted) continue;
        if (classify_point(s.model, s.rd, z).kind == PointKind::Neutral) {
          target = z;
          break;
        }
      }
      if (target) {
        reason = wanted == PointRole::Cycle ? BlowupReason::CycleBreak : BlowupReason::ConnectingBreak;
        break;
      }
    }
    if (!target) break;

    // The chain grows next to `c1`; the ramified exceptional components end
    // up hanging off `c2`. On a connecting point they go to the side that
    // reaches fewer clusters so the connecting path really falls apart.
    auto [c1, c2] = s.model.points().at(*target).incident;
    if (reason == BlowupReason::ConnectingBreak) {
      int k1 = clusters_beyond(s.model, ram, dec, *target, c1);
      int k2 = clusters_beyond(s.model, ram, dec, *target, c2);
      if (k1 < k2) std::swap(c1, c2);
    }
    auto n = solve_ratio(s.rd.local(c2, *target).value, s.rd.local(c1, *target).value);
    if (!n) throw RatioAbsent("no ratio at neutral point " + target->str());

    LocationId at = *target;
    for (std::int64_t k = 1;; ++k) {
      if (k > mod.ell()) throw std::logic_error("blow-up chain exceeded l insertions");
      ResidueBlowup b = blowup_residue(s.model, s.rd, at);
      record(s, at, reason, b, observer, *n + Scalar(mod, k));
      if (!b.exceptional_ramified) break;
      at = b.map.side_points.at(c1);
    }
  }
  return s;
}

}  // namespace ramsplit
