#include <deque>

#include "graph.hpp"
#include "ramsplit/engine.hpp"
#include "ramsplit/errors.hpp"

namespace ramsplit {

namespace {

struct Multiplier {
  Scalar c;
  AssignmentRule rule;
};

class Assigner {
 public:
  Assigner(const Model& m, const RamificationData& rd) : m_(m), rd_(rd), psi_(rd.modulus()) {}

  void fix(const ComponentId& c, Multiplier mult) { mult_.insert_or_assign(c, std::move(mult)); }

  // Rules I and II along every already-processed neighbour; all must agree.
  void extend(const std::vector<ComponentId>& order) {
    for (const auto& cd : order) {
      if (!rd_.ramified(cd)) continue;
      if (mult_.count(cd)) throw ConflictingConstraints(cd.str() + " appears twice in the order");
      std::optional<Multiplier> chosen;
      for (const auto& z : m_.locations_on(cd)) {
        if (!m_.is_singular(z)) continue;
        const auto& inc = m_.points().at(z).incident;
        const ComponentId& ci = inc[0] == cd ? inc[1] : inc[0];
        auto it = mult_.find(ci);
        if (it == mult_.end()) continue;
        Multiplier implied = propagate(it->second.c, ci, cd, z);
        if (!chosen) {
          chosen = implied;
        } else if (!(chosen->c == implied.c)) {
          throw ConflictingConstraints("rules through " + z.str() + " and earlier points disagree on " + cd.str());
        }
      }
      if (!chosen) chosen = Multiplier{Scalar::one(rd_.modulus()), AssignmentRule::of(AssignmentRule::Kind::Seed)};
      mult_.emplace(cd, *chosen);
    }
  }

  SplittingCharacter finish() {
    const PrimeModulus mod = rd_.modulus();
    for (const auto& [c, mult] : mult_) {
      ComponentPsi p;
      p.global_marker = mult.c;
      for (const auto& loc : m_.locations_on(c)) {
        p.locals.emplace(loc, mult.c * rd_.local(c, loc));
        p.rules.emplace(loc, mult.rule);
      }
      psi_.components.emplace(c, std::move(p));
    }

    // Unramified components after all ramified ones, in id order.
    for (const auto& [u, comp] : m_.components()) {
      if (rd_.ramified(u)) continue;
      ComponentPsi p;
      for (const auto& loc : m_.locations_on(u)) {
        using K = AssignmentRule::Kind;
        if (m_.is_singular(loc)) {
          const auto& inc = m_.points().at(loc).incident;
          const ComponentId& other = inc[0] == u ? inc[1] : inc[0];
          auto it = psi_.components.find(other);
          if (it != psi_.components.end()) {
            p.locals.emplace(loc, it->second.locals.at(loc));
            p.rules.emplace(loc, AssignmentRule::of(K::A));
          } else {
            p.locals.emplace(loc, LocalWitt::zero(mod));
            p.rules.emplace(loc, AssignmentRule::of(K::B));
          }
        } else if (const auto* d = m_.horizontal_at(loc); d && rd_.ramified(d->id)) {
          p.locals.emplace(loc, LocalWitt{Scalar::zero(mod), rd_.local(d->id, loc).value});
          p.rules.emplace(loc, AssignmentRule::of(K::C));
        } else {
          p.locals.emplace(loc, LocalWitt::zero(mod));
          p.rules.emplace(loc, AssignmentRule::of(K::GWFill));
        }
      }
      psi_.components.emplace(u, std::move(p));
    }

    for (const auto& [z, point] : m_.points()) {
      const auto& [a, b] = point.incident;
      if (rd_.ramified(a) && rd_.ramified(b) && rd_.local(a, z).residue.is_unit() &&
          rd_.local(b, z).residue.is_unit()) {
        GluingCertificate cert = cold_glue(m_, rd_, z);
        psi_.choices.emplace(z, cert.choice);
        psi_.certificates.push_back(std::move(cert));
      }
    }

    for (auto& [c, p] : psi_.components) {
      std::vector<std::pair<LocationId, LocalWitt>> locals(p.locals.begin(), p.locals.end());
      p.order = grunwald_wang_lift(mod, m_.component(c).residue_field, locals).order();
    }
    return std::move(psi_);
  }

 private:
  Multiplier propagate(const Scalar& ci_mult, const ComponentId& ci, const ComponentId& cd, const LocationId& z) const {
    const LocalWitt wi = rd_.local(ci, z);
    const LocalWitt wd = rd_.local(cd, z);
    if (wi.residue.is_unit() && wd.residue.is_unit()) {
      return {-ci_mult, AssignmentRule::of(AssignmentRule::Kind::I)};
    }
    if (!same_line(wi.value, wd.value)) throw HotPointEncountered(z.str());
    auto n = solve_ratio(wi.value, wd.value);
    if (!n || n->is_zero()) throw RatioAbsent("no ratio between " + ci.str() + " and " + cd.str() + " at " + z.str());
    return {ci_mult * *n, {AssignmentRule::Kind::II, *n, std::nullopt}};
  }

  const Model& m_;
  const RamificationData& rd_;
  SplittingCharacter psi_;
  std::map<ComponentId, Multiplier> mult_;
};

}  // namespace

SplittingCharacter assign_tree(const Model& m, const RamificationData& rd, const std::vector<ComponentId>& order) {
  for (const auto& c : order) m.component(c);
  Assigner a(m, rd);
  a.extend(order);
  // Ramified components missing from the order are seeded in id order.
  std::vector<ComponentId> rest;
  std::set<ComponentId> listed(order.begin(), order.end());
  for (const auto& c : rd.ramified_components()) {
    if (!listed.count(c)) rest.push_back(c);
  }
  a.extend(rest);
  return a.finish();
}

SplittingCharacter assign_character(const Model& m, const RamificationData& rd, const Decomposition& dec) {
  Assigner a(m, rd);
  std::set<ComponentId> fixed;
  const PrimeModulus mod = rd.modulus();
  for (const auto* groups : {&dec.cycle_clusters, &dec.connecting_paths}) {
    for (const auto& group : *groups) {
      for (const auto& c : group) {
        auto sign = m.component(c).sign;
        if (!sign) throw ConflictingConstraints(c.str() + " has no sign; the model is not acceptable");
        Scalar mult = *sign == Sign::Plus ? Scalar::one(mod) : Scalar(mod, -1);
        a.fix(c, {mult, {AssignmentRule::Kind::ColdGlue, std::nullopt, sign}});
        fixed.insert(c);
      }
    }
  }

  // Tails grow out of their cluster, isolated trees from their lowest id.
  const auto ram = rd.ramified_components();
  auto g = detail::induced(m, ram);
  std::vector<bool> seen(g.vertices.size(), false);
  std::deque<int> queue;
  for (const auto& c : fixed) {
    seen[g.index.at(c)] = true;
    queue.push_back(g.index.at(c));
  }
  std::vector<ComponentId> order;
  auto drain = [&] {
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int e : g.incident[u]) {
        int w = g.other(e, u);
        if (seen[w]) continue;
        seen[w] = true;
        order.push_back(g.vertices[w]);
        queue.push_back(w);
      }
    }
  };
  drain();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (seen[v]) continue;
    seen[v] = true;
    order.push_back(g.vertices[v]);
    queue.push_back(static_cast<int>(v));
    drain();
  }
  a.extend(order);
  return a.finish();
}

}  // namespace ramsplit
