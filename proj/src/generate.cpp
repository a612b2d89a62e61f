#include <algorithm>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "ramsplit/brauer.hpp"
#include "ramsplit/errors.hpp"

namespace ramsplit {

namespace {

// std::uniform_*_distribution is implementation-defined; fixtures must not
// depend on the standard library, so draws are made by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

std::string label(char prefix, int n) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%c%02d", prefix, n);
  return buf;
}

class Builder {
 public:
  Builder(std::uint64_t seed, const GenParams& p)
      : p_(p), mod_(p.ell), rng_(seed), model_(mod_), rd_(mod_) {}

  std::pair<Model, RamificationData> run();

 private:
  static constexpr int kPool = 3;

  CharClass random_class(const std::string& space, bool nonzero) {
    for (;;) {
      CharClass c(mod_);
      for (int g = 1; g <= kPool; ++g) {
        if (rng_.chance(0.5)) {
          c = c + CharClass::generator(mod_, {space, "t" + std::to_string(g)},
                                       static_cast<std::int64_t>(rng_.below(mod_.ell())));
        }
      }
      if (!nonzero || !c.is_zero()) return c;
    }
  }
  Scalar random_unit() { return Scalar(mod_, 1 + static_cast<std::int64_t>(rng_.below(mod_.ell() - 1))); }

  void set_local(const ComponentId& c, const LocationId& at, LocalWitt w) {
    auto r = rd_.vertical().count(c) ? rd_.vertical().at(c) : ResidueCharacter{};
    r.locals.insert_or_assign(at, std::move(w));
    rd_.set_vertical(c, std::move(r));
  }

  LocationId add_edge(const ComponentId& a, const ComponentId& b);
  void decorate_ramified_edge(const LocationId& at, const ComponentId& a, const ComponentId& b);
  void add_markers();

  GenParams p_;
  PrimeModulus mod_;
  Rng rng_;
  Model model_;
  RamificationData rd_;
  std::set<ComponentId> ram_;
  int next_point_ = 1;
  int next_divisor_ = 1;
};

LocationId Builder::add_edge(const ComponentId& a, const ComponentId& b) {
  LocationId id(label('z', next_point_++));
  std::string field = "k(" + id.str() + ")";
  model_.add_point({id, {a, b}, field});
  if (rng_.chance(0.2)) {
    // an unramified distinguished divisor D_z with unit coefficients
    DivisorId d("Dz" + id.str().substr(1));
    std::array<Coefficient, 2> coeffs{Coefficient::unit(random_class(field, false)),
                                      Coefficient::unit(random_class(field, false))};
    model_.add_horizontal({d, id, "k(" + d.str() + ")", coeffs});
  }
  return id;
}

void Builder::decorate_ramified_edge(const LocationId& at, const ComponentId& a, const ComponentId& b) {
  const std::string& field = model_.location_field(at);
  if (p_.hot_allowed && rng_.chance(0.2)) {
    CharClass v1 = CharClass::generator(mod_, {field, "t1"});
    CharClass v2 = rng_.chance(0.3) ? CharClass(mod_) : CharClass::generator(mod_, {field, "t2"});
    if (rng_.chance(0.5)) std::swap(v1, v2);
    set_local(a, at, {Scalar::zero(mod_), v1});
    set_local(b, at, {Scalar::zero(mod_), v2});
    return;
  }
  if (rng_.chance(p_.cold_fraction)) {
    Scalar r = random_unit();
    set_local(a, at, {r, random_class(field, false)});
    set_local(b, at, {-r, random_class(field, false)});
    return;
  }
  CharClass v1 = rng_.chance(0.1) ? CharClass(mod_) : random_class(field, true);
  CharClass v2 = random_unit() * v1;
  if (rng_.chance(0.5)) std::swap(v1, v2);
  set_local(a, at, {Scalar::zero(mod_), v1});
  set_local(b, at, {Scalar::zero(mod_), v2});
}

void Builder::add_markers() {
  std::vector<ComponentId> all;
  for (const auto& [id, c] : model_.components()) all.push_back(id);
  int count = rng_.range(0, 3);
  for (int k = 1; k <= count; ++k) {
    const ComponentId host = rng_.pick(all);
    LocationId at(label('m', k));
    std::string field = "k(" + at.str() + ")";
    model_.add_marker({at, host, field});
    const bool host_ram = ram_.count(host) != 0;
    CharClass host_value = host_ram ? random_class(field, false) : CharClass(mod_);
    if (rng_.chance(0.6)) {
      DivisorId d(label('D', next_divisor_++));
      model_.add_horizontal({d, at, "k(" + d.str() + ")", std::nullopt});
      CharClass theta(mod_);
      if (host_ram && p_.hot_allowed && rng_.chance(0.25)) {
        host_value = CharClass::generator(mod_, {field, "t1"});
        theta = CharClass::generator(mod_, {field, "t2"});
      } else if (host_ram) {
        if (host_value.is_zero()) host_value = random_class(field, true);
        theta = random_unit() * host_value;
      } else {
        theta = random_class(field, true);
      }
      ResidueCharacter r;
      r.locals.emplace(at, LocalWitt{Scalar::zero(mod_), theta});
      rd_.set_horizontal(d, std::move(r));
    }
    if (host_ram) set_local(host, at, {Scalar::zero(mod_), host_value});
  }
}

std::pair<Model, RamificationData> Builder::run() {
  const int n = p_.n_components;
  std::vector<ComponentId> ids;
  for (int i = 1; i <= n; ++i) {
    ids.emplace_back(label('C', i));
    model_.add_component({ids.back(), ComponentKind::Original, "k(" + ids.back().str() + ")", std::nullopt});
  }
  rng_.shuffle(ids);

  const int lo = p_.n_cycles > 0 ? 2 : 1;
  const int r = rng_.range(lo, n);
  std::vector<ComponentId> ram(ids.begin(), ids.begin() + r);
  std::vector<ComponentId> unram(ids.begin() + r, ids.end());
  ram_.insert(ram.begin(), ram.end());

  // Ramified forest. Without unramified components everything must be one piece.
  std::vector<std::vector<ComponentId>> groups;
  for (std::size_t i = 0; i < ram.size(); ++i) {
    bool join = !groups.empty() && (unram.empty() || i == 1 || rng_.chance(0.75));
    if (join) {
      auto& g = groups[rng_.below(groups.size())];
      ComponentId partner = rng_.pick(g);
      g.push_back(ram[i]);
      decorate_ramified_edge(add_edge(partner, ram[i]), partner, ram[i]);
    } else {
      groups.push_back({ram[i]});
    }
  }
  std::vector<std::size_t> cyclable;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].size() >= 2) cyclable.push_back(g);
  }
  for (int k = 0; k < p_.n_cycles; ++k) {
    auto& g = groups[rng_.pick(cyclable)];
    std::size_t i = rng_.below(g.size());
    std::size_t j = rng_.below(g.size() - 1);
    if (j >= i) ++j;
    decorate_ramified_edge(add_edge(g[i], g[j]), g[i], g[j]);
  }

  // Unramified tree, then every ramified piece hangs off it.
  for (std::size_t i = 1; i < unram.size(); ++i) {
    add_edge(unram[rng_.below(i)], unram[i]);
  }
  for (const auto& g : groups) {
    if (unram.empty()) break;
    const ComponentId& member = rng_.pick(g);
    LocationId at = add_edge(rng_.pick(unram), member);
    // a lone component needs a nonzero value to stay ramified
    set_local(member, at, {Scalar::zero(mod_), random_class(model_.location_field(at), g.size() == 1)});
  }

  // Extra cycles through unramified components (possibly odd).
  if (!unram.empty()) {
    int extras = rng_.range(0, 2);
    std::vector<ComponentId> all(ids);
    std::sort(all.begin(), all.end());
    for (int k = 0; k < extras && static_cast<int>(model_.points().size()) < p_.max_points; ++k) {
      const ComponentId& u = rng_.pick(unram);
      ComponentId w = rng_.pick(all);
      if (w == u) continue;
      LocationId at = add_edge(u, w);
      if (ram_.count(w)) set_local(w, at, {Scalar::zero(mod_), random_class(model_.location_field(at), false)});
    }
  }

  add_markers();

  RamificationData rd = normalized(model_, rd_);
  auto mv = validate_model(model_);
  auto rv = validate_reciprocity(model_, rd);
  if (!mv.empty() || !rv.empty()) throw std::logic_error("generator produced invalid data");
  return {model_, rd};
}

}  // namespace

std::pair<Model, RamificationData> generate_random(std::uint64_t seed, const GenParams& params) {
  if (!is_prime(params.ell)) throw InfeasibleParams("ell must be prime");
  if (params.n_components < 1) throw InfeasibleParams("need at least one component");
  if (params.n_cycles < 0) throw InfeasibleParams("n_cycles must be non-negative");
  if (params.n_cycles > 0 && params.n_components < 2) {
    throw InfeasibleParams("cycles need at least two ramified components");
  }
  if (params.cold_fraction < 0.0 || params.cold_fraction > 1.0) {
    throw InfeasibleParams("cold_fraction must lie in [0, 1]");
  }
  if (params.n_components - 1 + params.n_cycles > params.max_points) {
    throw InfeasibleParams("too many singular points required");
  }
  return Builder(seed, params).run();
}

}  // namespace ramsplit
