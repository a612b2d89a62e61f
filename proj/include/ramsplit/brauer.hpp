#pragma once

// Ramification data of a prime-period Brauer class on a Model: residue
// characters with their Witt decompositions at points, Kato reciprocity,
// hot/cold/neutral classification and the index criterion.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ramsplit/model.hpp"
#include "ramsplit/zl.hpp"

namespace ramsplit {

/// Witt decomposition of a character at a point: value + (uniformizer)*residue,
/// where residue is the coefficient of the point's canonical twist generator.
struct LocalWitt {
  Scalar residue;
  CharClass value;

  static LocalWitt zero(PrimeModulus m) { return {Scalar::zero(m), CharClass(m)}; }
  bool is_zero() const { return residue.is_zero() && value.is_zero(); }
  /// 1 when zero, l otherwise.
  std::int64_t order() const { return is_zero() ? 1 : residue.modulus().ell(); }

  friend LocalWitt operator*(const Scalar& n, const LocalWitt& w) { return {n * w.residue, n * w.value}; }
  friend LocalWitt operator+(const LocalWitt& a, const LocalWitt& b) {
    return {a.residue + b.residue, a.value + b.value};
  }
  friend bool operator==(const LocalWitt&, const LocalWitt&) = default;
};

/// Residue theta_D of the class at a ramified divisor, through its local data.
struct ResidueCharacter {
  std::map<LocationId, LocalWitt> locals;
  friend bool operator==(const ResidueCharacter&, const ResidueCharacter&) = default;
};

/// Only ramified divisors are stored; absence means theta_D = 0.
class RamificationData {
 public:
  explicit RamificationData(PrimeModulus modulus) : modulus_(modulus) {}

  PrimeModulus modulus() const noexcept { return modulus_; }
  const std::map<ComponentId, ResidueCharacter>& vertical() const noexcept { return vertical_; }
  const std::map<DivisorId, ResidueCharacter>& horizontal() const noexcept { return horizontal_; }

  void set_vertical(const ComponentId& id, ResidueCharacter r) { vertical_.insert_or_assign(id, std::move(r)); }
  void set_horizontal(const DivisorId& id, ResidueCharacter r) { horizontal_.insert_or_assign(id, std::move(r)); }
  void erase_vertical(const ComponentId& id) { vertical_.erase(id); }
  void erase_horizontal(const DivisorId& id) { horizontal_.erase(id); }

  bool ramified(const ComponentId& id) const { return vertical_.count(id) != 0; }
  bool ramified(const DivisorId& id) const { return horizontal_.count(id) != 0; }
  std::set<ComponentId> ramified_components() const;

  /// Local datum at a location, zero when not stored or unramified.
  LocalWitt local(const ComponentId& id, const LocationId& at) const;
  LocalWitt local(const DivisorId& id, const LocationId& at) const;

  bool empty() const noexcept { return vertical_.empty() && horizontal_.empty(); }

  friend bool operator==(const RamificationData&, const RamificationData&) = default;

 private:
  PrimeModulus modulus_;
  std::map<ComponentId, ResidueCharacter> vertical_;
  std::map<DivisorId, ResidueCharacter> horizontal_;
};

/// Every ramified vertical component gets an explicit local at each of its
/// locations (zero where absent). Output of the engine is always normalized.
RamificationData normalized(const Model& m, const RamificationData& rd);

std::vector<Violation> validate_reciprocity(const Model& m, const RamificationData& rd);

/// A location where two ramified divisors meet: a singular point joining two
/// ramified components, or a marker joining a ramified host component and a
/// ramified horizontal divisor. "first" is the lower-id component at a point
/// and the host component at a marker.
struct RamifiedMeeting {
  LocationId at;
  std::string first;
  std::string second;
  LocalWitt first_local;
  LocalWitt second_local;
};

/// All doubly-ramified locations, in id order.
std::vector<RamifiedMeeting> doubly_ramified(const Model& m, const RamificationData& rd);

enum class PointKind { Hot, Cold, Neutral };
std::string to_string(PointKind k);

struct PointClass {
  PointKind kind;
  RamifiedMeeting witness;
  /// For neutral points: n_z with first value = n_z * second value.
  std::optional<Scalar> ratio;
};

/// Throws NotDoublyRamified when fewer than two ramified divisors pass through z.
PointClass classify_point(const Model& m, const RamificationData& rd, const LocationId& z);
PointClass classify(const RamifiedMeeting& meeting);

enum class IndexVerdict { Unramified, Ell, EllSquared };

struct IndexReport {
  IndexVerdict verdict;
  std::optional<LocationId> witness;
};

/// l^2 with the first hot location (in id order) as witness, else l.
/// Throws ValidationError on invalid input.
IndexReport index_criterion(const Model& m, const RamificationData& rd);

struct GenParams {
  std::int64_t ell = 3;
  int n_components = 6;
  int n_cycles = 1;
  bool hot_allowed = false;
  double cold_fraction = 0.5;
  int max_points = 20;
};

/// Deterministic random configuration; valid by construction. Contains a hot
/// point only if hot_allowed. The ramified subgraph has Betti number n_cycles
/// and, given two or more components, at least one vertex.
/// Throws InfeasibleParams.
std::pair<Model, RamificationData> generate_random(std::uint64_t seed, const GenParams& params);

/// Throws ValidationError listing both model and reciprocity violations.
void require_valid(const Model& m, const RamificationData& rd);

}  // namespace ramsplit
