#pragma once

// Decorated dual graph of the closed fiber of a regular relative curve.
//
// Vertices are the vertical components, edges are the singular points (each
// joining exactly two distinct components), and horizontal distinguished
// divisors sit either at a singular point or at a nonsingular marker on one
// component. Singular points and markers share one id namespace ("locations").

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ramsplit/zl.hpp"

namespace ramsplit {

template <class Tag>
class StrongId {
 public:
  StrongId() = default;
  explicit StrongId(std::string value) : value_(std::move(value)) {}
  const std::string& str() const noexcept { return value_; }
  friend auto operator<=>(const StrongId&, const StrongId&) = default;

 private:
  std::string value_;
};

using ComponentId = StrongId<struct ComponentTag>;
using LocationId = StrongId<struct LocationTag>;
using DivisorId = StrongId<struct DivisorTag>;

enum class Sign { Plus, Minus };
enum class ComponentKind { Original, Exceptional };

struct VerticalComponent {
  ComponentId id;
  ComponentKind kind = ComponentKind::Original;
  std::string residue_field;
  std::optional<Sign> sign;
  friend bool operator==(const VerticalComponent&, const VerticalComponent&) = default;
};

struct SingularPoint {
  LocationId id;
  std::array<ComponentId, 2> incident;
  std::string residue_field;
  friend bool operator==(const SingularPoint&, const SingularPoint&) = default;
};

struct Marker {
  LocationId id;
  ComponentId component;
  std::string residue_field;
  friend bool operator==(const Marker&, const Marker&) = default;
};

/// Three-valued abstraction of a coefficient a_i in a local equation
/// a_i*pi_i + a_j*pi_j: a unit, a non-unit outside (pi_other), or an element
/// of (pi_other) (zero included).
enum class CoefficientKind { Unit, NonUnit, Divisible };

struct Coefficient {
  CoefficientKind kind = CoefficientKind::Unit;
  /// Kummer class (a)*omega_z of the unit, in the point's residue space.
  /// The zero class is the unit 1.
  CharClass kummer;

  static Coefficient unit(const CharClass& kummer) { return {CoefficientKind::Unit, kummer}; }
  friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

struct DistinguishedDivisor {
  DivisorId id;
  LocationId location;
  std::string residue_field;
  /// Coefficients of (pi_first, pi_second) of the singular point; only at singular points.
  std::optional<std::array<Coefficient, 2>> coefficients;
  friend bool operator==(const DistinguishedDivisor&, const DistinguishedDivisor&) = default;
};

struct DistinguishedFlags {
  bool regular = false;
  bool horizontal = false;
  bool transverse = false;
  friend bool operator==(const DistinguishedFlags&, const DistinguishedFlags&) = default;
};

/// Criteria for a divisor a_i*pi_i + a_j*pi_j through a singular point:
/// regular iff (a_i, a_j) is the unit ideal, horizontal iff a_i not in (pi_j)
/// and a_j not in (pi_i), transverse iff both are units.
DistinguishedFlags distinguished_flags(CoefficientKind first, CoefficientKind second);

class Model {
 public:
  explicit Model(PrimeModulus modulus) : modulus_(modulus) {}

  PrimeModulus modulus() const noexcept { return modulus_; }

  const std::map<ComponentId, VerticalComponent>& components() const noexcept { return components_; }
  const std::map<LocationId, SingularPoint>& points() const noexcept { return points_; }
  const std::map<LocationId, Marker>& markers() const noexcept { return markers_; }
  const std::map<DivisorId, DistinguishedDivisor>& horizontals() const noexcept {
    return horizontals_;
  }

  // Builders. They record what they are given; validate_model reports problems.
  void add_component(VerticalComponent c);
  void add_point(SingularPoint p);
  void add_marker(Marker m);
  void add_horizontal(DistinguishedDivisor d);
  void remove_point(const LocationId& id);
  void remove_marker(const LocationId& id);
  void set_sign(const ComponentId& id, std::optional<Sign> sign);
  void clear_signs();

  const VerticalComponent& component(const ComponentId& id) const;  // throws UnknownComponent
  bool has_component(const ComponentId& id) const { return components_.count(id) != 0; }
  bool is_singular(const LocationId& id) const { return points_.count(id) != 0; }
  bool is_marker(const LocationId& id) const { return markers_.count(id) != 0; }
  bool has_location(const LocationId& id) const { return is_singular(id) || is_marker(id); }
  bool has_divisor(const DivisorId& id) const { return horizontals_.count(id) != 0; }

  /// Residue-field space of a location; throws UnknownLocation.
  const std::string& location_field(const LocationId& id) const;
  /// Components passing through a location (two for a singular point, one for a marker).
  std::vector<ComponentId> components_at(const LocationId& id) const;
  /// Singular points and markers lying on a component, in id order.
  std::vector<LocationId> locations_on(const ComponentId& id) const;
  /// The horizontal divisor attached at a location, if any.
  const DistinguishedDivisor* horizontal_at(const LocationId& id) const;

  /// Smallest "<prefix><n>" (n >= 1) not used as a component id.
  ComponentId fresh_component_id(const std::string& prefix) const;
  /// Smallest "<base>" or "<base>.<n>" not used as a location id.
  LocationId fresh_location_id(const std::string& base) const;
  /// Residue-field label not used by any component, point or marker.
  std::string fresh_field(const std::string& base) const;

  friend bool operator==(const Model&, const Model&) = default;

 private:
  PrimeModulus modulus_;
  std::map<ComponentId, VerticalComponent> components_;
  std::map<LocationId, SingularPoint> points_;
  std::map<LocationId, Marker> markers_;
  std::map<DivisorId, DistinguishedDivisor> horizontals_;
};

enum class ViolationKind {
  NoComponents,
  DuplicateId,
  SelfIntersection,
  UnknownComponent,
  UnknownLocation,
  Disconnected,
  DuplicateAttachment,
  CoefficientsAtMarker,
  MissingCoefficients,
  NonUnitCoefficient,
  BadFieldLabel,
  InvalidSign,
  // ramification-data violations
  ModulusMismatch,
  UnknownDivisor,
  ForeignLocal,
  SpaceMismatch,
  ReciprocitySum,
  SingleResidue,
  HorizontalNotAtMarker,
  HorizontalLocals,
};

struct Violation {
  ViolationKind kind;
  std::string subject;
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(ViolationKind kind);
std::string to_string(const Violation& v);

std::vector<Violation> validate_model(const Model& m);

/// E - V + N of the multigraph induced on `subgraph`. Throws UnknownComponent.
int betti(const Model& m, const std::set<ComponentId>& subgraph);

struct Coloring {
  std::map<ComponentId, Sign> signs;
  /// Points of an odd cycle when the graph is not bipartite; the first entry
  /// is the non-tree edge that closes it.
  std::vector<LocationId> odd_cycle;
  bool bipartite() const noexcept { return odd_cycle.empty(); }
};

/// BFS two-colouring rooted at the lowest-id original component (lowest id
/// overall if there is none), which gets Plus.
Coloring two_color(const Model& m);

/// Model with the signs of a successful two_color applied.
Model with_signs(Model m, const Coloring& c);

enum class PointRole { IsolatedTree, Cycle, Connecting, Tail };
std::string to_string(PointRole r);

struct Decomposition {
  std::vector<std::set<ComponentId>> isolated_trees;
  std::vector<std::set<ComponentId>> cycle_clusters;
  std::vector<std::set<ComponentId>> connecting_paths;
  std::vector<std::set<ComponentId>> tails;
  std::map<LocationId, PointRole> point_roles;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Splits the ramified vertical components into isolated trees, cycle
/// clusters, connecting paths and tails, and classifies every singular point
/// joining two of them. A bridge joining two clusters directly is classified
/// as a connecting point of an empty connecting path.
Decomposition decompose(const Model& m, const std::set<ComponentId>& ram);

struct BlowupMap {
  LocationId center;
  bool center_was_singular = false;
  ComponentId exceptional;
  /// For each component through the center, the new point where it meets E.
  std::map<ComponentId, LocationId> side_points;
  /// Horizontal divisors moved from the center to fresh markers on E.
  std::map<DivisorId, LocationId> moved_horizontals;
};

struct BlowupResult {
  Model model;
  BlowupMap map;
};

/// Blow up a singular point (edge subdivision) or a nonsingular marker
/// (pendant insertion). Signs are cleared. Throws UnknownLocation.
BlowupResult blow_up(const Model& m, const LocationId& at);

/// Criteria check on the coefficient pair recorded at a singular point.
/// Throws NotSingular for markers and UnknownLocation for unknown ids.
DistinguishedFlags check_distinguished(const Model& m, const std::array<CoefficientKind, 2>& coeffs,
                                       const LocationId& at);

}  // namespace ramsplit
