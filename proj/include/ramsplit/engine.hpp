#pragma once

// The splitting pipeline: acceptable models, Betti reduction by blow-up
// chains, construction of the splitting character psi, cold-point gluing,
// the local-global lift oracle and the per-divisor verifier.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramsplit/brauer.hpp"
#include "ramsplit/model.hpp"
#include "ramsplit/zl.hpp"

namespace ramsplit {

// ---------------------------------------------------------------------------
// Blow-ups with residue bookkeeping

enum class BlowupReason { BipartiteRepair, CycleBreak, ConnectingBreak, Padding };
std::string to_string(BlowupReason r);

struct BlowupStep {
  LocationId location;
  bool singular = true;
  BlowupReason reason = BlowupReason::BipartiteRepair;
  ComponentId exceptional;
  bool exceptional_ramified = false;
  /// Value of theta_E as a multiple of the chain's reference value (chain
  /// steps and neutral subdivisions only).
  std::optional<Scalar> multiple;

  friend bool operator==(const BlowupStep&, const BlowupStep&) = default;
};

struct BlowupTrace {
  std::vector<BlowupStep> steps;
  friend bool operator==(const BlowupTrace&, const BlowupTrace&) = default;
};

/// Called after every blow-up with the model and data it produced.
using BlowupObserver = std::function<void(const Model&, const RamificationData&, const BlowupStep&)>;

struct ResidueBlowup {
  Model model;
  RamificationData rd;
  BlowupMap map;
  bool exceptional_ramified = false;
  /// For a neutral center with values v1, v2 = n*v1 (v1 on the lower id): n + 1.
  std::optional<Scalar> multiple;
};

/// Blow up `at` and carry the residues along. Neutral or one-sided centers:
/// theta_E has zero residues and value the sum of the values of the ramified
/// divisors through the center (E is dropped when that is 0). Cold centers:
/// residues -w at E meet C1 and +w at E meet C2, value t1 + t2.
/// Throws HotBlowupUnsupported, UnknownLocation.
ResidueBlowup blowup_residue(const Model& m, const RamificationData& rd, const LocationId& at);

struct Staged {
  Model model;
  RamificationData rd;
  BlowupTrace trace;
};

/// Subdivide until the dual graph is bipartite and attach the signs.
/// Edges are ranked so that cold and neutral points are kept out of the
/// subdivisions whenever some other edge of the odd cycle can take it.
Staged make_acceptable(const Model& m, const RamificationData& rd, const BlowupObserver& observer = {});

/// Break every neutral cycle point and neutral connecting point with a
/// blow-up chain. Throws IndexTooLarge on hot input.
Staged reduce_betti(const Model& m, const RamificationData& rd, const BlowupObserver& observer = {});

// ---------------------------------------------------------------------------
// The splitting character

struct AssignmentRule {
  enum class Kind { Seed, I, II, A, B, C, GWFill, ColdGlue };
  Kind kind = Kind::Seed;
  std::optional<Scalar> n;   // II
  std::optional<Sign> sign;  // ColdGlue

  static AssignmentRule of(Kind k) { return {k, std::nullopt, std::nullopt}; }
  friend bool operator==(const AssignmentRule&, const AssignmentRule&) = default;
};
/// "I", "II(3)", "ColdGlue(-)", "GW-fill", ...
std::string to_string(const AssignmentRule& r);

struct ComponentPsi {
  /// psi = global_marker * theta on a ramified component; absent otherwise.
  std::optional<Scalar> global_marker;
  std::map<LocationId, LocalWitt> locals;
  std::map<LocationId, AssignmentRule> rules;
  std::int64_t order = 1;

  friend bool operator==(const ComponentPsi&, const ComponentPsi&) = default;
};

/// Kummer classes of the unit coefficients of the distinguished divisor used
/// at a point, for the lower-id and the higher-id component's uniformizer.
struct GlueChoice {
  DivisorId divisor;
  std::array<CharClass, 2> coefficients;
  friend bool operator==(const GlueChoice&, const GlueChoice&) = default;
};

struct GluingCertificate {
  LocationId point;
  ComponentId first;
  ComponentId second;
  GlueChoice choice;
  /// theta_first and -theta_second at the point.
  LocalWitt left;
  LocalWitt right;
  CharClass theta_circ;
  Scalar omega;

  friend bool operator==(const GluingCertificate&, const GluingCertificate&) = default;
};

struct SplittingCharacter {
  PrimeModulus modulus;
  std::map<ComponentId, ComponentPsi> components;
  std::map<LocationId, GlueChoice> choices;
  std::vector<GluingCertificate> certificates;

  explicit SplittingCharacter(PrimeModulus m) : modulus(m) {}
  friend bool operator==(const SplittingCharacter&, const SplittingCharacter&) = default;
};

/// Certificate that theta_C1 and -theta_C2 glue at a cold point. Throws NotCold.
GluingCertificate cold_glue(const Model& m, const RamificationData& rd, const LocationId& z);

/// Independent replay of a certificate.
bool glue_check(const GluingCertificate& cert);

/// Whether the two sides of psi glue at z under psi's recorded choice there
/// (trivial units when none is recorded). Throws MissingLocal.
bool glue_check(const Model& m, const SplittingCharacter& psi, const LocationId& z);

// ---------------------------------------------------------------------------
// Local-global lifting

/// A global character known through finitely many local constraints; it is
/// unconstrained (zero) elsewhere.
class LiftedCharacter {
 public:
  LiftedCharacter(PrimeModulus modulus, std::string space) : modulus_(modulus), space_(std::move(space)) {}

  const std::string& space() const noexcept { return space_; }
  /// lcm of the local orders.
  std::int64_t order() const;
  LocalWitt restriction(const LocationId& at) const;
  const std::map<LocationId, LocalWitt>& constraints() const noexcept { return constraints_; }

 private:
  friend LiftedCharacter grunwald_wang_lift(PrimeModulus, const std::string&,
                                            const std::vector<std::pair<LocationId, LocalWitt>>&);
  PrimeModulus modulus_;
  std::string space_;
  std::map<LocationId, LocalWitt> constraints_;
};

/// Throws InconsistentLocals when a location is constrained twice differently.
LiftedCharacter grunwald_wang_lift(PrimeModulus modulus, const std::string& space,
                                   const std::vector<std::pair<LocationId, LocalWitt>>& locals);

/// The lift of psi restricted to every component of the closed fiber.
std::map<ComponentId, LiftedCharacter> lambda_lift(const Model& m, const SplittingCharacter& psi);

// ---------------------------------------------------------------------------
// Assignment

/// Tree rules on a ramified set with no cycles. `order` lists the components
/// so that each one after the first of its connected piece meets an earlier
/// one. The first of each piece gets psi = theta. Throws HotPointEncountered,
/// RatioAbsent, ConflictingConstraints.
SplittingCharacter assign_tree(const Model& m, const RamificationData& rd, const std::vector<ComponentId>& order);

/// Full assignment on an acceptable model without neutral cycle or
/// connecting points: signs on clusters and connecting paths, tree rules on
/// trees and tails, then (A)(B)(C) and GW-fill on unramified components.
SplittingCharacter assign_character(const Model& m, const RamificationData& rd, const Decomposition& dec);

// ---------------------------------------------------------------------------
// Verification

struct DivisorVerdict {
  std::string divisor;
  bool vertical = true;
  char tree_case = 'a';
  /// "i".."v" when the ramified graph has cycles.
  std::optional<std::string> general_case;
  std::int64_t e = 1;
  bool residue_killed = false;
  std::string trace;

  friend bool operator==(const DivisorVerdict&, const DivisorVerdict&) = default;
};

struct VerificationReport {
  std::vector<DivisorVerdict> entries;
  std::vector<LocationId> glue_failures;

  bool passed() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

VerificationReport verify_splitting(const Model& m, const RamificationData& rd, const SplittingCharacter& psi);

// ---------------------------------------------------------------------------
// Pipeline

struct SplitOptions {
  /// Pad with one marker blow-up when the total number of blow-ups is odd.
  bool even_padding = false;
  BlowupObserver observer;
};

struct SplitResult {
  Model model;
  RamificationData rd;
  SplittingCharacter psi;
  VerificationReport report;
  BlowupTrace trace;
  Decomposition decomposition;
};

/// Throws IndexTooLarge (same witness as index_criterion) and ValidationError.
SplitResult split(const Model& m, const RamificationData& rd, const SplitOptions& options = {});

}  // namespace ramsplit
