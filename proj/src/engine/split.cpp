#include <stdexcept>

#include "ramsplit/engine.hpp"
#include "ramsplit/errors.hpp"

namespace ramsplit {

SplitResult split(const Model& m, const RamificationData& rd, const SplitOptions& options) {
  IndexReport index = index_criterion(m, rd);
  if (index.verdict == IndexVerdict::EllSquared) throw IndexTooLarge(index.witness->str());

  Model model = m;
  RamificationData data = normalized(m, rd);
  BlowupTrace trace;
  auto absorb = [&](Staged s) {
    model = std::move(s.model);
    data = std::move(s.rd);
    trace.steps.insert(trace.steps.end(), s.trace.steps.begin(), s.trace.steps.end());
    return !s.trace.steps.empty();
  };

  // A chain may change the parity of a cycle of the whole graph, so repair
  // and reduce until neither has anything left to do.
  for (int pass = 0;; ++pass) {
    if (pass > 1000) throw std::logic_error("split did not stabilise");
    absorb(make_acceptable(model, data, options.observer));
    if (!absorb(reduce_betti(model, data, options.observer))) break;
  }

  if (options.even_padding && trace.steps.size() % 2 == 1) {
    const ComponentId host = model.components().begin()->first;
    const LocationId mk = model.fresh_location_id("pad");
    model.add_marker({mk, host, model.fresh_field("k(" + mk.str() + ")")});
    data = normalized(model, data);
    ResidueBlowup b = blowup_residue(model, data, mk);
    BlowupStep step{mk, false, BlowupReason::Padding, b.map.exceptional, b.exceptional_ramified, std::nullopt};
    model = std::move(b.model);
    data = std::move(b.rd);
    trace.steps.push_back(step);
    if (options.observer) options.observer(model, data, step);
    if (absorb(make_acceptable(model, data, options.observer))) {
      throw std::logic_error("padding broke bipartiteness");
    }
  }

  Decomposition dec = decompose(model, data.ramified_components());
  SplittingCharacter psi = assign_character(model, data, dec);
  VerificationReport report = verify_splitting(model, data, psi);
  return {std::move(model), std::move(data), std::move(psi), std::move(report), std::move(trace), std::move(dec)};
}

}  // namespace ramsplit
