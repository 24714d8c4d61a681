#pragma once

#include "ctxlab/coupling_types.hpp"
#include "ctxlab/rational.hpp"
#include "ctxlab/system.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ctxlab {

/// Canonical causal model: finite latent states with exact probabilities and
/// one deterministic outcome column per (observable, context) pair covered by
/// the model. Outcome entries are value symbols aligned with the state order.
struct CanonicalModel {
  std::string label;
  std::vector<std::string> state_ids;
  RationalVector state_probs;
  /// (q id, c id) -> outcome value per state, same order as state_ids.
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> outcome_map;

  bool covers(const std::string& q, const std::string& c) const {
    return outcome_map.count({q, c}) > 0;
  }
  /// Contexts paired with q in this model's outcome map, in map order.
  std::vector<std::string> contexts_of(const std::string& q) const;
  std::vector<std::string> observables() const;
};

/// Split of d1 - d2 into disjoint positive parts plus the common overlap.
/// alpha is the overlap mass; 1 - alpha is the total variation distance.
struct HahnJordanDecomposition {
  Pmf plus;
  Pmf minus;
  Pmf common;
  Rational alpha;
};

HahnJordanDecomposition hahn_jordan(const Pmf& d1, const Pmf& d2);

/// Distribution over context c's joint assignments implied by the model.
ContextDistribution induced_distribution(const CanonicalModel& model,
                                         const MeasurementSystem& system,
                                         const std::string& c);

/// Push-forward of the state distribution onto one (q, c) outcome column.
Pmf induced_marginal(const CanonicalModel& model, const OutcomeSpace& space,
                     const std::string& q, const std::string& c);

struct ModelCheck {
  bool is_model = true;
  std::vector<std::string> mismatched_contexts;
};

/// True iff the induced distribution equals mu_c exactly for every context.
ModelCheck is_model_for(const CanonicalModel& model, const MeasurementSystem& system);

/// Probability that switching between contexts c and c' changes F_q.
Rational direct_influence(const CanonicalModel& model, const std::string& q,
                          const std::string& c, const std::string& c_prime);

/// True iff no F_q depends on the context over positive-probability states.
bool is_context_free(const CanonicalModel& model);

/// A value the context switch moves toward for some states and away from
/// for others, each direction with positive probability.
struct HiddenInfluenceWitness {
  std::string q;
  std::string value;
  std::string c1;
  std::string c2;
};

struct AlignmentReport {
  bool aligned = true;
  std::vector<HiddenInfluenceWitness> witnesses;
};

AlignmentReport is_aligned(const CanonicalModel& model);

/// Least direct influence any model of the system can attain for (q, c, c'):
/// the total variation distance between the two marginals.
Rational minimal_direct_influence(const MeasurementSystem& system, const std::string& q,
                                  const std::string& c, const std::string& c_prime);

/// Two-context model over state pairs (v1, v2) that attains the minimal
/// direct influence and is aligned: diagonal states carry the common mass,
/// off-diagonal states the product plus x minus / (1 - alpha).
CanonicalModel build_minimal_pair_model(const MeasurementSystem& system, const std::string& q,
                                        const std::string& c, const std::string& c_prime);

/// Coupling whose sample space is the model's state space: T_q^c = F_q(., c).
Coupling model_to_coupling(const CanonicalModel& model, const MeasurementSystem& system);

/// Model whose states are the support points of the coupling's distribution.
/// Equal-assignment support points are kept distinct (no merging).
CanonicalModel coupling_to_model(const Coupling& coupling, const MeasurementSystem& system);

/// The product-measure model that reproduces any system: one state per tuple
/// of per-context support assignments, extended by a fixed value for each
/// unmeasured observable. Exponential in the number of contexts; guarded.
/// extension_values maps (context id, observable id) to the value index used
/// for observables not measured in that context (default: first value).
CanonicalModel universal_model(
    const MeasurementSystem& system,
    const std::map<std::pair<std::string, std::string>, int>& extension_values = {},
    std::size_t max_states = 100000);

}  // namespace ctxlab
