#pragma once

#include "ctxlab/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ctxlab {

/// Finite outcome space of one observable. Values are opaque symbols with a
/// declared order; that order indexes every dense distribution over the space.
struct OutcomeSpace {
  std::string id;
  std::vector<std::string> values;

  int value_index(const std::string& v) const;  // -1 when absent
};

/// Assignment of one value index per measured observable, in measured order.
using Assignment = std::vector<int>;

/// Exact joint distribution of the observables measured in one context.
/// Zero-mass assignments are implicit; keys are value-index tuples.
struct ContextDistribution {
  std::string id;
  std::vector<std::string> measured;
  std::map<Assignment, Rational> mass;
};

/// A finite measurement system: outcome spaces plus one exact joint
/// distribution per context. The "measured in" relation is derived from
/// context membership.
struct MeasurementSystem {
  std::string label;
  std::vector<OutcomeSpace> outcome_spaces;
  std::vector<ContextDistribution> contexts;

  int observable_index(const std::string& id) const;  // -1 when absent
  int context_index(const std::string& id) const;     // -1 when absent
  const OutcomeSpace& space_of(const std::string& observable_id) const;
  bool measures(const std::string& observable_id, const std::string& context_id) const;
  /// Position of observable id within context's measured list, -1 when absent.
  int slot_in_context(const ContextDistribution& context, const std::string& observable_id) const;
};

/// One invariant violation, with a path locating the offending datum.
struct Violation {
  std::string path;
  std::string message;
};

/// Checks every structural invariant; returns all violations (empty = valid).
std::vector<Violation> validate(const MeasurementSystem& system);

/// Push-forward of a context's joint distribution onto one observable.
/// Dense over the observable's outcome space; throws std::invalid_argument
/// when q is not measured in c.
Pmf marginal(const MeasurementSystem& system, const std::string& q, const std::string& c);

/// Total variation distance 1 - sum_v min(d1(v), d2(v)) between two
/// distributions over the same outcome space.
Rational tv_distance(const Pmf& d1, const Pmf& d2);

/// A triple (q, c, c') whose two marginals differ.
struct ConnectionViolation {
  std::string q;
  std::string c1;
  std::string c2;
};

struct ConsistencyReport {
  bool consistent = true;
  std::vector<ConnectionViolation> violations;
};

/// True iff every observable has identical marginals across all contexts
/// measuring it; violations list every failing triple.
ConsistencyReport is_consistently_connected(const MeasurementSystem& system);

/// All contexts measuring q, in context order, with the marginal in each.
std::vector<std::pair<std::string, Pmf>> connection(const MeasurementSystem& system,
                                                    const std::string& q);

}  // namespace ctxlab
