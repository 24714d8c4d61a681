#include "ctxlab/system.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ctxlab {

int OutcomeSpace::value_index(const std::string& v) const {
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] == v) return static_cast<int>(i);
  }
  return -1;
}

int MeasurementSystem::observable_index(const std::string& id) const {
  for (size_t i = 0; i < outcome_spaces.size(); ++i) {
    if (outcome_spaces[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

int MeasurementSystem::context_index(const std::string& id) const {
  for (size_t i = 0; i < contexts.size(); ++i) {
    if (contexts[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

const OutcomeSpace& MeasurementSystem::space_of(const std::string& observable_id) const {
  int idx = observable_index(observable_id);
  if (idx < 0) throw std::invalid_argument("unknown observable: " + observable_id);
  return outcome_spaces[idx];
}

bool MeasurementSystem::measures(const std::string& observable_id,
                                 const std::string& context_id) const {
  int c = context_index(context_id);
  if (c < 0) return false;
  const auto& measured = contexts[c].measured;
  return std::find(measured.begin(), measured.end(), observable_id) != measured.end();
}

int MeasurementSystem::slot_in_context(const ContextDistribution& context,
                                       const std::string& observable_id) const {
  for (size_t i = 0; i < context.measured.size(); ++i) {
    if (context.measured[i] == observable_id) return static_cast<int>(i);
  }
  return -1;
}

std::vector<Violation> validate(const MeasurementSystem& system) {
  std::vector<Violation> out;
  auto flag = [&](std::string path, std::string message) {
    out.push_back({std::move(path), std::move(message)});
  };

  std::set<std::string> observable_ids;
  for (const auto& space : system.outcome_spaces) {
    const std::string path = "observables/" + space.id;
    if (!observable_ids.insert(space.id).second) flag(path, "duplicate id");
    if (space.values.empty()) flag(path, "empty outcome space");
    std::set<std::string> seen;
    for (const auto& v : space.values) {
      if (!seen.insert(v).second) flag(path, "duplicate value '" + v + "'");
    }
  }

  std::set<std::string> context_ids;
  std::set<std::string> measured_anywhere;
  for (const auto& ctx : system.contexts) {
    const std::string path = "contexts/" + ctx.id;
    if (!context_ids.insert(ctx.id).second) flag(path, "duplicate id");
    if (ctx.measured.empty()) flag(path, "context measures no observables");

    std::vector<int> sizes;
    bool shape_ok = true;
    std::set<std::string> in_context;
    for (const auto& q : ctx.measured) {
      if (!in_context.insert(q).second) {
        flag(path, "observable '" + q + "' measured twice");
        shape_ok = false;
      }
      int idx = system.observable_index(q);
      if (idx < 0) {
        flag(path, "unknown observable '" + q + "'");
        shape_ok = false;
      } else {
        sizes.push_back(static_cast<int>(system.outcome_spaces[idx].values.size()));
        measured_anywhere.insert(q);
      }
    }

    Rational total(0);
    for (const auto& [assignment, p] : ctx.mass) {
      if (sign(p) < 0) flag(path, "negative mass");
      total += p;
      if (!shape_ok) continue;
      if (assignment.size() != sizes.size()) {
        flag(path, "assignment arity mismatch");
        continue;
      }
      for (size_t i = 0; i < assignment.size(); ++i) {
        if (assignment[i] < 0 || assignment[i] >= sizes[i]) {
          flag(path, "assignment value out of range for '" + ctx.measured[i] + "'");
          break;
        }
      }
    }
    if (total != Rational(1)) {
      flag(path, "mass sum != 1 (got " + fraction_string(total) + ")");
    }
  }

  for (const auto& space : system.outcome_spaces) {
    if (!measured_anywhere.count(space.id)) {
      flag("observables/" + space.id, "not measured in any context");
    }
  }
  return out;
}

Pmf marginal(const MeasurementSystem& system, const std::string& q, const std::string& c) {
  int ci = system.context_index(c);
  if (ci < 0) throw std::invalid_argument("unknown context: " + c);
  const auto& ctx = system.contexts[ci];
  int slot = system.slot_in_context(ctx, q);
  if (slot < 0) {
    throw std::invalid_argument("observable " + q + " not measured in context " + c);
  }
  const auto& space = system.space_of(q);
  Pmf out = Pmf::Zero(static_cast<Eigen::Index>(space.values.size()));
  for (const auto& [assignment, p] : ctx.mass) {
    out(assignment[static_cast<size_t>(slot)]) += p;
  }
  return out;
}

Rational tv_distance(const Pmf& d1, const Pmf& d2) {
  if (d1.size() != d2.size()) throw std::invalid_argument("space mismatch");
  return Rational(1) - d1.cwiseMin(d2).sum();
}

ConsistencyReport is_consistently_connected(const MeasurementSystem& system) {
  ConsistencyReport report;
  for (const auto& space : system.outcome_spaces) {
    auto conn = connection(system, space.id);
    for (size_t i = 0; i < conn.size(); ++i) {
      for (size_t j = i + 1; j < conn.size(); ++j) {
        if (!exactly_equal(conn[i].second, conn[j].second)) {
          report.consistent = false;
          report.violations.push_back({space.id, conn[i].first, conn[j].first});
        }
      }
    }
  }
  return report;
}

std::vector<std::pair<std::string, Pmf>> connection(const MeasurementSystem& system,
                                                    const std::string& q) {
  if (system.observable_index(q) < 0) throw std::invalid_argument("unknown observable: " + q);
  std::vector<std::pair<std::string, Pmf>> out;
  for (const auto& ctx : system.contexts) {
    if (system.slot_in_context(ctx, q) >= 0) {
      out.emplace_back(ctx.id, marginal(system, q, ctx.id));
    }
  }
  return out;
}

}  // namespace ctxlab
