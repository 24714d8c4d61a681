#pragma once

#include "ctxlab/rational.hpp"
#include "ctxlab/system.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ctxlab {

/// One (observable, context) pair of the coupling space, as indices into the
/// owning system's observable and context lists.
struct CouplingCell {
  int observable = -1;
  int context = -1;

  friend bool operator==(const CouplingCell&, const CouplingCell&) = default;
};

/// Canonical cell order: contexts in system order, measured observables in
/// context order within each. All couplings for a system share this layout.
std::vector<CouplingCell> canonical_cells(const MeasurementSystem& system);

/// A jointly distributed family {T_q^c}: a sparse exact distribution over
/// global assignments, one value index per cell.
struct Coupling {
  std::string system_label;
  std::vector<CouplingCell> cells;
  std::map<Assignment, Rational> mass;

  /// Position of the (q, c) cell, -1 when absent.
  int cell_position(int observable, int context) const;
};

}  // namespace ctxlab
