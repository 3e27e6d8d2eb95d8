#pragma once

#include <span>

#include "mmi/divisor.hpp"
#include "mmi/dual_graph.hpp"

namespace mmi {

/// D effective and D.E_j <= 0 for every component.
bool is_antinef(const DualGraph& g, const ZDivisor& d);

/// Minimal antinef divisor above D, by unloading. Negative coefficients are
/// clamped to zero first; each violated component E_j (lowest index first)
/// receives ceil((D.E_j) / -E_j^2) copies of E_j.
ZDivisor antinef_closure(const DualGraph& g, const ZDivisor& d);

/// Same closure with an explicit scan order over the components.
ZDivisor antinef_closure(const DualGraph& g, const ZDivisor& d,
                         std::span<const std::size_t> scan_order);

/// Reference unloading that adds a single E_j per step.
ZDivisor antinef_closure_unit(const DualGraph& g, const ZDivisor& d);

/// dim O/pi_*O(-D) = -D.(D + K)/2 for antinef D.
/// Throws NotAntinef, or NonIntegralResult if the graph data is corrupt.
Integer colength(const DualGraph& g, const ZDivisor& d);

}  // namespace mmi
