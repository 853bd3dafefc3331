#pragma once

#include <vector>

#include "pantostar/star_system.hpp"

namespace pantostar {

/// A point on the graph: edge index (1-based) and local time on that edge.
struct EdgePoint {
    int edge = 1;
    double t = 0.0;
};

/// Delayed argument of the proportional-delay terms on edge j at local time t:
/// t/q on the root edge, (t - (q-1)T_1)/q on outgoing edges. The result may be
/// negative for j >= 2, in which case it addresses edge 1's history.
double delay_arg(const StarSystem& sys, int edge, double t);

/// Routes a possibly negative delayed time s on edge j to the edge that owns
/// it: (j, s) when s >= 0, (1, s + T_1) when s < 0 and j >= 2.
/// Throws OutOfHistoryError when s lies below the admissible window.
EdgePoint resolve_global(const StarSystem& sys, int edge, double s);

/// Deduplication tolerance for breakpoint pull-backs, scaled by edge length.
inline constexpr double kBreakpointTolerance = 1e-14;

/// All local times in the open interval (0, T_j) at which the delayed terms of
/// the edge-j operator change affine piece, given per-edge breakpoint lists of
/// the underlying function. Includes the routing switch (q-1)T_1 for j >= 2.
/// Sorted and deduplicated within kBreakpointTolerance * T_j.
std::vector<double> pullback_breakpoints(const StarSystem& sys, int edge,
                                         const std::vector<std::vector<double>>& source_breakpoints);

} // namespace pantostar
