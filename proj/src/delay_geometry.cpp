#include "pantostar/delay_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pantostar {

double delay_arg(const StarSystem& sys, int edge, double t) {
    if (edge == 1) return t / sys.q();
    return (t - sys.routing_switch()) / sys.q();
}

EdgePoint resolve_global(const StarSystem& sys, int edge, double s) {
    const double slack = 1e-12 * sys.root_horizon();
    if (s >= 0.0) return {edge, s};
    if (edge == 1 || s < sys.history_start() - slack) {
        throw OutOfHistoryError("OutOfHistory: delayed time " + std::to_string(s) +
                                " below admissible window on edge " + std::to_string(edge));
    }
    return {1, s + sys.root_horizon()};
}

std::vector<double> pullback_breakpoints(const StarSystem& sys, int edge,
                                         const std::vector<std::vector<double>>& source_breakpoints) {
    const double q = sys.q();
    const double t1 = sys.root_horizon();
    const double horizon = sys.horizon(edge);
    const auto& root = source_breakpoints[0];

    std::vector<double> out;
    if (edge == 1) {
        // delayed argument s = t/q stays on edge 1; piece changes at t = q*s
        for (double s : root) out.push_back(q * s);
    } else {
        out.push_back(sys.routing_switch());
        // s >= 0 branch reads edge j itself: t = q*s + (q-1)T_1
        for (double s : source_breakpoints[static_cast<std::size_t>(edge - 1)]) {
            out.push_back(q * s + sys.routing_switch());
        }
        // s < 0 branch reads edge 1's tail through the vertex: t = q*s - T_1
        // for source point s in (T_1/q, T_1)
        for (double s : root) out.push_back(q * s - t1);
    }

    const double tol = kBreakpointTolerance * horizon;
    std::erase_if(out, [&](double t) { return t <= tol || t >= horizon - tol; });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [&](double a, double b) { return std::abs(a - b) <= tol; }),
              out.end());
    return out;
}

} // namespace pantostar
