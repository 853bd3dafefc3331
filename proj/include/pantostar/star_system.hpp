#pragma once

#include <optional>
#include <vector>

#include "pantostar/errors.hpp"

namespace pantostar {

/// Raw, unvalidated description of a quieting problem on a star time graph.
///
/// Edge 1 is the root edge carrying the initial segment of the process; at
/// its far end (the interior vertex) the process branches into edges 2..m.
/// All arrays are indexed by edge, entry 0 belonging to edge 1.
struct StarSystemSpec {
    int m = 0;                          // number of edges
    double q = 0.0;                     // delay dilation factor, > 1
    std::vector<double> horizons;       // T_j, per edge
    std::vector<double> a;              // neutral (delayed-derivative) coefficients
    std::vector<double> b;              // undelayed lower-order coefficients
    std::vector<double> c;              // delayed lower-order coefficients
    std::optional<std::vector<double>> alpha; // energy weights; defaulted when absent
    double y0 = 0.0;                    // initial state y_1(0)
};

/// Validated, immutable problem instance.
///
/// Public accessors use 1-based edge indices throughout; edge 1 is the root.
/// The effective horizon of edge j is l_j: the trajectory is pinned to zero
/// on [l_j, T_j] for j >= 2, while l_1 = T_1 carries no rest band.
class StarSystem {
public:
    /// Validates a raw spec. Throws ValidationError on any violated invariant.
    static StarSystem validate(StarSystemSpec spec);

    int edge_count() const { return m_; }
    double q() const { return q_; }
    double y0() const { return y0_; }

    double horizon(int edge) const { return horizons_[idx(edge)]; }
    double coeff_a(int edge) const { return a_[idx(edge)]; }
    double coeff_b(int edge) const { return b_[idx(edge)]; }
    double coeff_c(int edge) const { return c_[idx(edge)]; }
    double weight(int edge) const { return alpha_[idx(edge)]; }

    /// l_1 = T_1; l_j = (T_j - (q-1)T_1) / q for j >= 2.
    double edge_length(int edge) const { return lengths_[idx(edge)]; }

    double root_horizon() const { return horizons_[0]; }

    /// Local time on edges j >= 2 below which the delayed argument is
    /// negative and routes into edge 1's history: (q-1)T_1.
    double routing_switch() const { return (q_ - 1.0) * horizons_[0]; }

    /// Lower end of the history window on outgoing edges: (1/q - 1)T_1.
    double history_start() const { return (1.0 / q_ - 1.0) * horizons_[0]; }

    const std::vector<double>& weights() const { return alpha_; }

private:
    StarSystem() = default;
    static std::size_t idx(int edge) { return static_cast<std::size_t>(edge - 1); }

    int m_ = 0;
    double q_ = 0.0;
    double y0_ = 0.0;
    std::vector<double> horizons_, a_, b_, c_, alpha_, lengths_;
};

/// Solvability classification for a validated system.
///
/// neutral_ok corresponds to the uniqueness hypotheses for the neutral case
/// (|a_1| != q^{-1/2} together with a nonzero delayed-derivative coefficient
/// on at least one outgoing edge); retarded covers the a == 0 case, which is
/// solvable unconditionally.
struct HypothesisReport {
    bool neutral_ok = false;
    bool retarded = false;
    double margin = 0.0; // | |a_1| - q^{-1/2} |
    bool guaranteed = false;
};

/// Equality against q^{-1/2} is decided with this relative tolerance.
inline constexpr double kHypothesisTolerance = 1e-12;

HypothesisReport classify_hypotheses(const StarSystem& sys);

} // namespace pantostar
