#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "pantostar/breakpoint_function.hpp"
#include "pantostar/delay_geometry.hpp"
#include "pantostar/star_system.hpp"

namespace pantostar {

enum class Side { left, right };

/// Per-edge node sets. Every mesh carries the mandatory breakpoints exactly:
/// T_1/q on edge 1, and (q-1)T_1 and l_j on each outgoing edge, so that the
/// rest band and the branch switches of the delay operators fall on cell
/// boundaries. Copies share storage.
class Mesh {
public:
    Mesh() = default;

    /// Union of a uniform n-cell grid per edge with the mandatory nodes.
    static Mesh build(const StarSystem& sys, int n);

    /// Wraps explicit node arrays; validates ordering, endpoints and the
    /// presence of the mandatory nodes (snapping matches within tolerance).
    static Mesh from_nodes(const StarSystem& sys, std::vector<std::vector<double>> nodes);

    /// Bisects every cell; the parent's nodes are preserved exactly.
    Mesh refined() const;

    int edge_count() const;
    const std::vector<double>& nodes(int edge) const;
    std::size_t node_count(int edge) const { return nodes(edge).size(); }

private:
    explicit Mesh(std::vector<std::vector<double>> nodes);
    std::shared_ptr<const std::vector<std::vector<double>>> nodes_;
};

/// P1 interpolant of nodal values as a piecewise-affine object.
BreakpointFunction p1_value_function(const std::vector<double>& nodes,
                                     const std::vector<double>& values);
/// Cellwise-constant derivative of the P1 interpolant.
BreakpointFunction p1_deriv_function(const std::vector<double>& nodes,
                                     const std::vector<double>& values);
double p1_eval(const std::vector<double>& nodes, const std::vector<double>& values, double t);
double p1_eval_deriv(const std::vector<double>& nodes, const std::vector<double>& values, double t,
                     Side side);

/// Continuous piecewise-linear function on the graph, one component per edge.
/// Vertex continuity (the edge-1 terminal value equals every outgoing edge's
/// initial value) is enforced at construction.
class GraphFunction {
public:
    GraphFunction(Mesh mesh, std::vector<std::vector<double>> values);

    const Mesh& mesh() const { return mesh_; }
    const std::vector<double>& values(int edge) const;
    double vertex_value() const;

    double eval(int edge, double t) const;
    double eval(const EdgePoint& p) const { return eval(p.edge, p.t); }
    double eval_deriv(int edge, double t, Side side) const;

    BreakpointFunction value_function(int edge) const;
    BreakpointFunction deriv_function(int edge) const;

private:
    Mesh mesh_;
    std::vector<std::vector<double>> values_;
};

/// Sobolev norm on the graph: sqrt(sum_j ||y_j||^2_{L2} + ||y_j'||^2_{L2}).
double w12_norm(const GraphFunction& y);

/// Map from mesh nodes to unknowns of the constrained trial space: one shared
/// unknown for the interior vertex, fixed y0 at the root's initial node, and
/// fixed zeros on the terminal rest band [l_j, T_j] of every outgoing edge.
class DofMap {
public:
    static DofMap build(const StarSystem& sys, const Mesh& mesh);

    int free_count() const { return n_free_; }
    int vertex_dof() const { return vertex_dof_; }
    bool is_free(int edge, std::size_t node) const { return dof_index(edge, node) >= 0; }
    int dof_index(int edge, std::size_t node) const;
    double fixed_value(int edge, std::size_t node) const;
    /// Index of the first rest-band node (the node at l_j) on edge >= 2.
    std::size_t band_start(int edge) const;
    /// Mesh nodes carrying unknown k (several for the vertex unknown).
    const std::vector<std::pair<int, std::size_t>>& nodes_of(int k) const;

    const Mesh& mesh() const { return mesh_; }

    /// Member of the homogeneous test space with the given free values.
    GraphFunction expand(const std::vector<double>& x) const;
    /// Hat function of unknown k.
    GraphFunction basis(int k) const;
    /// lift + sum_k x_k phi_k, the trial-space element for coefficients x.
    GraphFunction combine(const GraphFunction& lift, const std::vector<double>& x) const;

private:
    Mesh mesh_;
    std::vector<std::vector<int>> index_;
    std::vector<std::vector<double>> fixed_;
    std::vector<std::vector<std::pair<int, std::size_t>>> nodes_of_;
    std::vector<std::size_t> band_start_;
    int n_free_ = 0;
    int vertex_dof_ = -1;
};

/// The fixed trial-space offset: y0*(1 - q t/T_1) on [0, T_1/q] of the root
/// edge, zero elsewhere. Exactly representable on every mesh.
GraphFunction boundary_lift(const StarSystem& sys, const Mesh& mesh);

} // namespace pantostar
