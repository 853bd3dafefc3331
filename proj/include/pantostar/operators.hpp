#pragma once

#include <utility>
#include <vector>

#include "pantostar/breakpoint_function.hpp"
#include "pantostar/mesh.hpp"
#include "pantostar/star_system.hpp"

namespace pantostar {

/// Edge-j trajectory extended leftward into the history window: for s < 0 the
/// value is read from edge 1 at s + T_1. Domain [(1/q - 1)T_1, T_j].
BreakpointFunction routed_value(const StarSystem& sys, const GraphFunction& y, int edge);
BreakpointFunction routed_deriv(const StarSystem& sys, const GraphFunction& y, int edge);

/// The first-order operator whose L2 size the energy measures:
/// y_j'(t) + a_j y_j'(s(t)) + b_j y_j(t) + c_j y_j(s(t)) with the delayed
/// argument s(t) routed through the vertex. Exact on (0, T_j).
BreakpointFunction apply_ell(const StarSystem& sys, const GraphFunction& y, int edge);

/// nu = 0: principal part (derivative terms); nu = 1: lower-order part.
/// apply_ell is their pointwise sum.
BreakpointFunction apply_ell_split(const StarSystem& sys, const GraphFunction& y, int edge, int nu);

/// Change-of-variables images entering the second-order equations: on the
/// root edge a two-branch function switching at T_1/q (the second branch
/// collects all outgoing edges), on edges j >= 2 a single branch on (0, l_j)
/// followed by zero. nu selects the derivative (1 -> a_k) or lower-order
/// (0 -> c_k) coefficient family.
BreakpointFunction apply_ell_tilde(const StarSystem& sys, const GraphFunction& y, int edge, int nu);

/// The flux-like combination alpha_j * ell_j y + tilde-ell_{1,j} y whose
/// one-sided vertex values balance for optimal trajectories and which is
/// continuous on [0, l_j] for generalized solutions.
BreakpointFunction apply_ell_hat(const StarSystem& sys, const GraphFunction& y, int edge);

/// Energy inner product: sum_j alpha_j integral_0^{T_j} ell_j y * ell_j w.
double bilinear(const StarSystem& sys, const GraphFunction& y, const GraphFunction& w);

struct Energies {
    double total = 0.0;       // weighted, = bilinear(y, y)
    double principal = 0.0;   // unweighted L2 size of the derivative part
    double lower_order = 0.0; // unweighted L2 size of the remaining terms
};
Energies energies(const StarSystem& sys, const GraphFunction& y);

/// Discrete counterpart of the energy form on the free unknowns:
/// matrix[k][l] = B(phi_k, phi_l) (upper triangle stored), load[k] = -B(lift, phi_k).
struct SparseSymmetricForm {
    int n = 0;
    std::vector<std::vector<std::pair<int, double>>> rows; // row k: sorted (col >= k, value)
    std::vector<double> load;

    double entry(int k, int l) const;
    std::size_t stored_entries() const;
};

SparseSymmetricForm assemble(const StarSystem& sys, const Mesh& mesh, const DofMap& dofs);

} // namespace pantostar
