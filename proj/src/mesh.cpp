#include "pantostar/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pantostar {

namespace {

constexpr double kNodeTol = 1e-12;

// Inserts v exactly, replacing an existing node that matches within tolerance.
void insert_exact(std::vector<double>& nodes, double v, double tol) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), v - tol);
    if (it != nodes.end() && std::abs(*it - v) <= tol) {
        *it = v;
        return;
    }
    nodes.insert(it, v);
}

std::vector<double> mandatory_nodes(const StarSystem& sys, int edge) {
    if (edge == 1) return {sys.root_horizon() / sys.q()};
    return {sys.routing_switch(), sys.edge_length(edge)};
}

} // namespace

Mesh::Mesh(std::vector<std::vector<double>> nodes)
    : nodes_(std::make_shared<const std::vector<std::vector<double>>>(std::move(nodes))) {}

Mesh Mesh::build(const StarSystem& sys, int n) {
    if (n < 2) throw std::invalid_argument("Mesh::build: resolution must be >= 2");
    std::vector<std::vector<double>> all;
    all.reserve(static_cast<std::size_t>(sys.edge_count()));
    for (int j = 1; j <= sys.edge_count(); ++j) {
        const double len = sys.horizon(j);
        std::vector<double> nodes;
        nodes.reserve(static_cast<std::size_t>(n) + 3);
        for (int i = 0; i <= n; ++i) {
            nodes.push_back(len * static_cast<double>(i) / static_cast<double>(n));
        }
        nodes.back() = len;
        for (double v : mandatory_nodes(sys, j)) insert_exact(nodes, v, kNodeTol * len);
        all.push_back(std::move(nodes));
    }
    return Mesh(std::move(all));
}

Mesh Mesh::from_nodes(const StarSystem& sys, std::vector<std::vector<double>> nodes) {
    if (nodes.size() != static_cast<std::size_t>(sys.edge_count())) {
        throw std::invalid_argument("Mesh::from_nodes: need one node array per edge");
    }
    for (int j = 1; j <= sys.edge_count(); ++j) {
        auto& edge_nodes = nodes[static_cast<std::size_t>(j - 1)];
        const double len = sys.horizon(j);
        const double tol = kNodeTol * len;
        if (edge_nodes.size() < 2 || std::abs(edge_nodes.front()) > tol ||
            std::abs(edge_nodes.back() - len) > tol) {
            throw std::invalid_argument("Mesh::from_nodes: edge " + std::to_string(j) +
                                        " must span [0, T_j]");
        }
        edge_nodes.front() = 0.0;
        edge_nodes.back() = len;
        for (std::size_t i = 0; i + 1 < edge_nodes.size(); ++i) {
            if (!(edge_nodes[i] < edge_nodes[i + 1])) {
                throw std::invalid_argument("Mesh::from_nodes: nodes must strictly increase");
            }
        }
        for (double v : mandatory_nodes(sys, j)) {
            auto it = std::lower_bound(edge_nodes.begin(), edge_nodes.end(), v - tol);
            if (it == edge_nodes.end() || std::abs(*it - v) > tol) {
                throw std::invalid_argument("Mesh::from_nodes: edge " + std::to_string(j) +
                                            " is missing a mandatory node");
            }
            *it = v;
        }
    }
    return Mesh(std::move(nodes));
}

Mesh Mesh::refined() const {
    std::vector<std::vector<double>> fine;
    fine.reserve(nodes_->size());
    for (const auto& coarse : *nodes_) {
        std::vector<double> nodes;
        nodes.reserve(coarse.size() * 2);
        for (std::size_t i = 0; i + 1 < coarse.size(); ++i) {
            nodes.push_back(coarse[i]);
            nodes.push_back(0.5 * (coarse[i] + coarse[i + 1]));
        }
        nodes.push_back(coarse.back());
        fine.push_back(std::move(nodes));
    }
    return Mesh(std::move(fine));
}

int Mesh::edge_count() const { return static_cast<int>(nodes_->size()); }

const std::vector<double>& Mesh::nodes(int edge) const {
    return (*nodes_)[static_cast<std::size_t>(edge - 1)];
}

BreakpointFunction p1_value_function(const std::vector<double>& nodes,
                                     const std::vector<double>& values) {
    const std::size_t k = nodes.size() - 1;
    std::vector<double> slopes(k), offsets(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double s = (values[i + 1] - values[i]) / (nodes[i + 1] - nodes[i]);
        slopes[i] = s;
        offsets[i] = values[i] - s * nodes[i];
    }
    return BreakpointFunction::from_pieces(nodes, std::move(slopes), std::move(offsets));
}

BreakpointFunction p1_deriv_function(const std::vector<double>& nodes,
                                     const std::vector<double>& values) {
    const std::size_t k = nodes.size() - 1;
    std::vector<double> slopes(k, 0.0), offsets(k);
    for (std::size_t i = 0; i < k; ++i) {
        offsets[i] = (values[i + 1] - values[i]) / (nodes[i + 1] - nodes[i]);
    }
    return BreakpointFunction::from_pieces(nodes, std::move(slopes), std::move(offsets));
}

double p1_eval(const std::vector<double>& nodes, const std::vector<double>& values, double t) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), t);
    if (it != nodes.end() && *it == t) {
        return values[static_cast<std::size_t>(it - nodes.begin())]; // exact nodal value
    }
    if (it == nodes.begin() || it == nodes.end()) {
        throw std::out_of_range("p1_eval: point outside the edge");
    }
    const std::size_t i = static_cast<std::size_t>(it - nodes.begin()) - 1;
    const double w = (t - nodes[i]) / (nodes[i + 1] - nodes[i]);
    return values[i] + w * (values[i + 1] - values[i]);
}

double p1_eval_deriv(const std::vector<double>& nodes, const std::vector<double>& values, double t,
                     Side side) {
    if (t < nodes.front() || t > nodes.back()) {
        throw std::out_of_range("p1_eval_deriv: point outside the edge");
    }
    std::size_t i;
    if (side == Side::right) {
        auto it = std::upper_bound(nodes.begin(), nodes.end(), t);
        i = std::min(static_cast<std::size_t>(it - nodes.begin()),
                     nodes.size() - 1) - 1;
    } else {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), t);
        i = std::max<std::size_t>(static_cast<std::size_t>(it - nodes.begin()), 1) - 1;
    }
    return (values[i + 1] - values[i]) / (nodes[i + 1] - nodes[i]);
}

GraphFunction::GraphFunction(Mesh mesh, std::vector<std::vector<double>> values)
    : mesh_(std::move(mesh)), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(mesh_.edge_count())) {
        throw std::invalid_argument("GraphFunction: need one value array per edge");
    }
    double scale = 0.0;
    for (int j = 1; j <= mesh_.edge_count(); ++j) {
        if (values_[static_cast<std::size_t>(j - 1)].size() != mesh_.node_count(j)) {
            throw std::invalid_argument("GraphFunction: value count differs from node count");
        }
        for (double v : values_[static_cast<std::size_t>(j - 1)]) {
            scale = std::max(scale, std::abs(v));
        }
    }
    const double v1 = values_[0].back();
    for (std::size_t j = 1; j < values_.size(); ++j) {
        if (std::abs(values_[j].front() - v1) > 1e-12 * (1.0 + scale)) {
            throw std::invalid_argument("GraphFunction: discontinuous at the interior vertex");
        }
    }
}

const std::vector<double>& GraphFunction::values(int edge) const {
    return values_[static_cast<std::size_t>(edge - 1)];
}

double GraphFunction::vertex_value() const { return values_[0].back(); }

double GraphFunction::eval(int edge, double t) const {
    return p1_eval(mesh_.nodes(edge), values(edge), t);
}

double GraphFunction::eval_deriv(int edge, double t, Side side) const {
    return p1_eval_deriv(mesh_.nodes(edge), values(edge), t, side);
}

BreakpointFunction GraphFunction::value_function(int edge) const {
    return p1_value_function(mesh_.nodes(edge), values(edge));
}

BreakpointFunction GraphFunction::deriv_function(int edge) const {
    return p1_deriv_function(mesh_.nodes(edge), values(edge));
}

double w12_norm(const GraphFunction& y) {
    double sum = 0.0;
    for (int j = 1; j <= y.mesh().edge_count(); ++j) {
        const auto v = y.value_function(j);
        const auto d = y.deriv_function(j);
        sum += integrate_product(v, v) + integrate_product(d, d);
    }
    return std::sqrt(sum);
}

DofMap DofMap::build(const StarSystem& sys, const Mesh& mesh) {
    DofMap map;
    map.mesh_ = mesh;
    const int m = mesh.edge_count();
    map.index_.resize(static_cast<std::size_t>(m));
    map.fixed_.resize(static_cast<std::size_t>(m));
    map.band_start_.resize(static_cast<std::size_t>(m), 0);
    for (int j = 1; j <= m; ++j) {
        map.index_[static_cast<std::size_t>(j - 1)].assign(mesh.node_count(j), -1);
        map.fixed_[static_cast<std::size_t>(j - 1)].assign(mesh.node_count(j), 0.0);
    }

    int next = 0;
    // root edge: initial node carries y0 through the lift, interiors are free
    const auto& root_nodes = mesh.nodes(1);
    map.fixed_[0][0] = sys.y0();
    for (std::size_t i = 1; i + 1 < root_nodes.size(); ++i) {
        map.index_[0][i] = next;
        map.nodes_of_.push_back({{1, i}});
        ++next;
    }
    // the shared vertex unknown spans edge 1's last node and node 0 of every outgoing edge
    map.vertex_dof_ = next;
    map.index_[0][root_nodes.size() - 1] = next;
    std::vector<std::pair<int, std::size_t>> vertex_nodes{{1, root_nodes.size() - 1}};
    for (int j = 2; j <= m; ++j) {
        map.index_[static_cast<std::size_t>(j - 1)][0] = next;
        vertex_nodes.push_back({j, 0});
    }
    map.nodes_of_.push_back(std::move(vertex_nodes));
    ++next;

    for (int j = 2; j <= m; ++j) {
        const auto& nodes = mesh.nodes(j);
        const double band = sys.edge_length(j);
        const double tol = kNodeTol * sys.horizon(j);
        auto& index = map.index_[static_cast<std::size_t>(j - 1)];
        std::size_t band_start = nodes.size();
        for (std::size_t i = 1; i < nodes.size(); ++i) {
            if (nodes[i] >= band - tol) {
                band_start = i;
                break;
            }
            index[i] = next;
            map.nodes_of_.push_back({{j, i}});
            ++next;
        }
        if (band_start == nodes.size() || std::abs(nodes[band_start] - band) > tol) {
            throw std::invalid_argument("DofMap::build: rest-band node l_j missing on edge " +
                                        std::to_string(j));
        }
        map.band_start_[static_cast<std::size_t>(j - 1)] = band_start;
    }
    map.n_free_ = next;
    return map;
}

int DofMap::dof_index(int edge, std::size_t node) const {
    return index_[static_cast<std::size_t>(edge - 1)][node];
}

double DofMap::fixed_value(int edge, std::size_t node) const {
    return fixed_[static_cast<std::size_t>(edge - 1)][node];
}

std::size_t DofMap::band_start(int edge) const {
    return band_start_[static_cast<std::size_t>(edge - 1)];
}

const std::vector<std::pair<int, std::size_t>>& DofMap::nodes_of(int k) const {
    return nodes_of_[static_cast<std::size_t>(k)];
}

GraphFunction DofMap::expand(const std::vector<double>& x) const {
    std::vector<std::vector<double>> values;
    values.reserve(index_.size());
    for (std::size_t e = 0; e < index_.size(); ++e) {
        std::vector<double> v(index_[e].size(), 0.0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (index_[e][i] >= 0) v[i] = x[static_cast<std::size_t>(index_[e][i])];
        }
        values.push_back(std::move(v));
    }
    return GraphFunction(mesh_, std::move(values));
}

GraphFunction DofMap::basis(int k) const {
    std::vector<std::vector<double>> values;
    values.reserve(index_.size());
    for (const auto& edge_index : index_) {
        values.emplace_back(edge_index.size(), 0.0);
    }
    for (const auto& [edge, node] : nodes_of_[static_cast<std::size_t>(k)]) {
        values[static_cast<std::size_t>(edge - 1)][node] = 1.0;
    }
    return GraphFunction(mesh_, std::move(values));
}

GraphFunction DofMap::combine(const GraphFunction& lift, const std::vector<double>& x) const {
    std::vector<std::vector<double>> values;
    values.reserve(index_.size());
    for (std::size_t e = 0; e < index_.size(); ++e) {
        std::vector<double> v = lift.values(static_cast<int>(e) + 1);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (index_[e][i] >= 0) v[i] += x[static_cast<std::size_t>(index_[e][i])];
        }
        values.push_back(std::move(v));
    }
    return GraphFunction(mesh_, std::move(values));
}

GraphFunction boundary_lift(const StarSystem& sys, const Mesh& mesh) {
    const double cutoff = sys.root_horizon() / sys.q();
    const double t1 = sys.root_horizon();
    std::vector<std::vector<double>> values;
    values.reserve(static_cast<std::size_t>(mesh.edge_count()));
    for (int j = 1; j <= mesh.edge_count(); ++j) {
        std::vector<double> v(mesh.node_count(j), 0.0);
        if (j == 1) {
            const auto& nodes = mesh.nodes(1);
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                if (nodes[i] < cutoff) v[i] = sys.y0() * (1.0 - sys.q() * nodes[i] / t1);
            }
        }
        values.push_back(std::move(v));
    }
    return GraphFunction(mesh, std::move(values));
}

} // namespace pantostar
