#include "dacs/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dacs {

namespace {

std::string edge_name(const UndirectedEdge& e) {
    return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

}  // namespace

Topology::Topology(int n, std::vector<UndirectedEdge> undirected_edges) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("Topology: node count must be >= 1, got " + std::to_string(n));
    }
    edges_.reserve(undirected_edges.size());
    for (const auto& e : undirected_edges) {
        if (e.first == e.second) {
            throw std::invalid_argument("Topology: self-loop at node " + std::to_string(e.first));
        }
        if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n) {
            throw std::invalid_argument("Topology: edge " + edge_name(e) + " out of range for n=" +
                                        std::to_string(n));
        }
        edges_.push_back(make_edge(e.first, e.second));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("Topology: duplicate undirected edge");
    }

    // Each undirected link becomes two directed edges, labeled by
    // (destination, source) so labels group into incoming links per node.
    directed_.reserve(2 * edges_.size());
    for (const auto& [a, b] : edges_) {
        directed_.push_back({a, b});
        directed_.push_back({b, a});
    }
    std::sort(directed_.begin(), directed_.end(), [](const DirectedEdge& x, const DirectedEdge& y) {
        return std::pair{x.dst, x.src} < std::pair{y.dst, y.src};
    });
}

bool Topology::has_edge(int i, int j) const {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(i, j));
}

std::vector<int> Topology::neighbors(int i) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges_) {
        if (a == i) out.push_back(b);
        if (b == i) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

DenseMatrix build_incidence(const Topology& topology) {
    const int n = topology.node_count();
    const auto& directed = topology.directed_edges();
    DenseMatrix b = DenseMatrix::Zero(n, static_cast<int>(directed.size()));
    for (int e = 0; e < static_cast<int>(directed.size()); ++e) {
        b(directed[e].src, e) = -1.0;
        b(directed[e].dst, e) = 1.0;
    }
    return b;
}

DenseMatrix laplacian(const DenseMatrix& incidence) {
    return 0.5 * (incidence * incidence.transpose());
}

DenseMatrix pseudo_inverse(const DenseMatrix& a, double tol) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("pseudo_inverse: matrix must be square, got " +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    const double scale = a.cwiseAbs().maxCoeff();
    const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10 * std::max(1.0, scale)) {
        throw std::invalid_argument("pseudo_inverse: matrix is not symmetric (max asymmetry " +
                                    std::to_string(asym) + ")");
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("pseudo_inverse: eigendecomposition failed");
    }
    const Eigen::VectorXd evals = solver.eigenvalues();
    const double max_abs = evals.cwiseAbs().maxCoeff();
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(evals.size());
    if (max_abs > 0.0) {
        const double cutoff = tol * max_abs;
        for (Eigen::Index k = 0; k < evals.size(); ++k) {
            if (std::abs(evals[k]) > cutoff) inv[k] = 1.0 / evals[k];
        }
    }
    const Eigen::MatrixXd p =
        solver.eigenvectors() * inv.asDiagonal() * solver.eigenvectors().transpose();
    // Symmetrize away rounding from the triple product.
    return DenseMatrix(0.5 * (p + p.transpose()));
}

DenseMatrix centering_matrix(int n) {
    if (n < 1) {
        throw std::invalid_argument("centering_matrix: n must be >= 1");
    }
    DenseMatrix m = DenseMatrix::Identity(n, n);
    m.array() -= 1.0 / static_cast<double>(n);
    return m;
}

double gain_norm_bound(const Topology& topology) {
    if (!is_connected(topology)) {
        throw std::invalid_argument(
            "gain_norm_bound: topology is disconnected; the bound is defined per connected "
            "component, split first");
    }
    const DenseMatrix b = build_incidence(topology);
    if (b.cols() == 0) {
        return 0.0;  // single node, no edges
    }
    const DenseMatrix btb_pinv = pseudo_inverse(DenseMatrix(b.transpose() * b));
    const DenseMatrix gain = b * btb_pinv;
    return gain.cwiseAbs().rowwise().sum().maxCoeff();
}

std::vector<std::vector<int>> connected_components(const Topology& topology) {
    const int n = topology.node_count();
    std::vector<std::vector<int>> adjacency(n);
    for (const auto& [a, b] : topology.undirected_edges()) {
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }
    std::vector<std::vector<int>> components;
    std::vector<bool> seen(n, false);
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<int> comp;
        std::vector<int> stack{root};
        seen[root] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : adjacency[v]) {
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

bool is_connected(const Topology& topology) {
    return connected_components(topology).size() == 1;
}

Topology apply_event(const Topology& topology, const TopologyEvent& event) {
    const UndirectedEdge e = make_edge(event.edge.first, event.edge.second);
    auto edges = topology.undirected_edges();
    if (event.action == EdgeAction::Remove) {
        const auto it = std::find(edges.begin(), edges.end(), e);
        if (it == edges.end()) {
            throw std::invalid_argument("apply_event: cannot remove absent edge " + edge_name(e));
        }
        edges.erase(it);
    } else {
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
            throw std::invalid_argument("apply_event: cannot add already-present edge " +
                                        edge_name(e));
        }
        edges.push_back(e);
    }
    return Topology(topology.node_count(), std::move(edges));
}

}  // namespace dacs
