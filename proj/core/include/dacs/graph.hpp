#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dacs {

using DenseMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

/// Unordered node pair, normalized so that first < second.
using UndirectedEdge = std::pair<int, int>;

/// Directed edge derived from an undirected one; src -> dst.
struct DirectedEdge {
    int src = 0;
    int dst = 0;
};

inline UndirectedEdge make_edge(int i, int j) {
    return i < j ? UndirectedEdge{i, j} : UndirectedEdge{j, i};
}

enum class EdgeAction { Add, Remove };

/// Timed mutation of the communication topology.
struct TopologyEvent {
    double time = 0.0;
    EdgeAction action = EdgeAction::Remove;
    UndirectedEdge edge;
};

/// Undirected communication graph over agents 0..n-1.
///
/// Each undirected link is expanded into two directed edges. Directed edges
/// are labeled deterministically: sorted by (destination, source), which
/// groups them into incoming links per node. Rebuilding from the same edge
/// set therefore always yields bit-identical matrices.
class Topology {
public:
    Topology(int n, std::vector<UndirectedEdge> undirected_edges);

    int node_count() const { return n_; }
    const std::vector<UndirectedEdge>& undirected_edges() const { return edges_; }
    const std::vector<DirectedEdge>& directed_edges() const { return directed_; }
    int directed_edge_count() const { return static_cast<int>(directed_.size()); }

    bool has_edge(int i, int j) const;
    std::vector<int> neighbors(int i) const;

private:
    int n_;
    std::vector<UndirectedEdge> edges_;   // sorted, unique
    std::vector<DirectedEdge> directed_;  // sorted by (dst, src)
};

/// Incidence matrix B in {-1,0,+1}^{n x l}: -1 where a directed edge leaves
/// a node, +1 where it enters. Every column sums to zero.
DenseMatrix build_incidence(const Topology& topology);

/// Graph Laplacian L = (1/2) B B^T (the 1/2 compensates for the paired
/// directed edges).
DenseMatrix laplacian(const DenseMatrix& incidence);

/// Moore-Penrose inverse of a square symmetric matrix via spectral
/// decomposition. Eigenvalues with |lambda| <= tol * max|lambda| are treated
/// as zero. Throws std::invalid_argument for non-square or non-symmetric
/// input.
DenseMatrix pseudo_inverse(const DenseMatrix& a, double tol = 1e-12);

/// M = I - (1/n) * ones * ones^T; projects onto the zero-sum subspace.
DenseMatrix centering_matrix(int n);

/// ||B (B^T B)^+||_inf for a connected topology. Equals the same norm of the
/// Kronecker product with I_r for any r >= 1, since Kronecker-with-identity
/// replicates rows without changing row sums. Throws for disconnected input.
double gain_norm_bound(const Topology& topology);

/// Node partition into connected components; components ordered by smallest
/// member, members ascending.
std::vector<std::vector<int>> connected_components(const Topology& topology);

bool is_connected(const Topology& topology);

/// Applies an add/remove event, returning the mutated topology. Throws
/// std::invalid_argument when the precondition (edge absent for add,
/// present for remove) does not hold.
Topology apply_event(const Topology& topology, const TopologyEvent& event);

}  // namespace dacs
