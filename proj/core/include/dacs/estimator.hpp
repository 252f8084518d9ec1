#pragma once

#include "dacs/graph.hpp"
#include "dacs/signals.hpp"

#include <map>
#include <vector>

namespace dacs {

/// Signum used by the disagreement terms. boundary_layer == 0 gives the
/// exact signum with sgn(0) = 0; a positive value substitutes the saturation
/// clamp(v / boundary_layer, -1, 1) as a chattering knob.
struct SignumConfig {
    double boundary_layer = 0.0;
};

double apply_signum(double v, const SignumConfig& cfg);

struct EstimatorParams {
    double gamma = 1.0;  // leak rate, > 0
    int r = 1;           // signal dimension
    SignumConfig signum;
};

/// State of the continuous-communication estimator. Adaptive gains are keyed
/// by undirected edge and stored once, so mu_ij == mu_ji holds structurally.
/// Entries for edges no longer in the topology are retained frozen.
struct EstimatorState {
    double t = 0.0;
    std::vector<Vector> z;                // n agents x r
    std::map<UndirectedEdge, Vector> mu;  // per undirected edge, entries >= 1
};

struct Derivatives {
    std::vector<Vector> dz;
    std::map<UndirectedEdge, Vector> dmu;
};

/// x_i = z_i + phi_i(t).
std::vector<Vector> output(const EstimatorState& state, const std::vector<Vector>& phi_t);

/// Per-directed-edge disagreement: for edge (i -> j) the component is
/// x_j - x_i, matching the incidence sign convention. Ordered like
/// Topology::directed_edges().
std::vector<Vector> edge_disagreement(const std::vector<Vector>& x, const Topology& topology);

/// w_i = 2 * sum_{j in N_i} mu_ij .* sgn(v_i - v_j). Shared by the
/// continuous input (v = x) and the event-triggered one (v = xhat); both
/// paths therefore produce bitwise-identical arithmetic.
std::vector<Vector> gain_signum_sum(const std::vector<Vector>& v,
                                    const std::map<UndirectedEdge, Vector>& mu,
                                    const Topology& topology, const SignumConfig& cfg);

/// |v_a - v_b| componentwise for every current undirected edge.
std::map<UndirectedEdge, Vector> abs_disagreement(const std::vector<Vector>& v,
                                                  const Topology& topology);

/// dz_i = -gamma z_i - 2 sum_j mu_ij .* sgn(x_i - x_j); dmu_ij = |x_i - x_j|.
/// Sums run over current neighbors only.
Derivatives state_derivative(const EstimatorState& state, const std::vector<Vector>& x,
                             const EstimatorParams& params, const Topology& topology);

/// One explicit-Euler step at the state's current time.
EstimatorState step(EstimatorState state, const std::vector<ReferenceSignal>& signals,
                    const EstimatorParams& params, const Topology& topology, double h);

/// xtilde_i = x_i minus the average signal of i's connected component.
std::vector<Vector> consensus_error(const std::vector<Vector>& x,
                                    const std::vector<ReferenceSignal>& signals,
                                    const std::vector<std::vector<int>>& components, double t);

}  // namespace dacs
