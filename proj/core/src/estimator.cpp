#include "dacs/estimator.hpp"

#include <algorithm>
#include <stdexcept>

namespace dacs {

namespace {

const Vector& mu_for_edge(const std::map<UndirectedEdge, Vector>& mu, const UndirectedEdge& e) {
    const auto it = mu.find(e);
    if (it == mu.end()) {
        throw std::invalid_argument("missing adaptive gain for edge {" +
                                    std::to_string(e.first) + "," + std::to_string(e.second) +
                                    "}");
    }
    return it->second;
}

}  // namespace

double apply_signum(double v, const SignumConfig& cfg) {
    if (cfg.boundary_layer > 0.0) {
        return std::clamp(v / cfg.boundary_layer, -1.0, 1.0);
    }
    return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
}

std::vector<Vector> output(const EstimatorState& state, const std::vector<Vector>& phi_t) {
    if (phi_t.size() != state.z.size()) {
        throw std::invalid_argument("output: phi has " + std::to_string(phi_t.size()) +
                                    " agents, state has " + std::to_string(state.z.size()));
    }
    std::vector<Vector> x(state.z.size());
    for (std::size_t i = 0; i < state.z.size(); ++i) {
        if (phi_t[i].size() != state.z[i].size()) {
            throw std::invalid_argument("output: dimension mismatch at agent " + std::to_string(i));
        }
        x[i] = state.z[i] + phi_t[i];
    }
    return x;
}

std::vector<Vector> edge_disagreement(const std::vector<Vector>& x, const Topology& topology) {
    const auto& directed = topology.directed_edges();
    std::vector<Vector> y(directed.size());
    for (std::size_t e = 0; e < directed.size(); ++e) {
        y[e] = x.at(directed[e].dst) - x.at(directed[e].src);
    }
    return y;
}

std::vector<Vector> gain_signum_sum(const std::vector<Vector>& v,
                                    const std::map<UndirectedEdge, Vector>& mu,
                                    const Topology& topology, const SignumConfig& cfg) {
    const std::size_t n = v.size();
    const int r = n > 0 ? static_cast<int>(v[0].size()) : 0;
    std::vector<Vector> w(n, Vector::Zero(r));
    for (const auto& edge : topology.undirected_edges()) {
        const auto& [a, b] = edge;
        const Vector& m = mu_for_edge(mu, edge);
        for (int c = 0; c < r; ++c) {
            const double s = apply_signum(v[a][c] - v[b][c], cfg);
            const double contrib = 2.0 * m[c] * s;
            // The paired directed edges contribute equal-and-opposite terms,
            // so component sums of w cancel exactly in floating point.
            w[a][c] += contrib;
            w[b][c] -= contrib;
        }
    }
    return w;
}

std::map<UndirectedEdge, Vector> abs_disagreement(const std::vector<Vector>& v,
                                                  const Topology& topology) {
    std::map<UndirectedEdge, Vector> out;
    for (const auto& edge : topology.undirected_edges()) {
        out.emplace(edge, (v.at(edge.first) - v.at(edge.second)).cwiseAbs());
    }
    return out;
}

Derivatives state_derivative(const EstimatorState& state, const std::vector<Vector>& x,
                             const EstimatorParams& params, const Topology& topology) {
    Derivatives d;
    const auto w = gain_signum_sum(x, state.mu, topology, params.signum);
    d.dz.resize(state.z.size());
    for (std::size_t i = 0; i < state.z.size(); ++i) {
        d.dz[i] = -params.gamma * state.z[i] - w[i];
    }
    d.dmu = abs_disagreement(x, topology);
    return d;
}

EstimatorState step(EstimatorState state, const std::vector<ReferenceSignal>& signals,
                    const EstimatorParams& params, const Topology& topology, double h) {
    if (h <= 0.0) {
        throw std::invalid_argument("step: h must be > 0");
    }
    std::vector<Vector> phi_t(signals.size());
    for (std::size_t i = 0; i < signals.size(); ++i) {
        phi_t[i] = signals[i].evaluate(state.t);
    }
    const auto x = output(state, phi_t);
    const auto d = state_derivative(state, x, params, topology);
    for (std::size_t i = 0; i < state.z.size(); ++i) {
        state.z[i] += h * d.dz[i];
    }
    for (const auto& [edge, dmu] : d.dmu) {
        state.mu.at(edge) += h * dmu;  // dmu >= 0, so gains never decrease
    }
    state.t += h;
    return state;
}

std::vector<Vector> consensus_error(const std::vector<Vector>& x,
                                    const std::vector<ReferenceSignal>& signals,
                                    const std::vector<std::vector<int>>& components, double t) {
    std::size_t covered = 0;
    std::vector<Vector> err(x.size());
    for (const auto& comp : components) {
        const Vector avg = network_average(signals, t, comp);
        for (int i : comp) {
            err.at(i) = x.at(i) - avg;
            ++covered;
        }
    }
    if (covered != x.size()) {
        throw std::invalid_argument("consensus_error: partition does not cover all agents");
    }
    return err;
}

}  // namespace dacs
