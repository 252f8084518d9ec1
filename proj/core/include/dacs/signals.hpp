#pragma once

#include "dacs/graph.hpp"

#include <variant>
#include <vector>

namespace dacs {

enum class Waveform { Sin, Cos };

struct Sinusoid {
    Waveform kind = Waveform::Sin;
    double amplitude = 1.0;
    double omega = 1.0;  // rad/s
    double phase = 0.0;  // rad
};

struct Constant {
    double value = 0.0;
};

/// c0 + c1 t + c2 t^2 + ...
struct Polynomial {
    std::vector<double> coefficients;
};

using SignalChannel = std::variant<Sinusoid, Constant, Polynomial>;

/// Per-agent analytic reference signal in R^r with exact derivatives. All
/// channel families are differentiable for all t by construction.
class ReferenceSignal {
public:
    explicit ReferenceSignal(std::vector<SignalChannel> channels);

    int dimension() const { return static_cast<int>(channels_.size()); }
    const std::vector<SignalChannel>& channels() const { return channels_; }

    Vector evaluate(double t) const;
    Vector derivative(double t) const;

private:
    std::vector<SignalChannel> channels_;
};

/// Bounds on edge differences of the signals and their derivatives
/// (sup over time and edges of ||phi_i - phi_j||_inf and the same for the
/// derivatives).
struct SignalBounds {
    double varphi = 0.0;
    double dot_varphi = 0.0;
};

/// Arithmetic mean of the member agents' signals at time t. Throws for an
/// empty member set.
Vector network_average(const std::vector<ReferenceSignal>& signals, double t,
                       const std::vector<int>& members);

/// Empirical edge-difference bounds: max over a time grid [0, horizon] and
/// the current undirected edges, padded by a 1.1 safety factor. Grid times
/// are g * grid_step, so halving the step keeps every coarse point and the
/// estimate never decreases under refinement.
SignalBounds estimate_edge_bounds(const std::vector<ReferenceSignal>& signals,
                                  const Topology& topology, double horizon, double grid_step);

}  // namespace dacs
