#include "dacs/signals.hpp"

#include <cmath>
#include <stdexcept>

namespace dacs {

namespace {

double channel_value(const SignalChannel& ch, double t) {
    return std::visit(
        [t](const auto& c) -> double {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Sinusoid>) {
                const double arg = c.omega * t + c.phase;
                return c.kind == Waveform::Sin ? c.amplitude * std::sin(arg)
                                               : c.amplitude * std::cos(arg);
            } else if constexpr (std::is_same_v<T, Constant>) {
                return c.value;
            } else {
                double acc = 0.0;  // Horner
                for (auto it = c.coefficients.rbegin(); it != c.coefficients.rend(); ++it) {
                    acc = acc * t + *it;
                }
                return acc;
            }
        },
        ch);
}

double channel_derivative(const SignalChannel& ch, double t) {
    return std::visit(
        [t](const auto& c) -> double {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Sinusoid>) {
                const double arg = c.omega * t + c.phase;
                return c.kind == Waveform::Sin ? c.amplitude * c.omega * std::cos(arg)
                                               : -c.amplitude * c.omega * std::sin(arg);
            } else if constexpr (std::is_same_v<T, Constant>) {
                return 0.0;
            } else {
                double acc = 0.0;
                const auto& cs = c.coefficients;
                for (std::size_t k = cs.size(); k-- > 1;) {
                    acc = acc * t + static_cast<double>(k) * cs[k];
                }
                return acc;
            }
        },
        ch);
}

}  // namespace

ReferenceSignal::ReferenceSignal(std::vector<SignalChannel> channels)
    : channels_(std::move(channels)) {
    if (channels_.empty()) {
        throw std::invalid_argument("ReferenceSignal: needs at least one channel (r >= 1)");
    }
}

Vector ReferenceSignal::evaluate(double t) const {
    Vector out(dimension());
    for (int c = 0; c < dimension(); ++c) {
        out[c] = channel_value(channels_[c], t);
    }
    return out;
}

Vector ReferenceSignal::derivative(double t) const {
    Vector out(dimension());
    for (int c = 0; c < dimension(); ++c) {
        out[c] = channel_derivative(channels_[c], t);
    }
    return out;
}

Vector network_average(const std::vector<ReferenceSignal>& signals, double t,
                       const std::vector<int>& members) {
    if (members.empty()) {
        throw std::invalid_argument("network_average: member set is empty");
    }
    Vector sum = Vector::Zero(signals.at(members.front()).dimension());
    for (int i : members) {
        sum += signals.at(i).evaluate(t);
    }
    return sum / static_cast<double>(members.size());
}

SignalBounds estimate_edge_bounds(const std::vector<ReferenceSignal>& signals,
                                  const Topology& topology, double horizon, double grid_step) {
    if (grid_step <= 0.0 || horizon <= 0.0) {
        throw std::invalid_argument("estimate_edge_bounds: horizon and grid_step must be > 0");
    }
    constexpr double kSafety = 1.1;
    double varphi = 0.0;
    double dot_varphi = 0.0;
    const auto count = static_cast<long long>(std::floor(horizon / grid_step + 1e-9));
    for (long long g = 0; g <= count; ++g) {
        const double t = static_cast<double>(g) * grid_step;
        for (const auto& [i, j] : topology.undirected_edges()) {
            const Vector dv = signals.at(i).evaluate(t) - signals.at(j).evaluate(t);
            const Vector dd = signals.at(i).derivative(t) - signals.at(j).derivative(t);
            varphi = std::max(varphi, dv.cwiseAbs().maxCoeff());
            dot_varphi = std::max(dot_varphi, dd.cwiseAbs().maxCoeff());
        }
    }
    return {kSafety * varphi, kSafety * dot_varphi};
}

}  // namespace dacs
