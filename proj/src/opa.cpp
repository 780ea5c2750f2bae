#include "becmirror/opa.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "becmirror/errors.hpp"

namespace becmirror {

GainParams gain_params(double g) {
    if (!std::isfinite(g) || g < 0.0) {
        throw InvalidParameterError("gain must be finite and non-negative");
    }
    GainParams p;
    p.g = g;
    p.big_c = std::cosh(g);
    p.gamma = std::tanh(g);
    const double sh = std::sinh(g);
    p.m_bar = sh * sh;
    return p;
}

double MacroStateAmplitudes::amplitude(int i, int j) const {
    if (i < 0 || j < 0 || i > i_max_ || j > j_max_) return 0.0;
    if (log_i_.empty()) return (i == 0 && j == 0) ? 1.0 : 0.0; // g = 0
    const double mag = inv_c2_ * std::exp(log_i_[static_cast<size_t>(i)] +
                                          log_j_[static_cast<size_t>(j)]);
    return (i % 2 == 0) ? mag : -mag;
}

double MacroStateAmplitudes::probability(int i, int j) const {
    const double a = amplitude(i, j);
    return a * a;
}

double MacroStateAmplitudes::aligned_marginal(int i) const {
    if (i < 0 || i > i_max_) return 0.0;
    if (u_.empty()) return i == 0 ? 1.0 : 0.0;
    return u_[static_cast<size_t>(i)] * inv_c4_ * sum_v_;
}

double MacroStateAmplitudes::orthogonal_marginal(int j) const {
    if (j < 0 || j > j_max_) return 0.0;
    if (v_.empty()) return j == 0 ? 1.0 : 0.0;
    return v_[static_cast<size_t>(j)] * inv_c4_ * sum_u_;
}

MacroStateAmplitudes macro_amplitudes(const GainParams& params, double tail_tolerance,
                                      const MacroAmplitudeOptions& options) {
    if (!(tail_tolerance > 0.0) || !(tail_tolerance < 1.0)) {
        throw InvalidParameterError("tail_tolerance must lie in (0,1)");
    }
    if (!(params.gamma < 1.0)) {
        throw InvalidParameterError("gamma must be below 1");
    }

    MacroStateAmplitudes table;
    if (params.gamma == 0.0) {
        // Unamplified injected photon: single ket |1>|0>.
        return table;
    }

    const double c = params.big_c;
    table.inv_c2_ = 1.0 / (c * c);
    table.inv_c4_ = table.inv_c2_ * table.inv_c2_;
    const double log_half_gamma = std::log(params.gamma / 2.0);

    // Marginal probability terms of the squared-amplitude series:
    //   u_i = (2i+1) binom(2i,i) (G^2/4)^i   (sums to C^3)
    //   v_j =        binom(2j,j) (G^2/4)^j   (sums to C)
    // so captured_norm = C^-4 * sum(u) * sum(v). Terms are built by ratio
    // recurrence; log-gamma is only needed for the signed amplitudes.
    const double x = params.gamma * params.gamma / 4.0;
    auto push_u = [&](std::vector<double>& u) {
        const int i = static_cast<int>(u.size());
        const double prev = u.back();
        // ratio u_i/u_{i-1} = (2i+1)/(2i-1) * (2i)(2i-1)/i^2 * x
        const double di = static_cast<double>(i);
        u.push_back(prev * (2 * di + 1) / (2 * di - 1) * (2 * di) * (2 * di - 1) /
                    (di * di) * x);
    };
    auto push_v = [&](std::vector<double>& v) {
        const int j = static_cast<int>(v.size());
        const double prev = v.back();
        const double dj = static_cast<double>(j);
        v.push_back(prev * (2 * dj) * (2 * dj - 1) / (dj * dj) * x);
    };

    std::vector<double> u{1.0};
    std::vector<double> v{1.0};
    double sum_u = 1.0;
    double sum_v = 1.0;

    // Expand alternately until the captured norm certifies the tolerance. The
    // stop target carries a 10x margin so renormalized moments are not biased
    // at the tolerance edge.
    const double target = 1.0 - tail_tolerance * 0.1;
    bool grow_i = true;
    while (table.inv_c4_ * sum_u * sum_v < target) {
        const int next = grow_i ? static_cast<int>(u.size()) : static_cast<int>(v.size());
        if (next > options.max_index) {
            const double achieved = table.inv_c4_ * sum_u * sum_v;
            std::ostringstream msg;
            msg << "amplitude enumeration hit the index cap " << options.max_index
                << " with captured norm " << achieved
                << " (gain too large for enumeration; use the closed-form statistics)";
            throw TruncationError(msg.str(), achieved);
        }
        if (grow_i) {
            push_u(u);
            sum_u += u.back();
        } else {
            push_v(v);
            sum_v += v.back();
        }
        grow_i = !grow_i;
    }

    table.i_max_ = static_cast<int>(u.size()) - 1;
    table.j_max_ = static_cast<int>(v.size()) - 1;
    table.captured_norm_ = table.inv_c4_ * sum_u * sum_v;
    table.u_ = std::move(u);
    table.v_ = std::move(v);
    table.sum_u_ = sum_u;
    table.sum_v_ = sum_v;

    table.log_i_.resize(static_cast<size_t>(table.i_max_) + 1);
    table.log_j_.resize(static_cast<size_t>(table.j_max_) + 1);
    for (int i = 0; i <= table.i_max_; ++i) {
        table.log_i_[static_cast<size_t>(i)] =
            i * log_half_gamma + 0.5 * std::lgamma(2.0 * i + 2.0) - std::lgamma(i + 1.0);
    }
    for (int j = 0; j <= table.j_max_; ++j) {
        table.log_j_[static_cast<size_t>(j)] =
            j * log_half_gamma + 0.5 * std::lgamma(2.0 * j + 1.0) - std::lgamma(j + 1.0);
    }
    return table;
}

PhotonStats photon_stats_closed(const GainParams& params, double phi) {
    const double m = params.m_bar;
    const double c = std::cos(phi);
    PhotonStats s;
    s.n_plus = m + 0.5 * (2.0 * m + 1.0) * (1.0 + c);
    s.n_minus = m + 0.5 * (2.0 * m + 1.0) * (1.0 - c);
    s.n_diff = (2.0 * m + 1.0) * c;
    return s;
}

MacroMoments moments_from_amplitudes(const MacroStateAmplitudes& amps) {
    const double norm = amps.captured_norm();
    if (!(norm > 0.999)) {
        std::ostringstream msg;
        msg << "amplitude table is under-truncated: captured norm " << norm;
        throw TruncationError(msg.str(), norm);
    }
    // The squared amplitudes factorize, so each moment reduces to its own
    // marginal series; renormalization by the captured norm cancels the other
    // marginal sum exactly.
    double wu = 0.0, su = 0.0;
    for (int i = 0; i <= amps.i_max(); ++i) {
        const double p = amps.aligned_marginal(i);
        su += p;
        wu += p * MacroStateAmplitudes::aligned_photons(i);
    }
    double wv = 0.0, sv = 0.0;
    for (int j = 0; j <= amps.j_max(); ++j) {
        const double p = amps.orthogonal_marginal(j);
        sv += p;
        wv += p * MacroStateAmplitudes::orthogonal_photons(j);
    }
    return MacroMoments{wu / su, wv / sv};
}

double visibility(const GainParams& params) {
    const double m = params.m_bar;
    return (2.0 * m + 1.0) / (4.0 * m + 1.0);
}

FringeCurve fringe_curve(const GainParams& params, std::span<const double> phases,
                         double degradation, MacroSign sign) {
    if (!(degradation > 0.0) || degradation > 1.0 || !std::isfinite(degradation)) {
        throw InvalidParameterError("degradation must lie in (0,1]");
    }
    FringeCurve curve;
    curve.degradation = degradation;
    curve.sign = sign;
    curve.phases.assign(phases.begin(), phases.end());
    curve.n_plus.reserve(phases.size());
    curve.n_minus.reserve(phases.size());
    curve.n_diff.reserve(phases.size());
    const double m = params.m_bar;
    const double flip = sign == MacroSign::plus ? 1.0 : -1.0;
    for (double phi : curve.phases) {
        const double c = flip * degradation * std::cos(phi);
        curve.n_plus.push_back(m + 0.5 * (2.0 * m + 1.0) * (1.0 + c));
        curve.n_minus.push_back(m + 0.5 * (2.0 * m + 1.0) * (1.0 - c));
        curve.n_diff.push_back((2.0 * m + 1.0) * c);
    }
    return curve;
}

} // namespace becmirror
