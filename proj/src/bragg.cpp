#include "becmirror/bragg.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "becmirror/constants.hpp"
#include "becmirror/errors.hpp"

namespace becmirror {

using constants::pi;
using constants::speed_of_light;

CharacteristicMatrix CharacteristicMatrix::operator*(const CharacteristicMatrix& o) const {
    CharacteristicMatrix p;
    p.m11 = m11 * o.m11 + m12 * o.m21;
    p.m12 = m11 * o.m12 + m12 * o.m22;
    p.m21 = m21 * o.m11 + m22 * o.m21;
    p.m22 = m21 * o.m12 + m22 * o.m22;
    return p;
}

CharacteristicMatrix layer_matrix(const Layer& layer, double wavelength) {
    if (!(wavelength > 0.0)) throw InvalidParameterError("wavelength must be positive");
    if (!(layer.refractive_index > 0.0) || layer.thickness < 0.0) {
        throw InvalidParameterError("layer needs index > 0 and thickness >= 0");
    }
    const double delta = 2.0 * pi * layer.refractive_index * layer.thickness / wavelength;
    const double c = std::cos(delta);
    const double s = std::sin(delta);
    CharacteristicMatrix m;
    m.m11 = {c, 0.0};
    m.m12 = {0.0, s / layer.refractive_index};
    m.m21 = {0.0, layer.refractive_index * s};
    m.m22 = {c, 0.0};
    return m;
}

CharacteristicMatrix stack_matrix(const LayerStack& stack, double wavelength) {
    CharacteristicMatrix m;
    for (const Layer& layer : stack.layers) {
        m = m * layer_matrix(layer, wavelength);
    }
    return m;
}

StackResponse stack_response(const LayerStack& stack, double wavelength) {
    StackResponse out;
    if (stack.layers.empty()) return out;
    const CharacteristicMatrix m = stack_matrix(stack, wavelength);
    const std::complex<double> b = m.m11 + m.m12;
    const std::complex<double> c = m.m21 + m.m22;
    out.r = (b - c) / (b + c);
    out.t = 2.0 / (b + c);
    out.reflectivity = std::norm(out.r);
    out.transmissivity = std::norm(out.t);
    return out;
}

double stack_reflectivity(const LayerStack& stack, double wavelength) {
    return stack_response(stack, wavelength).reflectivity;
}

LayerStack make_quarter_wave_stack(double n_b, int n_d, double design_wavelength,
                                   ThicknessConvention convention) {
    if (!(n_b > 0.0) || n_d < 1 || !(design_wavelength > 0.0)) {
        throw InvalidParameterError("quarter-wave stack needs n_b > 0, n_d >= 1, wavelength > 0");
    }
    const double quarter = design_wavelength / 4.0;
    const double slab = convention == ThicknessConvention::optical ? quarter / n_b : quarter;
    LayerStack stack;
    stack.layers.reserve(static_cast<size_t>(n_d) * 2);
    for (int k = 0; k < n_d; ++k) {
        stack.layers.push_back({n_b, slab});
        stack.layers.push_back({1.0, quarter});
    }
    return stack;
}

double closed_form_reflectivity(double n_b, int n_d) {
    if (!(n_b > 0.0) || n_d < 1) {
        throw InvalidParameterError("closed form needs n_b > 0 and n_d >= 1");
    }
    const double t = std::tanh(static_cast<double>(n_d) * std::log(n_b));
    return t * t;
}

double stopband_width(double n_b, double frequency) {
    if (!(n_b > 0.0) || !(frequency > 0.0)) {
        throw InvalidParameterError("stopband needs n_b > 0 and frequency > 0");
    }
    return 4.0 * frequency / pi * std::asin(std::abs(n_b - 1.0) / (n_b + 1.0));
}

double stopband_width_small_epsilon(double epsilon, double frequency) {
    return 2.0 * frequency / pi * std::abs(epsilon);
}

namespace {

// Quarter-wave stack for one spectrum point. The design wavelength is encoded
// in the geometry (period = lambda0/2). The vacuum gap is a quarter wave in
// both conventions; only the slab thickness changes.
LayerStack spectrum_stack(const DiskLatticeGeometry& geometry, double n_b,
                          ThicknessConvention convention) {
    const double quarter = geometry.period / 2.0;
    const double slab =
        convention == ThicknessConvention::optical ? quarter / n_b : geometry.disk_thickness;
    LayerStack stack;
    stack.layers.reserve(static_cast<size_t>(geometry.disk_count) * 2);
    for (int k = 0; k < geometry.disk_count; ++k) {
        stack.layers.push_back({n_b, slab});
        stack.layers.push_back({1.0, geometry.period - geometry.disk_thickness});
    }
    return stack;
}

} // namespace

ReflectivitySpectrum reflectivity_spectrum(const AtomicSpecies& species,
                                           const CondensateSample& sample,
                                           const DiskLatticeGeometry& geometry,
                                           std::span<const double> detunings_hz,
                                           double cutoff_hz, ThicknessConvention convention,
                                           int threads) {
    if (!std::is_sorted(detunings_hz.begin(), detunings_hz.end())) {
        throw InvalidParameterError("detuning grid must be sorted ascending");
    }
    if (threads < 1) throw InvalidParameterError("threads must be >= 1");

    const double n_resc = rescaled_density(species.resonance_wavelength, sample.number_density);
    const double nu0 = speed_of_light / species.resonance_wavelength;

    ReflectivitySpectrum spectrum;
    spectrum.samples.resize(detunings_hz.size());

    auto worker = [&](size_t begin, size_t end) {
        for (size_t k = begin; k < end; ++k) {
            const double delta = detunings_hz[k];
            SpectrumPoint& p = spectrum.samples[k];
            p.detuning_hz = delta;
            p.wavelength_m = speed_of_light / (nu0 + delta);
            if (std::abs(delta) < cutoff_hz) {
                p.masked = true; // placeholder zeros, flagged for the consumer
                continue;
            }
            p.epsilon = dispersive_epsilon(species, n_resc, delta, cutoff_hz);
            const LayerStack stack = spectrum_stack(geometry, 1.0 + p.epsilon, convention);
            p.reflectivity = stack_reflectivity(stack, p.wavelength_m);
        }
    };

    const size_t n = detunings_hz.size();
    if (threads == 1 || n < 2) {
        worker(0, n);
    } else {
        const size_t used = std::min<size_t>(static_cast<size_t>(threads), n);
        std::vector<std::thread> pool;
        pool.reserve(used);
        std::vector<std::exception_ptr> errors(used);
        const size_t chunk = (n + used - 1) / used;
        for (size_t t = 0; t < used; ++t) {
            const size_t b = t * chunk;
            const size_t e = std::min(n, b + chunk);
            if (b >= e) break;
            pool.emplace_back([&worker, &errors, t, b, e] {
                try {
                    worker(b, e);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (std::thread& th : pool) th.join();
        for (const std::exception_ptr& err : errors) {
            if (err) std::rethrow_exception(err);
        }
    }

    for (const SpectrumPoint& p : spectrum.samples) {
        if (!p.masked) continue;
        if (!spectrum.masked_region) {
            spectrum.masked_region = std::make_pair(p.detuning_hz, p.detuning_hz);
        } else {
            spectrum.masked_region->first = std::min(spectrum.masked_region->first, p.detuning_hz);
            spectrum.masked_region->second = std::max(spectrum.masked_region->second, p.detuning_hz);
        }
    }
    return spectrum;
}

LayerStack graded_stack_from_profile(const DensityProfile& profile, double wavelength,
                                     int sublayers_per_period, const AtomicSpecies& species,
                                     double detuning_hz, double cutoff_hz) {
    if (sublayers_per_period < 2) {
        throw InvalidParameterError("need at least 2 sublayers per period");
    }
    if (!(profile.period > 0.0) || profile.period_count < 1) {
        throw InvalidParameterError("profile needs a positive period and period_count >= 1");
    }
    if (profile.positions.size() != profile.densities.size() || profile.positions.empty()) {
        throw InvalidParameterError("profile samples are empty or mismatched");
    }
    for (double d : profile.densities) {
        if (d < 0.0) throw InvalidParameterError("densities must be non-negative");
    }

    const double eps_per_density =
        dispersive_epsilon(species, rescaled_density(wavelength, 1.0), detuning_hz, cutoff_hz);

    // Linear interpolation with constant extension outside the sampled range.
    auto density_at = [&profile](double pos) {
        const std::vector<double>& xs = profile.positions;
        const std::vector<double>& ys = profile.densities;
        if (pos <= xs.front()) return ys.front();
        if (pos >= xs.back()) return ys.back();
        const auto it = std::upper_bound(xs.begin(), xs.end(), pos);
        const size_t hi = static_cast<size_t>(it - xs.begin());
        const size_t lo = hi - 1;
        const double w = (pos - xs[lo]) / (xs[hi] - xs[lo]);
        return ys[lo] + w * (ys[hi] - ys[lo]);
    };

    const double dz = profile.period / sublayers_per_period;
    std::vector<Layer> one_period;
    one_period.reserve(static_cast<size_t>(sublayers_per_period));
    for (int k = 0; k < sublayers_per_period; ++k) {
        const double mid = (k + 0.5) * dz;
        const double eps = eps_per_density * density_at(mid);
        one_period.push_back({1.0 + eps, dz});
    }

    LayerStack stack;
    stack.layers.reserve(one_period.size() * static_cast<size_t>(profile.period_count));
    for (int rep = 0; rep < profile.period_count; ++rep) {
        stack.layers.insert(stack.layers.end(), one_period.begin(), one_period.end());
    }
    return stack;
}

} // namespace becmirror
