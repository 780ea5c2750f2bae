#include "becmirror/experiment.hpp"

#include <cmath>

#include "becmirror/constants.hpp"
#include "becmirror/errors.hpp"

namespace becmirror {

using constants::hbar;
using constants::speed_of_light;

ActivePhotons active_photons(double n_photons, double stopband_hz, double source_bandwidth_hz) {
    if (!(stopband_hz > 0.0) || !(source_bandwidth_hz > 0.0)) {
        throw InvalidParameterError("bandwidths must be positive");
    }
    if (n_photons < 0.0) {
        throw InvalidParameterError("photon count must be non-negative");
    }
    ActivePhotons out;
    if (stopband_hz > source_bandwidth_hz) {
        out.value = n_photons;
        out.clamped = true;
        return out;
    }
    out.value = n_photons * stopband_hz / source_bandwidth_hz;
    return out;
}

double resonant_photon_count(double n_photons, double atomic_linewidth_hz,
                             double source_bandwidth_hz) {
    if (!(atomic_linewidth_hz > 0.0) || !(source_bandwidth_hz > 0.0)) {
        throw InvalidParameterError("bandwidths must be positive");
    }
    return n_photons * atomic_linewidth_hz / source_bandwidth_hz;
}

TimingReport timing_check(const KickExperimentConfig& config, double expansion_speed,
                          double thickness_budget_fraction) {
    if (!(expansion_speed > 0.0) || !(config.pulse_duration > 0.0) ||
        !(thickness_budget_fraction > 0.0)) {
        throw InvalidParameterError("timing_check needs positive speeds and durations");
    }
    TimingReport r;
    r.survival_time_s =
        thickness_budget_fraction * config.geometry.disk_thickness / expansion_speed;
    // Pulse spacing is lower-bounded by the pulse duration, so the kick train
    // lasts at least repetitions * pulse_duration.
    r.exposure_time_s = config.repetitions * config.pulse_duration;
    r.exposure_margin_s = r.survival_time_s - r.exposure_time_s;
    r.flight_margin_s = r.survival_time_s - config.flight_time;
    // rounding slack so that budgets sitting exactly on the boundary pass
    const double slack = 1e-12 * r.survival_time_s;
    r.exposure_ok = r.exposure_margin_s >= -slack;
    r.flight_ok = r.flight_margin_s >= -slack;
    r.feasible = r.exposure_ok && r.flight_ok;
    return r;
}

DisplacementFringe displacement_fringe(const KickExperimentConfig& config,
                                       std::span<const double> phases,
                                       double expansion_speed) {
    if (config.repetitions < 1.0 || !(config.flight_time > 0.0)) {
        throw InvalidParameterError("config needs repetitions >= 1 and flight_time > 0");
    }
    if (config.cavity_q_factor < 1.0) {
        throw InvalidParameterError("cavity_q_factor must be >= 1");
    }

    const GainParams gp = gain_params(config.gain);
    const FringeCurve curve =
        fringe_curve(gp, phases, config.degradation, config.sign);

    const double nu = speed_of_light / config.species.resonance_wavelength;
    const double momentum_per_photon = 2.0 * hbar * nu / speed_of_light;
    const double total_mass =
        config.geometry.disk_count * config.sample.atoms_per_disk * config.species.mass;
    if (!(total_mass > 0.0)) {
        throw InvalidParameterError("condensate mass must be positive");
    }

    DisplacementFringe fringe;
    fringe.phases = curve.phases;
    fringe.displacement_m.reserve(phases.size());
    fringe.active_plus.reserve(phases.size());
    fringe.active_minus.reserve(phases.size());

    const double kick_scale = momentum_per_photon * config.cavity_q_factor *
                              config.repetitions / total_mass * config.flight_time;
    for (size_t k = 0; k < curve.phases.size(); ++k) {
        const ActivePhotons ap =
            active_photons(curve.n_plus[k], config.stopband_hz, config.source_bandwidth_hz);
        const ActivePhotons am =
            active_photons(curve.n_minus[k], config.stopband_hz, config.source_bandwidth_hz);
        fringe.active_clamped = fringe.active_clamped || ap.clamped || am.clamped;
        fringe.active_plus.push_back(ap.value);
        fringe.active_minus.push_back(am.value);
        fringe.displacement_m.push_back((ap.value - am.value) * kick_scale);
    }

    // Validity monitors: scattering evaluated at half the stopband, the
    // representative detuning of the reflected photons.
    const ScatteringReport scatter = scattering_probability(
        config.sample.atoms_per_disk, config.species, config.stopband_hz / 2.0);
    fringe.scattering_probability = scatter.probability;
    fringe.scattering_valid = scatter.model_valid;
    fringe.timing = timing_check(config, expansion_speed);
    return fringe;
}

} // namespace becmirror
