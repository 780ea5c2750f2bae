#pragma once

#include <span>
#include <vector>

#include "becmirror/atom_optics.hpp"
#include "becmirror/opa.hpp"

namespace becmirror {

// Full kick-experiment parameter set. The stopband is carried explicitly: it
// is normally the near-resonance high-reflectivity bandwidth of the mirror,
// quoted independently of the slab geometry.
struct KickExperimentConfig {
    double gain = 1.0;
    AtomicSpecies species;
    DiskLatticeGeometry geometry;
    CondensateSample sample;
    double source_bandwidth_hz = 700e9; // emission linewidth of the amplifier
    double stopband_hz = 2e9;           // reflected (active) bandwidth
    double degradation = 1.0;
    double repetitions = 1.0;
    double cavity_q_factor = 1.0; // scalar bounce multiplier, >= 1
    double flight_time = 0.0;     // s, free flight before readout
    double pulse_duration = 0.0;  // s, single amplifier pulse
    MacroSign sign = MacroSign::plus;
};

struct ActivePhotons {
    double value = 0.0;
    bool clamped = false; // stopband exceeded the source bandwidth
};

// N' = (stopband / source bandwidth) * N; fractional counts are ensemble means.
ActivePhotons active_photons(double n_photons, double stopband_hz, double source_bandwidth_hz);

// Photons within one atomic linewidth of resonance.
double resonant_photon_count(double n_photons, double atomic_linewidth_hz,
                             double source_bandwidth_hz);

struct TimingReport {
    double survival_time_s = 0.0; // pattern lifetime after lattice release
    double exposure_time_s = 0.0; // repetitions x pulse duration
    double exposure_margin_s = 0.0;
    double flight_margin_s = 0.0;
    bool exposure_ok = false;
    bool flight_ok = false;
    bool feasible = false;
};

// Pattern survival = (budget_fraction x disk thickness) / expansion speed; the
// kick sequence and the free flight must both fit inside it.
TimingReport timing_check(const KickExperimentConfig& config, double expansion_speed,
                          double thickness_budget_fraction = 0.25);

struct DisplacementFringe {
    std::vector<double> phases;
    std::vector<double> displacement_m;
    std::vector<double> active_plus;  // N'+ per phase
    std::vector<double> active_minus; // N'- per phase
    // Validity monitors evaluated once for the configuration.
    double scattering_probability = 0.0;
    bool scattering_valid = false;
    TimingReport timing;
    bool active_clamped = false;
};

// Rigid-mirror displacement fringe. Per pulse the two counter-propagating
// beams transfer net momentum (N'+ - N'-) * (2 h-bar nu / c) * Q; repetitions
// add coherently, the condensate mass is N_D * N_at * m_atom, and the
// displacement is velocity * flight time. The phase dependence is exactly
// cos(phi) scaled by the degradation factor.
DisplacementFringe displacement_fringe(const KickExperimentConfig& config,
                                       std::span<const double> phases,
                                       double expansion_speed = 1e-3);

} // namespace becmirror
