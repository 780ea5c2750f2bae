#pragma once

namespace becmirror {

struct AtomicSpecies {
    double linewidth_gamma = 0.0;       // Hz
    double resonance_wavelength = 0.0;  // m
    double scattering_length = 0.0;     // m
    double mass = 0.0;                  // kg
};

// 87Rb D1 line.
AtomicSpecies rb87();

struct CondensateSample {
    double number_density = 0.0;    // atoms / m^3
    double atoms_per_disk = 0.0;
    double transverse_radius = 0.0; // m, typically 2-10 um
    double longitudinal_size = 0.0; // m, typically 80-300 nm
    double ho_length = 0.0;         // m, averaged harmonic-oscillator length
};

struct DiskLatticeGeometry {
    double disk_thickness = 0.0; // m
    double period = 0.0;         // m
    int disk_count = 0;
};

// N = (lambda/2pi)^3 * N/V, the atomic density in reduced-wavelength units.
double rescaled_density(double wavelength, double number_density);

// Detuning convention used throughout: delta = nu - nu0, positive on the blue
// side. The far-detuned two-level index is then
//   epsilon = (3 pi / 2) N Gamma / (nu0 - nu) = -(3 pi / 2) N Gamma / delta
// positive (n_B > 1) for red detuning. Queries with |delta| below the cutoff
// are refused: the approximation breaks down near resonance. Absorption is
// neglected; scattering_probability is the designated validity monitor.
double dispersive_epsilon(const AtomicSpecies& species, double rescaled_density,
                          double detuning_hz, double cutoff_hz);

// Default exclusion window around resonance, in units of the linewidth.
inline constexpr double default_resonance_cutoff_linewidths = 10.0;
double default_resonance_cutoff(const AtomicSpecies& species);

struct ScatteringReport {
    double probability = 0.0; // N_at * Gamma / |delta|, reported unclamped
    bool model_valid = true;  // false once the value reaches 1
};

ScatteringReport scattering_probability(double atoms_per_disk, const AtomicSpecies& species,
                                        double detuning_hz);

// The printed peak-density expression
//   (1/8pi) (1/(a_ho a)) (15 N_at a / a_ho)^(2/5)
// carries units of 1/length^2, not a volume density. Both the literal value
// and the unit-audited variant (one extra 1/a_ho, the standard Thomas-Fermi
// central density) are reported; neither replaces the other silently.
struct ThomasFermiDensity {
    double literal_value = 0.0; // 1/m^2, expression as printed
    double audited_value = 0.0; // 1/m^3, (1/8pi) (1/(a a_ho^2)) (15 N_at a/a_ho)^(2/5)
    bool literal_units_consistent = false; // always false, kept as an explicit audit flag
};

ThomasFermiDensity thomas_fermi_peak_density(double atoms_per_disk,
                                             const AtomicSpecies& species,
                                             double ho_length);

// Disks of thickness lambda/4 on a lambda/2 period (vacuum gap lambda/4), the
// Bragg arrangement for wavelength lambda.
DiskLatticeGeometry quarter_wave_geometry(double wavelength, int disk_count);

// Typical disk-thickness window for lattice-loaded condensates.
bool disk_thickness_typical(const DiskLatticeGeometry& geometry);

// R_l = prefactor * s^(-1/4) / k. The proportionality constant is not fixed
// by the lattice scaling law, so it stays a caller-supplied input.
double lattice_disk_size(double lattice_depth_s, double wavenumber_k, double prefactor);

} // namespace becmirror
