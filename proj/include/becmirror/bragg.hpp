#pragma once

#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "becmirror/atom_optics.hpp"

// One-dimensional layered-media optics at normal incidence (polarization drops
// out head-on). Lossless real-index slabs between unit-index ambients.
//
// Each slab carries the standard characteristic matrix
//   M = [ cos d          i sin d / n ]
//       [ i n sin d      cos d       ],   d = 2 pi n t / lambda,
// the stack matrix is the ordered product (first layer hit first), and the
// amplitude coefficients with ambient/substrate index 1 are
//   r = (B - C) / (B + C),  t = 2 / (B + C),  B = m11 + m12, C = m21 + m22.
namespace becmirror {

struct Layer {
    double refractive_index = 1.0;
    double thickness = 0.0; // m, geometric
};

struct LayerStack {
    std::vector<Layer> layers;
};

struct CharacteristicMatrix {
    std::complex<double> m11{1.0, 0.0};
    std::complex<double> m12{0.0, 0.0};
    std::complex<double> m21{0.0, 0.0};
    std::complex<double> m22{1.0, 0.0};

    std::complex<double> determinant() const { return m11 * m22 - m12 * m21; }
    CharacteristicMatrix operator*(const CharacteristicMatrix& o) const;
};

CharacteristicMatrix layer_matrix(const Layer& layer, double wavelength);
CharacteristicMatrix stack_matrix(const LayerStack& stack, double wavelength);

struct StackResponse {
    std::complex<double> r{0.0, 0.0};
    std::complex<double> t{1.0, 0.0};
    double reflectivity = 0.0;
    double transmissivity = 1.0;
};

StackResponse stack_response(const LayerStack& stack, double wavelength);
double stack_reflectivity(const LayerStack& stack, double wavelength);

// Quarter-wave thickness convention for the high-index slabs. "optical" keeps
// each slab a quarter wave of optical path (t = lambda/(4n), the arrangement
// the closed form assumes); "geometric" uses t = lambda/4 of physical length,
// which detunes the Bragg condition by about pi*eps/2 of phase per period and
// noticeably degrades peak reflectivity once N_D * eps is large.
enum class ThicknessConvention { optical, geometric };

LayerStack make_quarter_wave_stack(double n_b, int n_d, double design_wavelength,
                                   ThicknessConvention convention = ThicknessConvention::optical);

// R = ((n^2N - 1)/(n^2N + 1))^2 evaluated as tanh^2(N ln n), stable for
// exponents far beyond double range.
double closed_form_reflectivity(double n_b, int n_d);

// Stopband Delta-nu = (4 nu / pi) asin(|n-1|/(n+1)) and its small-contrast
// limit (2 nu / pi) eps.
double stopband_width(double n_b, double frequency);
double stopband_width_small_epsilon(double epsilon, double frequency);

struct SpectrumPoint {
    double detuning_hz = 0.0;
    double wavelength_m = 0.0;
    double epsilon = 0.0;
    double reflectivity = 0.0;
    bool masked = false;
};

struct ReflectivitySpectrum {
    std::vector<SpectrumPoint> samples;
    // Detuning interval excluded around resonance, when any point fell in it.
    std::optional<std::pair<double, double>> masked_region;
};

// Dispersive reflectivity scan: per detuning point the index n_B = 1 + eps(delta)
// feeds a fresh quarter-wave stack probed at that point's wavelength. Points
// inside the resonance cutoff are flagged (epsilon and reflectivity zeroed),
// never omitted. The detuning grid must be sorted ascending.
ReflectivitySpectrum reflectivity_spectrum(
    const AtomicSpecies& species, const CondensateSample& sample,
    const DiskLatticeGeometry& geometry, std::span<const double> detunings_hz,
    double cutoff_hz, ThicknessConvention convention = ThicknessConvention::optical,
    int threads = 1);

// Periodic density profile sampled over one lattice period.
struct DensityProfile {
    double period = 0.0;             // m
    int period_count = 1;
    std::vector<double> positions;   // ascending, within [0, period]
    std::vector<double> densities;   // atoms/m^3
};

// Staircase discretization of a graded index profile: one period is cut into
// equal sublayers whose index is 1 + eps(density at the sublayer midpoint),
// with eps from the dispersive two-level model at the given detuning.
LayerStack graded_stack_from_profile(const DensityProfile& profile, double wavelength,
                                     int sublayers_per_period, const AtomicSpecies& species,
                                     double detuning_hz, double cutoff_hz);

} // namespace becmirror
