#include "becmirror/atom_optics.hpp"

#include <cmath>
#include <sstream>

#include "becmirror/constants.hpp"
#include "becmirror/errors.hpp"

namespace becmirror {

using constants::pi;

AtomicSpecies rb87() {
    AtomicSpecies s;
    s.linewidth_gamma = 6e6;
    s.resonance_wavelength = 795e-9;
    s.scattering_length = 5.77e-9;
    s.mass = 1.44316060e-25;
    return s;
}

double rescaled_density(double wavelength, double number_density) {
    if (!(wavelength > 0.0) || number_density < 0.0) {
        throw InvalidParameterError("rescaled_density needs wavelength > 0 and density >= 0");
    }
    const double lbar = wavelength / (2.0 * pi);
    return lbar * lbar * lbar * number_density;
}

double default_resonance_cutoff(const AtomicSpecies& species) {
    return default_resonance_cutoff_linewidths * species.linewidth_gamma;
}

double dispersive_epsilon(const AtomicSpecies& species, double rescaled_density,
                          double detuning_hz, double cutoff_hz) {
    if (!(cutoff_hz > 0.0)) {
        throw InvalidParameterError("resonance cutoff must be positive");
    }
    if (!(std::abs(detuning_hz) >= cutoff_hz)) {
        std::ostringstream msg;
        msg << "detuning " << detuning_hz << " Hz lies inside the resonance window (|delta| < "
            << cutoff_hz << " Hz) where the far-detuned index is invalid";
        throw ResonanceRegionError(msg.str(), detuning_hz, cutoff_hz);
    }
    return 1.5 * pi * rescaled_density * species.linewidth_gamma / (-detuning_hz);
}

ScatteringReport scattering_probability(double atoms_per_disk, const AtomicSpecies& species,
                                        double detuning_hz) {
    if (detuning_hz == 0.0) {
        throw InvalidParameterError("scattering probability undefined at zero detuning");
    }
    if (atoms_per_disk < 0.0) {
        throw InvalidParameterError("atoms_per_disk must be non-negative");
    }
    ScatteringReport r;
    r.probability = atoms_per_disk * species.linewidth_gamma / std::abs(detuning_hz);
    r.model_valid = r.probability < 1.0;
    return r;
}

ThomasFermiDensity thomas_fermi_peak_density(double atoms_per_disk,
                                             const AtomicSpecies& species,
                                             double ho_length) {
    if (!(atoms_per_disk > 0.0) || !(ho_length > 0.0)) {
        throw InvalidParameterError("thomas_fermi_peak_density needs positive inputs");
    }
    const double a = species.scattering_length;
    const double factor = std::pow(15.0 * atoms_per_disk * a / ho_length, 0.4);
    ThomasFermiDensity d;
    d.literal_value = factor / (8.0 * pi * ho_length * a);
    d.audited_value = d.literal_value / ho_length;
    d.literal_units_consistent = false;
    return d;
}

DiskLatticeGeometry quarter_wave_geometry(double wavelength, int disk_count) {
    if (!(wavelength > 0.0) || disk_count < 1) {
        throw InvalidParameterError("quarter_wave_geometry needs wavelength > 0 and disk_count >= 1");
    }
    DiskLatticeGeometry g;
    g.disk_thickness = wavelength / 4.0;
    g.period = wavelength / 2.0;
    g.disk_count = disk_count;
    return g;
}

bool disk_thickness_typical(const DiskLatticeGeometry& geometry) {
    return geometry.disk_thickness >= 80e-9 && geometry.disk_thickness <= 300e-9;
}

double lattice_disk_size(double lattice_depth_s, double wavenumber_k, double prefactor) {
    if (!(lattice_depth_s > 0.0) || !(wavenumber_k > 0.0)) {
        throw InvalidParameterError("lattice_disk_size needs s > 0 and k > 0");
    }
    return prefactor * std::pow(lattice_depth_s, -0.25) / wavenumber_k;
}

} // namespace becmirror
