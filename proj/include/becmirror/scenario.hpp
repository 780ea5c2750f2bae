#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "becmirror/atom_optics.hpp"
#include "becmirror/bragg.hpp"
#include "becmirror/experiment.hpp"
#include "becmirror/opa.hpp"

namespace becmirror {

// Scenario file: INI-style sections with unit-suffixed keys. Unknown sections
// or keys are rejected with the offending line number. Every key is optional;
// omitted keys keep the defaults below.
//
//   [opa]        g, degradation, phase_points, macro_state (plus|minus),
//                tail_tolerance
//   [species]    preset (rb87), linewidth_mhz, resonance_wavelength_nm,
//                scattering_length_nm, mass_kg
//   [sample]     number_density_per_cm3, atoms_per_disk, transverse_radius_um,
//                ho_length_um
//   [geometry]   disk_count, thickness_convention (optical|geometric)
//   [scan]       detuning_min_ghz, detuning_max_ghz, points, mask_linewidths
//   [experiment] repetitions, q_factor, flight_time_us, pulse_duration_ps,
//                source_bandwidth_ghz, stopband_ghz, expansion_speed_nm_per_us
struct ScenarioConfig {
    // [opa]
    double g = 1.0;
    double degradation = 1.0;
    int phase_points = 64;
    MacroSign macro_state = MacroSign::plus;
    double tail_tolerance = 1e-10;
    // [species]
    std::string species_preset = "rb87";
    double linewidth_mhz = 6.0;
    double resonance_wavelength_nm = 795.0;
    double scattering_length_nm = 5.77;
    double mass_kg = 1.44316060e-25;
    // [sample]
    double number_density_per_cm3 = 1e14;
    double atoms_per_disk = 500.0;
    double transverse_radius_um = 5.0;
    double ho_length_um = 1.0;
    // [geometry]
    int disk_count = 150;
    ThicknessConvention thickness_convention = ThicknessConvention::optical;
    // [scan]
    double detuning_min_ghz = -20.0;
    double detuning_max_ghz = 20.0;
    int scan_points = 2001;
    double mask_linewidths = 10.0;
    // [experiment]
    double repetitions = 10000.0;
    double q_factor = 1.0;
    double flight_time_us = 50.0;
    double pulse_duration_ps = 1.0;
    double source_bandwidth_ghz = 700.0;
    double stopband_ghz = 2.0;
    double expansion_speed_nm_per_us = 1.0;
};

ScenarioConfig parse_scenario(std::istream& in);
ScenarioConfig parse_scenario_string(const std::string& text);
ScenarioConfig parse_scenario_file(const std::string& path);

// Derived domain objects, all in SI.
AtomicSpecies scenario_species(const ScenarioConfig& cfg);
CondensateSample scenario_sample(const ScenarioConfig& cfg);
DiskLatticeGeometry scenario_geometry(const ScenarioConfig& cfg);
KickExperimentConfig scenario_kick(const ScenarioConfig& cfg);
double scenario_mask_cutoff_hz(const ScenarioConfig& cfg);
double scenario_expansion_speed(const ScenarioConfig& cfg); // m/s
std::vector<double> scenario_phases(const ScenarioConfig& cfg);    // 2 pi k / N
std::vector<double> scenario_detunings(const ScenarioConfig& cfg); // Hz, ascending

} // namespace becmirror
