#include "becmirror/scenario.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "becmirror/constants.hpp"
#include "becmirror/errors.hpp"

namespace becmirror {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& value, int line) {
    const std::string v = trim(value);
    if (v.empty()) throw ConfigError("empty value", line);
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size() || !std::isfinite(x)) {
        throw ConfigError("cannot parse number '" + v + "'", line);
    }
    return x;
}

int parse_count(const std::string& value, int line) {
    const double x = parse_number(value, line);
    if (x < 0 || x != std::floor(x) || x > 1e9) {
        throw ConfigError("expected a non-negative integer, got '" + trim(value) + "'", line);
    }
    return static_cast<int>(x);
}

const std::map<std::string, std::set<std::string>>& schema() {
    static const std::map<std::string, std::set<std::string>> s = {
        {"opa", {"g", "degradation", "phase_points", "macro_state", "tail_tolerance"}},
        {"species",
         {"preset", "linewidth_mhz", "resonance_wavelength_nm", "scattering_length_nm",
          "mass_kg"}},
        {"sample",
         {"number_density_per_cm3", "atoms_per_disk", "transverse_radius_um", "ho_length_um"}},
        {"geometry", {"disk_count", "thickness_convention"}},
        {"scan", {"detuning_min_ghz", "detuning_max_ghz", "points", "mask_linewidths"}},
        {"experiment",
         {"repetitions", "q_factor", "flight_time_us", "pulse_duration_ps",
          "source_bandwidth_ghz", "stopband_ghz", "expansion_speed_nm_per_us"}},
    };
    return s;
}

void assign(ScenarioConfig& cfg, const std::string& section, const std::string& key,
            const std::string& value, int line) {
    const auto sec = schema().find(section);
    if (sec == schema().end()) throw ConfigError("unknown section [" + section + "]", line);
    if (sec->second.find(key) == sec->second.end()) {
        throw ConfigError("unknown key '" + key + "' in section [" + section + "]", line);
    }

    if (section == "opa") {
        if (key == "g") cfg.g = parse_number(value, line);
        else if (key == "degradation") cfg.degradation = parse_number(value, line);
        else if (key == "phase_points") cfg.phase_points = parse_count(value, line);
        else if (key == "tail_tolerance") cfg.tail_tolerance = parse_number(value, line);
        else {
            const std::string v = trim(value);
            if (v == "plus") cfg.macro_state = MacroSign::plus;
            else if (v == "minus") cfg.macro_state = MacroSign::minus;
            else throw ConfigError("macro_state must be 'plus' or 'minus'", line);
        }
    } else if (section == "species") {
        if (key == "preset") {
            if (trim(value) != "rb87") throw ConfigError("unknown species preset", line);
            cfg.species_preset = "rb87";
        } else if (key == "linewidth_mhz") cfg.linewidth_mhz = parse_number(value, line);
        else if (key == "resonance_wavelength_nm")
            cfg.resonance_wavelength_nm = parse_number(value, line);
        else if (key == "scattering_length_nm")
            cfg.scattering_length_nm = parse_number(value, line);
        else cfg.mass_kg = parse_number(value, line);
    } else if (section == "sample") {
        if (key == "number_density_per_cm3")
            cfg.number_density_per_cm3 = parse_number(value, line);
        else if (key == "atoms_per_disk") cfg.atoms_per_disk = parse_number(value, line);
        else if (key == "transverse_radius_um")
            cfg.transverse_radius_um = parse_number(value, line);
        else cfg.ho_length_um = parse_number(value, line);
    } else if (section == "geometry") {
        if (key == "disk_count") cfg.disk_count = parse_count(value, line);
        else {
            const std::string v = trim(value);
            if (v == "optical") cfg.thickness_convention = ThicknessConvention::optical;
            else if (v == "geometric") cfg.thickness_convention = ThicknessConvention::geometric;
            else throw ConfigError("thickness_convention must be 'optical' or 'geometric'", line);
        }
    } else if (section == "scan") {
        if (key == "detuning_min_ghz") cfg.detuning_min_ghz = parse_number(value, line);
        else if (key == "detuning_max_ghz") cfg.detuning_max_ghz = parse_number(value, line);
        else if (key == "points") cfg.scan_points = parse_count(value, line);
        else cfg.mask_linewidths = parse_number(value, line);
    } else { // experiment
        if (key == "repetitions") cfg.repetitions = parse_number(value, line);
        else if (key == "q_factor") cfg.q_factor = parse_number(value, line);
        else if (key == "flight_time_us") cfg.flight_time_us = parse_number(value, line);
        else if (key == "pulse_duration_ps") cfg.pulse_duration_ps = parse_number(value, line);
        else if (key == "source_bandwidth_ghz")
            cfg.source_bandwidth_ghz = parse_number(value, line);
        else if (key == "stopband_ghz") cfg.stopband_ghz = parse_number(value, line);
        else cfg.expansion_speed_nm_per_us = parse_number(value, line);
    }
}

} // namespace

ScenarioConfig parse_scenario(std::istream& in) {
    ScenarioConfig cfg;
    std::string raw;
    std::string section;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string text = raw;
        const auto hash = text.find_first_of("#;");
        if (hash != std::string::npos) text = text.substr(0, hash);
        text = trim(text);
        if (text.empty()) continue;
        if (text.front() == '[') {
            if (text.back() != ']') throw ConfigError("unterminated section header", line);
            section = trim(text.substr(1, text.size() - 2));
            if (schema().find(section) == schema().end()) {
                throw ConfigError("unknown section [" + section + "]", line);
            }
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw ConfigError("expected 'key = value'", line);
        if (section.empty()) throw ConfigError("key outside of any section", line);
        const std::string key = trim(text.substr(0, eq));
        const std::string value = text.substr(eq + 1);
        if (key.empty()) throw ConfigError("empty key", line);
        assign(cfg, section, key, value, line);
    }
    if (cfg.phase_points < 1) throw ConfigError("phase_points must be at least 1");
    if (cfg.scan_points < 2) throw ConfigError("scan points must be at least 2");
    if (cfg.detuning_min_ghz >= cfg.detuning_max_ghz) {
        throw ConfigError("detuning_min_ghz must be below detuning_max_ghz");
    }
    if (!(cfg.g >= 0.0) || !std::isfinite(cfg.g)) throw ConfigError("g must be non-negative");
    if (!(cfg.degradation > 0.0) || cfg.degradation > 1.0) {
        throw ConfigError("degradation must lie in (0,1]");
    }
    if (!(cfg.tail_tolerance > 0.0) || !(cfg.tail_tolerance < 1.0)) {
        throw ConfigError("tail_tolerance must lie in (0,1)");
    }
    if (!(cfg.mask_linewidths > 0.0)) throw ConfigError("mask_linewidths must be positive");
    for (const auto& [value, name] :
         {std::pair<double, const char*>{cfg.linewidth_mhz, "linewidth_mhz"},
          {cfg.resonance_wavelength_nm, "resonance_wavelength_nm"},
          {cfg.scattering_length_nm, "scattering_length_nm"},
          {cfg.mass_kg, "mass_kg"},
          {cfg.number_density_per_cm3, "number_density_per_cm3"},
          {cfg.atoms_per_disk, "atoms_per_disk"},
          {cfg.transverse_radius_um, "transverse_radius_um"},
          {cfg.ho_length_um, "ho_length_um"},
          {cfg.flight_time_us, "flight_time_us"},
          {cfg.pulse_duration_ps, "pulse_duration_ps"},
          {cfg.source_bandwidth_ghz, "source_bandwidth_ghz"},
          {cfg.stopband_ghz, "stopband_ghz"},
          {cfg.expansion_speed_nm_per_us, "expansion_speed_nm_per_us"}}) {
        if (!(value > 0.0) || !std::isfinite(value)) {
            throw ConfigError(std::string(name) + " must be positive");
        }
    }
    if (cfg.repetitions < 1.0) throw ConfigError("repetitions must be at least 1");
    if (cfg.q_factor < 1.0) throw ConfigError("q_factor must be at least 1");
    if (cfg.disk_count < 1) throw ConfigError("disk_count must be at least 1");
    return cfg;
}

ScenarioConfig parse_scenario_string(const std::string& text) {
    std::istringstream in(text);
    return parse_scenario(in);
}

ScenarioConfig parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_scenario(in);
}

AtomicSpecies scenario_species(const ScenarioConfig& cfg) {
    AtomicSpecies s = rb87();
    s.linewidth_gamma = cfg.linewidth_mhz * 1e6;
    s.resonance_wavelength = cfg.resonance_wavelength_nm * 1e-9;
    s.scattering_length = cfg.scattering_length_nm * 1e-9;
    s.mass = cfg.mass_kg;
    return s;
}

CondensateSample scenario_sample(const ScenarioConfig& cfg) {
    CondensateSample s;
    s.number_density = cfg.number_density_per_cm3 * 1e6;
    s.atoms_per_disk = cfg.atoms_per_disk;
    s.transverse_radius = cfg.transverse_radius_um * 1e-6;
    s.ho_length = cfg.ho_length_um * 1e-6;
    s.longitudinal_size = scenario_species(cfg).resonance_wavelength / 4.0;
    return s;
}

DiskLatticeGeometry scenario_geometry(const ScenarioConfig& cfg) {
    return quarter_wave_geometry(scenario_species(cfg).resonance_wavelength, cfg.disk_count);
}

KickExperimentConfig scenario_kick(const ScenarioConfig& cfg) {
    KickExperimentConfig k;
    k.gain = cfg.g;
    k.species = scenario_species(cfg);
    k.geometry = scenario_geometry(cfg);
    k.sample = scenario_sample(cfg);
    k.source_bandwidth_hz = cfg.source_bandwidth_ghz * 1e9;
    k.stopband_hz = cfg.stopband_ghz * 1e9;
    k.degradation = cfg.degradation;
    k.repetitions = cfg.repetitions;
    k.cavity_q_factor = cfg.q_factor;
    k.flight_time = cfg.flight_time_us * 1e-6;
    k.pulse_duration = cfg.pulse_duration_ps * 1e-12;
    k.sign = cfg.macro_state;
    return k;
}

double scenario_mask_cutoff_hz(const ScenarioConfig& cfg) {
    return cfg.mask_linewidths * scenario_species(cfg).linewidth_gamma;
}

double scenario_expansion_speed(const ScenarioConfig& cfg) {
    return cfg.expansion_speed_nm_per_us * 1e-3; // nm/us = 1e-3 m/s
}

std::vector<double> scenario_phases(const ScenarioConfig& cfg) {
    std::vector<double> phases(static_cast<size_t>(cfg.phase_points));
    for (int k = 0; k < cfg.phase_points; ++k) {
        phases[static_cast<size_t>(k)] =
            2.0 * constants::pi * static_cast<double>(k) / cfg.phase_points;
    }
    return phases;
}

std::vector<double> scenario_detunings(const ScenarioConfig& cfg) {
    std::vector<double> grid(static_cast<size_t>(cfg.scan_points));
    const double lo = cfg.detuning_min_ghz * 1e9;
    const double hi = cfg.detuning_max_ghz * 1e9;
    const double step = (hi - lo) / (cfg.scan_points - 1);
    for (int k = 0; k < cfg.scan_points; ++k) {
        grid[static_cast<size_t>(k)] = lo + step * k;
    }
    return grid;
}

} // namespace becmirror
