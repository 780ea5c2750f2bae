#pragma once

#include <stdexcept>
#include <string>

namespace becmirror {

// Precondition violations on operation inputs (negative gain, bad tolerances, ...).
class InvalidParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Amplitude enumeration could not certify the requested tail tolerance before
// hitting the index cap. Carries the norm that was actually captured.
class TruncationError : public std::runtime_error {
public:
    TruncationError(const std::string& what, double achieved_norm)
        : std::runtime_error(what), achieved_norm(achieved_norm) {}
    double achieved_norm;
};

// Fock cutoff too small for the requested evolution; carries the measured
// probability that leaked into the cutoff shell.
class CutoffError : public std::runtime_error {
public:
    CutoffError(const std::string& what, double leakage)
        : std::runtime_error(what), leakage(leakage) {}
    double leakage;
};

// Dispersive-index query inside the resonance exclusion window, where the
// far-detuned two-level approximation does not hold.
class ResonanceRegionError : public std::domain_error {
public:
    ResonanceRegionError(const std::string& what, double detuning_hz, double cutoff_hz)
        : std::domain_error(what), detuning_hz(detuning_hz), cutoff_hz(cutoff_hz) {}
    double detuning_hz;
    double cutoff_hz;
};

// Scenario file could not be parsed; line is 1-based, 0 when not applicable.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, int line = 0)
        : std::runtime_error(what), line(line) {}
    int line;
};

} // namespace becmirror
