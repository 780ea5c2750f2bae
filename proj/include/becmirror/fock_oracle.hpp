#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "becmirror/opa.hpp"

// Brute-force two-mode Fock-space evolution used to validate the closed-form
// amplifier statistics at small gain.
//
// Conventions
//   Basis kets |n1, n2> with n1, n2 <= n_max, stored row-major at
//   n1*(n_max+1) + n2. Before rotation the modes are the crystal's H and V
//   polarizations; after rotate_to_pm_basis they are the equatorial +/- pair
//   with a_± = (a_H ± a_V)/sqrt(2).
//
//   The interaction Hamiltonian is the pair creator H = i(a1† a2† - a1 a2)
//   in units where the accumulated coupling-time product equals the gain g,
//   so the propagator is U(g) = exp(-i H g) = exp(g (a1† a2† - a1 a2)).
//   The phase is fixed so that U(g) acting on vacuum yields the two-mode
//   squeezed state with positive tanh(g)^n / cosh(g) weights on |n, n>.
//   With this choice the signed macro-state amplitude table is reproduced by
//   injecting the "-" equatorial photon and reading the second (minus) mode
//   as the aligned one; only magnitudes and moments are basis-independent.
namespace becmirror {

struct TwoModeFockState {
    int n_max = 0;
    std::vector<std::complex<double>> amplitudes;

    std::complex<double>& at(int n1, int n2) {
        return amplitudes[static_cast<size_t>(n1) * (n_max + 1) + n2];
    }
    const std::complex<double>& at(int n1, int n2) const {
        return amplitudes[static_cast<size_t>(n1) * (n_max + 1) + n2];
    }

    double norm_squared() const;
    // Probability sitting on the cutoff shell (n1 = n_max or n2 = n_max).
    double shell_probability() const;
    // Mean photon numbers (<n1>, <n2>).
    std::pair<double, double> mean_photon_numbers() const;
};

TwoModeFockState vacuum_state(int n_max);
TwoModeFockState basis_state(int n_max, int n1, int n2);
// The injected equatorial photon (|1,0> ± |0,1>)/sqrt(2) in the H/V modes.
TwoModeFockState injected_qubit_state(int n_max, MacroSign sign);

// Pair-creation Hamiltonian on the truncated grid. Elements are implicit in
// the indices: <n1+1, n2+1| H |n1, n2> = i sqrt((n1+1)(n2+1)) and the
// conjugate below the diagonal; everything else vanishes, so H is traceless,
// Hermitian, and commutes with n1 - n2.
class HamiltonianMatrix {
public:
    explicit HamiltonianMatrix(int n_max);

    int n_max() const { return n_max_; }
    int dimension() const { return (n_max_ + 1) * (n_max_ + 1); }

    std::complex<double> element(int row, int col) const;
    void apply(const std::vector<std::complex<double>>& in,
               std::vector<std::complex<double>>& out) const;
    std::complex<double> trace() const { return {0.0, 0.0}; }
    // Upper bound on the spectral norm (max absolute row sum).
    double norm_bound() const;

private:
    int n_max_;
};

HamiltonianMatrix build_hamiltonian(int n_max);

// Propagate under exp(-i H g) with a sub-stepped Taylor expansion whose
// remainder is driven below 1e-12 of the state norm. Throws CutoffError when
// the evolved shell probability exceeds leakage_threshold.
TwoModeFockState evolve(const TwoModeFockState& state, double g,
                        double leakage_threshold = 1e-8);

// Fock-space beam-splitter rotation from the H/V mode pair to +/-. Exact on
// every total-photon-number sector n1 + n2 <= n_max (the rotation conserves
// the total, so sectors that fit the grid never touch the cutoff).
TwoModeFockState rotate_to_pm_basis(const TwoModeFockState& state);

// Conjugate-linear inner product <a|b>; the cutoffs must match.
std::complex<double> overlap(const TwoModeFockState& a, const TwoModeFockState& b);

// Mean photon numbers (<N+>, <N->) of an H/V-basis state, evaluated as
// (N1 + N2)/2 +- Re<a1† a2> directly on the unrotated amplitudes. Exact on the
// whole grid, unlike moments read off a rotated state, where sectors beyond
// the cutoff are distorted.
std::pair<double, double> pm_mode_moments(const TwoModeFockState& state);

// Suggested cutoff for evolving single-photon injections at gain g.
inline int suggested_cutoff(double m_bar) {
    return static_cast<int>(12.0 * m_bar + 20.0);
}

} // namespace becmirror
