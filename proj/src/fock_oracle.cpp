#include "becmirror/fock_oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "becmirror/errors.hpp"

namespace becmirror {

namespace {

using cplx = std::complex<double>;

double vec_norm_squared(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const cplx& a : v) s += std::norm(a);
    return s;
}

// psi <- exp(coeff * H) psi for a sparse Hermitian-style action H, evaluated
// as a Taylor series over substeps small enough that |coeff| * bound <= 1/2
// per step. Successive terms then shrink by at least a factor 2, so stopping
// once a term drops below 1e-17 of the step input certifies a remainder far
// inside the 1e-12 application-error budget.
template <typename ApplyFn>
void expm_apply(ApplyFn&& apply, cplx coeff, double bound, std::vector<cplx>& psi) {
    const double scale = std::abs(coeff) * bound;
    if (scale == 0.0) return;
    const int substeps = static_cast<int>(std::ceil(scale / 0.5));
    const cplx s = coeff / static_cast<double>(substeps);

    std::vector<cplx> term(psi.size());
    std::vector<cplx> ht(psi.size());
    for (int step = 0; step < substeps; ++step) {
        const double in_norm = std::sqrt(vec_norm_squared(psi));
        term = psi;
        for (int k = 1; k <= 64; ++k) {
            apply(term, ht);
            const cplx factor = s / static_cast<double>(k);
            for (size_t idx = 0; idx < term.size(); ++idx) term[idx] = factor * ht[idx];
            for (size_t idx = 0; idx < psi.size(); ++idx) psi[idx] += term[idx];
            if (std::sqrt(vec_norm_squared(term)) <= 1e-17 * in_norm) break;
        }
    }
}

} // namespace

double TwoModeFockState::norm_squared() const { return vec_norm_squared(amplitudes); }

double TwoModeFockState::shell_probability() const {
    double s = 0.0;
    for (int k = 0; k <= n_max; ++k) {
        s += std::norm(at(n_max, k));
        if (k < n_max) s += std::norm(at(k, n_max));
    }
    return s;
}

std::pair<double, double> TwoModeFockState::mean_photon_numbers() const {
    double n1 = 0.0, n2 = 0.0;
    for (int a = 0; a <= n_max; ++a) {
        for (int b = 0; b <= n_max; ++b) {
            const double p = std::norm(at(a, b));
            n1 += a * p;
            n2 += b * p;
        }
    }
    return {n1, n2};
}

TwoModeFockState vacuum_state(int n_max) {
    if (n_max < 1) throw InvalidParameterError("n_max must be at least 1");
    TwoModeFockState s;
    s.n_max = n_max;
    s.amplitudes.assign(static_cast<size_t>(n_max + 1) * (n_max + 1), cplx{0.0, 0.0});
    s.at(0, 0) = 1.0;
    return s;
}

TwoModeFockState basis_state(int n_max, int n1, int n2) {
    if (n1 < 0 || n2 < 0 || n1 > n_max || n2 > n_max) {
        throw InvalidParameterError("basis ket outside the cutoff grid");
    }
    TwoModeFockState s = vacuum_state(n_max);
    s.at(0, 0) = 0.0;
    s.at(n1, n2) = 1.0;
    return s;
}

TwoModeFockState injected_qubit_state(int n_max, MacroSign sign) {
    TwoModeFockState s = vacuum_state(n_max);
    s.at(0, 0) = 0.0;
    const double w = 1.0 / std::sqrt(2.0);
    s.at(1, 0) = w;
    s.at(0, 1) = sign == MacroSign::plus ? w : -w;
    return s;
}

HamiltonianMatrix::HamiltonianMatrix(int n_max) : n_max_(n_max) {
    if (n_max < 1) throw InvalidParameterError("n_max must be at least 1");
}

std::complex<double> HamiltonianMatrix::element(int row, int col) const {
    const int span = n_max_ + 1;
    const int r1 = row / span, r2 = row % span;
    const int c1 = col / span, c2 = col % span;
    if (r1 == c1 + 1 && r2 == c2 + 1) {
        return cplx{0.0, std::sqrt(static_cast<double>(c1 + 1) * (c2 + 1))};
    }
    if (r1 == c1 - 1 && r2 == c2 - 1) {
        return cplx{0.0, -std::sqrt(static_cast<double>(c1) * c2)};
    }
    return cplx{0.0, 0.0};
}

void HamiltonianMatrix::apply(const std::vector<cplx>& in, std::vector<cplx>& out) const {
    const int span = n_max_ + 1;
    out.assign(in.size(), cplx{0.0, 0.0});
    for (int a = 0; a < n_max_; ++a) {
        for (int b = 0; b < n_max_; ++b) {
            const double c = std::sqrt(static_cast<double>(a + 1) * (b + 1));
            const size_t lo = static_cast<size_t>(a) * span + b;
            const size_t hi = static_cast<size_t>(a + 1) * span + b + 1;
            out[hi] += cplx{0.0, c} * in[lo];
            out[lo] += cplx{0.0, -c} * in[hi];
        }
    }
}

double HamiltonianMatrix::norm_bound() const {
    // Row (a,b) holds at most sqrt((a+1)(b+1)) + sqrt(ab) <= 2 n_max.
    return 2.0 * static_cast<double>(n_max_);
}

HamiltonianMatrix build_hamiltonian(int n_max) { return HamiltonianMatrix(n_max); }

TwoModeFockState evolve(const TwoModeFockState& state, double g, double leakage_threshold) {
    if (!std::isfinite(g) || g < 0.0) {
        throw InvalidParameterError("gain must be finite and non-negative");
    }
    TwoModeFockState out = state;
    if (g == 0.0) return out;

    const HamiltonianMatrix h(state.n_max);
    expm_apply([&h](const std::vector<cplx>& in,
                    std::vector<cplx>& o) { h.apply(in, o); },
               cplx{0.0, -g}, h.norm_bound(), out.amplitudes);

    const double leakage = out.shell_probability();
    if (leakage > leakage_threshold) {
        std::ostringstream msg;
        msg << "cutoff n_max=" << state.n_max << " too small for g=" << g
            << ": shell probability " << leakage << " exceeds " << leakage_threshold;
        throw CutoffError(msg.str(), leakage);
    }
    return out;
}

TwoModeFockState rotate_to_pm_basis(const TwoModeFockState& state) {
    TwoModeFockState out = state;
    const int span = state.n_max + 1;
    const int n_max = state.n_max;

    // Beam-splitter generator B = i(a1† a2 - a2† a1), applied as exp(-i B pi/4).
    auto apply_bs = [span, n_max](const std::vector<cplx>& in, std::vector<cplx>& o) {
        o.assign(in.size(), cplx{0.0, 0.0});
        for (int a = 0; a < n_max; ++a) {
            for (int b = 1; b <= n_max; ++b) {
                const double c = std::sqrt(static_cast<double>(a + 1) * b);
                const size_t src = static_cast<size_t>(a) * span + b;
                const size_t dst = static_cast<size_t>(a + 1) * span + b - 1;
                o[dst] += cplx{0.0, c} * in[src];
                o[src] += cplx{0.0, -c} * in[dst];
            }
        }
    };
    const double bound = 2.0 * static_cast<double>(n_max + 1);
    const double theta = std::atan(1.0); // pi/4
    expm_apply(apply_bs, cplx{0.0, -theta}, bound, out.amplitudes);

    // Mode relabeling fix-up: a_- = (a_H - a_V)/sqrt(2) flips the parity of the
    // second index relative to the plain SO(2) rotation.
    for (int a = 0; a <= n_max; ++a) {
        for (int b = 1; b <= n_max; b += 2) {
            out.at(a, b) = -out.at(a, b);
        }
    }
    return out;
}

std::complex<double> overlap(const TwoModeFockState& a, const TwoModeFockState& b) {
    if (a.n_max != b.n_max) {
        throw InvalidParameterError("overlap requires matching cutoffs");
    }
    cplx s{0.0, 0.0};
    for (size_t k = 0; k < a.amplitudes.size(); ++k) {
        s += std::conj(a.amplitudes[k]) * b.amplitudes[k];
    }
    return s;
}

std::pair<double, double> pm_mode_moments(const TwoModeFockState& state) {
    const auto [n1, n2] = state.mean_photon_numbers();
    double cross = 0.0; // Re <a1† a2>
    for (int a = 0; a < state.n_max; ++a) {
        for (int b = 1; b <= state.n_max; ++b) {
            const double c = std::sqrt(static_cast<double>(a + 1) * b);
            cross += c * std::real(std::conj(state.at(a + 1, b - 1)) * state.at(a, b));
        }
    }
    const double half = 0.5 * (n1 + n2);
    return {half + cross, half - cross};
}

} // namespace becmirror
