#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace becmirror {

// Derived quantities of the collinear amplifier at nonlinear gain g.
struct GainParams {
    double g = 0.0;      // dimensionless nonlinear gain
    double big_c = 1.0;  // cosh g
    double gamma = 0.0;  // tanh g
    double m_bar = 0.0;  // sinh^2 g, mean squeezed-vacuum photons per mode
};

GainParams gain_params(double g);

// Which of the two equatorial macro-states a fringe is computed for.
// The two curves are mutually phase-opposed.
enum class MacroSign { plus, minus };

struct MacroAmplitudeOptions {
    double tail_tolerance = 1e-10;
    int max_index = 4096; // cap on i_max/j_max during the bound search
};

// Truncated table of the amplified macro-state amplitudes over basis kets
// |2i+1> (aligned mode) |2j> (orthogonal mode):
//
//   amplitude(i,j) = gamma_ij * sqrt((2i+1)!(2j)!) / (i! j!)
//   gamma_ij      = C^-2 (-G/2)^i (G/2)^j,  C = cosh g, G = tanh g
//
// The squared amplitudes factorize over (i,j), so the table stores the two
// marginal probability series and reconstructs entries on demand. Factorials
// are handled in log-gamma space; the (-1)^i sign is tracked separately.
class MacroStateAmplitudes {
public:
    int i_max() const { return i_max_; }
    int j_max() const { return j_max_; }
    double captured_norm() const { return captured_norm_; }

    // Signed amplitude of the ket |2i+1>|2j>. Zero outside the bounds.
    double amplitude(int i, int j) const;
    // Squared amplitude (probability before renormalization).
    double probability(int i, int j) const;

    // Marginal probabilities, summed over the other index (un-renormalized).
    double aligned_marginal(int i) const;
    double orthogonal_marginal(int j) const;

    // Photon numbers carried by the stored kets.
    static int aligned_photons(int i) { return 2 * i + 1; }
    static int orthogonal_photons(int j) { return 2 * j; }

    friend MacroStateAmplitudes macro_amplitudes(const GainParams&, double,
                                                 const MacroAmplitudeOptions&);

private:
    int i_max_ = 0;
    int j_max_ = 0;
    double captured_norm_ = 1.0;
    double inv_c2_ = 1.0;          // C^-2 prefactor
    std::vector<double> log_i_;    // i log(G/2) + lgamma(2i+2)/2 - lgamma(i+1)
    std::vector<double> log_j_;    // j log(G/2) + lgamma(2j+1)/2 - lgamma(j+1)
    std::vector<double> u_;        // aligned marginal probabilities * C
    std::vector<double> v_;        // orthogonal marginal probabilities * C^3
    double sum_u_ = 1.0;
    double sum_v_ = 1.0;
    double inv_c4_ = 1.0;
};

// Enumerate amplitudes until the captured norm certifies the tail tolerance.
// Bounds expand i_max and j_max alternately; the full series sums to exactly 1,
// so 1 - captured_norm bounds the discarded tail directly.
MacroStateAmplitudes macro_amplitudes(const GainParams& params, double tail_tolerance,
                                      const MacroAmplitudeOptions& options = {});

struct PhotonStats {
    double n_plus;
    double n_minus;
    double n_diff;
};

// Closed-form mean photon numbers behind the +/- analyzer at trigger phase phi:
//   N±(phi) = m + (2m+1)(1 ± cos phi)/2,  N+ - N- = (2m+1) cos phi.
PhotonStats photon_stats_closed(const GainParams& params, double phi);

struct MacroMoments {
    double n_aligned;    // expect 3 m_bar + 1
    double n_orthogonal; // expect m_bar
};

// Photon-number moments summed from the enumerated table, renormalized by the
// captured norm. Requires captured_norm > 0.999.
MacroMoments moments_from_amplitudes(const MacroStateAmplitudes& amps);

// Fringe contrast (2m+1)/(4m+1); 1 at g = 0, asymptotically 1/2.
double visibility(const GainParams& params);

struct FringeCurve {
    std::vector<double> phases;
    std::vector<double> n_plus;
    std::vector<double> n_minus;
    std::vector<double> n_diff;
    double degradation = 1.0;
    MacroSign sign = MacroSign::plus;
};

// Photon-number fringe over the given phases. degradation in (0,1] scales the
// cos-phi contrast only; the sum n_plus + n_minus stays 4m+1 at every phase.
FringeCurve fringe_curve(const GainParams& params, std::span<const double> phases,
                         double degradation = 1.0, MacroSign sign = MacroSign::plus);

// Contrast quoted for the laboratory amplifier; never applied implicitly.
inline constexpr double measured_degradation_preset = 0.13;

} // namespace becmirror
