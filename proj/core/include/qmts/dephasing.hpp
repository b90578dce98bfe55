#pragma once

#include <variant>
#include <vector>

#include "qmts/types.hpp"

namespace qmts {

/// Momentum distribution |f(p)|^2 = (Gamma/pi) / (Gamma^2 + (p - p0)^2).
struct LorentzianSpectrum {
  double gamma;
  double p0 = 0.0;
};

/// Two equal-width Gaussians at p1 and p2 with relative weight a_theta,
/// normalized so the total mass is 1.
struct GaussianMixtureSpectrum {
  double a_theta;
  double sigma;
  double p1;
  double p2;
};

struct SpectralNode {
  double p;
  double weight;
};

/// Discrete momentum grid. Weights are renormalized to sum to 1 on
/// construction; negative weights and empty grids are rejected.
class NumericGridSpectrum {
 public:
  explicit NumericGridSpectrum(std::vector<SpectralNode> nodes);
  const std::vector<SpectralNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

 private:
  std::vector<SpectralNode> nodes_;
};

using SpectralDensity =
    std::variant<LorentzianSpectrum, GaussianMixtureSpectrum, NumericGridSpectrum>;

/// k(t) = e^{2 i p0 t} e^{-2 Gamma |t|}; valid for negative arguments, where
/// k(-t) = conj(k(t)).
Complex k_lorentzian(double gamma, double p0, double t);

/// k(t) = e^{-2 sigma^2 t^2} (e^{2 i p1 t} + a_theta e^{2 i p2 t}) / (a_theta + 1)
Complex k_gaussian_mixture(double a_theta, double sigma, double p1, double p2, double t);

/// Decoherence function k(t) = sum_j w_j e^{2 i p_j t} of a spectral density,
/// evaluated in closed form for the built-ins and by direct summation for
/// grids. Satisfies k(0) = 1 and |k(t)| <= 1.
class DecoherenceFunction {
 public:
  explicit DecoherenceFunction(SpectralDensity density);

  Complex operator()(double t) const;
  const SpectralDensity& density() const { return density_; }

 private:
  SpectralDensity density_;
};

/// Default discretization of a continuous spectral density, used as the
/// numerically independent oracle for the closed forms.
///
/// Gaussian mixture: uniform trapezoid grid on [min(p1,p2) - 8 sigma,
/// max(p1,p2) + 8 sigma]; the Gaussian tails make thisde-facto exact.
///
/// Lorentzian: uniform trapezoid core on p0 +- 300 Gamma plus 250 equal-mass
/// quantile nodes per side covering the full tail mass. The heavy 1/p^2
/// tails rule out a plain truncated uniform grid at this tolerance: the
/// truncated mass biases k(t) by ~tail * k(t), which stays above 1e-3 for any
/// single-range choice of 2001 uniform points. The composite grid keeps the
/// worst-case error below 4e-4 for Gamma * t up to ~3.
NumericGridSpectrum default_momentum_grid(const SpectralDensity& density,
                                          int points = 2001);

/// Analytic two-time machinery for the qubit dephasing model, initial state
/// |+><+| and measurements of sigma_x.
double q1_analytic(const DecoherenceFunction& k, double t);
/// Q2{+,t ; +,s}
double q2_exact_analytic(const DecoherenceFunction& k, double t, double s);
/// Q2{+,t ; -,s}
double q2_minus_analytic(const DecoherenceFunction& k, double t, double s);
/// Q2 under the regression hierarchy; singular where |k(s)| vanishes.
double q2_markov_analytic(const DecoherenceFunction& k, double t, double s);

/// Signed level-2 marginalization gap K_+(t,s) = Re[k(t-2s) - k(t)] / 4.
/// The statistics is 2-classical at (t,s) iff it vanishes; K_- = -K_+.
double kolmogorov_gap_K(const DecoherenceFunction& k, double t, double s);

/// Scalar coherence-generation measure
/// N(t,s) = 2 |Im[k(s)] Im[conj(k(s)) k(t)]| / (4 |k(s)|^2);
/// singular where |k(s)| vanishes. Zero for real-valued k.
double cgd_measure_N(const DecoherenceFunction& k, double t, double s);

/// Closed-form derivative d/ds sum_y Q2{+,t; y,s} for the Lorentzian with
/// p0 = 0: Gamma * sgn(t - 2s) * e^{-2 Gamma |t-2s|}. Undefined exactly at
/// the kink s = t/2 (throws std::domain_error there).
double derivative_witness(double gamma, double t, double s);

/// Roots of s -> kolmogorov_gap_K(k, t, s) on [s_lo, s_hi], located by
/// bisection on the sign changes of a 1e-3-step scan.
std::vector<double> kolmogorov_gap_roots(const DecoherenceFunction& k, double t,
                                         double s_lo, double s_hi);

}  // namespace qmts
