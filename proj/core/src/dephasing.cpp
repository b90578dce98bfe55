#include "qmts/dephasing.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qmts/errors.hpp"

namespace qmts {

namespace {
constexpr double kPi = std::numbers::pi;
}

NumericGridSpectrum::NumericGridSpectrum(std::vector<SpectralNode> nodes)
    : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw std::invalid_argument("NumericGridSpectrum: empty grid");
  double total = 0.0;
  for (const auto& n : nodes_) {
    if (n.weight < 0.0) throw std::invalid_argument("NumericGridSpectrum: negative weight");
    total += n.weight;
  }
  if (total <= 0.0) throw std::invalid_argument("NumericGridSpectrum: zero total weight");
  for (auto& n : nodes_) n.weight /= total;
}

Complex k_lorentzian(double gamma, double p0, double t) {
  if (gamma <= 0.0) throw std::invalid_argument("k_lorentzian: gamma must be positive");
  return std::exp(Complex(0.0, 2.0 * p0 * t)) * std::exp(-2.0 * gamma * std::abs(t));
}

Complex k_gaussian_mixture(double a_theta, double sigma, double p1, double p2, double t) {
  if (sigma <= 0.0) throw std::invalid_argument("k_gaussian_mixture: sigma must be positive");
  if (a_theta < 0.0) throw std::invalid_argument("k_gaussian_mixture: a_theta must be >= 0");
  const Complex phases =
      std::exp(Complex(0.0, 2.0 * p1 * t)) + a_theta * std::exp(Complex(0.0, 2.0 * p2 * t));
  return std::exp(-2.0 * sigma * sigma * t * t) * phases / (a_theta + 1.0);
}

DecoherenceFunction::DecoherenceFunction(SpectralDensity density)
    : density_(std::move(density)) {}

Complex DecoherenceFunction::operator()(double t) const {
  return std::visit(
      [t](const auto& d) -> Complex {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, LorentzianSpectrum>) {
          return k_lorentzian(d.gamma, d.p0, t);
        } else if constexpr (std::is_same_v<T, GaussianMixtureSpectrum>) {
          return k_gaussian_mixture(d.a_theta, d.sigma, d.p1, d.p2, t);
        } else {
          Complex sum = 0.0;
          for (const auto& n : d.nodes()) sum += n.weight * std::exp(Complex(0.0, 2.0 * n.p * t));
          return sum;
        }
      },
      density_);
}

namespace {

NumericGridSpectrum lorentzian_grid(const LorentzianSpectrum& d, int points) {
  // Trapezoid core over +-300 Gamma plus equal-mass tail nodes at quantile
  // midpoints; the tail nodes carry the entire truncated mass, which removes
  // the ~tail*k(t) bias a plain truncated grid would have.
  const int n_tail = std::max(1, points / 8);
  const int n_core = points - 2 * n_tail;
  if (n_core < 3) throw std::invalid_argument("default_momentum_grid: too few points");
  // Core spacing stays near 0.4 Gamma so trapezoid aliasing is negligible
  // for Gamma*t up to ~3; 2001 points give the reference +-300 Gamma core.
  const double r1 = std::min(300.0, 0.2 * (n_core - 1)) * d.gamma;
  std::vector<SpectralNode> nodes;
  nodes.reserve(points);

  const auto cdf_centered = [&](double q) { return std::atan(q / d.gamma) / kPi; };
  const auto quantile = [&](double u) { return d.gamma * std::tan(kPi * u); };

  const double tail_mass = 0.5 - cdf_centered(r1);
  const double m = tail_mass / n_tail;
  for (int c = n_tail - 1; c >= 0; --c) {
    const double u = cdf_centered(r1) + (c + 0.5) * m;
    nodes.push_back({d.p0 - quantile(u), m});
  }
  const double dp = 2.0 * r1 / (n_core - 1);
  for (int i = 0; i < n_core; ++i) {
    const double q = -r1 + i * dp;
    const double f = (d.gamma / kPi) / (d.gamma * d.gamma + q * q);
    const double w = (i == 0 || i == n_core - 1) ? 0.5 * f * dp : f * dp;
    nodes.push_back({d.p0 + q, w});
  }
  for (int c = 0; c < n_tail; ++c) {
    const double u = cdf_centered(r1) + (c + 0.5) * m;
    nodes.push_back({d.p0 + quantile(u), m});
  }
  return NumericGridSpectrum(std::move(nodes));
}

NumericGridSpectrum gaussian_grid(const GaussianMixtureSpectrum& d, int points) {
  if (points < 3) throw std::invalid_argument("default_momentum_grid: too few points");
  const double lo = std::min(d.p1, d.p2) - 8.0 * d.sigma;
  const double hi = std::max(d.p1, d.p2) + 8.0 * d.sigma;
  const double dp = (hi - lo) / (points - 1);
  std::vector<SpectralNode> nodes;
  nodes.reserve(points);
  for (int i = 0; i < points; ++i) {
    const double p = lo + i * dp;
    const double f = std::exp(-(p - d.p1) * (p - d.p1) / (2.0 * d.sigma * d.sigma)) +
                     d.a_theta * std::exp(-(p - d.p2) * (p - d.p2) / (2.0 * d.sigma * d.sigma));
    const double w = (i == 0 || i == points - 1) ? 0.5 * f : f;
    nodes.push_back({p, w});
  }
  return NumericGridSpectrum(std::move(nodes));
}

}  // namespace

NumericGridSpectrum default_momentum_grid(const SpectralDensity& density, int points) {
  if (points < 3) throw std::invalid_argument("default_momentum_grid: too few points");
  return std::visit(
      [points](const auto& d) -> NumericGridSpectrum {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, LorentzianSpectrum>) {
          return lorentzian_grid(d, points);
        } else if constexpr (std::is_same_v<T, GaussianMixtureSpectrum>) {
          return gaussian_grid(d, points);
        } else {
          return d;
        }
      },
      density);
}

double q1_analytic(const DecoherenceFunction& k, double t) {
  return 0.5 + 0.5 * k(t).real();
}

double q2_exact_analytic(const DecoherenceFunction& k, double t, double s) {
  if (s < 0.0 || t < s) throw std::invalid_argument("q2_exact_analytic: need 0 <= s <= t");
  const Complex sum =
      0.5 * k(t - 2.0 * s) + 0.5 * k(t) + k(t - s) + k(s) + Complex(1.0);
  return 0.25 * sum.real();
}

double q2_minus_analytic(const DecoherenceFunction& k, double t, double s) {
  if (s < 0.0 || t < s) throw std::invalid_argument("q2_minus_analytic: need 0 <= s <= t");
  const Complex sum =
      0.5 * k(t - 2.0 * s) + 0.5 * k(t) - k(t - s) - k(s) + Complex(1.0);
  return 0.25 * sum.real();
}

double q2_markov_analytic(const DecoherenceFunction& k, double t, double s) {
  if (s < 0.0 || t < s) throw std::invalid_argument("q2_markov_analytic: need 0 <= s <= t");
  const Complex ks = k(s);
  if (std::abs(ks) < tol::singular_k)
    throw SingularPropagatorError("q2_markov_analytic: k(s) vanishes at s = " +
                                  std::to_string(s));
  const Complex kt = k(t);
  const Complex sum =
      0.5 * kt * (std::conj(ks) / ks + 1.0) + kt / ks + ks + Complex(1.0);
  return 0.25 * sum.real();
}

double kolmogorov_gap_K(const DecoherenceFunction& k, double t, double s) {
  if (s < 0.0 || t < s) throw std::invalid_argument("kolmogorov_gap_K: need 0 <= s <= t");
  return 0.25 * (k(t - 2.0 * s) - k(t)).real();
}

double cgd_measure_N(const DecoherenceFunction& k, double t, double s) {
  const Complex ks = k(s);
  const double ks2 = std::norm(ks);
  if (std::sqrt(ks2) < tol::singular_k)
    throw SingularPropagatorError("cgd_measure_N: k(s) vanishes at s = " + std::to_string(s));
  const Complex kt = k(t);
  return 2.0 * std::abs(ks.imag() * (std::conj(ks) * kt).imag()) / (4.0 * ks2);
}

double derivative_witness(double gamma, double t, double s) {
  if (gamma <= 0.0) throw std::invalid_argument("derivative_witness: gamma must be positive");
  const double u = t - 2.0 * s;
  if (u == 0.0)
    throw std::domain_error("derivative_witness: undefined at the kink s = t/2");
  const double sign = u > 0.0 ? 1.0 : -1.0;
  return gamma * sign * std::exp(-2.0 * gamma * std::abs(u));
}

std::vector<double> kolmogorov_gap_roots(const DecoherenceFunction& k, double t,
                                         double s_lo, double s_hi) {
  if (s_hi < s_lo) throw std::invalid_argument("kolmogorov_gap_roots: empty interval");
  const double step = 1e-3;
  std::vector<double> roots;
  auto f = [&](double s) { return kolmogorov_gap_K(k, t, s); };
  double a = s_lo;
  double fa = f(a);
  for (double b = s_lo + step; b <= s_hi + 0.5 * step; b += step) {
    const double bb = std::min(b, s_hi);
    const double fb = f(bb);
    if (fa == 0.0) {
      // K vanishes structurally at s = 0 (k(t-0) - k(t)); only interior
      // zeros carry information.
      if (a > s_lo) roots.push_back(a);
    } else if (fa * fb < 0.0) {
      double lo = a, hi = bb, flo = fa;
      for (int it = 0; it < 100 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (flo * fm <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    a = bb;
    fa = fb;
    if (bb >= s_hi) break;
  }
  return roots;
}

}  // namespace qmts
