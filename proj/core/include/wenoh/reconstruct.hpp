// Scalar interface reconstruction: one upwind-biased six-cell window in, one
// interface flux value out, for each of the four weight schemes.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>

#include "wenoh/tension.hpp"
#include "wenoh/weights.hpp"

namespace wenoh {

enum class Scheme : std::uint8_t { JS, M, Z, H };

inline const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::JS: return "JS";
    case Scheme::M: return "M";
    case Scheme::Z: return "Z";
    default: return "H";
  }
}

inline bool parse_scheme(const std::string& text, Scheme& out) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "js") out = Scheme::JS;
  else if (t == "m") out = Scheme::M;
  else if (t == "z") out = Scheme::Z;
  else if (t == "h") out = Scheme::H;
  else return false;
  return true;
}

struct ReconParams {
  Scheme scheme = Scheme::H;
  double theta = 0.25;      // L1 indicator blend
  double gamma_exp = 4.0;   // eps = dx^gamma_exp for the H weights
  double eps_js = 1e-6;     // regularization for JS / M / Z
  double d_min = 0.01;      // admissible window for the data-driven d
  TensionThresholds thresholds{};
  bool componentwise = false;  // diagnostic: skip characteristic projection

  // Per-sweep quantities derived from the cell size; set via set_dx.
  double dx = 0.0;
  double eps_h = 0.0;

  void set_dx(double dx_) {
    dx = dx_;
    eps_h = std::pow(dx_, gamma_exp);
  }
};

// Branch counters accumulated over every window reconstructed.
struct ReconStats {
  std::uint64_t polynomial = 0;
  std::uint64_t hyperbolic_c1 = 0;
  std::uint64_t trigonometric_c1 = 0;
  std::uint64_t hyperbolic_c2 = 0;
  std::uint64_t trigonometric_c2 = 0;
  std::uint64_t coeff_fallback = 0;
  std::uint64_t d_clamped = 0;
  std::uint64_t total = 0;

  void merge(const ReconStats& o) {
    polynomial += o.polynomial;
    hyperbolic_c1 += o.hyperbolic_c1;
    trigonometric_c1 += o.trigonometric_c1;
    hyperbolic_c2 += o.hyperbolic_c2;
    trigonometric_c2 += o.trigonometric_c2;
    coeff_fallback += o.coeff_fallback;
    d_clamped += o.d_clamped;
    total += o.total;
  }
  std::uint64_t exponential() const {
    return hyperbolic_c1 + trigonometric_c1 + hyperbolic_c2 + trigonometric_c2;
  }
};

// w6 = f_{j-2} .. f_{j+3}; returns the reconstructed value at interface j+1/2
// seen from the left (positive-flux bias). The H branch picks a tension per
// window; the baselines use the classical linear weights.
inline double reconstruct_interface(const double* w6, const ReconParams& p,
                                    ReconStats* stats = nullptr) {
  const double* w5 = w6;  // five-cell core
  std::array<double, 3> om;
  if (p.scheme == Scheme::H) {
    double mag = 0.0;
    for (int i = 0; i < 6; ++i) mag = std::max(mag, std::fabs(w6[i]));
    const TensionDecision td =
        select_tension(primitive_differences(w6), p.dx, mag + 1.0, p.thresholds);

    std::array<double, 3> d = kClassicalD;
    if (is_exponential(td.kind)) {
      const InterfaceCoeffs ic = interface_coeffs(td.kind, td.s2, p.d_min);
      d = ic.d;
      if (stats) {
        stats->coeff_fallback += ic.fallback ? 1 : 0;
        stats->d_clamped += ic.d_clamped ? 1 : 0;
      }
    }
    if (stats) {
      ++stats->total;
      switch (td.kind) {
        case BasisKind::Polynomial: ++stats->polynomial; break;
        case BasisKind::HyperbolicC1: ++stats->hyperbolic_c1; break;
        case BasisKind::TrigonometricC1: ++stats->trigonometric_c1; break;
        case BasisKind::HyperbolicC2: ++stats->hyperbolic_c2; break;
        case BasisKind::TrigonometricC2: ++stats->trigonometric_c2; break;
      }
    }
    om = weights_h(beta_l1(w5, p.theta), tau5(w5), d, p.eps_h);
  } else {
    if (stats) {
      ++stats->total;
      ++stats->polynomial;
    }
    const SmoothnessTriple b = beta_js(w5);
    switch (p.scheme) {
      case Scheme::JS: om = weights_js(b, kClassicalD, p.eps_js); break;
      case Scheme::M: om = weights_m(b, kClassicalD, p.eps_js); break;
      default: om = weights_z(b, kClassicalD, p.eps_js); break;
    }
  }
  return om[0] * local_flux(w5, 0) + om[1] * local_flux(w5, 1) + om[2] * local_flux(w5, 2);
}

// Mirror-image reconstruction for the negative flux: reverse the window about
// the interface and reuse the positive kernel, so both biases share one code
// path bit for bit.
inline double reconstruct_interface_negative(const double* w6, const ReconParams& p,
                                             ReconStats* stats = nullptr) {
  const double rev[6] = {w6[5], w6[4], w6[3], w6[2], w6[1], w6[0]};
  return reconstruct_interface(rev, p, stats);
}

}  // namespace wenoh
