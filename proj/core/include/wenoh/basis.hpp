// Approximation-space machinery for the sixth-order interface reconstruction:
// deflated exponential basis evaluation, boundary-value derivative weights, and
// the interface coefficients (global C, convex d) they induce.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace wenoh {

enum class BasisKind : std::uint8_t {
  Polynomial,       // {1, x, x^2, x^3, x^4, x^5}
  HyperbolicC1,     // {1, x, x^2, x^3, sinh(lam x), cosh(lam x)}
  TrigonometricC1,  // {1, x, x^2, x^3, sin(lam x), cos(lam x)}
  HyperbolicC2,     // hyperbolic pair with the cross-derivative correction term
  TrigonometricC2
};

inline constexpr bool is_exponential(BasisKind k) { return k != BasisKind::Polynomial; }
inline constexpr bool is_c2(BasisKind k) {
  return k == BasisKind::HyperbolicC2 || k == BasisKind::TrigonometricC2;
}

// All evaluation happens in interface-normalized coordinates t = (x - x_if) / dx,
// where the six primitive-function nodes (boundary points of the big stencil) sit
// at integer offsets from the interface.
inline constexpr std::array<double, 6> kPrimitiveNodes{-3.0, -2.0, -1.0, 0.0, 1.0, 2.0};

// Signed squared tension s2 = (lam * dx)^2, negative meaning the trigonometric
// pair. Both families and both smoothness classes share one series path.
namespace detail {

inline constexpr int kSeriesTerms = 14;  // relative truncation < 1e-15 over |s2| <= 1, |t| <= 3

constexpr double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= static_cast<double>(i);
  return r;
}

template <int Shift>
constexpr std::array<double, kSeriesTerms> reciprocal_factorials() {
  std::array<double, kSeriesTerms> a{};
  for (int k = 0; k < kSeriesTerms; ++k) a[k] = 1.0 / factorial(2 * k + Shift);
  return a;
}

// g_m(w) = sum_k w^k / (2k + m)!  so that e.g. phi4(t) = t^4 g4(s2 t^2).
inline constexpr auto kG4 = reciprocal_factorials<4>();
inline constexpr auto kG5 = reciprocal_factorials<5>();
inline constexpr auto kG6 = reciprocal_factorials<6>();
inline constexpr auto kG7 = reciprocal_factorials<7>();

inline double horner(const std::array<double, kSeriesTerms>& c, double w) {
  double acc = c[kSeriesTerms - 1];
  for (int k = kSeriesTerms - 2; k >= 0; --k) acc = acc * w + c[k];
  return acc;
}

}  // namespace detail

// Primitive-function basis values (phi_0 .. phi_5) at normalized coordinate t.
// phi_n = t^n / n! for n <= 3; phi_4, phi_5 are the deflated exponential pair
// whose leading Taylor terms match, so the polynomial limit s2 -> 0 is exact.
inline std::array<double, 6> primitive_basis_values(BasisKind kind, double s2, double t) {
  if (!is_exponential(kind)) s2 = 0.0;
  const double t2 = t * t;
  const double w = s2 * t2;
  std::array<double, 6> phi;
  phi[0] = 1.0;
  phi[1] = t;
  phi[2] = 0.5 * t2;
  phi[3] = phi[2] * t / 3.0;
  phi[4] = t2 * t2 * detail::horner(detail::kG4, w);
  phi[5] = t2 * t2 * t * detail::horner(detail::kG5, w);
  if (is_c2(kind)) phi[5] += s2 * t2 * t2 * t2 / 720.0;
  return phi;
}

// Weights w_n with  d/dx [sum_n w_n H(x_n)] = h(x_if) + O(dx^6)  for data drawn
// from the active approximation space; exact per-node values for the polynomial
// space. Index n runs over kPrimitiveNodes.
struct DerivativeWeights {
  std::array<double, 6> w{};
  bool fallback = false;  // linear solve was ill-conditioned; polynomial weights used
};

// Reference route: dense 6x6 collocation solve with partial pivoting.
DerivativeWeights lagrange_derivative_weights(BasisKind kind, double s2);

// Exact polynomial-space derivative weights (the s2 -> 0 limit).
inline constexpr std::array<double, 6> kPolyDerivativeWeights{
    -1.0 / 30.0, 1.0 / 4.0, -1.0, 1.0 / 3.0, 1.0 / 2.0, -1.0 / 20.0};

// Classical fifth-order linear interface coefficients and optimal weights.
inline constexpr std::array<double, 5> kClassicalC{2.0 / 60.0, -13.0 / 60.0, 47.0 / 60.0,
                                                   27.0 / 60.0, -3.0 / 60.0};
inline constexpr std::array<double, 3> kClassicalD{0.1, 0.6, 0.3};

// Third-order substencil interface coefficients: substencil k reads cells
// j-2+k .. j+k of the five-cell window.
inline constexpr std::array<std::array<double, 3>, 3> kSubstencilCoeffs{{
    {{1.0 / 3.0, -7.0 / 6.0, 11.0 / 6.0}},
    {{-1.0 / 6.0, 5.0 / 6.0, 1.0 / 3.0}},
    {{1.0 / 3.0, 5.0 / 6.0, -1.0 / 6.0}},
}};

// w5 points at the five-cell window (cells j-2 .. j+2).
inline double local_flux(const double* w5, int k) {
  const auto& c = kSubstencilCoeffs[static_cast<std::size_t>(k)];
  return c[0] * w5[k] + c[1] * w5[k + 1] + c[2] * w5[k + 2];
}

struct InterfaceCoeffs {
  std::array<double, 5> C{};  // global linear scheme over cells j-2 .. j+2
  std::array<double, 3> d{};  // convex split with sum(d) = 1 and M d = C
  bool fallback = false;      // conditioning guard fired; classical C and d used
  bool d_clamped = false;     // d left its admissible window; classical d used
};

namespace detail {

// The collocation matrix differs from its polynomial limit A0 only in the rows
// of phi_4 and phi_5, so the solve reduces to a rank-2 update of the known
// A0^{-1}: K0 and K1 are the two columns of A0^{-1} that multiply those rows.
inline constexpr std::array<double, 6> kWoodburyK0{0.0, 1.0, -4.0, 6.0, -4.0, 1.0};
inline constexpr std::array<double, 6> kWoodburyK1{-1.0, 5.0, -10.0, 10.0, -5.0, 1.0};
inline constexpr std::array<double, 6> kNodeP2{9.0, 4.0, 1.0, 0.0, 1.0, 4.0};
inline constexpr std::array<double, 6> kNodeP6{729.0, 64.0, 1.0, 0.0, 1.0, 64.0};
inline constexpr std::array<double, 6> kNodeP7{-2187.0, -128.0, -1.0, 0.0, 1.0, 128.0};

}  // namespace detail

// Fast route for the interface coefficients; agrees with the dense solve to
// roundoff and costs a handful of series evaluations per call.
inline InterfaceCoeffs interface_coeffs(BasisKind kind, double s2, double d_min = 0.01) {
  InterfaceCoeffs out{kClassicalC, kClassicalD, false, false};
  if (!is_exponential(kind) || s2 == 0.0) return out;

  using namespace detail;
  const bool c2 = is_c2(kind);

  // Residual rows: how phi_4, phi_5 at the six nodes differ from t^4/4!, t^5/5!.
  std::array<double, 6> u4{}, u5{};
  double a = 0.0, b = 0.0;             // u . w0
  double p = 0.0, q = 0.0, r = 0.0, s = 0.0;  // u . K0, u . K1
  for (int n = 0; n < 6; ++n) {
    if (n == 3) continue;  // t = 0 contributes nothing
    const double w = s2 * kNodeP2[n];
    u4[n] = s2 * kNodeP6[n] * horner(kG6, w);
    u5[n] = s2 * kNodeP7[n] * horner(kG7, w);
    if (c2) u5[n] += s2 * kNodeP6[n] / 720.0;
    a += u4[n] * kPolyDerivativeWeights[n];
    b += u5[n] * kPolyDerivativeWeights[n];
    p += u4[n] * kWoodburyK0[n];
    q += u4[n] * kWoodburyK1[n];
    r += u5[n] * kWoodburyK0[n];
    s += u5[n] * kWoodburyK1[n];
  }

  const double m00 = 1.0 + p, m01 = q, m10 = r, m11 = 1.0 + s;
  const double det = m00 * m11 - m01 * m10;
  if (!std::isfinite(det) || std::fabs(det) < 1e-6) {
    out.fallback = true;
    return out;
  }
  const double y0 = (m11 * a - m01 * b) / det;
  const double y1 = (m00 * b - m10 * a) / det;

  std::array<double, 6> w;
  for (int n = 0; n < 6; ++n)
    w[n] = kPolyDerivativeWeights[n] - kWoodburyK0[n] * y0 - kWoodburyK1[n] * y1;

  // Telescoping H-differences turn node weights into cell-average coefficients.
  out.C[4] = w[5];
  out.C[3] = out.C[4] + w[4];
  out.C[2] = out.C[3] + w[3];
  out.C[1] = out.C[2] + w[2];
  out.C[0] = out.C[1] + w[1];

  // Convex split recovering C through the substencil coefficient matrix.
  const double d0 = 3.0 * out.C[0];
  const double d1 = -6.0 * out.C[1] - 7.0 * d0;
  const double d2 = 1.0 - d0 - d1;
  const double d_max = 1.0 - d_min;
  if (!(d0 >= d_min && d0 <= d_max && d1 >= d_min && d1 <= d_max && d2 >= d_min &&
        d2 <= d_max)) {
    out.d = kClassicalD;
    out.d_clamped = true;
  } else {
    out.d = {d0, d1, d2};
  }
  return out;
}

}  // namespace wenoh
