#ifndef LEONOMA_QUADRATURE_HPP
#define LEONOMA_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <utility>

namespace leonoma {

inline double quad_norm(double x) { return std::fabs(x); }

template <class T>
struct IntegralResult {
  T value;
  double error = 0.0;
  bool converged = true;
  int evaluations = 0;
};

namespace detail {

// 15-point Kronrod rule with embedded 7-point Gauss (QUADPACK dqk15 constants).
inline constexpr double kGk15Nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kGk15WeightsK[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGauss7Weights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T, class F>
struct Gk15Panel {
  T kronrod;
  double error;
};

template <class T, class F>
Gk15Panel<T, F> gk15(F&& f, double a, double b, int& evaluations) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);

  T fc = f(mid);
  T kron = fc * kGk15WeightsK[7];
  T gauss = fc * kGauss7Weights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kGk15Nodes[j];
    T lo = f(mid - dx);
    T hi = f(mid + dx);
    T pair = lo + hi;
    kron = kron + pair * kGk15WeightsK[j];
    if (j % 2 == 1) gauss = gauss + pair * kGauss7Weights[j / 2];
  }
  evaluations += 15;
  kron = kron * half;
  gauss = gauss * half;
  return {kron, quad_norm(kron + gauss * -1.0)};
}

template <class T, class F>
void integrate_rec(F&& f, double a, double b, double abs_tol, int depth, int max_depth,
                   IntegralResult<T>& out) {
  Gk15Panel<T, F> panel = gk15<T>(f, a, b, out.evaluations);
  if (panel.error <= abs_tol || depth >= max_depth) {
    out.value = out.value + panel.kronrod;
    out.error += panel.error;
    if (panel.error > abs_tol) out.converged = false;
    return;
  }
  const double mid = 0.5 * (a + b);
  integrate_rec(f, a, mid, 0.5 * abs_tol, depth + 1, max_depth, out);
  integrate_rec(f, mid, b, 0.5 * abs_tol, depth + 1, max_depth, out);
}

}  // namespace detail

// Adaptive Gauss-Kronrod quadrature of f over [a, b] with a relative error
// target. T may be double or any value type with +, *double and quad_norm
// (jets integrate coefficient-wise through the same node set). If the
// subdivision budget runs out, the best estimate comes back with
// converged == false.
template <class T, class F>
IntegralResult<T> integrate(F&& f, double a, double b, double rel_tol = 1e-8, int max_depth = 20) {
  IntegralResult<T> out;
  out.value = f(0.5 * (a + b)) * 0.0;  // typed zero
  if (a == b) return out;

  detail::Gk15Panel<T, F> top = detail::gk15<T>(f, a, b, out.evaluations);
  const double scale = std::max(quad_norm(top.kronrod), 1e-300);
  const double abs_tol = rel_tol * scale;
  if (top.error <= abs_tol) {
    out.value = top.kronrod;
    out.error = top.error;
    return out;
  }
  const double mid = 0.5 * (a + b);
  detail::integrate_rec(f, a, mid, 0.5 * abs_tol, 1, max_depth, out);
  detail::integrate_rec(f, mid, b, 0.5 * abs_tol, 1, max_depth, out);
  return out;
}

}  // namespace leonoma

#endif
