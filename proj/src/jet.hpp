#ifndef LEONOMA_JET_HPP
#define LEONOMA_JET_HPP

#include <algorithm>
#include <array>
#include <cmath>

#include "errors.hpp"

namespace leonoma {

// Truncated Taylor series in one variable: coefficient j holds
// f^(j)(s0) / j!. Arithmetic is exact truncated-polynomial algebra, which
// makes k-th derivatives of composed expressions exact up to rounding --
// no step sizes to tune.
class Jet {
 public:
  static constexpr int kMaxOrder = 8;

  Jet() : order_(0) { c_.fill(0.0); }

  Jet(double value, int order) : order_(clamp_order(order)) {
    c_.fill(0.0);
    c_[0] = value;
  }

  static Jet variable(double value, int order) {
    Jet j(value, order);
    if (j.order_ >= 1) j.c_[1] = 1.0;
    return j;
  }

  static Jet constant(double value, int order) { return Jet(value, order); }

  int order() const { return order_; }
  double value() const { return c_[0]; }
  double coeff(int k) const { return k <= order_ ? c_[k] : 0.0; }
  void set_coeff(int k, double v) { c_[k] = v; }

  // k-th derivative of the represented function at the expansion point.
  double derivative(int k) const {
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    return coeff(k) * fact;
  }

  Jet operator+(const Jet& o) const {
    Jet r = with_order(order_, o.order_);
    for (int k = 0; k <= r.order_; ++k) r.c_[k] = coeff(k) + o.coeff(k);
    return r;
  }

  Jet operator-(const Jet& o) const {
    Jet r = with_order(order_, o.order_);
    for (int k = 0; k <= r.order_; ++k) r.c_[k] = coeff(k) - o.coeff(k);
    return r;
  }

  Jet operator*(const Jet& o) const {
    Jet r = with_order(order_, o.order_);
    for (int k = 0; k <= r.order_; ++k) {
      double acc = 0.0;
      for (int j = 0; j <= k; ++j) acc += coeff(j) * o.coeff(k - j);
      r.c_[k] = acc;
    }
    return r;
  }

  Jet operator*(double s) const {
    Jet r = *this;
    for (int k = 0; k <= order_; ++k) r.c_[k] *= s;
    return r;
  }

  Jet operator+(double s) const {
    Jet r = *this;
    r.c_[0] += s;
    return r;
  }

  Jet operator-(double s) const { return *this + (-s); }

  Jet operator/(const Jet& o) const {
    if (o.c_[0] == 0.0) throw NumericError("jet division by zero constant term");
    Jet r = with_order(order_, o.order_);
    for (int k = 0; k <= r.order_; ++k) {
      double acc = coeff(k);
      for (int j = 1; j <= k; ++j) acc -= o.coeff(j) * r.c_[k - j];
      r.c_[k] = acc / o.c_[0];
    }
    return r;
  }

 private:
  static int clamp_order(int order) {
    if (order < 0) return 0;
    if (order > kMaxOrder) throw NumericError("jet order above compiled maximum");
    return order;
  }
  static Jet with_order(int a, int b) {
    Jet r;
    r.order_ = a > b ? a : b;
    return r;
  }

  std::array<double, kMaxOrder + 1> c_;
  int order_;
};

inline Jet operator*(double s, const Jet& j) { return j * s; }
inline Jet operator+(double s, const Jet& j) { return j + s; }
inline Jet operator-(double s, const Jet& j) { return (j * -1.0) + s; }

// exp via the standard recurrence e' = a' e.
inline Jet exp(const Jet& a) {
  Jet r(0.0, a.order());
  r.set_coeff(0, std::exp(a.value()));
  for (int k = 1; k <= a.order(); ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += j * a.coeff(j) * r.coeff(k - j);
    r.set_coeff(k, acc / k);
  }
  return r;
}

// a^p for real p via the ODE a w' = p a' w; requires a positive constant term.
inline Jet pow(const Jet& a, double p) {
  const double a0 = a.value();
  if (!(a0 > 0.0)) throw NumericError("jet pow requires positive base");
  Jet r(0.0, a.order());
  r.set_coeff(0, std::pow(a0, p));
  for (int k = 1; k <= a.order(); ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += (j * (p + 1.0) / k - 1.0) * a.coeff(j) * r.coeff(k - j);
    r.set_coeff(k, acc / a0);
  }
  return r;
}

inline double quad_norm(const Jet& j) {
  double m = 0.0;
  for (int k = 0; k <= j.order(); ++k) m = std::max(m, std::fabs(j.coeff(k)));
  return m;
}

// k-th derivative at s0 of a function built from jet primitives.
template <class F>
double kth_derivative(F&& f, double s0, int k) {
  if (k < 0 || k > Jet::kMaxOrder) throw NumericError("derivative order out of range");
  Jet seed = Jet::variable(s0, k);
  Jet out = f(seed);
  return out.derivative(k);
}

}  // namespace leonoma

#endif
