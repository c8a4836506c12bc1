#include "hyp2f1.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace leonoma {

namespace {

constexpr int kMaxTerms = 2000;
constexpr double kTermTol = 1e-17;

bool near_nonpositive_integer(double c, double tol) {
  if (c > 0.5) return false;
  return std::fabs(c - std::round(c)) < tol;
}

// Plain power series; converges for |z| < 1 (we call it with |z| <= ~0.9 or
// after a transformation that maps into that range).
double series(double a, double b, double c, double z) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
    sum += term;
    if (std::fabs(term) <= kTermTol * std::fabs(sum) && k > 2) return sum;
    if (term == 0.0) return sum;
  }
  throw NumericError("hyp2f1 series did not converge");
}

// Pfaff transformation: 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)).
double pfaff(double a, double b, double c, double z) {
  const double w = z / (z - 1.0);
  return std::pow(1.0 - z, -a) * series(a, c - b, c, w);
}

// Connection formula at infinity, valid when a - b is not an integer:
//   2F1(a,b;c;z) = G1 (-z)^(-a) 2F1(a, 1-c+a; 1-b+a; 1/z)
//               + G2 (-z)^(-b) 2F1(b, 1-c+b; 1-a+b; 1/z).
double at_infinity(double a, double b, double c, double z) {
  const double g1 = std::tgamma(c) * std::tgamma(b - a) / (std::tgamma(b) * std::tgamma(c - a));
  const double g2 = std::tgamma(c) * std::tgamma(a - b) / (std::tgamma(a) * std::tgamma(c - b));
  const double inv = 1.0 / z;
  const double t1 = g1 * std::pow(-z, -a) * series(a, 1.0 - c + a, 1.0 - b + a, inv);
  const double t2 = g2 * std::pow(-z, -b) * series(b, 1.0 - c + b, 1.0 - a + b, inv);
  return t1 + t2;
}

bool integer_like(double x, double tol) { return std::fabs(x - std::round(x)) < tol; }

}  // namespace

double hyp2f1(double a, double b, double c, double z) {
  if (!(z <= 0.0)) throw InvalidArgumentError("hyp2f1 implemented for z <= 0 only");
  if (near_nonpositive_integer(c, 1e-9))
    throw IllConditionedError("hyp2f1 third parameter within 1e-9 of a nonpositive integer");
  if (z == 0.0) return 1.0;
  if (a == 0.0 || b == 0.0) return 1.0;

  // Terminating cases (a or b a nonpositive integer) are handled by the
  // plain series at any z: the term recurrence hits an exact zero.
  if ((a == std::round(a) && a <= 0.0) || (b == std::round(b) && b <= 0.0))
    return series(a, b, c, z);

  if (z > -0.9) return series(a, b, c, z);
  if (z >= -2.0) return pfaff(a, b, c, z);
  const bool gamma_poles = near_nonpositive_integer(c - a, 1e-9) ||
                           near_nonpositive_integer(c - b, 1e-9);
  if (!integer_like(a - b, 1e-8) && !gamma_poles) return at_infinity(a, b, c, z);
  // Degenerate prefactors: fall back to the Pfaff series; slower but
  // convergent since the transformed argument lies in (0, 1).
  return pfaff(a, b, c, z);
}

}  // namespace leonoma
