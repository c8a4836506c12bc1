#ifndef LEONOMA_INTERFERENCE_HPP
#define LEONOMA_INTERFERENCE_HPP

#include "config.hpp"
#include "jet.hpp"

namespace leonoma {

enum class FMode { kQuadrature, kClosedForm };

// eta(s, y) = 2F1[-2/alpha, kappa, (alpha-2)/alpha, -y^(-alpha) (G_sl/G_ml) s/kappa].
// Falls back to a tail-integral evaluation when (alpha-2)/alpha < 1e-9, where
// the 2F1 third parameter sits at a pole.
double eta(double s, double y_m, const DerivedConstants& k, const FadingModel& fading);

// F(u;s): the u-substituted integral inside the Laplace transform, with
// limits (G_sl/G_ml s/kappa)^(-2/alpha) {r^2, R_max^2}. Quadrature mode
// evaluates the equivalent fixed-limit v-form; closed mode uses the eta
// expression and throws IllConditionedError when (alpha-2)/alpha < 1e-9.
double capital_f(double s, double r_m, const DerivedConstants& k, const FadingModel& fading,
                 FMode mode);

// Laplace transform of the inter-satellite interference conditioned on the
// nearest interferer at distance r: exp(-lambda pi (R_S/R_E) W(s)) *
// (1 + (G_sl/G_ml) s / (r^alpha beta))^(-kappa).
double laplace_inter(double s, double r_m, const DerivedConstants& k, const FadingModel& fading);
Jet laplace_inter(const Jet& s, double r_m, const DerivedConstants& k, const FadingModel& fading);

// With the noise factor folded in: L_{I + sigma_bar^2}(s) = L_I(s) e^(-s sigma_bar^2).
double laplace_inter_noise(double s, double r_m, const DerivedConstants& k,
                           const FadingModel& fading);
Jet laplace_inter_noise(const Jet& s, double r_m, const DerivedConstants& k,
                        const FadingModel& fading);

// d^k/ds^k of L_I via jet propagation; order up to Jet::kMaxOrder.
double laplace_inter_deriv(double s, double r_m, const DerivedConstants& k,
                           const FadingModel& fading, int order);

// First derivative assembled from the Leibniz rule on the integral (the
// closed route, independent of jets). FMode picks how W and dW/ds are
// evaluated: direct quadrature of the differentiated integrand, or the eta
// closed form (requires (alpha-2)/alpha >= 1e-9).
double laplace_inter_deriv1_closed(double s, double r_m, const DerivedConstants& k,
                                   const FadingModel& fading, FMode mode = FMode::kQuadrature);

}  // namespace leonoma

#endif
