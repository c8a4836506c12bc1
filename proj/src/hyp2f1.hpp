#ifndef LEONOMA_HYP2F1_HPP
#define LEONOMA_HYP2F1_HPP

namespace leonoma {

// Gauss hypergeometric function 2F1(a, b; c; z) restricted to z <= 0, the
// only region the interference closed forms visit. Throws
// IllConditionedError when c sits within 1e-9 of a nonpositive integer and
// NumericError if the series fails to converge.
double hyp2f1(double a, double b, double c, double z);

}  // namespace leonoma

#endif
