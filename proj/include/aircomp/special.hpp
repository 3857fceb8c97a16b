#pragma once

namespace aircomp {

// Gamma function. Accepts x > 0 and negative non-integers; poles at
// non-positive integers raise std::domain_error.
double gamma_fn(double x);

// ln Gamma(x) for x > 0.
double log_gamma_fn(double x);

// Lower incomplete gamma gamma(s, x), s > 0, x >= 0.
double lower_incomplete_gamma(double s, double x);

// Regularized form P(s, x) = gamma(s, x) / Gamma(s) in [0, 1].
double reg_lower_incomplete_gamma(double s, double x);

// Generalized exponential integral E_v(x) = int_1^inf exp(-x t) t^-v dt
// for real order v > 0. x = 0 is allowed only when v > 1.
double generalized_expint(double v, double x);

// Beta function B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y), x, y > 0.
double beta_fn(double x, double y);

// ln B(x, y); safe where B itself would under/overflow.
double log_beta_fn(double x, double y);

}  // namespace aircomp
