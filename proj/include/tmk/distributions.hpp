// SPDX-License-Identifier: Apache-2.0

#ifndef TMK_DISTRIBUTIONS_HPP
#define TMK_DISTRIBUTIONS_HPP

namespace tmk {

// Tail-probability kernels behind the nonparametric tests. Self-contained
// on purpose: the shared library stays free of numeric-library linkage and
// the values are reproducible bit-for-bit across builds.

/// Standard normal CDF, Phi(x).
double normal_cdf(double x);

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

/// Upper tail of the chi-squared distribution with df degrees of freedom.
double chi_squared_tail(double x, int df);

/// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// Two-tailed p-value of Student's t with df degrees of freedom.
double student_t_two_tailed(double t, double df);

/// Upper tail of the F distribution with (df1, df2) degrees of freedom.
double f_tail(double f, double df1, double df2);

}  // namespace tmk

#endif  // TMK_DISTRIBUTIONS_HPP
