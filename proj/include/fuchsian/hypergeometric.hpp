#pragma once

#include "fuchsian/moebius.hpp"

namespace fuchsian::whittaker {

/// Gamma function by the Lanczos approximation (g = 7, nine terms); the
/// left half-plane is reached through the reflection formula. Throws
/// PoleError at nonpositive integers.
Complex gamma_fn(Complex z);
double gamma_fn(double x);

/// Gauss value F(alpha, beta; gamma; 1) = G(c)G(c-a-b) / (G(c-a)G(c-b)).
/// Requires gamma - alpha - beta > 0.
double gauss_sum(double alpha, double beta, double gamma);

/// Gauss hypergeometric series 2F1(alpha, beta; gamma; z) for |z| < 1, and
/// the Gauss value at z = 1. The series stops once three consecutive terms
/// fall below 1e-16 of the partial sum; more than 100000 terms is reported
/// as ConvergenceError, as is |z| >= 1 away from z = 1.
Complex hyp2f1(double alpha, double beta, double gamma, Complex z);

/// |F(a,b;c;z) - [A F(a,b;a+b-c+1;1-z) + B (1-z)^(c-a-b) F(c-a,c-b;c-a-b+1;1-z)]|
/// with A, B the Gamma-ratio connection coefficients of the z -> 1 - z
/// continuation. Throws InvalidArgument when c - a - b is an integer.
double continuation_residual(double alpha, double beta, double gamma, Complex z);

} // namespace fuchsian::whittaker
