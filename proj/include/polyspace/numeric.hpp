#pragma once

#include "polyspace/core.hpp"

namespace polyspace {

/// Shape of an open robot arm on the flat torus: angles for links 2..n in
/// (-pi, pi], with the first link gauge-fixed along the positive real axis.
struct ArmConfiguration {
  std::vector<double> angles;

  int n() const { return static_cast<int>(angles.size()) + 1; }
  double angle(int i) const { return i == 1 ? 0.0 : angles[static_cast<std::size_t>(i - 2)]; }
};

/// Negative squared end-to-end distance of the arm.
double f_arm(const LengthVector& l, const ArmConfiguration& c);

/// Analytic gradient of f_arm in the angle coordinates, entries for links 2..n.
std::vector<double> grad_f(const LengthVector& l, const ArmConfiguration& c);

/// Analytic Hessian, row-major (n-1) x (n-1).
std::vector<double> hessian_f(const LengthVector& l, const ArmConfiguration& c);

/// Central-finite-difference Hessian with step h; slow fallback/cross-check.
std::vector<double> hessian_f_fd(const LengthVector& l, const ArmConfiguration& c, double h);

/// Collinear configuration labelled by J: links in J point one way, the rest
/// the opposite way, flipped so the first link lies in the chosen half.
ArmConfiguration collinear_config(const LengthVector& l, SubsetMask J);

/// Number of negative Hessian eigenvalues at the collinear configuration of a
/// long subset J. Eigenvalues within 1e-7 * (sum l)^2 of zero raise
/// degenerate_hessian_error.
int morse_index_numeric(const LengthVector& l, SubsetMask J);

/// Complex conjugation of every link direction: angle negation.
ArmConfiguration apply_involution(ArmConfiguration c);

/// Monte-Carlo count of connected components of the closed-polygon set:
/// gradient-ascends `samples` random arms until the end-to-end distance drops
/// below closure_tol, then counts components of the survivor graph linked at
/// torus distance link_radius. Zero survivors mean an empty space; fewer than
/// 50 raise inconclusive_error. Deterministic given the seed, independent of
/// the worker count.
int sample_components(const LengthVector& l, int samples, double closure_tol,
                      double link_radius, std::uint64_t seed);

}  // namespace polyspace
