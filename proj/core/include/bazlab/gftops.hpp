#pragma once

#include <vector>

#include "bazlab/funclasses.hpp"
#include "bazlab/powseries.hpp"

namespace bazlab {

/// f = { alpha int_0^z p(t) t^{-1} g(t)^alpha dt }^{1/alpha}.
///
/// Solved for W = (f/g)^alpha from D W + alpha (z g'/g) W = alpha p, then
/// f = g W^{1/alpha}. The result satisfies z f' f^{alpha-1} / g^alpha = p up to
/// series round-off. Requires p.order() >= g.order() - 1.
AnalyticFn bazilevic_construct(const HerglotzFn& p, const AnalyticFn& g, double alpha);

/// Coefficient residual max_k |L_k - p_k| of L = z f' f^{alpha-1} / g^alpha,
/// evaluated as (z f'/f) (f/g)^alpha so no factor carries the large
/// coefficients of g^alpha/z^alpha.
double bazilevic_residual(const AnalyticFn& f, const AnalyticFn& g, double alpha,
                          const HerglotzFn& p);

/// F^alpha = (alpha+c) z^{-c} int_0^z t^{c-1} f(t)^alpha dt, alpha + c > 0.
/// In power form this is the multiplier (alpha+c)/(alpha+c+k) on h_k.
AnalyticFn bernardi(const AnalyticFn& f, double alpha, double c);
PowerRep bernardi_power(const PowerRep& p, double c);

/// Inverse of bernardi: (alpha+c) f^alpha = D F^alpha + c F^alpha, i.e. the
/// multiplier (alpha+c+k)/(alpha+c).
AnalyticFn bernardi_inverse(const AnalyticFn& F, double alpha, double c);
PowerRep bernardi_inverse_power(const PowerRep& p, double c);

struct ChainReport {
  /// max over n = 0..n_max of the coefficient residual of
  /// D^{n+1} f^alpha = alpha D^n (f^alpha * Df/f).
  double one_step_residual = 0.0;
  /// Per n: max coefficient distance between the ratio
  /// D^{n+1} f^alpha / D^n f^alpha and the same ratio at n = 0.
  std::vector<double> ratio_deviation;
  /// Per n: residual of D^{n+1} f^alpha / D^n f^alpha = alpha D^{n+1}f / D^n f.
  std::vector<double> power_vs_plain_ratio;
  /// All ratio deviations below the tolerance.
  bool n_independent = true;
};

/// Checks the chain identity D(f^alpha) = alpha f^alpha Df/f at every Salagean
/// level up to n_max and probes whether D^{n+1} f^alpha / D^n f^alpha depends on n.
ChainReport chain_identity_check(const AnalyticFn& f, double alpha, unsigned n_max,
                                 double tolerance = 1e-11);

}  // namespace bazlab
