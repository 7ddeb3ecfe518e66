#include "bazlab/gftops.hpp"

#include <algorithm>
#include <cmath>

#include "bazlab/errors.hpp"

namespace bazlab {

namespace {

double checked_shift(double alpha, double c) {
  const double s = alpha + c;
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw ParameterError("Bernardi operator requires alpha + c > 0");
  }
  return s;
}

TruncSeries p_at_order(const HerglotzFn& p, std::size_t order) {
  if (p.order() < order) {
    throw OrderMismatch("Caratheodory series order below the required order");
  }
  return p.series().truncated(order);
}

}  // namespace

AnalyticFn bazilevic_construct(const HerglotzFn& p, const AnalyticFn& g, double alpha) {
  if (!(alpha > 0.0)) throw ParameterError("bazilevic_construct: alpha must be > 0");
  // W = (f/g)^alpha solves D W + alpha (z g'/g) W = alpha p, which is the
  // integral equation differentiated and divided by g^alpha. Unlike
  // f^alpha/z^alpha, W has coefficients of the same size as p.
  const TruncSeries rho = log_derivative(g);
  const TruncSeries pt = p_at_order(p, rho.order());
  std::vector<cplx> w(rho.order() + 1, cplx{});
  w[0] = 1.0;
  for (std::size_t k = 1; k < w.size(); ++k) {
    cplx sum = pt[k];
    for (std::size_t j = 1; j <= k; ++j) sum -= rho[j] * w[k - j];
    w[k] = alpha * sum / (alpha + static_cast<double>(k));
  }
  const TruncSeries f_over_z =
      mul(shift_down(g.series()), pow_alpha(TruncSeries(std::move(w)), 1.0 / alpha));
  return AnalyticFn::from_series(shift_up(f_over_z), "bazilevic");
}

double bazilevic_residual(const AnalyticFn& f, const AnalyticFn& g, double alpha,
                          const HerglotzFn& p) {
  if (f.order() != g.order()) throw OrderMismatch("bazilevic_residual: f and g orders differ");
  if (!(alpha > 0.0)) throw ParameterError("bazilevic_residual: alpha must be > 0");
  // z f' f^{alpha-1} / g^alpha = (z f'/f) (f/g)^alpha
  const TruncSeries f_over_g = div(shift_down(f.series()), shift_down(g.series()));
  const TruncSeries lhs = mul(log_derivative(f), pow_alpha(f_over_g, alpha));
  return max_coeff_diff(lhs, p_at_order(p, lhs.order()));
}

PowerRep bernardi_power(const PowerRep& p, double c) {
  const double s = checked_shift(p.alpha(), c);
  std::vector<cplx> h(p.h().coeffs().begin(), p.h().coeffs().end());
  for (std::size_t k = 1; k < h.size(); ++k) h[k] *= s / (s + static_cast<double>(k));
  return PowerRep(p.alpha(), TruncSeries(std::move(h)));
}

PowerRep bernardi_inverse_power(const PowerRep& p, double c) {
  const double s = checked_shift(p.alpha(), c);
  std::vector<cplx> h(p.h().coeffs().begin(), p.h().coeffs().end());
  for (std::size_t k = 1; k < h.size(); ++k) h[k] *= (s + static_cast<double>(k)) / s;
  return PowerRep(p.alpha(), TruncSeries(std::move(h)));
}

AnalyticFn bernardi(const AnalyticFn& f, double alpha, double c) {
  checked_shift(alpha, c);
  return unpower(bernardi_power(power_rep(f, alpha), c), "bernardi");
}

AnalyticFn bernardi_inverse(const AnalyticFn& F, double alpha, double c) {
  checked_shift(alpha, c);
  return unpower(bernardi_inverse_power(power_rep(F, alpha), c), "bernardi_inverse");
}

ChainReport chain_identity_check(const AnalyticFn& f, double alpha, unsigned n_max,
                                 double tolerance) {
  const PowerRep base = power_rep(f, alpha);
  const TruncSeries log_deriv = log_derivative(f);
  // f^alpha * Df/f, again with constant term 1
  const PowerRep chained(alpha, mul(base.h(), log_deriv));

  ChainReport report;
  TruncSeries first_ratio;
  for (unsigned n = 0; n <= n_max; ++n) {
    const TruncSeries lower = salagean_n_power(base, n).h();
    const TruncSeries upper = salagean_n_power(base, n + 1).h();

    report.one_step_residual = std::max(
        report.one_step_residual, max_coeff_diff(upper, salagean_n_power(chained, n).h()));

    const TruncSeries ratio = div(upper, lower);
    if (n == 0) first_ratio = ratio;
    const double deviation = max_coeff_diff(ratio, first_ratio);
    report.ratio_deviation.push_back(deviation);
    if (deviation > tolerance) report.n_independent = false;

    const TruncSeries plain = div(shift_down(salagean_n(f.series(), n + 1)),
                                  shift_down(salagean_n(f.series(), n)));
    report.power_vs_plain_ratio.push_back(max_coeff_diff(ratio, plain));
  }
  return report;
}

}  // namespace bazlab
