#include "bazlab/powseries.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bazlab/errors.hpp"

namespace bazlab {

namespace {

void require_same_order(const TruncSeries& a, const TruncSeries& b, const char* op) {
  if (a.order() != b.order()) {
    throw OrderMismatch(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                        " vs " + std::to_string(b.order()) + ")");
  }
}

bool is_finite(cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

std::vector<cplx> copy_coeffs(const TruncSeries& s) {
  return {s.coeffs().begin(), s.coeffs().end()};
}

// Multiplier applied n times; shared by the forward and inverse maps so the
// two cancel up to one rounding.
double power_multiplier(double alpha, std::size_t k, unsigned n) {
  const double m = (alpha + static_cast<double>(k)) / alpha;
  double factor = 1.0;
  for (unsigned i = 0; i < n; ++i) factor *= m;
  return factor;
}

}  // namespace

TruncSeries::TruncSeries() : coeffs_(1, cplx{}) {}

TruncSeries::TruncSeries(std::size_t order) : coeffs_(order + 1, cplx{}) {}

TruncSeries::TruncSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncSeries: empty coefficient list");
  if (!std::all_of(coeffs_.begin(), coeffs_.end(), is_finite)) {
    throw std::invalid_argument("TruncSeries: non-finite coefficient");
  }
}

TruncSeries TruncSeries::constant(cplx value, std::size_t order) {
  std::vector<cplx> c(order + 1, cplx{});
  c[0] = value;
  return TruncSeries(std::move(c));
}

TruncSeries TruncSeries::monomial(std::size_t degree, std::size_t order, cplx coeff) {
  std::vector<cplx> c(order + 1, cplx{});
  if (degree <= order) c[degree] = coeff;
  return TruncSeries(std::move(c));
}

TruncSeries TruncSeries::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw OrderMismatch("truncated: requested order exceeds series order");
  }
  return TruncSeries(std::vector<cplx>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncSeries TruncSeries::with_coeff(std::size_t k, cplx value) const {
  auto c = coeffs_;
  c.at(k) = value;
  return TruncSeries(std::move(c));
}

double TruncSeries::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b, "add");
  auto c = copy_coeffs(a);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b[k];
  return TruncSeries(std::move(c));
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b, "sub");
  auto c = copy_coeffs(a);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] -= b[k];
  return TruncSeries(std::move(c));
}

TruncSeries operator-(const TruncSeries& a) {
  auto c = copy_coeffs(a);
  for (auto& x : c) x = -x;
  return TruncSeries(std::move(c));
}

TruncSeries operator*(cplx s, const TruncSeries& a) {
  auto c = copy_coeffs(a);
  for (auto& x : c) x *= s;
  return TruncSeries(std::move(c));
}

double max_coeff_diff(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b, "max_coeff_diff");
  double m = 0.0;
  for (std::size_t k = 0; k <= a.order(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

TruncSeries mul(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b, "mul");
  const std::size_t n = a.order();
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<cplx> c(n + 1, cplx{});
  for (std::size_t k = 0; k <= n; ++k) {
    cplx sum{};
    for (std::size_t j = 0; j <= k; ++j) sum += ac[j] * bc[k - j];
    c[k] = sum;
  }
  return TruncSeries(std::move(c));
}

TruncSeries div(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b, "div");
  const auto bc = b.coeffs();
  if (bc[0] == cplx{}) throw ZeroConstantTerm("div: divisor has zero constant term");
  const std::size_t n = a.order();
  std::vector<cplx> q(n + 1, cplx{});
  for (std::size_t k = 0; k <= n; ++k) {
    cplx sum = a[k];
    for (std::size_t j = 1; j <= k; ++j) sum -= bc[j] * q[k - j];
    q[k] = sum / bc[0];
  }
  return TruncSeries(std::move(q));
}

TruncSeries log1(const TruncSeries& h) {
  if (h[0] != cplx{1.0, 0.0}) throw NormalizationError("log1: constant term must be 1");
  const std::size_t n = h.order();
  const auto hc = h.coeffs();
  // h' = u' h  =>  k u_k = k h_k - sum_{j=1}^{k-1} j u_j h_{k-j}
  std::vector<cplx> u(n + 1, cplx{});
  for (std::size_t k = 1; k <= n; ++k) {
    cplx sum = static_cast<double>(k) * hc[k];
    for (std::size_t j = 1; j < k; ++j) sum -= static_cast<double>(j) * u[j] * hc[k - j];
    u[k] = sum / static_cast<double>(k);
  }
  return TruncSeries(std::move(u));
}

TruncSeries exp0(const TruncSeries& u) {
  if (u[0] != cplx{}) throw NormalizationError("exp0: constant term must be 0");
  const std::size_t n = u.order();
  const auto uc = u.coeffs();
  // k h_k = sum_{j=1}^{k} j u_j h_{k-j}
  std::vector<cplx> h(n + 1, cplx{});
  h[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    cplx sum{};
    for (std::size_t j = 1; j <= k; ++j) sum += static_cast<double>(j) * uc[j] * h[k - j];
    h[k] = sum / static_cast<double>(k);
  }
  return TruncSeries(std::move(h));
}

TruncSeries pow_alpha(const TruncSeries& h, double alpha) {
  if (h[0] != cplx{1.0, 0.0}) throw NormalizationError("pow_alpha: constant term must be 1");
  if (alpha == 1.0) return h;
  return exp0(alpha * log1(h));
}

TruncSeries salagean(const TruncSeries& f) {
  auto c = copy_coeffs(f);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= static_cast<double>(k);
  return TruncSeries(std::move(c));
}

TruncSeries salagean_n(const TruncSeries& f, unsigned n) {
  TruncSeries out = f;
  for (unsigned i = 0; i < n; ++i) out = salagean(out);
  return out;
}

TruncSeries shift_down(const TruncSeries& f) {
  if (f[0] != cplx{}) throw NormalizationError("shift_down: constant term must be 0");
  if (f.order() == 0) throw OrderMismatch("shift_down: order must be at least 1");
  return TruncSeries(std::vector<cplx>(f.coeffs().begin() + 1, f.coeffs().end()));
}

TruncSeries shift_up(const TruncSeries& s) {
  std::vector<cplx> c;
  c.reserve(s.order() + 2);
  c.push_back(cplx{});
  c.insert(c.end(), s.coeffs().begin(), s.coeffs().end());
  return TruncSeries(std::move(c));
}

cplx eval(const TruncSeries& s, cplx z, double r_max) {
  if (std::abs(z) > r_max) {
    throw EvaluationDomainError("eval: |z| exceeds evaluation cap " + std::to_string(r_max));
  }
  const auto c = s.coeffs();
  cplx acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
  return acc;
}

AnalyticFn AnalyticFn::from_series(TruncSeries series, std::string label) {
  if (series.order() < 1) throw NormalizationError("AnalyticFn: order must be at least 1");
  if (series[0] != cplx{} || series[1] != cplx{1.0, 0.0}) {
    throw NormalizationError("AnalyticFn: requires c0 = 0 and c1 = 1");
  }
  return AnalyticFn(std::move(series), std::move(label));
}

AnalyticFn AnalyticFn::from_tail(std::span<const cplx> tail, std::size_t order,
                                 std::string label) {
  if (tail.size() + 1 > order) {
    throw OrderMismatch("AnalyticFn::from_tail: tail longer than order allows");
  }
  std::vector<cplx> c(order + 1, cplx{});
  c[1] = 1.0;
  std::copy(tail.begin(), tail.end(), c.begin() + 2);
  return from_series(TruncSeries(std::move(c)), std::move(label));
}

AnalyticFn AnalyticFn::identity(std::size_t order) {
  return from_series(TruncSeries::monomial(1, order), "identity");
}

AnalyticFn AnalyticFn::koebe(std::size_t order) {
  std::vector<cplx> c(order + 1, cplx{});
  for (std::size_t k = 1; k <= order; ++k) c[k] = static_cast<double>(k);
  return from_series(TruncSeries(std::move(c)), "koebe");
}

TruncSeries log_derivative(const AnalyticFn& f) {
  return div(shift_down(salagean(f.series())), shift_down(f.series()));
}

PowerRep::PowerRep(double alpha, TruncSeries h) : alpha_(alpha), h_(std::move(h)) {
  if (!(alpha_ > 0.0) || !std::isfinite(alpha_)) {
    throw ParameterError("PowerRep: alpha must be a positive finite real");
  }
  if (h_[0] != cplx{1.0, 0.0}) throw NormalizationError("PowerRep: h0 must be exactly 1");
}

PowerRep power_rep(const AnalyticFn& f, double alpha) {
  return PowerRep(alpha, pow_alpha(shift_down(f.series()), alpha));
}

AnalyticFn unpower(const PowerRep& p, std::string label) {
  return AnalyticFn::from_series(shift_up(pow_alpha(p.h(), 1.0 / p.alpha())), std::move(label));
}

PowerRep salagean_n_power(const PowerRep& p, unsigned n) {
  if (n == 0) return p;
  std::vector<cplx> c(p.h().coeffs().begin(), p.h().coeffs().end());
  for (std::size_t k = 1; k < c.size(); ++k) c[k] *= power_multiplier(p.alpha(), k, n);
  return PowerRep(p.alpha(), TruncSeries(std::move(c)));
}

PowerRep salagean_inverse_power(const PowerRep& p, unsigned n) {
  if (n == 0) return p;
  std::vector<cplx> c(p.h().coeffs().begin(), p.h().coeffs().end());
  for (std::size_t k = 1; k < c.size(); ++k) c[k] /= power_multiplier(p.alpha(), k, n);
  return PowerRep(p.alpha(), TruncSeries(std::move(c)));
}

}  // namespace bazlab
