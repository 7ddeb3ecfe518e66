#pragma once

// Truncated complex power series on the unit disk.
//
// A TruncSeries of order N holds c_0..c_N; every arithmetic result is cut
// back to degree N. Normalized functions f(z) = z + a_2 z^2 + ... live in
// AnalyticFn, and principal powers f^alpha are carried by PowerRep as the
// series h = f^alpha / z^alpha with h_0 = 1, so z^alpha itself is never
// expanded.

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bazlab {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 128;
inline constexpr double kDefaultRmax = 0.995;

class TruncSeries {
 public:
  /// Zero series of order 0.
  TruncSeries();
  /// Zero series of the given order.
  explicit TruncSeries(std::size_t order);
  /// Takes c_0..c_N; throws std::invalid_argument on an empty or non-finite input.
  explicit TruncSeries(std::vector<cplx> coeffs);

  static TruncSeries constant(cplx value, std::size_t order);
  static TruncSeries monomial(std::size_t degree, std::size_t order, cplx coeff = 1.0);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  const cplx& operator[](std::size_t k) const { return coeffs_.at(k); }

  /// Same series cut to a lower (or equal) order.
  TruncSeries truncated(std::size_t order) const;
  /// Copy with c_k replaced.
  TruncSeries with_coeff(std::size_t k, cplx value) const;
  /// max_k |c_k|
  double max_abs() const noexcept;

 private:
  std::vector<cplx> coeffs_;
};

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a);
TruncSeries operator*(cplx s, const TruncSeries& a);
inline TruncSeries operator*(const TruncSeries& a, cplx s) { return s * a; }

/// max_k |a_k - b_k|; orders must match.
double max_coeff_diff(const TruncSeries& a, const TruncSeries& b);

/// Cauchy product truncated to the common order.
TruncSeries mul(const TruncSeries& a, const TruncSeries& b);
/// q with q*b = a; requires b_0 != 0.
TruncSeries div(const TruncSeries& a, const TruncSeries& b);
/// Logarithm of a series with h_0 = 1; result has u_0 = 0.
TruncSeries log1(const TruncSeries& h);
/// Exponential of a series with u_0 = 0; result has h_0 = 1.
TruncSeries exp0(const TruncSeries& u);
/// Principal power exp(alpha * log h) for h_0 = 1. Any real alpha.
TruncSeries pow_alpha(const TruncSeries& h, double alpha);

/// D = z d/dz: c_k -> k c_k.
TruncSeries salagean(const TruncSeries& f);
/// D applied n times.
TruncSeries salagean_n(const TruncSeries& f, unsigned n);

/// f/z for a series with c_0 = 0; the order drops by one.
TruncSeries shift_down(const TruncSeries& f);
/// z*s; the order grows by one.
TruncSeries shift_up(const TruncSeries& s);

/// Horner evaluation of the truncated polynomial. Throws EvaluationDomainError
/// if |z| > r_max.
cplx eval(const TruncSeries& s, cplx z, double r_max = kDefaultRmax);

/// Values at z_j = r exp(2 pi i j / angles), j = 0..angles-1.
std::vector<cplx> eval_circle(const TruncSeries& s, double r, std::size_t angles,
                              double r_max = kDefaultRmax);

/// A member of class A: c_0 = 0 and c_1 = 1 exactly.
class AnalyticFn {
 public:
  /// Throws NormalizationError unless c_0 == 0 and c_1 == 1, or if order < 1.
  static AnalyticFn from_series(TruncSeries series, std::string label = {});
  /// z + a_2 z^2 + ... + a_{m+1} z^{m+1}, zero-padded to the given order.
  static AnalyticFn from_tail(std::span<const cplx> tail, std::size_t order,
                              std::string label = {});

  static AnalyticFn identity(std::size_t order = kDefaultOrder);
  /// z / (1 - z)^2
  static AnalyticFn koebe(std::size_t order = kDefaultOrder);

  const TruncSeries& series() const noexcept { return series_; }
  std::size_t order() const noexcept { return series_.order(); }
  const std::string& label() const noexcept { return label_; }

 private:
  AnalyticFn(TruncSeries series, std::string label)
      : series_(std::move(series)), label_(std::move(label)) {}

  TruncSeries series_;
  std::string label_;
};

/// z f'(z) / f(z) as a series of order N-1 (first entry 1).
TruncSeries log_derivative(const AnalyticFn& f);

/// f(z)^alpha / z^alpha with the branch fixed by the value 1 at the origin.
class PowerRep {
 public:
  /// Throws ParameterError if alpha <= 0, NormalizationError if h_0 != 1.
  PowerRep(double alpha, TruncSeries h);

  double alpha() const noexcept { return alpha_; }
  const TruncSeries& h() const noexcept { return h_; }

 private:
  double alpha_;
  TruncSeries h_;
};

/// h = (f/z)^alpha, order N-1 for f of order N.
PowerRep power_rep(const AnalyticFn& f, double alpha);
/// f = z h^(1/alpha), order N+1 for h of order N.
AnalyticFn unpower(const PowerRep& p, std::string label = {});

/// D^n acting on z^alpha h, normalized by alpha^n so the result again has
/// h_0 = 1: h_k -> ((alpha+k)/alpha)^n h_k. This is D^n f^alpha / (alpha^n z^alpha).
PowerRep salagean_n_power(const PowerRep& p, unsigned n);
/// Inverse of salagean_n_power: h_k -> (alpha/(alpha+k))^n h_k.
PowerRep salagean_inverse_power(const PowerRep& p, unsigned n);

}  // namespace bazlab
