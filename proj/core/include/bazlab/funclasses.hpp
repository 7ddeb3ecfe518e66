#pragma once

#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "bazlab/powseries.hpp"

namespace bazlab {

/// Caratheodory function p(z) = sum_j w_j (1 + x_j z)/(1 - x_j z) with w_j > 0,
/// sum w_j = 1 and |x_j| = 1. With no atoms it is the constant 1.
class HerglotzFn {
 public:
  struct Atom {
    double weight;
    cplx point;
  };

  /// Throws ParameterError if weights are not positive, do not sum to 1
  /// (to 1e-12) or a point is off the unit circle (to 1e-12).
  static HerglotzFn from_atoms(std::vector<Atom> atoms, std::size_t order = kDefaultOrder);
  /// p == 1.
  static HerglotzFn constant_one(std::size_t order = kDefaultOrder);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  /// p_0 = 1, p_k = 2 sum_j w_j x_j^k.
  const TruncSeries& series() const noexcept { return series_; }
  std::size_t order() const noexcept { return series_.order(); }

  /// Closed-form p(z); requires |z| < 1.
  cplx value(cplx z) const;
  /// Closed-form z p'(z) = sum_j 2 w_j x_j z / (1 - x_j z)^2; requires |z| < 1.
  cplx z_derivative(cplx z) const;

 private:
  HerglotzFn(std::vector<Atom> atoms, TruncSeries series)
      : atoms_(std::move(atoms)), series_(std::move(series)) {}

  std::vector<Atom> atoms_;
  TruncSeries series_;
};

/// Random p with num_atoms atoms; deterministic in seed.
HerglotzFn herglotz_sample(std::size_t num_atoms, std::uint64_t seed,
                           std::size_t order = kDefaultOrder);
/// (1 + z)/(1 - z): single atom at x = 1.
HerglotzFn mobius_extremal(std::size_t order = kDefaultOrder);

/// Starlike g with z g'/g = p: g = z exp(sum_k p_k z^k / k).
AnalyticFn starlike_from_p(const HerglotzFn& p);

struct ClassParams {
  unsigned n = 0;
  double alpha = 1.0;
  double beta = 0.0;

  /// Throws ParameterError unless alpha > 0 and 0 <= beta < 1.
  void validate() const;
};

enum class ClassId { P, Starlike, B_n_alpha, T_n_alpha_beta, Yamaguchi };
std::string_view to_string(ClassId id);

/// Finite sample of the disk: every radius times angles_per_circle equally
/// spaced angles starting at 0.
struct DiskGrid {
  std::vector<double> radii;
  std::size_t angles_per_circle = 512;
  double margin = 1e-9;
  double r_cap = 0.95;

  /// radii {0.1, ..., 0.9, 0.95}, 512 angles, margin 1e-9.
  static DiskGrid standard();
  /// Throws ParameterError for unsorted radii, radii outside (0, r_cap],
  /// r_cap above the evaluation cap, fewer than 64 angles or a negative margin.
  void validate() const;
};

struct GridMinimum {
  double value = std::numeric_limits<double>::infinity();
  cplx witness{};
};

/// min over the grid of Re s(z). Stops early once a value below stop_below is
/// seen (the returned point is then a violation, not necessarily the minimum).
GridMinimum grid_min_real(const TruncSeries& s, const DiskGrid& grid,
                          double stop_below = -std::numeric_limits<double>::infinity());
/// min over the grid of Re(num(z)/den(z)), divided pointwise. Non-finite
/// quotients count as -infinity.
GridMinimum grid_min_real_ratio(const TruncSeries& num, const TruncSeries& den,
                                const DiskGrid& grid,
                                double stop_below = -std::numeric_limits<double>::infinity());

enum class Verdict { member, boundary, violated };
std::string_view to_string(Verdict v);

/// member if min > bound + margin, boundary if |min - bound| <= margin.
Verdict classify(double min_value, double bound, double margin);

struct MembershipReport {
  ClassId class_id{};
  ClassParams params{};
  double bound = 0.0;
  double min_real_part = 0.0;
  cplx witness{};
  Verdict verdict_kind = Verdict::violated;
  bool verdict = false;  // verdict_kind == member
};

/// Scans the class condition over the grid:
///   Starlike        Re z f'/f > 0
///   B_n_alpha       Re D^n f^alpha / (alpha^n z^alpha) > 0
///   T_n_alpha_beta  Re D^n f^alpha / (alpha^n z^alpha) > beta
///   Yamaguchi       Re f/z > 0
/// ClassId::P applies to Caratheodory functions; use the HerglotzFn overload.
MembershipReport membership(const AnalyticFn& f, ClassId id, const ClassParams& params,
                            const DiskGrid& grid);
/// Re p > 0 on the grid, from the truncated series of p.
MembershipReport membership(const HerglotzFn& p, const DiskGrid& grid);

/// The sharp member of T_n^alpha(beta): D^n f^alpha / (alpha^n z^alpha) equals
/// (1 + (1 - 2 beta) z) / (1 - z).
AnalyticFn extremal_Tn(const ClassParams& params, std::size_t order = kDefaultOrder);

/// D^n f^alpha / (alpha^n z^alpha) as a series of order N-1.
TruncSeries normalized_salagean_power(const AnalyticFn& f, unsigned n, double alpha);

}  // namespace bazlab
