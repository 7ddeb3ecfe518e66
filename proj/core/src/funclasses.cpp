#include "bazlab/funclasses.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "bazlab/errors.hpp"

namespace bazlab {

namespace {

constexpr double kAtomTolerance = 1e-12;

cplx grid_point(double r, std::size_t j, std::size_t angles) {
  return std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) /
                           static_cast<double>(angles));
}

template <class ValuesOnCircle>
GridMinimum scan_grid(const DiskGrid& grid, double stop_below, ValuesOnCircle values_on) {
  grid.validate();
  GridMinimum best;
  for (double r : grid.radii) {
    const auto values = values_on(r);
    for (std::size_t j = 0; j < values.size(); ++j) {
      const double v = std::isfinite(values[j].real()) && std::isfinite(values[j].imag())
                           ? values[j].real()
                           : -std::numeric_limits<double>::infinity();
      if (v < best.value) {
        best.value = v;
        best.witness = grid_point(r, j, grid.angles_per_circle);
      }
    }
    if (best.value < stop_below) break;
  }
  return best;
}

}  // namespace

HerglotzFn HerglotzFn::from_atoms(std::vector<Atom> atoms, std::size_t order) {
  double total = 0.0;
  for (const auto& a : atoms) {
    if (!(a.weight > 0.0)) throw ParameterError("HerglotzFn: weights must be positive");
    if (std::abs(std::abs(a.point) - 1.0) > kAtomTolerance) {
      throw ParameterError("HerglotzFn: atom points must be unimodular");
    }
    total += a.weight;
  }
  if (!atoms.empty() && std::abs(total - 1.0) > kAtomTolerance) {
    throw ParameterError("HerglotzFn: weights must sum to 1");
  }

  std::vector<cplx> c(order + 1, cplx{});
  c[0] = 1.0;
  for (const auto& a : atoms) {
    cplx xk = 1.0;
    for (std::size_t k = 1; k <= order; ++k) {
      xk *= a.point;
      c[k] += 2.0 * a.weight * xk;
    }
  }
  return HerglotzFn(std::move(atoms), TruncSeries(std::move(c)));
}

HerglotzFn HerglotzFn::constant_one(std::size_t order) { return from_atoms({}, order); }

cplx HerglotzFn::value(cplx z) const {
  if (atoms_.empty()) return 1.0;
  cplx sum{};
  for (const auto& a : atoms_) sum += a.weight * (1.0 + a.point * z) / (1.0 - a.point * z);
  return sum;
}

cplx HerglotzFn::z_derivative(cplx z) const {
  cplx sum{};
  for (const auto& a : atoms_) {
    const cplx d = 1.0 - a.point * z;
    sum += 2.0 * a.weight * a.point * z / (d * d);
  }
  return sum;
}

HerglotzFn herglotz_sample(std::size_t num_atoms, std::uint64_t seed, std::size_t order) {
  if (num_atoms == 0) throw ParameterError("herglotz_sample: need at least one atom");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> weight_dist(1.0);
  std::uniform_real_distribution<double> angle_dist(0.0, 2.0 * std::numbers::pi);

  std::vector<HerglotzFn::Atom> atoms(num_atoms);
  double total = 0.0;
  for (auto& a : atoms) {
    a.weight = weight_dist(rng) + 1e-12;
    a.point = std::polar(1.0, angle_dist(rng));
    total += a.weight;
  }
  for (auto& a : atoms) a.weight /= total;
  return HerglotzFn::from_atoms(std::move(atoms), order);
}

HerglotzFn mobius_extremal(std::size_t order) {
  return HerglotzFn::from_atoms({{1.0, cplx{1.0, 0.0}}}, order);
}

AnalyticFn starlike_from_p(const HerglotzFn& p) {
  const auto& ps = p.series();
  const std::size_t n = ps.order();
  if (n < 1) throw ParameterError("starlike_from_p: series order must be at least 1");
  // order N-1 exponent so that g = z exp(u) has order N
  std::vector<cplx> u(n, cplx{});
  for (std::size_t k = 1; k < n; ++k) u[k] = ps[k] / static_cast<double>(k);
  return AnalyticFn::from_series(shift_up(exp0(TruncSeries(std::move(u)))), "starlike");
}

void ClassParams::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ParameterError("alpha must be > 0");
  if (!(beta >= 0.0 && beta < 1.0)) throw ParameterError("beta must lie in [0, 1)");
}

std::string_view to_string(ClassId id) {
  switch (id) {
    case ClassId::P: return "P";
    case ClassId::Starlike: return "Starlike";
    case ClassId::B_n_alpha: return "B_n_alpha";
    case ClassId::T_n_alpha_beta: return "T_n_alpha_beta";
    case ClassId::Yamaguchi: return "Yamaguchi";
  }
  return "unknown";
}

DiskGrid DiskGrid::standard() {
  DiskGrid g;
  g.radii = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
  return g;
}

void DiskGrid::validate() const {
  if (radii.empty()) throw ParameterError("DiskGrid: no radii");
  if (!(r_cap > 0.0 && r_cap <= kDefaultRmax)) {
    throw ParameterError("DiskGrid: r_cap must lie in (0, evaluation cap]");
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0 && radii[i] <= r_cap)) {
      throw ParameterError("DiskGrid: radii must lie in (0, r_cap]");
    }
    if (i > 0 && !(radii[i] > radii[i - 1])) {
      throw ParameterError("DiskGrid: radii must be strictly ascending");
    }
  }
  if (angles_per_circle < 64) throw ParameterError("DiskGrid: need at least 64 angles");
  if (!(margin >= 0.0)) throw ParameterError("DiskGrid: margin must be non-negative");
}

GridMinimum grid_min_real(const TruncSeries& s, const DiskGrid& grid, double stop_below) {
  return scan_grid(grid, stop_below,
                   [&](double r) { return eval_circle(s, r, grid.angles_per_circle); });
}

GridMinimum grid_min_real_ratio(const TruncSeries& num, const TruncSeries& den,
                                const DiskGrid& grid, double stop_below) {
  return scan_grid(grid, stop_below, [&](double r) {
    auto top = eval_circle(num, r, grid.angles_per_circle);
    const auto bottom = eval_circle(den, r, grid.angles_per_circle);
    for (std::size_t j = 0; j < top.size(); ++j) top[j] /= bottom[j];
    return top;
  });
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::member: return "member";
    case Verdict::boundary: return "boundary";
    case Verdict::violated: return "violated";
  }
  return "unknown";
}

Verdict classify(double min_value, double bound, double margin) {
  if (min_value > bound + margin) return Verdict::member;
  if (min_value >= bound - margin) return Verdict::boundary;
  return Verdict::violated;
}

TruncSeries normalized_salagean_power(const AnalyticFn& f, unsigned n, double alpha) {
  return salagean_n_power(power_rep(f, alpha), n).h();
}

MembershipReport membership(const AnalyticFn& f, ClassId id, const ClassParams& params,
                            const DiskGrid& grid) {
  params.validate();
  MembershipReport report;
  report.class_id = id;
  report.params = params;

  GridMinimum m;
  switch (id) {
    case ClassId::P:
      throw ParameterError("membership: class P applies to Caratheodory functions");
    case ClassId::Starlike:
      m = grid_min_real_ratio(shift_down(salagean(f.series())), shift_down(f.series()), grid);
      break;
    case ClassId::B_n_alpha:
      m = grid_min_real(normalized_salagean_power(f, params.n, params.alpha), grid);
      break;
    case ClassId::T_n_alpha_beta:
      report.bound = params.beta;
      m = grid_min_real(normalized_salagean_power(f, params.n, params.alpha), grid);
      break;
    case ClassId::Yamaguchi:
      m = grid_min_real(shift_down(f.series()), grid);
      break;
  }
  report.min_real_part = m.value;
  report.witness = m.witness;
  report.verdict_kind = classify(m.value, report.bound, grid.margin);
  report.verdict = report.verdict_kind == Verdict::member;
  return report;
}

MembershipReport membership(const HerglotzFn& p, const DiskGrid& grid) {
  MembershipReport report;
  report.class_id = ClassId::P;
  const auto m = grid_min_real(p.series(), grid);
  report.min_real_part = m.value;
  report.witness = m.witness;
  report.verdict_kind = classify(m.value, 0.0, grid.margin);
  report.verdict = report.verdict_kind == Verdict::member;
  return report;
}

AnalyticFn extremal_Tn(const ClassParams& params, std::size_t order) {
  params.validate();
  if (order < 1) throw ParameterError("extremal_Tn: order must be at least 1");
  // (1 + (1 - 2 beta) z)/(1 - z) = 1 + sum_{k>=1} 2 (1 - beta) z^k
  std::vector<cplx> t(order, cplx{2.0 * (1.0 - params.beta), 0.0});
  t[0] = 1.0;
  const PowerRep target(params.alpha, TruncSeries(std::move(t)));
  return unpower(salagean_inverse_power(target, params.n), "extremal");
}

}  // namespace bazlab
