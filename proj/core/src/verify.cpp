#include "bazlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include "bazlab/errors.hpp"
#include "bazlab/gftops.hpp"
#include "bazlab/parallel.hpp"

namespace bazlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double angle_of(std::size_t j, std::size_t angles) {
  return kTwoPi * static_cast<double>(j) / static_cast<double>(angles);
}

struct CircleMin {
  double value;
  std::size_t index;
};

CircleMin circle_min_real(const TruncSeries& s, double r, std::size_t angles) {
  const auto values = eval_circle(s, r, angles);
  CircleMin best{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j].real() < best.value) best = {values[j].real(), j};
  }
  return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// psi

std::string_view to_string(PsiId id) { return id == PsiId::psi1 ? "psi1" : "psi2"; }

void PsiFunction::validate() const {
  switch (id) {
    case PsiId::psi1:
      if (!(xi > 0.0) || !std::isfinite(xi)) throw ParameterError("psi1 requires xi > 0");
      break;
    case PsiId::psi2:
      if (!(xi > 0.0 && xi <= 1.0)) throw ParameterError("psi2 requires 0 < xi <= 1");
      break;
  }
}

bool PsiFunction::excluded(cplx u) const {
  return id == PsiId::psi1 ? u == cplx{} : u == cplx{-1.0, 0.0};
}

cplx PsiFunction::operator()(cplx u, cplx v) const {
  if (excluded(u)) throw ParameterError("psi: u outside the domain");
  if (id == PsiId::psi1) return v / (xi * u);
  return 0.5 + v / (xi * (1.0 + u));
}

PsiReport psi_admissibility(const PsiFunction& psi, std::size_t samples, std::uint64_t seed,
                            double margin) {
  psi.validate();
  return psi_admissibility_sweep(psi.id, psi.xi, psi.xi, samples, seed, margin);
}

PsiReport psi_admissibility_sweep(PsiId id, double xi_lo, double xi_hi, std::size_t samples,
                                  std::uint64_t seed, double margin) {
  if (!(xi_lo <= xi_hi)) throw ParameterError("psi sweep: xi_lo > xi_hi");
  PsiFunction{id, xi_lo}.validate();
  PsiFunction{id, xi_hi}.validate();

  PsiReport report;
  report.id = id;
  report.xi_lo = xi_lo;
  report.xi_hi = xi_hi;
  report.margin = margin;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> u2_dist(-10.0, 10.0);
  std::exponential_distribution<double> depth_dist(0.5);

  auto draw_xi = [&] {
    if (xi_lo == xi_hi) return xi_lo;
    if (id == PsiId::psi1) {
      return std::exp(std::log(xi_lo) + unit(rng) * (std::log(xi_hi) - std::log(xi_lo)));
    }
    // (xi_lo, xi_hi], so the endpoint xi = 1 is reachable
    return xi_hi - unit(rng) * (xi_hi - xi_lo);
  };

  for (std::size_t i = 0; i < samples; ++i) {
    const PsiFunction psi{id, draw_xi()};
    const double b = psi(cplx{1.0, 0.0}, cplx{}).real();
    report.condition_b_value = std::min(report.condition_b_value, b);

    // every 101st sample sits on u2 = 0 and every 4th on the parabola itself
    const double u2 = i % 101 == 0 ? 0.0 : u2_dist(rng);
    const double depth = i % 4 == 0 ? 0.0 : depth_dist(rng);
    const double v1 = -(1.0 + u2 * u2) / 2.0 - depth;
    const cplx u{0.0, u2};
    if (psi.excluded(u)) {
      ++report.skipped;
      continue;
    }
    const double value = psi(u, cplx{v1, 0.0}).real();
    ++report.samples_checked;
    if (value > report.worst_c_value) {
      report.worst_c_value = value;
      report.worst_u2 = u2;
      report.worst_v1 = v1;
      report.worst_xi = psi.xi;
    }
  }
  report.condition_b = classify(report.condition_b_value, 0.0, margin);
  report.condition_c = report.samples_checked > 0 && report.worst_c_value <= margin;
  return report;
}

// ---------------------------------------------------------------------------
// Herglotz bound

Lemma25Report lemma25_check(const HerglotzFn& p, std::span<const double> radii,
                            std::size_t angles, double margin, double equality_tolerance) {
  if (angles == 0) throw ParameterError("lemma25_check: angles must be positive");
  Lemma25Report report;
  report.radii.assign(radii.begin(), radii.end());
  const auto& atoms = p.atoms();
  report.extremal =
      atoms.size() == 1 && atoms[0].point == cplx{1.0, 0.0} && atoms[0].weight == 1.0;

  for (double r : radii) {
    if (!(r > 0.0 && r < 1.0)) throw ParameterError("lemma25_check: radii must lie in (0,1)");
    const double factor = 2.0 * r / (1.0 - r * r);
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < angles; ++j) {
      const double theta = angle_of(j, angles);
      const cplx z = std::polar(r, theta);
      const double excess = std::abs(p.z_derivative(z)) - factor * p.value(z).real();
      if (excess > worst) worst = excess;
      if (excess > report.worst_excess) {
        report.worst_excess = excess;
        report.worst_radius = r;
        report.worst_angle = theta;
      }
    }
    report.max_excess.push_back(worst);

    const cplx z0{r, 0.0};
    const double gap = factor * p.value(z0).real() - std::abs(p.z_derivative(z0));
    report.zero_angle_gap.push_back(gap);
    if (report.extremal && std::abs(gap) > equality_tolerance) report.equality_holds = false;
  }
  report.bound_holds = report.worst_excess <= margin;
  return report;
}

// ---------------------------------------------------------------------------
// Implication scans

std::string_view to_string(TheoremId id) { return id == TheoremId::T31 ? "t31" : "t35"; }

std::string_view to_string(ScanFamily family) {
  return family == ScanFamily::constructed ? "constructed" : "falsification";
}

double hypothesis_bound(TheoremId id) { return id == TheoremId::T31 ? 1.0 : 0.5; }
double conclusion_bound(TheoremId id) { return id == TheoremId::T31 ? 0.0 : 0.5; }

namespace {

void validate_theorem_params(TheoremId id, const ClassParams& params) {
  params.validate();
  if (id == TheoremId::T35 && params.alpha > 1.0) {
    throw ParameterError("T35 requires 0 < alpha <= 1");
  }
}

struct Sides {
  TruncSeries ratio_num;
  TruncSeries ratio_den;
};

Sides salagean_ratio(const AnalyticFn& f, unsigned n) {
  const TruncSeries dn = salagean_n(f.series(), n);
  return {shift_down(salagean(dn)), shift_down(dn)};
}

}  // namespace

ImplicationCheck evaluate_implication(TheoremId id, const AnalyticFn& f,
                                      const ClassParams& params, const DiskGrid& grid) {
  validate_theorem_params(id, params);
  const auto sides = salagean_ratio(f, params.n);
  const auto hyp = grid_min_real_ratio(sides.ratio_num, sides.ratio_den, grid);
  const auto concl =
      grid_min_real(normalized_salagean_power(f, params.n, params.alpha), grid);

  ImplicationCheck check;
  check.hypothesis_min = hyp.value;
  check.hypothesis_witness = hyp.witness;
  check.conclusion_min = concl.value;
  check.conclusion_witness = concl.witness;
  check.hypothesis_holds = hyp.value > hypothesis_bound(id) + grid.margin;
  check.conclusion = classify(concl.value, conclusion_bound(id), grid.margin);
  check.counterexample = check.hypothesis_holds && check.conclusion == Verdict::violated;
  return check;
}

AnalyticFn constructed_trial(TheoremId id, unsigned n, std::uint64_t trial_seed,
                             std::size_t order) {
  if (order < 2) throw ParameterError("constructed_trial: order must be at least 2");
  std::mt19937_64 rng(trial_seed);
  const std::size_t atoms = 1 + rng() % 4;
  const HerglotzFn p = herglotz_sample(atoms, derive_seed(trial_seed, 1), order);

  const double q_scale = id == TheoremId::T35 ? 0.5 : 1.0;
  std::vector<cplx> u(order, cplx{});
  for (std::size_t k = 1; k < order; ++k) {
    u[k] = q_scale * p.series()[k] / static_cast<double>(k);
  }
  // D^n f = z exp(u) is starlike with z (D^n f)'/(D^n f) = q
  const TruncSeries dnf = shift_up(exp0(TruncSeries(std::move(u))));

  std::vector<cplx> c(dnf.coeffs().begin(), dnf.coeffs().end());
  for (std::size_t k = 2; k < c.size(); ++k) {
    double kn = 1.0;
    for (unsigned i = 0; i < n; ++i) kn *= static_cast<double>(k);
    c[k] /= kn;
  }
  return AnalyticFn::from_series(TruncSeries(std::move(c)), "constructed");
}

AnalyticFn falsification_trial(std::uint64_t trial_seed, std::size_t order,
                               std::size_t degree) {
  degree = std::min(degree, order);
  std::mt19937_64 rng(trial_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<cplx> tail;
  for (std::size_t k = 2; k <= degree; ++k) {
    const double radius = 0.1 / static_cast<double>(k * k) * std::sqrt(unit(rng));
    tail.push_back(std::polar(radius, kTwoPi * unit(rng)));
  }
  return AnalyticFn::from_tail(tail, order, "falsification");
}

std::size_t default_scan_order(ScanFamily family) {
  return family == ScanFamily::constructed ? 512 : kDefaultOrder;
}

ImplicationScanReport theorem_scan(TheoremId id, ScanFamily family, const ClassParams& params,
                                   std::size_t trials, std::uint64_t seed,
                                   const DiskGrid& grid, std::size_t order) {
  validate_theorem_params(id, params);
  grid.validate();
  if (order == 0) order = default_scan_order(family);

  struct Outcome {
    bool hypothesis = false;
    double slack = 0.0;
    Verdict conclusion = Verdict::member;
    std::optional<Counterexample> counterexample;
  };
  std::vector<Outcome> outcomes(trials);
  const double hyp_threshold = hypothesis_bound(id) + grid.margin;
  const double concl_bound = conclusion_bound(id);

  parallel_for(trials, [&](std::size_t i) {
    const std::uint64_t trial_seed = derive_seed(seed, i);
    const AnalyticFn f = family == ScanFamily::constructed
                             ? constructed_trial(id, params.n, trial_seed, order)
                             : falsification_trial(trial_seed, order);
    const auto sides = salagean_ratio(f, params.n);
    const auto hyp = grid_min_real_ratio(sides.ratio_num, sides.ratio_den, grid, hyp_threshold);
    if (!(hyp.value > hyp_threshold)) return;

    auto& out = outcomes[i];
    out.hypothesis = true;
    const auto concl =
        grid_min_real(normalized_salagean_power(f, params.n, params.alpha), grid);
    out.slack = concl.value - concl_bound;
    out.conclusion = classify(concl.value, concl_bound, grid.margin);
    if (out.conclusion == Verdict::violated) {
      out.counterexample = Counterexample{
          i, {f.series().coeffs().begin(), f.series().coeffs().end()}, concl.witness,
          concl.value};
    }
  });

  ImplicationScanReport report;
  report.theorem = id;
  report.family = family;
  report.params = params;
  report.seed = seed;
  report.trials = trials;
  for (auto& out : outcomes) {
    if (!out.hypothesis) continue;
    ++report.hypothesis_holds_count;
    report.min_conclusion_slack = std::min(report.min_conclusion_slack, out.slack);
    if (out.conclusion == Verdict::boundary) ++report.conclusion_boundary_count;
    if (out.counterexample) report.counterexamples.push_back(std::move(*out.counterexample));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Bernardi radius

double r0_closed_form(double alpha, double c) {
  const double s = alpha + c;
  if (!(s > 0.0) || !std::isfinite(s)) throw ParameterError("r0 requires alpha + c > 0");
  // (sqrt(1+s^2) - 1)/s, rationalized to avoid cancellation for small s
  return s / (1.0 + std::hypot(1.0, s));
}

RadiusResult bernardi_radius_empirical(const RadiusParams& params, const HerglotzFn& p,
                                       const RadiusSearch& search) {
  ClassParams{params.n, params.alpha, params.beta}.validate();
  if (!(search.r_lo > 0.0 && search.r_lo < search.r_hi && search.r_hi <= kDefaultRmax)) {
    throw ParameterError("radius search requires 0 < r_lo < r_hi <= evaluation cap");
  }
  if (!(search.tol > 0.0) || search.angles == 0) {
    throw ParameterError("radius search requires tol > 0 and angles > 0");
  }

  RadiusResult result;
  result.params = params;
  result.closed_form_radius = r0_closed_form(params.alpha, params.c);

  const std::size_t h_order = p.order() - 1;
  std::vector<cplx> t(h_order + 1);
  for (std::size_t k = 0; k <= h_order; ++k) t[k] = (1.0 - params.beta) * p.series()[k];
  t[0] = 1.0;
  const AnalyticFn F = unpower(
      salagean_inverse_power(PowerRep(params.alpha, TruncSeries(std::move(t))), params.n));
  const AnalyticFn f = bernardi_inverse(F, params.alpha, params.c);
  const TruncSeries h = normalized_salagean_power(f, params.n, params.alpha);

  auto slack_at = [&](double r) {
    auto m = circle_min_real(h, r, search.angles);
    m.value -= params.beta;
    return m;
  };

  const auto at_hi = slack_at(search.r_hi);
  if (at_hi.value >= 0.0) {
    result.empirical_radius = search.r_hi;
    result.witness_angle = angle_of(at_hi.index, search.angles);
    result.violation_found = false;
  } else if (const auto at_lo = slack_at(search.r_lo); at_lo.value < 0.0) {
    result.empirical_radius = search.r_lo;
    result.witness_angle = angle_of(at_lo.index, search.angles);
  } else {
    double lo = search.r_lo;
    double hi = search.r_hi;
    CircleMin at_violation = at_hi;
    while (hi - lo > search.tol) {
      const double mid = 0.5 * (lo + hi);
      const auto m = slack_at(mid);
      if (m.value >= 0.0) {
        lo = mid;
      } else {
        hi = mid;
        at_violation = m;
      }
    }
    result.empirical_radius = 0.5 * (lo + hi);
    result.witness_angle = angle_of(at_violation.index, search.angles);
  }
  result.gap = std::abs(result.empirical_radius - result.closed_form_radius);
  return result;
}

double bernardi_functional_min(const HerglotzFn& p, double s, double r, std::size_t angles) {
  if (!(s > 0.0)) throw ParameterError("bernardi_functional_min requires s > 0");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < angles; ++j) {
    const cplx z = std::polar(r, angle_of(j, angles));
    best = std::min(best, (s * p.value(z) + p.z_derivative(z)).real() / s);
  }
  return best;
}

}  // namespace bazlab
