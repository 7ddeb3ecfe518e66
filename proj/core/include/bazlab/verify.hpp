#pragma once

// Numerical checks of the admissible-function conditions, the sharp bound
// |z p'(z)| <= 2r/(1-r^2) Re p(z), the order-1/2 implications and the
// Bernardi radius r0(alpha, c).

#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "bazlab/funclasses.hpp"
#include "bazlab/powseries.hpp"

namespace bazlab {

// ---------------------------------------------------------------------------
// Admissible functions psi(u, v)

enum class PsiId { psi1, psi2 };
std::string_view to_string(PsiId id);

/// psi1(u, v) = v / (xi u), xi > 0, u != 0.
/// psi2(u, v) = 1/2 + v / (xi (1 + u)), 0 < xi <= 1, u != -1.
struct PsiFunction {
  PsiId id = PsiId::psi1;
  double xi = 1.0;

  void validate() const;
  bool excluded(cplx u) const;
  /// Throws ParameterError if u is excluded.
  cplx operator()(cplx u, cplx v) const;
};

struct PsiReport {
  PsiId id = PsiId::psi1;
  double xi_lo = 0.0;
  double xi_hi = 0.0;
  double margin = 0.0;

  /// min over sampled xi of Re psi(1, 0); condition (b) needs it > 0.
  double condition_b_value = std::numeric_limits<double>::infinity();
  Verdict condition_b = Verdict::violated;

  std::size_t samples_checked = 0;
  std::size_t skipped = 0;
  /// max over samples of Re psi(i u2, v1) with 2 v1 <= -(1 + u2^2).
  double worst_c_value = -std::numeric_limits<double>::infinity();
  double worst_u2 = 0.0;
  double worst_v1 = 0.0;
  double worst_xi = 0.0;
  bool condition_c = false;

  bool passed() const { return condition_b == Verdict::member && condition_c; }
};

/// Samples (u2, v1) on and below the parabola 2 v1 = -(1 + u2^2) and checks
/// Re psi(i u2, v1) <= margin, plus Re psi(1, 0) > margin.
PsiReport psi_admissibility(const PsiFunction& psi, std::size_t samples, std::uint64_t seed,
                            double margin = 1e-12);
/// Same, drawing xi per sample from [xi_lo, xi_hi] (log-uniform for psi1).
PsiReport psi_admissibility_sweep(PsiId id, double xi_lo, double xi_hi, std::size_t samples,
                                  std::uint64_t seed, double margin = 1e-12);

// ---------------------------------------------------------------------------
// |z p'(z)| <= 2r/(1-r^2) Re p(z) on |z| = r

struct Lemma25Report {
  std::vector<double> radii;
  /// Per radius: max over angles of |z p'| - 2r/(1-r^2) Re p.
  std::vector<double> max_excess;
  /// Per radius: 2r/(1-r^2) Re p(r) - |r p'(r)| (angle 0).
  std::vector<double> zero_angle_gap;
  double worst_excess = -std::numeric_limits<double>::infinity();
  double worst_radius = 0.0;
  double worst_angle = 0.0;
  bool bound_holds = true;
  /// p is (1+z)/(1-z); equality is then required at angle 0.
  bool extremal = false;
  bool equality_holds = true;

  bool passed() const { return bound_holds && equality_holds; }
};

/// Closed-form evaluation of p and z p' over `angles` equally spaced angles
/// per radius. Radii must lie in (0, 1).
Lemma25Report lemma25_check(const HerglotzFn& p, std::span<const double> radii,
                            std::size_t angles = 4096, double margin = 1e-10,
                            double equality_tolerance = 1e-10);

// ---------------------------------------------------------------------------
// Implication scans

enum class TheoremId {
  T31,  // Re(D^{n+1}f/D^nf - 1) > 0  =>  Re D^n f^a/(a^n z^a) > 0
  T35,  // Re D^{n+1}f/D^nf > 1/2     =>  Re D^n f^a/(a^n z^a) > 1/2, 0 < a <= 1
};
enum class ScanFamily { constructed, falsification };
std::string_view to_string(TheoremId id);
std::string_view to_string(ScanFamily family);

/// Hypothesis bound on Re D^{n+1}f/D^nf (1 for T31, 1/2 for T35).
double hypothesis_bound(TheoremId id);
/// Conclusion bound on Re D^n f^a/(a^n z^a) (0 for T31, 1/2 for T35).
double conclusion_bound(TheoremId id);

struct ImplicationCheck {
  double hypothesis_min = 0.0;
  cplx hypothesis_witness{};
  double conclusion_min = 0.0;
  cplx conclusion_witness{};
  bool hypothesis_holds = false;
  Verdict conclusion = Verdict::violated;
  /// hypothesis holds strictly and the conclusion is violated beyond the margin
  bool counterexample = false;
};

/// Full-grid evaluation of both sides of the implication for one function.
ImplicationCheck evaluate_implication(TheoremId id, const AnalyticFn& f,
                                      const ClassParams& params, const DiskGrid& grid);

struct Counterexample {
  std::size_t trial = 0;
  std::vector<cplx> coefficients;
  cplx witness{};
  double conclusion_value = 0.0;
};

struct ImplicationScanReport {
  TheoremId theorem = TheoremId::T31;
  ScanFamily family = ScanFamily::constructed;
  ClassParams params{};
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t hypothesis_holds_count = 0;
  std::size_t conclusion_boundary_count = 0;
  /// min over hypothesis-holding trials of (conclusion min - conclusion bound)
  double min_conclusion_slack = std::numeric_limits<double>::infinity();
  std::vector<Counterexample> counterexamples;

  bool consistent() const { return counterexamples.empty(); }
};

/// Trial function of the constructed family: draws p in P (1 to 4 atoms) and
/// builds f with z (D^n f)'/(D^n f) = q, where q = (1+p)/2 for T35 and q = p
/// for T31.
AnalyticFn constructed_trial(TheoremId id, unsigned n, std::uint64_t trial_seed,
                             std::size_t order = kDefaultOrder);
/// Trial function of the falsification family: z + sum_{k=2}^{degree} e_k z^k
/// with e_k uniform in the disk of radius 0.1/k^2.
AnalyticFn falsification_trial(std::uint64_t trial_seed, std::size_t order = kDefaultOrder,
                               std::size_t degree = 12);

/// Series order used when theorem_scan is called with order 0. The constructed
/// family needs 512: D^n f/z there has coefficients decaying only like
/// k^{w-1}, and at |z| = 0.95 a 128-term truncation misses the hypothesis
/// margin (1-r)/(2(1+r)) ~ 0.0128.
std::size_t default_scan_order(ScanFamily family);

/// Runs `trials` seeded trials of one family. For T35, params.alpha must lie
/// in (0, 1]. Trial i uses derive_seed(seed, i), so the report does not depend
/// on the worker count.
ImplicationScanReport theorem_scan(TheoremId id, ScanFamily family, const ClassParams& params,
                                   std::size_t trials, std::uint64_t seed,
                                   const DiskGrid& grid, std::size_t order = 0);

// ---------------------------------------------------------------------------
// Bernardi radius

/// r0 = (sqrt(1 + s^2) - 1)/s with s = alpha + c; depends on s only.
double r0_closed_form(double alpha, double c);

struct RadiusParams {
  unsigned n = 0;
  double alpha = 1.0;
  double beta = 0.0;
  double c = 0.0;
};

struct RadiusSearch {
  double r_lo = 1e-3;
  double r_hi = 0.9;
  double tol = 1e-5;
  std::size_t angles = 1024;
};

struct RadiusResult {
  double empirical_radius = 0.0;
  double closed_form_radius = 0.0;
  double gap = 0.0;
  /// Angle in [0, 2 pi) of the minimum just outside the empirical radius.
  double witness_angle = 0.0;
  RadiusParams params{};
  /// false when the condition held all the way to r_hi
  bool violation_found = true;
};

/// Builds F with D^n F^a/(a^n z^a) = beta + (1-beta) p, recovers f from
/// (a+c) f^a = D F^a + c F^a and bisects for the largest r with
/// min_{|z|=r} Re D^n f^a/(a^n z^a) >= beta.
RadiusResult bernardi_radius_empirical(const RadiusParams& params, const HerglotzFn& p,
                                       const RadiusSearch& search = {});

/// min over |z| = r of Re[s p(z) + z p'(z)] / s, from the closed form of p.
double bernardi_functional_min(const HerglotzFn& p, double s, double r, std::size_t angles);

}  // namespace bazlab
