#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "bazlab/errors.hpp"
#include "bazlab/funclasses.hpp"
#include "bazlab/gftops.hpp"
#include "bazlab/parallel.hpp"
#include "bazlab/powseries.hpp"
#include "bazlab/verify.hpp"

namespace bazlab::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kSchema = 1;
constexpr double kPi = std::numbers::pi;
// Maps reach |z| = 0.95, where Koebe-type tails need far more than the default order.
constexpr std::size_t kMapOrder = 1024;

/// Usage errors detected after parsing (bad parameter combinations).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json complex_json(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

// ---------------------------------------------------------------------------
// options

struct GlobalOptions {
  std::size_t order = kDefaultOrder;
  std::uint64_t seed = 2024;
  std::vector<double> grid_radii = DiskGrid::standard().radii;
  std::size_t angles = DiskGrid::standard().angles_per_circle;
  double margin = DiskGrid::standard().margin;
  std::string format;

  CLI::Option* order_opt = nullptr;
  CLI::Option* radii_opt = nullptr;
  CLI::Option* angles_opt = nullptr;
  CLI::Option* margin_opt = nullptr;

  DiskGrid grid() const {
    DiskGrid g;
    g.radii = grid_radii;
    g.angles_per_circle = angles;
    g.margin = margin;
    g.validate();
    return g;
  }
  std::size_t order_or(std::size_t fallback) const { return order_opt->count() ? order : fallback; }
  std::string format_or(const char* fallback) const { return format.empty() ? fallback : format; }
};

ordered_json grid_json(const DiskGrid& g) {
  return {{"radii", g.radii},
          {"angles_per_circle", g.angles_per_circle},
          {"margin", g.margin},
          {"r_cap", g.r_cap}};
}

// ---------------------------------------------------------------------------
// verification reports

struct Check {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double bound = 0.0;
  ordered_json detail = ordered_json::object();
};

struct VerifyReport {
  std::string target;
  ordered_json config = ordered_json::object();
  std::vector<Check> checks;
  ordered_json info = ordered_json::object();

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
};

void write_verify(const VerifyReport& report, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    out << "check,status,value,bound\n";
    for (const auto& c : report.checks) {
      out << c.name << ',' << (c.passed ? "pass" : "fail") << ',' << num(c.value) << ','
          << num(c.bound) << '\n';
    }
    return;
  }
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = "verify";
  j["target"] = report.target;
  j["status"] = report.passed() ? "pass" : "fail";
  j["config"] = report.config;
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = c.passed ? "pass" : "fail";
    cj["value"] = c.value;
    cj["bound"] = c.bound;
    cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  if (!report.info.empty()) j["info"] = report.info;
  out << j.dump(2) << '\n';
}

// Member of class A with |a_k| <= 0.3 * 0.8^k, seeded.
AnalyticFn random_member(std::size_t order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<cplx> tail;
  double w = 0.3 * 0.8;
  for (std::size_t k = 2; k <= order; ++k, w *= 0.8) {
    tail.push_back(std::polar(w * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng)));
  }
  return AnalyticFn::from_tail(tail, order, "random");
}

struct VerifyOptions {
  std::string target;
  std::size_t trials = 0;
  std::size_t falsification_trials = 0;
  double tolerance = 0.0;
  std::optional<unsigned> n;
  std::optional<double> alpha;
  CLI::Option* trials_opt = nullptr;
  CLI::Option* tolerance_opt = nullptr;

  std::size_t trials_or(std::size_t fallback) const { return trials_opt->count() ? trials : fallback; }
  double tolerance_or(double fallback) const {
    return tolerance_opt->count() ? tolerance : fallback;
  }
};

VerifyReport verify_lemma25(const GlobalOptions& g, const VerifyOptions& v) {
  const std::size_t trials = v.trials_or(100);
  const std::size_t angles = g.angles_opt->count() ? g.angles : 4096;
  const double margin = v.tolerance_or(1e-10);
  const std::vector<double> radii =
      g.radii_opt->count() ? g.grid_radii
                           : std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

  VerifyReport report;
  report.config = {{"trials", trials}, {"seed", g.seed},     {"order", g.order_or(kDefaultOrder)},
                   {"radii", radii},   {"angles", angles},   {"margin", margin},
                   {"equality_tolerance", 1e-10}, {"atoms", "1 + trial % 5"}};

  std::vector<Lemma25Report> results(trials);
  parallel_for(trials, [&](std::size_t i) {
    const HerglotzFn p =
        herglotz_sample(1 + i % 5, derive_seed(g.seed, i), g.order_or(kDefaultOrder));
    results[i] = lemma25_check(p, radii, angles, margin);
  });
  Check bound{"bound", true, -INFINITY, margin};
  for (std::size_t i = 0; i < trials; ++i) {
    if (results[i].worst_excess > bound.value) {
      bound.value = results[i].worst_excess;
      bound.detail = {{"trial", i},
                      {"radius", results[i].worst_radius},
                      {"angle", results[i].worst_angle}};
    }
    bound.passed = bound.passed && results[i].bound_holds;
  }
  report.checks.push_back(std::move(bound));

  const auto ext = lemma25_check(mobius_extremal(g.order_or(kDefaultOrder)), radii, angles, margin);
  Check eq{"extremal_equality", ext.passed(), 0.0, 1e-10};
  for (double gap : ext.zero_angle_gap) eq.value = std::max(eq.value, std::abs(gap));
  eq.detail = {{"zero_angle_gap", ext.zero_angle_gap}};
  report.checks.push_back(std::move(eq));
  return report;
}

VerifyReport verify_psi(const GlobalOptions& g, const VerifyOptions& v) {
  const std::size_t samples = v.trials_or(10000);
  const double margin = v.tolerance_or(1e-12);
  struct Range {
    PsiId id;
    double lo, hi;
  };
  const Range ranges[] = {{PsiId::psi1, 1e-3, 1e3}, {PsiId::psi2, 1e-3, 1.0}};

  VerifyReport report;
  report.config = {{"samples", samples}, {"seed", g.seed}, {"margin", margin},
                   {"psi1_xi", {1e-3, 1e3}}, {"psi2_xi", {1e-3, 1.0}},
                   {"u2_range", {-10.0, 10.0}}};
  for (const auto& r : ranges) {
    const PsiReport pr =
        psi_admissibility_sweep(r.id, r.lo, r.hi, samples, derive_seed(g.seed, static_cast<std::uint64_t>(r.id)), margin);
    const std::string name(to_string(r.id));
    Check b{name + ".condition_b", pr.condition_b == Verdict::member, pr.condition_b_value, 0.0};
    b.detail = {{"verdict", to_string(pr.condition_b)}, {"point", {1.0, 0.0}}};
    Check c{name + ".condition_c", pr.condition_c, pr.worst_c_value, margin};
    c.detail = {{"samples_checked", pr.samples_checked},
                {"skipped", pr.skipped},
                {"worst_u2", pr.worst_u2},
                {"worst_v1", pr.worst_v1},
                {"worst_xi", pr.worst_xi}};
    report.checks.push_back(std::move(b));
    report.checks.push_back(std::move(c));
  }
  return report;
}

Check scan_check(const ImplicationScanReport& r) {
  char name[96];
  std::snprintf(name, sizeof name, "%s.n%u.alpha%g", std::string(to_string(r.family)).c_str(),
                r.params.n, r.params.alpha);
  Check c{name, r.consistent(), r.min_conclusion_slack, 0.0};
  c.detail = {{"trials", r.trials},
              {"hypothesis_holds_count", r.hypothesis_holds_count},
              {"conclusion_boundary_count", r.conclusion_boundary_count},
              {"counterexample_count", r.counterexamples.size()}};
  if (!r.counterexamples.empty()) {
    const auto& cx = r.counterexamples.front();
    const std::size_t shown = std::min<std::size_t>(cx.coefficients.size(), 16);
    ordered_json coeffs = ordered_json::array();
    for (std::size_t k = 0; k < shown; ++k) coeffs.push_back(complex_json(cx.coefficients[k]));
    c.detail["first_counterexample"] = {{"trial", cx.trial},
                                        {"trial_seed", derive_seed(r.seed, cx.trial)},
                                        {"witness", complex_json(cx.witness)},
                                        {"conclusion_value", cx.conclusion_value},
                                        {"leading_coefficients", coeffs}};
  }
  return c;
}

VerifyReport verify_theorem(TheoremId id, const GlobalOptions& g, const VerifyOptions& v) {
  std::vector<ClassParams> sets;
  if (v.n || v.alpha) {
    sets.push_back({v.n.value_or(0), v.alpha.value_or(1.0), 0.0});
  } else if (id == TheoremId::T35) {
    sets = {{0, 1.0, 0.0}, {0, 0.5, 0.0}, {1, 1.0, 0.0}, {2, 0.7, 0.0}};
  } else {
    sets = {{0, 1.0, 0.0}, {1, 1.0, 0.0}, {2, 0.5, 0.0}};
  }
  const std::size_t constructed = v.trials_or(1000);
  const std::size_t falsification = v.falsification_trials;
  const DiskGrid grid = g.grid();
  const std::size_t constructed_order = g.order_or(default_scan_order(ScanFamily::constructed));
  const std::size_t falsification_order =
      g.order_or(default_scan_order(ScanFamily::falsification));

  VerifyReport report;
  ordered_json params = ordered_json::array();
  for (const auto& p : sets) params.push_back({{"n", p.n}, {"alpha", p.alpha}});
  report.config = {{"theorem", to_string(id)},
                   {"params", params},
                   {"seed", g.seed},
                   {"constructed_trials", constructed},
                   {"falsification_trials", falsification},
                   {"constructed_order", constructed_order},
                   {"falsification_order", falsification_order},
                   {"grid", grid_json(grid)},
                   {"hypothesis_bound", hypothesis_bound(id)},
                   {"conclusion_bound", conclusion_bound(id)}};

  for (const auto& p : sets) {
    report.checks.push_back(scan_check(theorem_scan(id, ScanFamily::constructed, p, constructed,
                                                    g.seed, grid, constructed_order)));
    report.checks.push_back(scan_check(theorem_scan(id, ScanFamily::falsification, p,
                                                    falsification, g.seed, grid,
                                                    falsification_order)));
  }
  return report;
}

VerifyReport verify_t39(const GlobalOptions& g, const VerifyOptions& v) {
  const double gap_tol = v.tolerance_or(1e-4);
  const double angle_tol = 0.02;
  const std::size_t generic = v.trials_or(5);
  const RadiusSearch search;
  const std::size_t order = g.order_or(kDefaultOrder);
  const std::vector<RadiusParams> cases = {{0, 1.0, 0.0, 0.0},
                                           {0, 1.0, 0.0, 1.0},
                                           {1, 2.0, 0.0, 0.0},
                                           {1, 0.5, 0.25, 0.75},
                                           {0, 1.0, 0.0, -0.5}};

  VerifyReport report;
  report.config = {{"order", order},
                   {"seed", g.seed},
                   {"gap_tolerance", gap_tol},
                   {"angle_tolerance", angle_tol},
                   {"generic_trials", generic},
                   {"search",
                    {{"r_lo", search.r_lo},
                     {"r_hi", search.r_hi},
                     {"tol", search.tol},
                     {"angles", search.angles}}}};

  const HerglotzFn extremal = mobius_extremal(order);
  for (const auto& c : cases) {
    const RadiusResult r = bernardi_radius_empirical(c, extremal, search);
    char name[96];
    std::snprintf(name, sizeof name, "extremal.n%u.alpha%g.beta%g.c%g", c.n, c.alpha, c.beta, c.c);
    Check ch{name,
             r.violation_found && r.gap < gap_tol &&
                 std::abs(r.witness_angle - kPi) < angle_tol,
             r.gap, gap_tol};
    ch.detail = {{"closed_form_radius", r.closed_form_radius},
                 {"empirical_radius", r.empirical_radius},
                 {"witness_angle", r.witness_angle},
                 {"violation_found", r.violation_found}};
    report.checks.push_back(std::move(ch));
  }

  // any p: the guaranteed radius never exceeds the observed one
  Check gen{"generic.lower_bound", true, INFINITY, -search.tol};
  std::vector<RadiusResult> results(generic);
  parallel_for(generic, [&](std::size_t i) {
    const HerglotzFn p = herglotz_sample(2 + i % 3, derive_seed(g.seed, i), order);
    results[i] = bernardi_radius_empirical(cases[i % cases.size()], p, search);
  });
  for (std::size_t i = 0; i < generic; ++i) {
    const double excess = results[i].empirical_radius - results[i].closed_form_radius;
    if (excess < gen.value) {
      gen.value = excess;
      gen.detail = {{"trial", i}, {"empirical_radius", results[i].empirical_radius},
                    {"closed_form_radius", results[i].closed_form_radius}};
    }
    gen.passed = gen.passed && excess >= -search.tol;
  }
  if (generic > 0) report.checks.push_back(std::move(gen));
  return report;
}

VerifyReport verify_chain(const GlobalOptions& g, const VerifyOptions& v) {
  const std::size_t trials = v.trials_or(100);
  const std::size_t order = g.order_or(32);
  const double tol = v.tolerance_or(1e-11);
  const unsigned n_max = 3;
  const double alphas[] = {0.5, 1.0, 1.5, 2.0};

  VerifyReport report;
  report.config = {{"trials", trials},   {"seed", g.seed},   {"order", order},
                   {"tolerance", tol},   {"n_max", n_max},   {"alphas", alphas},
                   {"coefficient_envelope", "|a_k| <= 0.3 * 0.8^k"}};

  std::vector<ChainReport> results(trials);
  parallel_for(trials, [&](std::size_t i) {
    results[i] = chain_identity_check(random_member(order, derive_seed(g.seed, i)),
                                      alphas[i % 4], n_max, tol);
  });
  Check one{"one_step_identity", true, 0.0, tol};
  std::size_t independent = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    if (results[i].one_step_residual > one.value) {
      one.value = results[i].one_step_residual;
      one.detail = {{"trial", i}, {"alpha", alphas[i % 4]}};
    }
    if (results[i].n_independent) ++independent;
  }
  one.passed = one.value < tol;
  report.checks.push_back(std::move(one));
  // reported, not asserted: the ratio is generally not n-independent
  report.info = {{"n_independent_count", independent}};
  return report;
}

VerifyReport verify_bazilevic(const GlobalOptions& g, const VerifyOptions& v) {
  const std::size_t trials = v.trials_or(50);
  const std::size_t order = g.order_or(32);
  const double tol = v.tolerance_or(1e-10);
  const double alphas[] = {0.5, 1.0, 2.0, 3.0};

  VerifyReport report;
  report.config = {{"trials", trials}, {"seed", g.seed}, {"order", order}, {"tolerance", tol},
                   {"alphas", alphas}, {"g", "koebe on even trials, starlike_from_p on odd"}};

  std::vector<double> residuals(trials);
  parallel_for(trials, [&](std::size_t i) {
    const std::uint64_t s = derive_seed(g.seed, i);
    const HerglotzFn p = herglotz_sample(1 + i % 4, s, order);
    const AnalyticFn gfn = i % 2 == 0 ? AnalyticFn::koebe(order)
                                      : starlike_from_p(herglotz_sample(2, derive_seed(s, 1), order));
    const double alpha = alphas[(i / 2) % 4];
    residuals[i] = bazilevic_residual(bazilevic_construct(p, gfn, alpha), gfn, alpha, p);
  });
  Check c{"residual", true, 0.0, tol};
  for (std::size_t i = 0; i < trials; ++i) {
    if (residuals[i] > c.value) {
      c.value = residuals[i];
      c.detail = {{"trial", i}, {"alpha", alphas[(i / 2) % 4]}};
    }
  }
  c.passed = c.value < tol;
  report.checks.push_back(std::move(c));
  return report;
}

// ---------------------------------------------------------------------------
// radius-table and map

struct RadiusTableOptions {
  std::vector<double> alphas;
  std::vector<double> cs{0.0};
  double beta = 0.0;
  unsigned n = 0;
};

int run_radius_table(const GlobalOptions& g, RadiusTableOptions t, std::ostream& out) {
  if (t.alphas.empty()) throw UsageError("radius-table: --alpha needs at least one value");
  if (t.cs.empty()) throw UsageError("radius-table: --c needs at least one value");
  for (double a : t.alphas) {
    for (double c : t.cs) {
      if (!(a > 0.0)) throw UsageError("radius-table: alpha must be > 0");
      if (!(a + c > 0.0)) throw UsageError("radius-table: alpha + c must be > 0");
    }
  }
  if (!(t.beta >= 0.0 && t.beta < 1.0)) throw UsageError("radius-table: beta must lie in [0, 1)");

  std::sort(t.alphas.begin(), t.alphas.end());
  std::sort(t.cs.begin(), t.cs.end());
  const std::size_t order = g.order_or(kDefaultOrder);
  const RadiusSearch search;
  const HerglotzFn extremal = mobius_extremal(order);

  std::vector<RadiusParams> rows;
  for (double a : t.alphas)
    for (double c : t.cs) rows.push_back({t.n, a, t.beta, c});
  std::vector<RadiusResult> results(rows.size());
  parallel_for(rows.size(),
               [&](std::size_t i) { results[i] = bernardi_radius_empirical(rows[i], extremal, search); });

  const std::string format = g.format_or("csv");
  if (format == "csv") {
    out << "alpha,c,beta,n,r0_closed_form,empirical_radius,gap,witness_angle,violation_found\n";
    for (const auto& r : results) {
      out << num(r.params.alpha) << ',' << num(r.params.c) << ',' << num(r.params.beta) << ','
          << r.params.n << ',' << num(r.closed_form_radius) << ',' << num(r.empirical_radius)
          << ',' << num(r.gap) << ',' << num(r.witness_angle) << ','
          << (r.violation_found ? "true" : "false") << '\n';
    }
    return kExitPass;
  }
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = "radius-table";
  j["config"] = {{"alpha", t.alphas}, {"c", t.cs},     {"beta", t.beta},
                 {"n", t.n},          {"order", order}, {"p", "mobius_extremal"},
                 {"search",
                  {{"r_lo", search.r_lo},
                   {"r_hi", search.r_hi},
                   {"tol", search.tol},
                   {"angles", search.angles}}}};
  ordered_json rows_json = ordered_json::array();
  for (const auto& r : results) {
    rows_json.push_back({{"alpha", r.params.alpha},
                         {"c", r.params.c},
                         {"beta", r.params.beta},
                         {"n", r.params.n},
                         {"r0_closed_form", r.closed_form_radius},
                         {"empirical_radius", r.empirical_radius},
                         {"gap", r.gap},
                         {"witness_angle", r.witness_angle},
                         {"violation_found", r.violation_found}});
  }
  j["rows"] = std::move(rows_json);
  out << j.dump(2) << '\n';
  return kExitPass;
}

struct MapOptions {
  std::string f_spec = "identity";
  unsigned n = 0;
  double alpha = 1.0;
  double beta = 0.0;
  std::size_t resolution = 64;
};

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find(',', pos);
    const std::string item = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("map: malformed number '" + item + "' in function spec");
    }
    if (used != item.size()) throw UsageError("map: malformed number '" + item + "' in function spec");
    values.push_back(v);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return values;
}

AnalyticFn resolve_function(const std::string& spec, std::size_t order, const MapOptions& m) {
  const std::size_t colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "identity" && args.empty()) return AnalyticFn::identity(order);
  if (kind == "koebe" && args.empty()) return AnalyticFn::koebe(order);
  if (kind == "extremal") {
    ClassParams p{m.n, m.alpha, m.beta};
    if (!args.empty()) {
      const auto v = parse_number_list(args);
      if (v.size() != 3 || v[0] < 0.0 || v[0] != std::floor(v[0])) {
        throw UsageError("map: expected extremal:<n>,<alpha>,<beta>");
      }
      p = {static_cast<unsigned>(v[0]), v[1], v[2]};
    }
    p.validate();
    return extremal_Tn(p, order);
  }
  if (kind == "bazilevic" && !args.empty()) {
    std::size_t used = 0;
    unsigned long long seed = 0;
    try {
      seed = std::stoull(args, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != args.size()) throw UsageError("map: expected bazilevic:<seed>");
    const HerglotzFn p = herglotz_sample(1 + seed % 4, seed, order);
    return bazilevic_construct(p, AnalyticFn::koebe(order), m.alpha);
  }
  throw UsageError("map: unknown function spec '" + spec +
                   "' (koebe, identity, extremal[:n,alpha,beta], bazilevic:<seed>)");
}

int run_map(const GlobalOptions& g, const MapOptions& m, std::ostream& out) {
  if (m.resolution < 8) throw UsageError("map: resolution must be at least 8");
  ClassParams{m.n, m.alpha, m.beta}.validate();
  const std::size_t order = g.order_or(kMapOrder);
  const double r_cap = DiskGrid{}.r_cap;
  const AnalyticFn f = resolve_function(m.f_spec, order, m);
  const TruncSeries h = normalized_salagean_power(f, m.n, m.alpha);

  struct Row {
    double x, y, value;
  };
  std::vector<Row> rows;
  const double step = 2.0 * r_cap / static_cast<double>(m.resolution - 1);
  for (std::size_t iy = 0; iy < m.resolution; ++iy) {
    for (std::size_t ix = 0; ix < m.resolution; ++ix) {
      const cplx z{-r_cap + step * static_cast<double>(ix), -r_cap + step * static_cast<double>(iy)};
      if (std::abs(z) > r_cap) continue;
      rows.push_back({z.real(), z.imag(), eval(h, z).real() - m.beta});
    }
  }

  const std::string format = g.format_or("csv");
  if (format == "csv") {
    out << "re_z,im_z,value\n";
    for (const auto& r : rows) out << num(r.x) << ',' << num(r.y) << ',' << num(r.value) << '\n';
    return kExitPass;
  }
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = "map";
  j["config"] = {{"f", m.f_spec},        {"n", m.n},         {"alpha", m.alpha},
                 {"beta", m.beta},       {"resolution", m.resolution},
                 {"order", order},       {"r_cap", r_cap},
                 {"quantity", "Re D^n f^alpha / (alpha^n z^alpha) - beta"}};
  ordered_json pts = ordered_json::array();
  for (const auto& r : rows) pts.push_back({r.x, r.y, r.value});
  j["columns"] = {"re_z", "im_z", "value"};
  j["rows"] = std::move(pts);
  out << j.dump(2) << '\n';
  return kExitPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"bazlab: truncated power series for Bazilevic-type function classes"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  g.order_opt = app.add_option("--order", g.order, "Series truncation order N")
                    ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 16));
  app.add_option("--seed", g.seed, "Base seed for all sampled trials")->capture_default_str();
  g.radii_opt = app.add_option("--grid-radii", g.grid_radii, "Comma-separated grid radii")
                    ->delimiter(',');
  g.angles_opt = app.add_option("--angles", g.angles, "Angles per grid circle")
                     ->check(CLI::PositiveNumber);
  g.margin_opt = app.add_option("--margin", g.margin, "Strict-inequality margin")
                     ->check(CLI::NonNegativeNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  RadiusTableOptions table;
  auto* radius_cmd = app.add_subcommand("radius-table", "Bernardi radius r0 against bisection");
  radius_cmd->add_option("--alpha", table.alphas, "Comma-separated alpha values")
      ->delimiter(',')
      ->expected(0, -1);
  radius_cmd->add_option("--c", table.cs, "Comma-separated c values")->delimiter(',');
  radius_cmd->add_option("--beta", table.beta, "Order beta in [0, 1)");
  radius_cmd->add_option("--n", table.n, "Salagean order n");

  VerifyOptions v;
  auto* verify_cmd = app.add_subcommand("verify", "Run a numerical verification");
  verify_cmd->add_option("target", v.target, "lemma25 | psi | t31 | t35 | t39 | chain | bazilevic")
      ->required()
      ->check(CLI::IsMember({"lemma25", "psi", "t31", "t35", "t39", "chain", "bazilevic"}));
  v.trials_opt = verify_cmd->add_option("--trials", v.trials, "Trials or samples");
  v.falsification_trials = 10000;
  verify_cmd->add_option("--falsification-trials", v.falsification_trials,
                         "Falsification-family trials (t31, t35)");
  v.tolerance_opt = verify_cmd->add_option("--tolerance", v.tolerance, "Main tolerance override")
                        ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n", v.n, "Salagean order (t31, t35)");
  verify_cmd->add_option("--alpha", v.alpha, "alpha (t31, t35)")->check(CLI::PositiveNumber);

  MapOptions map;
  auto* map_cmd = app.add_subcommand("map", "Rasterize Re D^n f^a/(a^n z^a) - beta on |z| <= 0.95");
  map_cmd->add_option("--f", map.f_spec, "koebe | identity | extremal[:n,alpha,beta] | bazilevic:<seed>")
      ->capture_default_str();
  map_cmd->add_option("--n", map.n, "Salagean order n")->capture_default_str();
  map_cmd->add_option("--alpha", map.alpha, "alpha > 0")->capture_default_str();
  map_cmd->add_option("--beta", map.beta, "beta in [0, 1)")->capture_default_str();
  map_cmd->add_option("--resolution", map.resolution, "Points per side")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (radius_cmd->parsed()) return run_radius_table(g, table, out);
    if (map_cmd->parsed()) return run_map(g, map, out);

    g.grid();  // validates the global grid options up front
    VerifyReport report;
    if (v.target == "lemma25") report = verify_lemma25(g, v);
    else if (v.target == "psi") report = verify_psi(g, v);
    else if (v.target == "t31") report = verify_theorem(TheoremId::T31, g, v);
    else if (v.target == "t35") report = verify_theorem(TheoremId::T35, g, v);
    else if (v.target == "t39") report = verify_t39(g, v);
    else if (v.target == "chain") report = verify_chain(g, v);
    else report = verify_bazilevic(g, v);
    report.target = v.target;
    write_verify(report, g.format_or("json"), out);
    return report.passed() ? kExitPass : kExitFail;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace bazlab::cli
