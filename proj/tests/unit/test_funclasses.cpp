#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bazlab/errors.hpp"
#include "bazlab/funclasses.hpp"
#include "oracles.hpp"

using namespace bazlab;
namespace orc = bazlab::oracle;

namespace {

// Radii where a 128-term series of the Koebe function is still accurate.
DiskGrid inner_grid() {
  DiskGrid g;
  g.radii = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  return g;
}

}  // namespace

TEST_CASE("Herglotz atom validation") {
  CHECK_THROWS_AS(HerglotzFn::from_atoms({{0.0, 1.0}}), ParameterError);
  CHECK_THROWS_AS(HerglotzFn::from_atoms({{-0.5, 1.0}, {1.5, 1.0}}), ParameterError);
  CHECK_THROWS_AS(HerglotzFn::from_atoms({{0.5, 1.0}, {0.4, -1.0}}), ParameterError);
  CHECK_THROWS_AS(HerglotzFn::from_atoms({{1.0, cplx{0.9, 0.0}}}), ParameterError);
  CHECK_NOTHROW(HerglotzFn::from_atoms({{1.0, std::polar(1.0, 0.3)}}));
  CHECK_THROWS_AS(herglotz_sample(0, 1), ParameterError);
}

TEST_CASE("Herglotz coefficients of the single-atom kernels") {
  const HerglotzFn plus = HerglotzFn::from_atoms({{1.0, 1.0}}, 20);
  const HerglotzFn minus = HerglotzFn::from_atoms({{1.0, -1.0}}, 20);
  CHECK(plus.series()[0] == cplx{1.0, 0.0});
  for (std::size_t k = 1; k <= 20; ++k) {
    CHECK(std::abs(plus.series()[k] - 2.0) < 1e-15);
    CHECK(std::abs(minus.series()[k] - 2.0 * std::pow(-1.0, static_cast<double>(k))) < 1e-15);
  }
  // mobius_extremal is the +1 kernel
  CHECK(max_coeff_diff(mobius_extremal(20).series(), plus.series()) == 0.0);
}

TEST_CASE("Herglotz closed-form values") {
  const HerglotzFn p = mobius_extremal();
  CHECK(p.value(0.0) == cplx{1.0, 0.0});
  CHECK(std::abs(p.value(0.5) - 3.0) < 1e-15);
  CHECK(std::abs(p.value(-0.5) - 1.0 / 3.0) < 1e-15);
  // z p' = 2z/(1-z)^2 for the extremal
  CHECK(std::abs(p.z_derivative(0.5) - 4.0) < 1e-14);
  const HerglotzFn one = HerglotzFn::constant_one(16);
  CHECK(one.value(cplx{0.3, 0.4}) == cplx{1.0, 0.0});
  CHECK(one.z_derivative(cplx{0.3, 0.4}) == cplx{});
  CHECK(max_coeff_diff(one.series(), TruncSeries::constant(1.0, 16)) == 0.0);
}

TEST_CASE("sampled Herglotz functions: normalization, coefficient bound, series vs closed form") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const HerglotzFn p = herglotz_sample(1 + seed % 5, seed, 64);
    double total = 0.0;
    for (const auto& a : p.atoms()) {
      CHECK(a.weight > 0.0);
      CHECK(std::abs(std::abs(a.point) - 1.0) <= 1e-12);
      total += a.weight;
    }
    CHECK(std::abs(total - 1.0) <= 1e-12);
    CHECK(p.series()[0] == cplx{1.0, 0.0});
    for (std::size_t k = 1; k <= 64; ++k) CHECK(std::abs(p.series()[k]) <= 2.0 + 1e-12);
    const cplx z = std::polar(0.5, 0.1 * static_cast<double>(seed));
    const auto c = orc::coeffs_of(p.series());
    CHECK(std::abs(orc::power_sum(c, z) - p.value(z)) < 1e-12);
  }
  // deterministic in the seed
  CHECK(max_coeff_diff(herglotz_sample(3, 9).series(), herglotz_sample(3, 9).series()) == 0.0);
}

TEST_CASE("every Herglotz function is certified in P on the default grid") {
  const DiskGrid grid = DiskGrid::standard();
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto report = membership(herglotz_sample(1 + seed % 4, seed), grid);
    CHECK(report.verdict);
  }
  const auto ext = membership(mobius_extremal(), grid);
  CHECK(ext.verdict);
  // min Re p on |z| = 0.95 is (1 - 0.95)/(1 + 0.95), attained at z = -0.95
  CHECK(std::abs(ext.min_real_part - 0.05 / 1.95) < 2e-3);
}

TEST_CASE("starlike_from_p reproduces the Koebe function and its rotation") {
  const AnalyticFn g = starlike_from_p(mobius_extremal(32));
  CHECK(max_coeff_diff(g.series(), AnalyticFn::koebe(32).series()) < 1e-12);

  const AnalyticFn h = starlike_from_p(HerglotzFn::from_atoms({{1.0, -1.0}}, 32));
  for (std::size_t k = 1; k <= 32; ++k) {
    // z/(1+z)^2 = sum (-1)^{k-1} k z^k
    const double expected = std::pow(-1.0, static_cast<double>(k - 1)) * static_cast<double>(k);
    CHECK(std::abs(h.series()[k] - expected) < 1e-12);
  }
}

TEST_CASE("starlike_from_p round trip and starlike certification") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const HerglotzFn p = herglotz_sample(1 + seed % 4, seed, 32);
    const TruncSeries back = log_derivative(starlike_from_p(p));
    CHECK(max_coeff_diff(back, p.series().truncated(back.order())) < 1e-12);
    // certification needs the full order: at r = 0.9 the minimum can be as
    // small as (1 - r)/(1 + r) ~ 0.053
    const AnalyticFn g = starlike_from_p(herglotz_sample(1 + seed % 4, seed));
    CHECK(membership(g, ClassId::Starlike, {}, inner_grid()).verdict);
  }
}

TEST_CASE("class parameter and grid validation") {
  CHECK_THROWS_AS((ClassParams{0, 0.0, 0.0}.validate()), ParameterError);
  CHECK_THROWS_AS((ClassParams{0, 1.0, 1.0}.validate()), ParameterError);
  CHECK_THROWS_AS((ClassParams{0, 1.0, -0.1}.validate()), ParameterError);
  CHECK_NOTHROW((ClassParams{3, 0.5, 0.0}.validate()));

  DiskGrid g = DiskGrid::standard();
  CHECK(g.radii.size() == 10);
  CHECK(g.radii.back() == 0.95);
  CHECK(g.angles_per_circle == 512);
  CHECK(g.margin == 1e-9);
  CHECK_NOTHROW(g.validate());
  DiskGrid bad = g;
  bad.radii = {0.5, 0.4};
  CHECK_THROWS_AS(bad.validate(), ParameterError);
  bad.radii = {0.5, 0.99};
  CHECK_THROWS_AS(bad.validate(), ParameterError);
  bad.radii = {};
  CHECK_THROWS_AS(bad.validate(), ParameterError);
  bad = g;
  bad.angles_per_circle = 32;
  CHECK_THROWS_AS(bad.validate(), ParameterError);
  bad = g;
  bad.margin = -1.0;
  CHECK_THROWS_AS(bad.validate(), ParameterError);
}

TEST_CASE("classify is three-valued") {
  CHECK(classify(0.5, 0.0, 1e-9) == Verdict::member);
  CHECK(classify(1e-10, 0.0, 1e-9) == Verdict::boundary);
  CHECK(classify(-1e-10, 0.0, 1e-9) == Verdict::boundary);
  CHECK(classify(-1e-3, 0.0, 1e-9) == Verdict::violated);
  CHECK(to_string(Verdict::boundary) == "boundary");
}

TEST_CASE("f = z belongs to every T_n^alpha(beta) with minimum 1") {
  const AnalyticFn id = AnalyticFn::identity(16);
  for (unsigned n : {0u, 1u, 3u}) {
    for (double alpha : {0.5, 1.0, 2.0}) {
      const auto r = membership(id, ClassId::T_n_alpha_beta, {n, alpha, 0.3}, DiskGrid::standard());
      CHECK(r.verdict);
      CHECK(std::abs(r.min_real_part - 1.0) < 1e-15);
    }
  }
}

TEST_CASE("P membership on an analytic function is a parameter error") {
  CHECK_THROWS_AS(membership(AnalyticFn::identity(8), ClassId::P, {}, DiskGrid::standard()),
                  ParameterError);
}

TEST_CASE("Koebe fails B_0(1) and the witness is a true violation") {
  const auto r = membership(AnalyticFn::koebe(), ClassId::B_n_alpha, {0, 1.0, 0.0}, inner_grid());
  CHECK_FALSE(r.verdict);
  CHECK(r.verdict_kind == Verdict::violated);
  // independent closed-form evaluation of f/z = 1/(1-w)^2 at the witness
  const cplx closed = 1.0 / ((1.0 - r.witness) * (1.0 - r.witness));
  CHECK(closed.real() < 0.0);
  // the series differs from the closed form by at most the tail sum_{k>=N} (k+1) r^k
  const double r_w = std::abs(r.witness);
  double tail = 0.0;
  for (std::size_t k = AnalyticFn::koebe().order(); k < 20000; ++k) {
    tail += static_cast<double>(k + 1) * std::pow(r_w, static_cast<double>(k));
  }
  CHECK(std::abs(closed.real() - r.min_real_part) <= tail);
  // the worked point from the class description
  const cplx w{0.7, 0.6};
  CHECK((1.0 / ((1.0 - w) * (1.0 - w))).real() < 0.0);
}

TEST_CASE("Koebe is starlike but not Yamaguchi on the inner grid") {
  CHECK(membership(AnalyticFn::koebe(), ClassId::Starlike, {}, inner_grid()).verdict);
  CHECK_FALSE(membership(AnalyticFn::koebe(), ClassId::Yamaguchi, {}, inner_grid()).verdict);
}

TEST_CASE("extremal of T_0^1(0) is z + 2z^2 + 2z^3 + ...") {
  const AnalyticFn f = extremal_Tn({0, 1.0, 0.0}, 16);
  CHECK(f.series()[1] == cplx{1.0, 0.0});
  for (std::size_t k = 2; k <= 16; ++k) CHECK(std::abs(f.series()[k] - 2.0) < 1e-13);
  CHECK_THROWS_AS(extremal_Tn({0, 1.0, 0.0}, 0), ParameterError);
}

TEST_CASE("extremal at beta = 1/2 has normalized power 1/(1-z)") {
  const TruncSeries t = normalized_salagean_power(extremal_Tn({1, 0.7, 0.5}, 24), 1, 0.7);
  for (std::size_t k = 0; k <= t.order(); ++k) CHECK(std::abs(t[k] - 1.0) < 1e-12);
}

TEST_CASE("extremals are members with the minimum approaching beta") {
  for (const ClassParams params : {ClassParams{0, 1.0, 0.0}, ClassParams{1, 0.5, 0.25},
                                   ClassParams{2, 2.0, 0.6}, ClassParams{1, 1.0, 0.5}}) {
    const AnalyticFn f = extremal_Tn(params);
    const auto r = membership(f, ClassId::T_n_alpha_beta, params, DiskGrid::standard());
    CHECK(r.verdict);
    // closed form at z = -0.95: beta + (1 - beta)(1 - r)/(1 + r)
    const double closed = params.beta + (1.0 - params.beta) * 0.05 / 1.95;
    CHECK(std::abs(r.min_real_part - closed) < 2e-3);
    CHECK(std::abs(r.witness - cplx{-0.95, 0.0}) < 1e-12);
  }
}

TEST_CASE("property: the extremal's grid minimum tends to beta as the radius cap grows") {
  const ClassParams params{1, 0.8, 0.3};
  const AnalyticFn f = extremal_Tn(params);
  double previous = INFINITY;
  for (double cap : {0.5, 0.7, 0.9, 0.95}) {
    DiskGrid g;
    g.radii = {cap};
    const auto r = membership(f, ClassId::T_n_alpha_beta, params, g);
    CHECK(r.min_real_part < previous);
    CHECK(r.min_real_part > params.beta);
    previous = r.min_real_part;
  }
}

TEST_CASE("property: membership is monotone in beta") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const AnalyticFn f = orc::random_analytic(48, seed, 0.2, 0.7);
    const ClassParams base{static_cast<unsigned>(seed % 3), 0.5 + 0.25 * static_cast<double>(seed % 4), 0.0};
    bool seen_false = false;
    for (double beta = 0.0; beta < 1.0; beta += 0.1) {
      ClassParams p = base;
      p.beta = beta;
      const bool v = membership(f, ClassId::T_n_alpha_beta, p, inner_grid()).verdict;
      if (seen_false) CHECK_FALSE(v);
      if (!v) seen_false = true;
    }
  }
}

TEST_CASE("property: n = 0, alpha = 1 reduces to the Yamaguchi condition") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    // f = z p with p in P
    const HerglotzFn p = herglotz_sample(1 + seed % 3, seed, 64);
    const AnalyticFn f = AnalyticFn::from_series(shift_up(p.series()));
    const auto t = membership(f, ClassId::B_n_alpha, {0, 1.0, 0.0}, inner_grid());
    const auto y = membership(f, ClassId::Yamaguchi, {}, inner_grid());
    CHECK(t.verdict == y.verdict);
    CHECK(t.min_real_part == doctest::Approx(y.min_real_part).epsilon(1e-12));
    CHECK(y.verdict);
  }
}

TEST_CASE("grid minima stop early once below the threshold") {
  const TruncSeries s = TruncSeries::constant(1.0, 4) - TruncSeries::monomial(1, 4, 3.0);
  DiskGrid g;
  g.radii = {0.5, 0.9};
  const auto full = grid_min_real(s, g);
  CHECK(full.value == doctest::Approx(1.0 - 2.7));
  const auto early = grid_min_real(s, g, 0.0);
  CHECK(early.value < 0.0);
  CHECK(std::abs(early.witness) == doctest::Approx(0.5));
  // a vanishing denominator yields -infinity rather than NaN
  const auto ratio = grid_min_real_ratio(TruncSeries::constant(1.0, 4),
                                         TruncSeries::monomial(1, 4) * cplx{0.0} +
                                             TruncSeries::constant(0.0, 4),
                                         g);
  CHECK(ratio.value == -INFINITY);
}
