#include <doctest.h>

#include <cmath>

#include "bazlab/errors.hpp"
#include "bazlab/gftops.hpp"
#include "oracles.hpp"

using namespace bazlab;
namespace orc = bazlab::oracle;

TEST_CASE("Bazilevic construction with g = z integrates p termwise") {
  // alpha = 1, g = z: f' = p, so a_{k+1} = p_k / (k+1)
  const AnalyticFn f = bazilevic_construct(mobius_extremal(32), AnalyticFn::identity(32), 1.0);
  CHECK(f.series()[1] == cplx{1.0, 0.0});
  CHECK(std::abs(f.series()[2] - 1.0) < 1e-14);
  CHECK(std::abs(f.series()[3] - 2.0 / 3.0) < 1e-14);
  for (std::size_t k = 2; k <= 32; ++k) {
    CHECK(std::abs(f.series()[k] - 2.0 / static_cast<double>(k)) < 1e-14);
  }
}

TEST_CASE("Bazilevic construction with p = 1, g = z is the identity") {
  for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
    const AnalyticFn f =
        bazilevic_construct(HerglotzFn::constant_one(32), AnalyticFn::identity(32), alpha);
    CHECK(max_coeff_diff(f.series(), AnalyticFn::identity(32).series()) < 1e-15);
    CHECK(bazilevic_residual(AnalyticFn::identity(32), AnalyticFn::identity(32), alpha,
                             HerglotzFn::constant_one(32)) == 0.0);
  }
}

TEST_CASE("Bazilevic construction agrees with the termwise integral") {
  // Well-conditioned fixtures: g with small coefficients, so G = (g/z)^alpha
  // stays moderate and the termwise route is accurate.
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const double alpha = 0.5 + 0.5 * static_cast<double>(seed % 5);
    const HerglotzFn p = herglotz_sample(1 + seed % 3, seed, 32);
    const AnalyticFn g = orc::random_analytic(32, seed + 99, 0.2, 0.6);
    const AnalyticFn f = bazilevic_construct(p, g, alpha);

    const auto G = orc::coeffs_of(power_rep(g, alpha).h());
    const auto pc = orc::coeffs_of(p.series().truncated(31));
    const auto q = orc::bazilevic_termwise(pc, G, alpha);
    const auto fa = orc::coeffs_of(power_rep(f, alpha).h());
    double worst = 0.0;
    for (std::size_t k = 0; k < q.size(); ++k) worst = std::max(worst, std::abs(q[k] - fa[k]));
    CHECK(worst < 1e-11);
  }
}

TEST_CASE("Bazilevic residual is small for constructed triples") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const HerglotzFn p = herglotz_sample(1 + seed % 4, seed, 32);
    for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
      const AnalyticFn koebe = AnalyticFn::koebe(32);
      CHECK(bazilevic_residual(bazilevic_construct(p, koebe, alpha), koebe, alpha, p) < 1e-11);
      const AnalyticFn g = starlike_from_p(herglotz_sample(2, seed + 1000, 32));
      CHECK(bazilevic_residual(bazilevic_construct(p, g, alpha), g, alpha, p) < 1e-11);
    }
  }
}

TEST_CASE("Bazilevic residual detects a perturbed coefficient") {
  const double eps = 1e-3;
  const HerglotzFn p = herglotz_sample(3, 5, 32);
  const AnalyticFn g = AnalyticFn::koebe(32);
  for (double alpha : {0.5, 1.0, 2.0}) {
    const AnalyticFn f = bazilevic_construct(p, g, alpha);
    for (std::size_t k : {2u, 5u, 20u}) {
      const AnalyticFn bumped =
          AnalyticFn::from_series(f.series().with_coeff(k, f.series()[k] + eps));
      CHECK(bazilevic_residual(bumped, g, alpha, p) >= eps / 2.0);
    }
  }
}

TEST_CASE("Bazilevic operations reject bad inputs") {
  const HerglotzFn p = HerglotzFn::constant_one(8);
  CHECK_THROWS_AS(bazilevic_construct(p, AnalyticFn::koebe(8), 0.0), ParameterError);
  CHECK_THROWS_AS(bazilevic_construct(HerglotzFn::constant_one(4), AnalyticFn::koebe(8), 1.0),
                  OrderMismatch);
  CHECK_THROWS_AS(bazilevic_residual(AnalyticFn::koebe(8), AnalyticFn::koebe(9), 1.0, p),
                  OrderMismatch);
  CHECK_THROWS_AS(bazilevic_residual(AnalyticFn::koebe(8), AnalyticFn::koebe(8), -1.0, p),
                  ParameterError);
}

TEST_CASE("Bernardi fixes the identity and rejects alpha + c <= 0") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (double c : {-0.25, 0.0, 1.0, 3.0}) {
      const AnalyticFn F = bernardi(AnalyticFn::identity(16), alpha, c);
      CHECK(max_coeff_diff(F.series(), AnalyticFn::identity(16).series()) == 0.0);
      const AnalyticFn f = bernardi_inverse(AnalyticFn::identity(16), alpha, c);
      CHECK(max_coeff_diff(f.series(), AnalyticFn::identity(16).series()) == 0.0);
    }
  }
  CHECK_THROWS_AS(bernardi(AnalyticFn::identity(4), 1.0, -1.0), ParameterError);
  CHECK_THROWS_AS(bernardi(AnalyticFn::identity(4), 1.0, -2.0), ParameterError);
  CHECK_THROWS_AS(bernardi_inverse(AnalyticFn::identity(4), 0.5, -0.5), ParameterError);
}

TEST_CASE("Bernardi with alpha = 1, c = 1 on z + z^2") {
  const std::vector<cplx> tail{1.0};
  const AnalyticFn f = AnalyticFn::from_tail(tail, 8);
  const AnalyticFn F = bernardi(f, 1.0, 1.0);
  CHECK(std::abs(F.series()[2] - 2.0 / 3.0) < 1e-15);
  for (std::size_t k = 3; k <= 8; ++k) CHECK(std::abs(F.series()[k]) < 1e-15);

  const std::vector<cplx> tail_F{2.0 / 3.0};
  const AnalyticFn back = bernardi_inverse(AnalyticFn::from_tail(tail_F, 8), 1.0, 1.0);
  CHECK(std::abs(back.series()[2] - 1.0) < 1e-15);
}

TEST_CASE("Bernardi with non-integer c uses the multiplier s/(s+k)") {
  // alpha = 0.5, c = -0.25: s = 0.25, first multiplier 0.25/1.25 = 0.2
  const PowerRep p(0.5, TruncSeries(std::vector<cplx>{1.0, 1.0, 1.0}));
  const PowerRep b = bernardi_power(p, -0.25);
  CHECK(b.h()[1].real() == doctest::Approx(0.2));
  CHECK(b.h()[2].real() == doctest::Approx(0.25 / 2.25));
}

TEST_CASE("Bernardi series transform agrees with quadrature at z = 0.5") {
  std::uint64_t seed = 1;
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (double c : {-0.25, 0.0, 1.0, 3.0}) {
      const auto fc = orc::coeffs_of(orc::random_analytic(64, seed++, 0.3, 0.7).series());
      const AnalyticFn f = AnalyticFn::from_series(TruncSeries(fc));
      const cplx series_value = eval(bernardi(f, alpha, c).series(), 0.5);
      const cplx quad_value = orc::bernardi_by_quadrature(fc, alpha, c, 0.5);
      CHECK(std::abs(series_value - quad_value) / std::abs(quad_value) < 1e-8);
    }
  }
}

TEST_CASE("Bernardi round trip is exact to rounding") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const AnalyticFn f = orc::random_analytic(32, seed);
    const double alpha = 0.25 + 0.5 * static_cast<double>(seed % 5);
    const double c = -0.2 + 0.7 * static_cast<double>(seed % 6);
    const PowerRep h = power_rep(f, alpha);
    const PowerRep there_and_back = bernardi_inverse_power(bernardi_power(h, c), c);
    CHECK(max_coeff_diff(there_and_back.h(), h.h()) < 1e-14);
    CHECK(max_coeff_diff(bernardi(bernardi_inverse(f, alpha, c), alpha, c).series(), f.series()) <
          1e-12);
  }
}

TEST_CASE("inverse Salagean power matches the normalized primitive") {
  // salagean_inverse_power(., 1) maps h to alpha x^{-alpha} int_0^x t^{alpha-1} h(t) dt
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const double alpha = 0.3 + 0.4 * static_cast<double>(seed % 4);
    const TruncSeries h = orc::random_unit_series(48, seed, 0.5, 0.7);
    const auto hc = orc::coeffs_of(h);
    const cplx series_value = eval(salagean_inverse_power(PowerRep(alpha, h), 1).h(), 0.6);
    const cplx quad_value =
        orc::normalized_primitive([&](cplx t) { return orc::power_sum(hc, t); }, alpha, 0.6);
    CHECK(std::abs(series_value - quad_value) < 1e-10);
  }
}

TEST_CASE("chain identity for f = z: ratio constant and n-independent") {
  const ChainReport r = chain_identity_check(AnalyticFn::identity(16), 1.7, 4);
  CHECK(r.one_step_residual == 0.0);
  CHECK(r.n_independent);
  for (double d : r.ratio_deviation) CHECK(d == 0.0);
}

TEST_CASE("chain identity for Koebe: residual tiny, ratio depends on n") {
  const ChainReport r = chain_identity_check(AnalyticFn::koebe(32), 1.0, 3);
  CHECK(r.one_step_residual < 1e-12 * 1e6);  // coefficients of D^4 f reach 32^4 ~ 1e6
  CHECK_FALSE(r.n_independent);
  CHECK(r.ratio_deviation[0] == 0.0);
  CHECK(r.ratio_deviation[1] > 0.1);
}

TEST_CASE("chain identity residual on random functions") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const AnalyticFn f = orc::random_analytic(32, seed);
    const double alpha = 0.5 + 0.5 * static_cast<double>(seed % 4);
    const ChainReport r = chain_identity_check(f, alpha, 3);
    CHECK(r.one_step_residual < 1e-11);
  }
}

TEST_CASE("power and plain Salagean ratios agree at n = 0, and for all n only when alpha = 1") {
  // D^2 f^a / (a D f^a) = D^2 f/Df + (a - 1) Df/f. Small coefficients keep
  // D^n f/z zero-free on the disk so the quotients are well conditioned.
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const AnalyticFn f = orc::random_analytic(32, seed, 0.1, 0.5);
    for (double alpha : {0.5, 1.0, 2.0}) {
      const ChainReport r = chain_identity_check(f, alpha, 2);
      CHECK(r.power_vs_plain_ratio[0] < 1e-11);
      if (alpha == 1.0) {
        for (double d : r.power_vs_plain_ratio) CHECK(d < 1e-11);
      } else {
        CHECK(r.power_vs_plain_ratio[1] > 1e-6);
      }
    }
  }
}
