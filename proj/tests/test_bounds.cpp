#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "zb/bounds.hpp"
#include "zb/families.hpp"
#include "zb/zero_oracle.hpp"

using namespace zb;

namespace {

double margin_tol(double zero) { return 1e-9 * std::max(1.0, std::fabs(zero)); }

}  // namespace

TEST_CASE("Bessel lower bound closed form") {
  CHECK(bessel_lower_bound(-0.5 + 1e-12) == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(bessel_lower_bound(0.0) ==
        doctest::Approx(2.0809690924707314).epsilon(1e-15));
  CHECK(bessel_lower_bound(1.0) ==
        doctest::Approx(3.5117411896099830).epsilon(1e-15));
  CHECK(bessel_lower_bound(100.0) ==
        doctest::Approx(107.55401368701365).epsilon(1e-15));
  CHECK_THROWS_AS(bessel_lower_bound(-0.5), std::domain_error);

  SUBCASE("exceeds nu + 1/2 and brackets the oracle") {
    for (double nu : {-0.49, 0.0, 0.5, 1.0, 2.0, 10.0, 100.0}) {
      const double b = bessel_lower_bound(nu);
      CHECK(b > nu + 0.5);
      CHECK(b < bessel_first_zero(nu));
    }
  }
  SUBCASE("strictly increasing in nu") {
    double prev = bessel_lower_bound(-0.499);
    for (double nu = -0.45; nu <= 100.0; nu += 0.5) {
      const double b = bessel_lower_bound(nu);
      CHECK(b > prev);
      prev = b;
    }
  }
  SUBCASE("matches nu + (3/2) nu^(1/3) to first order at nu = 100") {
    const double ratio =
        bessel_lower_bound(100.0) / (100.0 + 1.5 * std::cbrt(100.0));
    CHECK(std::fabs(ratio - 1.0) < 0.02);
  }
}

TEST_CASE("generalized Hermite closed-form bounds") {
  SUBCASE("k=2 mu=0") {
    const ExtremeBounds b = gen_hermite_bounds(2, 0.0);
    CHECK(b.max_zero_upper == doctest::Approx(0.80944921102385039).epsilon(1e-14));
    CHECK(b.max_zero_upper > 1.0 / std::sqrt(2.0));
    CHECK(b.min_zero_lower == 0.0);  // k + mu - r vanishes at mu = 0
  }
  SUBCASE("k=4 mu=0") {
    const ExtremeBounds b = gen_hermite_bounds(4, 0.0);
    CHECK(b.max_zero_upper == doctest::Approx(1.7677669529663688).epsilon(1e-14));
    const ZeroSet zs = zeros(FamilySpec{GeneralizedHermite{0.0}}, 4);
    CHECK(zs.zeros.back() == doctest::Approx(1.6506801238857846).epsilon(1e-12));
    CHECK(b.max_zero_upper > zs.zeros.back());
  }
  SUBCASE("k=2 mu=1 brackets the positive zero sqrt(3/2)") {
    const ExtremeBounds b = gen_hermite_bounds(2, 1.0);
    CHECK(b.min_zero_lower == doctest::Approx(1.0417530145034703).epsilon(1e-14));
    CHECK(b.max_zero_upper == doctest::Approx(1.2848732664603082).epsilon(1e-14));
    CHECK(b.intermediates.r == doctest::Approx(std::sqrt(8.0)));
    const double zero = std::sqrt(1.5);
    CHECK(b.min_zero_lower < zero);
    CHECK(zero < b.max_zero_upper);
  }
  SUBCASE("negative radicand clamps and flags") {
    const ExtremeBounds b = gen_hermite_bounds(3, -0.25);
    CHECK(b.clamped);
    CHECK(b.min_zero_lower == 0.0);
    CHECK(std::isfinite(b.max_zero_upper));
  }
  SUBCASE("theta obeys the parity rule") {
    CHECK(gen_hermite_bounds(6, 2.0).intermediates.theta == 0.0);
    CHECK(gen_hermite_bounds(7, 2.0).intermediates.theta == 4.0);
  }
}

TEST_CASE("Laguerre closed-form bounds") {
  SUBCASE("k=1 alpha=0 brackets the zero at 1") {
    const ExtremeBounds b = laguerre_bounds(1, 0.0);
    CHECK(b.min_zero_lower == doctest::Approx(0.69144357924697612).epsilon(1e-14));
    CHECK(b.max_zero_upper == doctest::Approx(2.3754898068920015).epsilon(1e-14));
    CHECK(b.min_zero_lower < 1.0);
    CHECK(1.0 < b.max_zero_upper);
  }
  SUBCASE("k=2 alpha=0") {
    const ExtremeBounds b = laguerre_bounds(2, 0.0);
    CHECK(b.min_zero_lower == doctest::Approx(0.40512005666663352).epsilon(1e-14));
    CHECK(b.max_zero_upper == doctest::Approx(5.4354510263530346).epsilon(1e-14));
    CHECK(b.min_zero_lower < 2.0 - std::sqrt(2.0));
    CHECK(2.0 + std::sqrt(2.0) < b.max_zero_upper);
  }
  SUBCASE("alpha -> -1 collapses the window and the lower bound") {
    const ExtremeBounds b = laguerre_bounds(1, -1.0 + 1e-9);
    CHECK(b.min_zero_lower > 0.0);
    CHECK(b.min_zero_lower < 1e-5);
    CHECK(b.intermediates.r < 1e-9);
  }
}

TEST_CASE("Jacobi closed-form bounds") {
  SUBCASE("k=2 alpha=beta=0") {
    const ExtremeBounds b = jacobi_bounds(2, 0.0, 0.0);
    CHECK(b.intermediates.y2 == doctest::Approx(0.92582009977255146).epsilon(1e-14));
    CHECK(b.max_zero_upper == doctest::Approx(0.70595767297625231).epsilon(1e-14));
    CHECK(b.min_zero_lower == doctest::Approx(-b.max_zero_upper).epsilon(1e-14));
    CHECK(b.max_zero_upper > 1.0 / std::sqrt(3.0));
  }
  SUBCASE("k=1 alpha=beta=0") {
    const ExtremeBounds b = jacobi_bounds(1, 0.0, 0.0);
    CHECK(b.max_zero_upper == doctest::Approx(0.28153998396089456).epsilon(1e-14));
    CHECK(b.max_zero_upper > 0.0);
  }
  SUBCASE("k=2 Chebyshev brackets cos(pi/4)") {
    const ExtremeBounds b = jacobi_bounds(2, -0.5, -0.5);
    CHECK(b.max_zero_upper == doctest::Approx(0.82865529824716578).epsilon(1e-14));
    CHECK(b.max_zero_upper > std::cos(M_PI / 4.0));
  }
  SUBCASE("hypothesis alpha >= beta is enforced, adapter reflects") {
    CHECK_THROWS_WITH_AS(jacobi_bounds(2, 0.0, 0.5),
                         doctest::Contains("alpha >= beta"), std::domain_error);
    const JacobiAdapted a = jacobi_bounds_any(2, 0.0, 0.5);
    CHECK(a.swapped);
    const ExtremeBounds direct = jacobi_bounds(2, 0.5, 0.0);
    CHECK(a.bounds.min_zero_lower == doctest::Approx(-direct.max_zero_upper));
    CHECK(a.bounds.max_zero_upper == doctest::Approx(-direct.min_zero_lower));
    const ZeroSet zs = zeros(FamilySpec{Jacobi{0.0, 0.5}}, 2);
    CHECK(a.bounds.min_zero_lower < zs.zeros.front());
    CHECK(zs.zeros.back() < a.bounds.max_zero_upper);
  }
}

TEST_CASE("numeric window bounds") {
  SUBCASE("Bessel: the one-dimensional minimum is exact, numeric == closed") {
    for (double nu : {-0.49, 0.0, 1.0, 10.0, 100.0}) {
      const ExtremeBounds b = numeric_window_bounds(BesselSpec{nu});
      CHECK(std::fabs(b.min_zero_lower - bessel_lower_bound(nu)) <= 1e-9);
      CHECK(std::isinf(b.max_zero_upper));
    }
  }
  SUBCASE("Hermite mu=0 k=4: maximize x - (8-x^2)^(-1/2)") {
    const ExtremeBounds b =
        numeric_window_bounds(FamilySpec{GeneralizedHermite{0.0}}, 4);
    CHECK(b.max_zero_upper == doctest::Approx(1.7447284742056047).epsilon(1e-9));
    CHECK(b.max_zero_upper <= gen_hermite_bounds(4, 0.0).max_zero_upper + 1e-9);
    CHECK(b.max_zero_upper > 1.6506801238857846);
  }
  SUBCASE("degree 1 is the equality case: both extrema equal the zero") {
    // For a monic degree-1 solution the certificate is an identity, so the
    // window extrema reproduce the zero itself.
    const ExtremeBounds lb = numeric_window_bounds(FamilySpec{Laguerre{0.0}}, 1);
    CHECK(lb.min_zero_lower == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(lb.max_zero_upper == doctest::Approx(1.0).epsilon(1e-9));
    const ExtremeBounds jb = numeric_window_bounds(FamilySpec{Jacobi{0.0, 0.0}}, 1);
    CHECK(jb.min_zero_lower == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(std::fabs(jb.max_zero_upper) <= 1e-9);
  }
  SUBCASE("never weaker than the closed forms; brackets the oracle for k >= 2") {
    const FamilySpec specs[] = {FamilySpec{GeneralizedHermite{0.5}},
                                FamilySpec{GeneralizedHermite{25.0}},
                                FamilySpec{Laguerre{-0.99}},
                                FamilySpec{Laguerre{50.0}},
                                FamilySpec{Jacobi{0.0, 0.0}},
                                FamilySpec{Jacobi{50.0, -0.99}}};
    for (const auto& spec : specs) {
      for (int k : {2, 3, 5, 10, 40}) {
        const ExtremeBounds closed =
            std::holds_alternative<Jacobi>(spec)
                ? jacobi_bounds_any(k, std::get<Jacobi>(spec).alpha,
                                    std::get<Jacobi>(spec).beta)
                      .bounds
                : closed_form_bounds(spec, k);
        const ExtremeBounds num = numeric_window_bounds(spec, k);
        CHECK(num.min_zero_lower >= closed.min_zero_lower - 1e-9);
        CHECK(num.max_zero_upper <= closed.max_zero_upper + 1e-9);
        // window containment of both methods
        const DiscriminantWindow w = discriminant_window(spec, k);
        const double wy1 = std::holds_alternative<GeneralizedHermite>(spec)
                               ? std::max(w.y1, 0.0)
                               : w.y1;
        CHECK(num.min_zero_lower >= wy1 - 1e-9);
        CHECK(num.max_zero_upper <= w.y2 + 1e-9);
        CHECK(closed.min_zero_lower >= wy1 - 1e-9);
        CHECK(closed.max_zero_upper <= w.y2 + 1e-9);
        const ZeroSet zs = zeros(spec, k);
        const auto rel = std::holds_alternative<GeneralizedHermite>(spec)
                             ? zs.positive()
                             : zs.zeros;
        if (rel.empty()) continue;
        CHECK(num.min_zero_lower < rel.front() + margin_tol(rel.front()));
        CHECK(num.max_zero_upper > rel.back() - margin_tol(rel.back()));
      }
    }
  }
}

TEST_CASE("spacing lower bounds") {
  SUBCASE("constant discriminant (f'' + f = 0): gap >= 2 sqrt(2), below pi") {
    const SpacingBound sb =
        spacing_from_discriminant([](double) { return 1.0; }, 0.0, M_PI);
    CHECK(sb.gap_lower_simple == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(sb.gap_sq_lower == doctest::Approx(8.0).epsilon(1e-15));
    CHECK(std::sqrt(sb.gap_sq_lower) == doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK(std::sqrt(sb.gap_sq_lower) < M_PI);
  }
  SUBCASE("Hermite mu=0 k=2 attains equality in the pairwise bound") {
    const SpacingBound sb =
        spacing_lower_bounds(FamilySpec{GeneralizedHermite{0.0}}, 2, 0, 1);
    CHECK(sb.gap_sq_lower == doctest::Approx(2.0).epsilon(1e-12));
    const double gap = 2.0 / std::sqrt(2.0);
    CHECK(gap * gap == doctest::Approx(sb.gap_sq_lower).epsilon(1e-12));
  }
  SUBCASE("every consecutive oracle gap respects the simple bound") {
    const FamilySpec specs[] = {FamilySpec{GeneralizedHermite{0.0}},
                                FamilySpec{Laguerre{0.5}},
                                FamilySpec{Jacobi{1.0, 0.25}}};
    for (const auto& spec : specs) {
      const int k = 9;
      const ZeroSet zs = zeros(spec, k);
      for (int i = 0; i + 1 < k; ++i) {
        if (std::holds_alternative<GeneralizedHermite>(spec) &&
            std::get<GeneralizedHermite>(spec).mu != 0.0 &&
            zs.zeros[i] < 0.0 && zs.zeros[i + 1] > 0.0) {
          continue;  // interval straddles the coefficient pole
        }
        const SpacingBound sb = spacing_lower_bounds(spec, k, i, i + 1);
        CHECK(zs.zeros[i + 1] - zs.zeros[i] >= sb.gap_lower_simple - 1e-12);
        const double gap = zs.zeros[i + 1] - zs.zeros[i];
        CHECK(gap * gap >= sb.gap_sq_lower - 1e-12);
      }
    }
  }
  SUBCASE("pairs straddling a coefficient pole are rejected") {
    // mu != 0: the discriminant dives to -inf at the origin
    CHECK_THROWS_AS(
        spacing_lower_bounds(FamilySpec{GeneralizedHermite{1.0}}, 2, 0, 1),
        std::domain_error);
  }
  SUBCASE("index validation") {
    CHECK_THROWS_AS(spacing_lower_bounds(FamilySpec{Laguerre{0.0}}, 3, 2, 2),
                    std::domain_error);
    CHECK_THROWS_AS(spacing_lower_bounds(FamilySpec{Laguerre{0.0}}, 3, 0, 3),
                    std::domain_error);
  }
}

TEST_CASE("zero slack certificate") {
  SUBCASE("Hermite mu=0 k=2 at 1/sqrt(2): 2k - x^2 - 2 = 3/2") {
    const auto c = OdeCoefficients::hermite(2, 0.0);
    CHECK(zero_slack(c, 1.0 / std::sqrt(2.0)) == doctest::Approx(1.5).epsilon(1e-14));
    // boundary of the induced bound |x| <= sqrt(2k-2)
    CHECK(zero_slack(c, std::sqrt(2.0)) == doctest::Approx(0.0));
  }
  SUBCASE("Laguerre k=1 alpha=0 at its zero: exact equality case") {
    const auto c = OdeCoefficients::laguerre(1, 0.0);
    CHECK(zero_slack(c, 1.0) == doctest::Approx(0.0));
    // a(1) = 0, a'(1) = 1/2, b(1) = 1 feed the certificate
    CHECK(c.da(1.0) == doctest::Approx(0.5));
  }
  SUBCASE("coefficient pole is rejected") {
    const auto c = OdeCoefficients::hermite(3, 1.0);
    CHECK_THROWS_AS(zero_slack(c, 0.0), std::domain_error);
  }
  SUBCASE("nonnegative at certified zeros, corner parameters included") {
    const FamilySpec specs[] = {FamilySpec{Laguerre{-0.99}},
                                FamilySpec{Jacobi{50.0, -0.99}},
                                FamilySpec{GeneralizedHermite{-0.49}}};
    for (const auto& spec : specs) {
      for (int k : {1, 2, 7, 100}) {
        const auto c = ode_coefficients(spec, k);
        for (double x : zeros(spec, k).zeros) {
          if (c.singular_at(x)) continue;
          const double s = zero_slack(c, x);
          const double scale = std::max(
              {1.0, std::fabs(c.discriminant(x)), std::fabs(2.0 * c.da(x))});
          CHECK(s >= -1e-8 * scale);
        }
      }
    }
  }
}

TEST_CASE("zero quartic certificate") {
  SUBCASE("Hermite mu=0 k=2 at 1/sqrt(2): quartic degenerates to a quadratic") {
    const auto c = OdeCoefficients::hermite(2, 0.0);
    const LambdaFormReport rep = zero_quartic_min(c, 1.0 / std::sqrt(2.0));
    CHECK(std::fabs(rep.leading_coeff) <= 1e-12);
    CHECK(rep.quartic_min == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(rep.argmin_lambda == doctest::Approx(std::sqrt(2.0) / 6.0).epsilon(1e-12));
    CHECK(!rep.unbounded);
    CHECK(rep.quad_value == doctest::Approx(1.5));
  }
  SUBCASE("Laguerre k=1 alpha=0 at 1: certificate is identically 1") {
    const auto c = OdeCoefficients::laguerre(1, 0.0);
    const LambdaFormReport rep = zero_quartic_min(c, 1.0);
    CHECK(rep.quartic_min == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.argmin_lambda == 0.0);
    CHECK(std::fabs(rep.leading_coeff) <= 1e-12);
  }
  SUBCASE("value at lambda = 0 is always 1, so the minimum never exceeds 1") {
    const auto c = OdeCoefficients::jacobi(5, 1.5, 0.25);
    for (double x : zeros(FamilySpec{Jacobi{1.5, 0.25}}, 5).zeros) {
      const LambdaFormReport rep = zero_quartic_min(c, x);
      CHECK(rep.quartic_min <= 1.0 + 1e-12);
    }
  }
  SUBCASE("ill-conditioned corner: minimum stays positive") {
    // Least zero of the k=100 Jacobi(50, -0.99) member sits near -1.  The
    // certificate value there moves ~2% per 1e-12 of zero placement, so only
    // a band is meaningful; at the exact zero it is 0.3710.
    const FamilySpec spec{Jacobi{50.0, -0.99}};
    const auto c = ode_coefficients(spec, 100);
    const ZeroSet zs = zeros(spec, 100);
    const LambdaFormReport rep = zero_quartic_min(c, zs.zeros.front());
    CHECK(!rep.unbounded);
    CHECK(rep.quartic_min > 0.3);
    CHECK(rep.quartic_min < 0.45);
  }
  SUBCASE("nonnegative across families at certified zeros") {
    const FamilySpec specs[] = {FamilySpec{Laguerre{-0.99}},
                                FamilySpec{GeneralizedHermite{-0.49}},
                                FamilySpec{GeneralizedHermite{25.0}},
                                FamilySpec{Jacobi{50.0, 50.0}}};
    for (const auto& spec : specs) {
      for (int k : {1, 2, 7, 40}) {
        const auto c = ode_coefficients(spec, k);
        for (double x : zeros(spec, k).zeros) {
          if (c.singular_at(x)) continue;
          const LambdaFormReport rep = zero_quartic_min(c, x);
          CHECK(!rep.unbounded);
          const double scale =
              std::max(1.0, std::fabs(rep.leading_coeff));
          CHECK(rep.quartic_min >= -1e-8 * scale);
        }
      }
    }
  }
}

TEST_CASE("Hermite resultant bound") {
  CHECK(hermite_resultant_bound(2) ==
        doctest::Approx(1.7921122710904965).epsilon(1e-14));
  CHECK(hermite_resultant_bound(50) ==
        doctest::Approx(9.6656395611343091).epsilon(1e-14));
  SUBCASE("upper-bounds the oracle largest zero") {
    for (int k : {2, 10, 50}) {
      const ZeroSet zs = zeros(FamilySpec{GeneralizedHermite{0.0}}, k);
      CHECK(hermite_resultant_bound(k) > zs.zeros.back());
    }
  }
  SUBCASE("second-term constant approaches 3 * 2^(-11/6)") {
    const double k = 1e6;
    const double c =
        (std::sqrt(2.0 * k) - hermite_resultant_bound(1000000)) * std::pow(k, 1.0 / 6.0);
    CHECK(c == doctest::Approx(0.83476697721454041).epsilon(1e-10));
    CHECK(std::fabs(c - 3.0 * std::pow(2.0, -11.0 / 6.0)) < 0.02);
  }
}

TEST_CASE("reference bounds") {
  const FamilySpec hermite{GeneralizedHermite{0.0}};
  CHECK(reference_bounds(hermite, 50).max_zero_upper ==
        doctest::Approx(9.1899400637151485).epsilon(1e-14));
  CHECK(reference_bounds(hermite, 1).max_zero_upper ==
        doctest::Approx(0.18679900063448958).epsilon(1e-14));
  CHECK(reference_bounds(FamilySpec{Laguerre{1.0}}, 10).max_zero_upper ==
        doctest::Approx(31.872598914344136).epsilon(1e-14));
  SUBCASE("hypothesis gates") {
    CHECK_THROWS_AS(reference_bounds(FamilySpec{Laguerre{0.0}}, 10),
                    std::domain_error);
    CHECK_THROWS_AS(reference_bounds(FamilySpec{GeneralizedHermite{1.0}}, 10),
                    std::domain_error);
    CHECK_THROWS_AS(reference_bounds(FamilySpec{Jacobi{1.0, 0.0}}, 10),
                    std::domain_error);
  }
  SUBCASE("tighter than our closed form at large k, still above the oracle") {
    const int k = 100;
    const double ref = reference_bounds(hermite, k).max_zero_upper;
    const double ours = gen_hermite_bounds(k, 0.0).max_zero_upper;
    const double oracle = zeros(hermite, k).zeros.back();
    CHECK(oracle < ref);
    CHECK(ref < ours);
    CHECK(ref < hermite_resultant_bound(k));
  }
}
