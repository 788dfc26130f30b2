#include <doctest.h>

#include "bombon/convex.hpp"
#include "bombon/error.hpp"
#include "oracles.hpp"

using namespace bombon;
using namespace bombon::convex;
using namespace std::complex_literals;

namespace {

CVector vec(std::initializer_list<Complex> c) {
  CVector v(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (Complex z : c) v[i++] = z;
  return v;
}

ComplexEllipsoid random_ellipsoid(Rng& rng, int dim) {
  const CMatrix g = gaussian_matrix(rng, dim, dim);
  return {CVector(0.2 * gaussian_vector(rng, dim)), CMatrix(g.adjoint() * g + 0.3 * CMatrix::Identity(dim, dim))};
}

}  // namespace

TEST_SUITE("convex") {
  TEST_CASE("disk sections of round bodies") {
    const DiskVerdict b = disk_section_test(ball(2), AffineComplexLine(vec({0, 0}), vec({1, 0})), 1e-3);
    REQUIRE(b.tag == DiskTag::Disk);
    CHECK(std::abs(b.center) < 1e-6);
    CHECK(b.radius == doctest::Approx(1.0).epsilon(1e-6));

    CMatrix h = CMatrix::Zero(2, 2);
    h(0, 0) = 1.0;
    h(1, 1) = 4.0;
    const DiskVerdict e =
        disk_section_test(ellipsoid_body({vec({0, 0}), h}), AffineComplexLine(vec({0, 0.3}), vec({1, 0})), 1e-3);
    REQUIRE(e.tag == DiskTag::Disk);
    CHECK(std::abs(e.center) < 1e-6);
    CHECK(e.radius == doctest::Approx(std::sqrt(1.0 - 4.0 * 0.09)).epsilon(1e-6));

    CHECK(disk_section_test(ball(2), AffineComplexLine(vec({0, 2}), vec({1, 0})), 1e-3).tag == DiskTag::Empty);
  }

  TEST_CASE("the bidisk has lens-shaped sections") {
    const DiskVerdict v = disk_section_test(polydisk(2), AffineComplexLine(vec({0, 0.5}), vec({1, 1})), 1e-3);
    CHECK(v.tag == DiskTag::NotADisk);
    CHECK(v.deviation > 1e-2);
  }

  TEST_CASE("nonconvex oracles are reported") {
    const ConvexBodyOracle annulus{[](const CVector& x) { return x.norm() <= 1.0 && x.norm() >= 0.5; }, 1.0, 1, "annulus"};
    CHECK_THROWS_AS(disk_section_test(annulus, AffineComplexLine(vec({0}), vec({1})), 1e-3), Error);
  }

  TEST_CASE("ellipsoid sections are disks, points or empty") {
    Rng rng = make_rng(61);
    int disks = 0;
    for (int t = 0; t < 100; ++t) {
      const int dim = 2 + t % 2;
      const ComplexEllipsoid el = random_ellipsoid(rng, dim);
      const AffineComplexLine line(CVector(0.5 * gaussian_vector(rng, dim)), gaussian_vector(rng, dim));
      const DiskVerdict v = disk_section_test(ellipsoid_body(el), line, 1e-3);
      CHECK(v.tag != DiskTag::NotADisk);
      disks += v.tag == DiskTag::Disk;
    }
    CHECK(disks > 50);
  }

  TEST_CASE("MVEE of symmetric sets") {
    const MveeResult one = mvee_complex({vec({1}), vec({-1}), vec({1.0i}), vec({-1.0i})}, 1e-6);
    CHECK(std::abs(one.ellipsoid.center[0]) < 1e-5);
    CHECK(std::abs(one.ellipsoid.H(0, 0) - Complex(1.0)) < 1e-5);

    const MveeResult two =
        mvee_complex({vec({1, 0}), vec({-1, 0}), vec({1.0i, 0}), vec({0, 1}), vec({0, -1}), vec({0, 1.0i})}, 1e-6);
    CHECK(two.ellipsoid.center.norm() < 1e-5);
    CHECK((two.ellipsoid.H - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-5);

    try {
      mvee_complex({vec({1, 1}), vec({1, 1}), vec({1, 1})}, 1e-6);
      FAIL("expected DegenerateSpan");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegenerateSpan);
    }
  }

  TEST_CASE("MVEE certificate") {
    Rng rng = make_rng(62);
    for (int t = 0; t < 50; ++t) {
      const int dim = 1 + t % 3;
      std::vector<CVector> pts;
      for (int i = 0; i < dim + 2 + t % 8; ++i) pts.push_back(gaussian_vector(rng, dim));
      const double eps = 1e-6;
      const MveeResult r = mvee_complex(pts, eps);
      for (std::size_t k = 1; k < r.gap_history.size(); ++k) CHECK(r.gap_history[k] <= r.gap_history[k - 1]);
      CHECK(r.eps_achieved <= eps);
      double worst = 0.0;
      for (const CVector& p : pts) worst = std::max(worst, r.ellipsoid.gauge(p));
      CHECK(worst <= 1.0 + eps);
      CHECK(john_touchpoint_check(pts, r.ellipsoid, eps));
    }
  }

  TEST_CASE("MVEE is affinely equivariant") {
    Rng rng = make_rng(63);
    for (int t = 0; t < 100; ++t) {
      const int dim = 1 + t % 3;
      std::vector<CVector> pts, moved;
      for (int i = 0; i < dim + 2 + t % 9; ++i) pts.push_back(gaussian_vector(rng, dim));
      const CMatrix tm = random_invertible(rng, dim, 10.0);
      const CVector shift = gaussian_vector(rng, dim);
      for (const CVector& p : pts) moved.push_back(tm * p + shift);
      const ComplexEllipsoid e = mvee_complex(pts, 1e-6).ellipsoid, f = mvee_complex(moved, 1e-6).ellipsoid;
      CHECK((tm * e.center + shift - f.center).norm() <= 1e-6 * std::max(1.0, f.center.norm()));
      CHECK(oracle::max_row_sum(CMatrix(tm.adjoint() * f.H * tm - e.H)) <= 1e-6 * oracle::max_row_sum(e.H));
    }
  }

  TEST_CASE("John touch points") {
    const std::vector<CVector> pts{vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1})};
    const ComplexEllipsoid e = mvee_complex(pts, 1e-6).ellipsoid;
    CHECK(john_touchpoint_check(pts, e, 1e-6));
    CHECK_FALSE(john_touchpoint_check(pts, ComplexEllipsoid{e.center, CMatrix(e.H / 4.0)}, 1e-6));
  }

  TEST_CASE("linear closure examples") {
    const AffineHull line = linear_closure({vec({1, 0}), vec({0, 1})});
    CHECK(line.dim() == 1);
    for (const CVector& p : abstract_line_points(vec({1, 0}), vec({0, 1}), 16)) {
      CHECK(std::abs(p.norm() - 1.0) < 1e-12);
      CHECK(line.contains(p, 1e-9));
    }
    CHECK(linear_closure({vec({1, 0})}).dim() == 0);
    CHECK(linear_closure({vec({1, 0}), vec({0, 1}), vec({-0.6, 0.8i})}).dim() == 2);
    CHECK_THROWS_AS(linear_closure({vec({2, 0})}), Error);
  }

  TEST_CASE("linear closure is idempotent and monotone") {
    Rng rng = make_rng(64);
    for (int t = 0; t < 50; ++t) {
      const int dim = 2 + t % 3;
      std::vector<CVector> y;
      for (int i = 0; i < 1 + t % dim; ++i) y.push_back(gaussian_vector(rng, dim).normalized());
      const AffineHull h = linear_closure(y);
      std::vector<CVector> more = y;
      for (const CVector& p : sample_closure(h, rng, 6)) more.push_back(p);
      const AffineHull h2 = linear_closure(more);
      CHECK(h.contains(h2, 1e-8));
      CHECK(h2.contains(h, 1e-8));
      std::vector<CVector> bigger = y;
      bigger.push_back(gaussian_vector(rng, dim).normalized());
      CHECK(linear_closure(bigger).contains(h, 1e-8));
      CHECK(audit_linear_closure(h, rng, 20).escapes == 0);
    }
  }
}
