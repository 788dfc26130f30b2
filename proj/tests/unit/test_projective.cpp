#include <doctest.h>

#include <random>

#include "bombon/error.hpp"
#include "bombon/random.hpp"
#include "oracles.hpp"

using namespace bombon;
using namespace std::complex_literals;

namespace {

CMatrix unit_vectors(int ambient_dim, std::initializer_list<int> idx) {
  CMatrix m = CMatrix::Zero(ambient_dim + 1, static_cast<Eigen::Index>(idx.size()));
  Eigen::Index c = 0;
  for (int i : idx) m(i, c++) = 1.0;
  return m;
}

}  // namespace

TEST_SUITE("projective") {
  TEST_CASE("canonicalize scales the max-modulus pivot to one") {
    CHECK(canonicalize(HVector{0.0, 2.0i}).coords() == CVector(HVector{0.0, 1.0}.coords()));
    CHECK(canonicalize(HVector{3.0, 0.0, 0.0}).coords() == CVector(HVector{1.0, 0.0, 0.0}.coords()));
    // Equal moduli: the first wins. Multiplying back recovers the input.
    const HVector c = canonicalize(HVector{1.0 + 1.0i, 1.0 - 1.0i});
    CHECK(std::abs(c[0] - Complex(1.0)) < 1e-15);
    CHECK(std::abs(c[1] - Complex(-1.0i)) < 1e-15);
    CHECK(std::abs(c[1] * (1.0 + 1.0i) - (1.0 - 1.0i)) < 1e-15);
  }

  TEST_CASE("canonicalize is idempotent bit for bit") {
    Rng rng = make_rng(11);
    for (int i = 0; i < 200; ++i) {
      const HVector v(CVector(gaussian_vector(rng, 1 + i % 6) * complex_gaussian(rng)));
      const HVector c1 = canonicalize(v);
      CHECK(canonicalize(c1).coords() == c1.coords());
    }
  }

  TEST_CASE("HVector rejects zero and non-finite input") {
    CHECK_THROWS_AS(HVector({0.0, 0.0}), Error);
    CHECK_THROWS_AS(HVector({std::nan(""), 1.0}), Error);
  }

  TEST_CASE("line_through") {
    const ProjLine l01 = line_through(ProjPoint{1.0, 0.0, 0.0}, ProjPoint{0.0, 1.0, 0.0});
    CHECK(Subspace(l01.basis()).contains(Subspace(unit_vectors(2, {0, 1}))));
    CHECK(Subspace(unit_vectors(2, {0, 1})).contains(Subspace(l01.basis())));

    const ProjLine l = line_through(ProjPoint{1.0, 0.0, 1.0}, ProjPoint{0.0, 1.0, 1.0});
    CHECK(point_on_line(l, ProjPoint{1.0, 1.0, 2.0}));
    CHECK_FALSE(point_on_line(l, ProjPoint{1.0, 0.0, 0.0}));
    CHECK(Subspace(l.basis()).projective_dim() == 1);

    const ProjPoint p{1.0, 2.0i};
    try {
      line_through(p, p);
      FAIL("expected CoincidentPoints");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CoincidentPoints);
    }
  }

  TEST_CASE("span") {
    CHECK(span({}, 3).projective_dim() == -1);
    CHECK(span({ProjPoint{1.0, 0.0, 0.0}, ProjPoint{0.0, 1.0, 0.0}, ProjPoint{1.0, 1.0, 0.0}}, 2).projective_dim() == 1);
    Rng rng = make_rng(5);
    const std::vector<ProjPoint> pts{sample_point(rng, 3), sample_point(rng, 3), sample_point(rng, 3)};
    const Subspace s = span(pts, 3);
    CHECK(s.projective_dim() == 2);
    // Independent rank check by singular values.
    CMatrix m(4, 3);
    for (int i = 0; i < 3; ++i) m.col(i) = pts[static_cast<std::size_t>(i)].unit();
    Eigen::JacobiSVD<CMatrix> svd(m);
    CHECK(svd.singularValues()[2] > 1e-6);
  }

  TEST_CASE("span is monotone") {
    Rng rng = make_rng(6);
    for (int t = 0; t < 50; ++t) {
      const int n = 2 + t % 4;
      std::vector<ProjPoint> p{sample_point(rng, n)}, pq = p;
      for (int k = 0; k < t % 3 + 1; ++k) pq.push_back(sample_point(rng, n));
      CHECK(span(pq, n).contains(span(p, n)));
    }
  }

  TEST_CASE("meet") {
    const Subspace a(CMatrix(CMatrix::Random(3, 2))), b(CMatrix(CMatrix::Random(3, 2)));
    CHECK(meet(a, b).projective_dim() == 0);

    const Subspace plane(unit_vectors(2, {0, 1}));
    CMatrix line_cols(3, 2);
    line_cols << 1, 0, 0, 1, 1, 1;
    CHECK(meet(plane, Subspace(line_cols)).projective_dim() == 0);

    const Subspace m = meet(Subspace(unit_vectors(3, {0, 1})), Subspace(unit_vectors(3, {1, 2})));
    CHECK(m.projective_dim() == 0);
    CHECK(m.contains(CVector(unit_vectors(3, {1}).col(0))));
  }

  TEST_CASE("meet lies in both arguments") {
    Rng rng = make_rng(7);
    for (int t = 0; t < 100; ++t) {
      const int n = 3 + t % 3;
      const Subspace s(gaussian_matrix(rng, n + 1, 1 + t % n));
      const Subspace u(gaussian_matrix(rng, n + 1, n + 1 - t % 2));
      const Subspace m = meet(s, u);
      CHECK(s.contains(m, 1e-9));
      CHECK(u.contains(m, 1e-9));
    }
  }

  TEST_CASE("hermitian_eig on diagonal input") {
    const Signature s = hermitian_eig(HermitianMatrix::diagonal(RVector{{1.0, -1.0}}));
    CHECK(s.n_pos == 1);
    CHECK(s.n_neg == 1);
    CHECK(s.n_zero == 0);
    CHECK(s.eigvals[0] == doctest::Approx(-1.0));
    CHECK(s.eigvals[1] == doctest::Approx(1.0));

    const Signature t = hermitian_eig(HermitianMatrix::diagonal(RVector{{2.0, 3.0, -5.0, 0.0}}));
    CHECK(t.n_pos == 2);
    CHECK(t.n_neg == 1);
    CHECK(t.n_zero == 1);
  }

  TEST_CASE("Sylvester's law against frame sampling and an external solver") {
    Rng rng = make_rng(8);
    for (int t = 0; t < 10; ++t) {
      const CMatrix tm = random_invertible(rng, 3, 10.0);
      const HermitianMatrix m = HermitianMatrix::diagonal(RVector{{1.0, 1.0, -1.0}}).congruence(tm);
      const Signature s = hermitian_eig(m);
      CHECK(s.n_pos == 2);
      CHECK(s.n_neg == 1);
      CHECK(s.n_zero == 0);
      CHECK(oracle::sampled_positive_index(m.matrix(), 4000, 100u + static_cast<unsigned>(t)) == 2);
      CHECK(oracle::sampled_positive_index(CMatrix(-m.matrix()), 4000, 200u + static_cast<unsigned>(t)) == 1);
    }
    for (int t = 0; t < 200; ++t) {
      const int n = 1 + t % 6;
      const SignatureCounts c = random_mixed_counts(rng, n, true);
      const HermitianMatrix m = random_hermitian_with_counts(rng, c.n_pos, c.n_neg, c.n_zero, 100.0);
      const Signature s = hermitian_eig(m.congruence(random_invertible(rng, n + 1, 1e3)));
      const oracle::Counts o = oracle::eigen_counts(m.matrix());
      CHECK(s.n_pos == o.pos);
      CHECK(s.n_neg == o.neg);
      CHECK(s.n_zero == o.zero);
    }
  }

  TEST_CASE("signature is unitarily invariant") {
    Rng rng = make_rng(9);
    for (int t = 0; t < 100; ++t) {
      const Eigen::Index n = 2 + t % 5;
      const HermitianMatrix m = random_hermitian(rng, n);
      const CMatrix u = random_unitary(rng, n);
      const Signature a = hermitian_eig(m), b = hermitian_eig(m.congruence(u));
      CHECK(a.n_pos == b.n_pos);
      CHECK(a.n_neg == b.n_neg);
      CHECK((a.eigvals - b.eigvals).cwiseAbs().maxCoeff() < 1e-8);
    }
  }

  TEST_CASE("Jacobi eigenvectors are accurate at small gaps") {
    Rng rng = make_rng(10);
    for (int t = 0; t < 100; ++t) {
      const HermitianMatrix m = random_hermitian_with_counts(rng, 2, 2, 1, 1e3);
      const Signature s = hermitian_eig(m);
      const CMatrix r = m.matrix() * s.eigbasis - s.eigbasis * s.eigvals.cast<Complex>().asDiagonal();
      CHECK(r.norm() < 1e-13 * std::max(1.0, m.norm_inf()));
      CHECK((s.eigbasis.adjoint() * s.eigbasis - CMatrix::Identity(5, 5)).norm() < 1e-13);
    }
  }

  TEST_CASE("sample_point is replayable and unitarily invariant") {
    Rng a = make_rng(42), b = make_rng(42);
    const ProjPoint p = sample_point(a, 1), q = sample_point(b, 1);
    CHECK(p.rep() == q.rep());

    Rng rng = make_rng(43);
    double mean = 0.0;
    constexpr int kSamples = 10000;
    for (int i = 0; i < kSamples; ++i) mean += std::norm(sample_point(rng, 2).unit()[0]);
    mean /= kSamples;
    CHECK(std::abs(mean - 1.0 / 3.0) < 0.02);
  }
}
