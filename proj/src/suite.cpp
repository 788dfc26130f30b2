#include "bombon/suite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bombon/convex.hpp"
#include "bombon/error.hpp"
#include "bombon/group_actions.hpp"
#include "bombon/moebius.hpp"
#include "bombon/random.hpp"
#include "bombon/sections.hpp"

namespace bombon {

bool SuiteReport::passed() const noexcept {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed(); });
}

namespace {

int rand_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Sine of the angle between two lines of C^m.
double sine_gap(const CVector& a, const CVector& b) {
  const CVector ua = a.normalized(), ub = b.normalized();
  return (ua - ub * ub.dot(ua)).norm();
}

double scale_of(const QuadricBombon& x) { return std::max(1.0, x.form().norm_inf()); }

QuadricBombon random_form(Rng& rng, int n, bool allow_kernel) {
  const SignatureCounts c = random_mixed_counts(rng, n, allow_kernel);
  return QuadricBombon(random_hermitian_with_counts(rng, c.n_pos, c.n_neg, c.n_zero));
}

QuadricBombon form_with_counts(Rng& rng, int pos, int neg, int zero) {
  return QuadricBombon(random_hermitian_with_counts(rng, pos, neg, zero));
}

/// Outcome of one trial: empty when it passed.
struct Trial {
  std::string failure;
  bool excluded = false;

  static Trial ok() { return {}; }
  static Trial skip() { return {"", true}; }
  static Trial fail(std::string why) { return {std::move(why), false}; }
};

class Runner {
 public:
  Runner(const RunConfig& cfg, const SuiteOptions& opt) : cfg_(cfg), opt_(opt) {}

  template <class Body>
  void run(const std::string& module, const std::string& name, int trials, Body&& body) {
    PropertyResult r{module, name, trials, 0, 0, {}};
    // Per-property stream: seed mixed with the property's ordinal.
    Rng rng = make_rng(cfg_.seed ^ (0x9E3779B97F4A7C15ull * (results_.size() + 1)));
    for (int i = 0; i < trials; ++i) {
      Trial t;
      try {
        t = body(rng, i);
      } catch (const std::exception& e) {
        t = Trial::fail(e.what());
      }
      if (t.excluded) ++r.excluded;
      if (!t.failure.empty()) {
        if (r.failures == 0) r.first_failure = "trial " + std::to_string(i) + ": " + t.failure;
        ++r.failures;
      }
    }
    results_.push_back(std::move(r));
  }

  LineSection classify(const QuadricBombon& x, const ProjLine& l) const {
    LineSection s = classify_line_section(x, l);
    if (opt_.corrupt_classifier && s.tag == SectionTag::Circle) {
      s.tag = SectionTag::Empty;
      s.circle.reset();
      s.sides.reset();
    }
    return s;
  }

  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  RunConfig cfg_;
  SuiteOptions opt_;
  std::vector<PropertyResult> results_;
};

std::string shape_name(SectionTag t) { return std::string(to_string(t)); }

bool shapes_agree(SectionTag exact, LineShape seen) {
  switch (exact) {
    case SectionTag::Empty: return seen == LineShape::Empty;
    case SectionTag::SinglePoint: return seen == LineShape::SinglePoint || seen == LineShape::Empty;
    case SectionTag::Circle: return seen == LineShape::Circle;
    case SectionTag::FullLine: return seen == LineShape::FullLine;
  }
  return false;
}

// Narrow caps fall between grid points of the side-only oracle.
constexpr double kMinCapRadius = 0.15;

void projective_properties(Runner& r, int base) {
  r.run("projective", "canonicalize_idempotent", base, [](Rng& rng, int) {
    const int n = rand_int(rng, 1, 6);
    const HVector v(CVector(gaussian_vector(rng, n + 1) * complex_gaussian(rng)));
    const HVector c1 = canonicalize(v);
    const HVector c2 = canonicalize(c1);
    return c1.coords() == c2.coords() ? Trial::ok() : Trial::fail("second canonicalization moved the vector");
  });

  r.run("projective", "signature_unitary_invariance", base, [](Rng& rng, int) {
    const int n = rand_int(rng, 1, 6);
    const SignatureCounts c = random_mixed_counts(rng, n, true);
    const HermitianMatrix m = random_hermitian_with_counts(rng, c.n_pos, c.n_neg, c.n_zero);
    const CMatrix u = random_unitary(rng, n + 1);
    const Signature s1 = hermitian_eig(m);
    const Signature s2 = hermitian_eig(m.congruence(u));
    if (s1.n_pos != s2.n_pos || s1.n_neg != s2.n_neg || s1.n_zero != s2.n_zero) return Trial::fail("counts changed");
    const double gap = (s1.eigvals - s2.eigvals).cwiseAbs().maxCoeff();
    return gap <= 1e-8 * std::max(1.0, m.norm_inf()) ? Trial::ok() : Trial::fail("eigenvalues moved by " + std::to_string(gap));
  });

  r.run("projective", "sylvester_law_and_eig_residual", base, [](Rng& rng, int) {
    const int n = rand_int(rng, 1, 6);
    const SignatureCounts c = random_mixed_counts(rng, n, true);
    const HermitianMatrix m = random_hermitian_with_counts(rng, c.n_pos, c.n_neg, c.n_zero);
    const Signature s = hermitian_eig(m);
    if (s.n_pos != c.n_pos || s.n_neg != c.n_neg || s.n_zero != c.n_zero) return Trial::fail("counts differ from construction");
    const double res = inf_norm(CMatrix(m.matrix() * s.eigbasis - s.eigbasis * s.eigvals.cast<Complex>().asDiagonal()));
    const double orth = inf_norm(CMatrix(s.eigbasis.adjoint() * s.eigbasis - CMatrix::Identity(n + 1, n + 1)));
    if (res > 1e-8 * std::max(1.0, m.norm_inf())) return Trial::fail("eigen residual " + std::to_string(res));
    return orth <= 1e-9 ? Trial::ok() : Trial::fail("eigenbasis not unitary");
  });

  r.run("projective", "meet_and_span_lattice", base, [](Rng& rng, int) {
    const int n = rand_int(rng, 2, 6);
    const int a = rand_int(rng, 0, n - 1), b = rand_int(rng, 0, n - 1);
    const Subspace s(gaussian_matrix(rng, n + 1, a + 1));
    const Subspace t(gaussian_matrix(rng, n + 1, b + 1));
    const Subspace m = meet(s, t);
    if (!s.contains(m) || !t.contains(m)) return Trial::fail("meet escapes an operand");
    if (m.projective_dim() < a + b - n) return Trial::fail("meet too small");
    std::vector<ProjPoint> p, pq;
    const int k = rand_int(rng, 0, n);
    for (int i = 0; i < k; ++i) p.push_back(sample_point(rng, n));
    pq = p;
    for (int i = 0, extra = rand_int(rng, 1, 3); i < extra; ++i) pq.push_back(sample_point(rng, n));
    return span(pq, n).contains(span(p, n)) ? Trial::ok() : Trial::fail("span is not monotone");
  });
}

void quadric_properties(Runner& r, int base) {
  r.run("quadric", "fullness", 5 * base, [](Rng& rng, int) {
    const int n = rand_int(rng, 1, 6);
    const SignatureCounts c = random_mixed_counts(rng, n, true);
    const QuadricBombon x = form_with_counts(rng, c.n_pos, c.n_neg, c.n_zero);
    const BombonType t = bombon_type(x);
    if (t.p != std::min(c.n_pos, c.n_neg) - 1 || t.sing_dim != c.n_zero - 1) return Trial::fail("type disagrees with counts");
    return t.p + t.q + t.sing_dim == n - 2 ? Trial::ok() : Trial::fail("p + q + dim sing != n - 2");
  });

  r.run("quadric", "side_scale_invariance", base, [](Rng& rng, int) {
    const int n = rand_int(rng, 1, 6);
    const QuadricBombon x = random_form(rng, n, true);
    const CVector v = gaussian_vector(rng, n + 1);
    const Complex lambda = complex_gaussian(rng) * 10.0;
    return x.side(v) == x.side(CVector(lambda * v)) ? Trial::ok() : Trial::fail("side changed under scaling");
  });

  r.run("quadric", "canonical_form_witness", base, [](Rng& rng, int) {
    const QuadricBombon x = random_form(rng, rand_int(rng, 1, 6), true);
    const CanonicalForm cf = canonical_form(x);
    const double res = cf.witness.residual(x.form(), cf.canonical);
    return res <= 1e-8 * scale_of(x) ? Trial::ok() : Trial::fail("residual " + std::to_string(res));
  });

  r.run("quadric", "equivalence_witness_same_type", base, [](Rng& rng, int) {
    const int n = rand_int(rng, 1, 6);
    const SignatureCounts c = random_mixed_counts(rng, n, true);
    const QuadricBombon x = form_with_counts(rng, c.n_pos, c.n_neg, c.n_zero);
    const bool swap = rng() % 2 == 0;
    const QuadricBombon y = swap ? form_with_counts(rng, c.n_neg, c.n_pos, c.n_zero) : form_with_counts(rng, c.n_pos, c.n_neg, c.n_zero);
    const CongruenceWitness w = equivalence_witness(x, y);
    const double res = w.residual(x.form(), y.form());
    return res <= 1e-8 * scale_of(x) ? Trial::ok() : Trial::fail("residual " + std::to_string(res));
  });

  r.run("quadric", "type_mismatch_detected", base, [](Rng& rng, int) {
    const int n = rand_int(rng, 2, 6);
    const SignatureCounts c = random_mixed_counts(rng, n, true);
    SignatureCounts d = random_mixed_counts(rng, n, true);
    for (int guard = 0; guard < 100; ++guard) {
      const bool same = d.n_zero == c.n_zero && std::min(d.n_pos, d.n_neg) == std::min(c.n_pos, c.n_neg);
      if (!same) break;
      d = random_mixed_counts(rng, n, true);
    }
    if (d.n_zero == c.n_zero && std::min(d.n_pos, d.n_neg) == std::min(c.n_pos, c.n_neg)) return Trial::skip();
    try {
      equivalence_witness(form_with_counts(rng, c.n_pos, c.n_neg, c.n_zero), form_with_counts(rng, d.n_pos, d.n_neg, d.n_zero));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::TypeMismatch) return Trial::ok();
      throw;
    }
    return Trial::fail("different types accepted");
  });

  r.run("quadric", "join_singular_locus", base, [](Rng& rng, int) {
    const int k = rand_int(rng, 2, 5);  // coordinates of the carrier
    const int a = rand_int(rng, 1, 7 - k);
    const QuadricBombon x = random_form(rng, k - 1, true);
    const CMatrix adapted = random_invertible(rng, k + a, 10.0);
    const CMatrix g = adapted.leftCols(k);
    const Subspace apex(CMatrix(adapted.rightCols(a)));
    const QuadricBombon j = join_with_apex(x, g, apex);
    const Subspace sing = singular_locus(j);
    const int expect = a + x.signature().n_zero - 1;
    if (sing.projective_dim() != expect) return Trial::fail("singular locus has the wrong dimension");
    if (!sing.contains(apex, 1e-8)) return Trial::fail("apex not singular");
    const CMatrix ker = x.signature().kernel_vectors();
    for (Eigen::Index c = 0; c < ker.cols(); ++c)
      if (!sing.contains(CVector(g * ker.col(c)), 1e-8)) return Trial::fail("old singular point lost");
    const BombonType tj = bombon_type(j), tx = bombon_type(x);
    return tj.p == tx.p && tj.q == tx.q ? Trial::ok() : Trial::fail("join changed the core dimensions");
  });

  r.run("quadric", "cores_strict_sides", base, [](Rng& rng, int) {
    const QuadricBombon x = random_form(rng, rand_int(rng, 1, 6), true);
    const Cores c = cores(x);
    for (int i = 0; i < 10; ++i) {
      const CVector pu = c.c_u.basis() * gaussian_vector(rng, c.c_u.basis().cols());
      const CVector pv = c.c_v.basis() * gaussian_vector(rng, c.c_v.basis().cols());
      if (x.side(pu) != SideSign::U || x.side(pv) != SideSign::V) return Trial::fail("core point on the wrong side");
    }
    return Trial::ok();
  });

  r.run("quadric", "special_classes", base, [](Rng& rng, int) {
    const int n = rand_int(rng, 2, 6);
    const int which = rand_int(rng, 0, 3);
    QuadricBombon x = form_with_counts(rng, 1, n, 0);
    SpecialClass want = SpecialClass::Elliptic;
    if (which == 1) {
      x = form_with_counts(rng, 1, 1, n - 1);
      want = SpecialClass::Flat;
    } else if (which == 2) {
      if (n < 3) return Trial::skip();
      const int zero = rand_int(rng, 1, n - 2);
      x = form_with_counts(rng, n - zero, 1, zero);
      want = SpecialClass::Conical;
    } else if (which == 3) {
      if (n < 3) return Trial::skip();
      const int pos = rand_int(rng, 2, n - 1);
      x = form_with_counts(rng, pos, n + 1 - pos, 0);
      want = SpecialClass::GeneralFull;
    }
    if (rng() % 2 == 0) x = QuadricBombon(-x.form());
    return classify_special(x) == want ? Trial::ok() : Trial::fail("special class mislabeled");
  });
}

void section_properties(Runner& r, int base, const VerifyTolerances& vt) {
  r.run("sections", "line_section_vs_grid_oracle", 2 * base, [&r, vt](Rng& rng, int) {
    const int n = rand_int(rng, 1, 5);
    const QuadricBombon x = random_form(rng, n, true);
    const ProjLine line(sample_point(rng, n), sample_point(rng, n));
    const LineSection exact = r.classify(x, line);
    if (exact.low_confidence) return Trial::skip();
    const double rho = circle_angular_radius(restrict_form(x, line.basis()).matrix());
    if (rho >= 0.0 && rho < kMinCapRadius) return Trial::skip();
    const LineVerdict seen = classify_oracle_line(quadric_oracle(x), line.basis(), vt);
    if (shapes_agree(exact.tag, seen.shape)) return Trial::ok();
    return Trial::fail("exact " + shape_name(exact.tag) + " vs grid " + to_string(seen.shape));
  });

  r.run("sections", "two_sides", base, [&r](Rng& rng, int) {
    const int n = rand_int(rng, 1, 6);
    const QuadricBombon x = random_form(rng, n, true);
    const auto line = sample_circle_line(x, rng);
    if (!line) return Trial::fail("no line crossing X found");
    const LineSection s = r.classify(x, *line);
    if (s.tag != SectionTag::Circle) return Trial::fail("crossing line not classified Circle");
    return s.sides->consistent ? Trial::ok() : Trial::fail("components do not lie on opposite sides");
  });

  r.run("sections", "circle_parametrization", base, [&r](Rng& rng, int) {
    const int n = rand_int(rng, 1, 6);
    const QuadricBombon x = random_form(rng, n, true);
    const auto line = sample_circle_line(x, rng);
    if (!line) return Trial::fail("no line crossing X found");
    const LineSection s = r.classify(x, *line);
    if (s.tag != SectionTag::Circle) return Trial::fail("crossing line not classified Circle");
    double worst = 0.0;
    for (int k = 0; k < 32; ++k) {
      const double phi = std::numbers::pi * k / 32.0;
      worst = std::max(worst, std::abs(x.value(circle_points(*s.circle, std::cos(phi), std::sin(phi)).rep())));
    }
    return worst <= 1e-9 * x.form().norm_inf() ? Trial::ok() : Trial::fail("value " + std::to_string(worst));
  });

  r.run("sections", "tangent_audit", base, [](Rng& rng, int) {
    const int n = rand_int(rng, 2, 6);
    const QuadricBombon x = random_form(rng, n, false);
    const auto p = sample_on_quadric(x, rng);
    if (!p) return Trial::fail("no point on X found");
    const TangentAudit a = audit_tangent_space(x, *p, rng, 64);
    if (!a.passed())
      return Trial::fail(std::to_string(a.in_failures) + " in / " + std::to_string(a.out_failures) + " out failures");
    return a.excluded > 0 ? Trial::skip() : Trial::ok();
  });

  r.run("sections", "tangent_section_singular_point", base, [](Rng& rng, int) {
    const int n = rand_int(rng, 3, 6);
    const int pos = rand_int(rng, 2, n - 1);
    const QuadricBombon x = form_with_counts(rng, pos, n + 1 - pos, 0);
    const auto p = sample_on_quadric(x, rng);
    if (!p) return Trial::fail("no point on X found");
    const ProjPoint s = tangent_section_singular_point(x, *p);
    return sine_gap(s.rep(), p->rep()) <= 1e-8 ? Trial::ok() : Trial::fail("singular point differs from x");
  });

  r.run("sections", "hypersection_trichotomy", base, [](Rng& rng, int) {
    const int n = rand_int(rng, 3, 6);
    if (rng() % 2 == 0) {
      // Elliptic or conical: the larger core joined with the singular locus is a hyperplane meeting X in a subspace.
      const int zero = rand_int(rng, 0, n - 2);
      const QuadricBombon x = form_with_counts(rng, n - zero, 1, zero);
      const Signature& s = x.signature();
      CMatrix cols(n + 1, s.n_pos + s.n_zero);
      cols << s.positive_vectors(), s.kernel_vectors();
      const Subspace h(cols);
      if (h.projective_dim() != n - 1) return Trial::fail("hyperplane construction failed");
      return std::holds_alternative<Subspace>(section_with_subspace(x, h)) ? Trial::ok() : Trial::fail("section is a bombon");
    }
    const int pos = rand_int(rng, 2, n - 1);
    const QuadricBombon x = form_with_counts(rng, pos, n + 1 - pos, 0);
    for (int k = 0; k < 20; ++k) {
      const Subspace h(null_space(CMatrix(gaussian_vector(rng, n + 1).adjoint())));
      if (!std::holds_alternative<SubspaceBombon>(section_with_subspace(x, h))) return Trial::fail("hypersection is not a bombon");
    }
    return Trial::ok();
  });
}

GenCircle random_circle(Rng& rng) {
  return GenCircle(random_hermitian_with_counts(rng, 1, 1, 0, 10.0).matrix());
}

ProjPoint point_off(Rng& rng, const GenCircle& c) {
  for (;;) {
    const ProjPoint z = sample_point(rng, 1);
    if (std::abs(c.value(z)) > 1e-3) return z;
  }
}

void moebius_properties(Runner& r, int base) {
  r.run("moebius", "rotation_homomorphism", base, [](Rng& rng, int) {
    const GenCircle c = random_circle(rng);
    const ProjPoint u = point_off(rng, c);
    const double t1 = uniform(rng, -4.0, 4.0), t2 = uniform(rng, -4.0, 4.0);
    const MoebiusMap lhs = rotation(c, u, t1).compose(rotation(c, u, t2));
    const MoebiusMap rhs = rotation(c, u, t1 + t2);
    for (int k = 0; k < 50; ++k) {
      const ProjPoint z = sample_point(rng, 1);
      if (sine_gap(lhs.apply(z).rep(), rhs.apply(z).rep()) > 1e-9) return Trial::fail("composition differs");
    }
    return Trial::ok();
  });

  r.run("moebius", "rotation_orientation_pair", base, [](Rng& rng, int) {
    const GenCircle c = random_circle(rng);
    const ProjPoint u = point_off(rng, c);
    const ProjPoint v = conjugate_point(c, u);
    const double t = uniform(rng, -4.0, 4.0);
    const MoebiusMap f = rotation(c, u, t), g = rotation(c, v, -t);
    for (int k = 0; k < 50; ++k) {
      const ProjPoint z = sample_point(rng, 1);
      if (sine_gap(f.apply(z).rep(), g.apply(z).rep()) > 1e-9) return Trial::fail("rotations about u and v disagree");
    }
    const MoebiusMap fu = f;
    if (sine_gap(fu.apply(u).rep(), u.rep()) > 1e-9 || sine_gap(fu.apply(v).rep(), v.rep()) > 1e-9)
      return Trial::fail("rotation moves its fixed points");
    return Trial::ok();
  });

  r.run("moebius", "conjugate_involution", base, [](Rng& rng, int) {
    const GenCircle c = random_circle(rng);
    const ProjPoint u = point_off(rng, c);
    const ProjPoint back = conjugate_point(c, conjugate_point(c, u));
    return sine_gap(back.rep(), u.rep()) <= 1e-9 ? Trial::ok() : Trial::fail("conjugation is not an involution");
  });

  r.run("moebius", "circle_covariance", base, [](Rng& rng, int) {
    const GenCircle c = random_circle(rng);
    const MoebiusMap f(random_invertible(rng, 2, 10.0));
    const GenCircle d = pushforward_circle(f, c);
    const double scale = d.matrix().cwiseAbs().maxCoeff();
    const ProjPoint u = point_off(rng, c);
    const ProjPoint on(CVector(c.witness_zero()));
    for (int k = 0; k < 8; ++k) {
      const ProjPoint z = rotation(c, u, uniform(rng, 0.0, 6.0)).apply(on);
      if (std::abs(d.value(f.apply(z))) > 1e-9 * scale) return Trial::fail("image of a circle point left the image circle");
      const ProjPoint w = sample_point(rng, 1);
      if ((c.value(w) > 0) != (d.value(f.apply(w)) > 0)) return Trial::fail("sides not preserved");
    }
    return Trial::ok();
  });

  r.run("moebius", "circle_section_consistency", base, [&r](Rng& rng, int) {
    const HermitianMatrix b = random_hermitian(rng, 2);
    const bool mixed = b.matrix().determinant().real() < 0.0;
    bool circle_ok = true;
    try {
      (void)GenCircle(b.matrix());
    } catch (const Error&) {
      circle_ok = false;
    }
    if (circle_ok != mixed) return Trial::fail("GenCircle acceptance disagrees with det < 0");
    if (!mixed) return Trial::ok();
    const QuadricBombon x(b);
    const LineSection s = r.classify(x, ProjLine(ProjPoint{1.0, 0.0}, ProjPoint{0.0, 1.0}));
    return s.tag == SectionTag::Circle ? Trial::ok() : Trial::fail("signature (1,1) line not classified Circle");
  });
}

void group_properties(Runner& r, int base) {
  r.run("group", "s1_group_action", base, [](Rng& rng, int) {
    const QuadricBombon x = random_form(rng, rand_int(rng, 1, 6), false);
    const CoreSplit split = core_split(x);
    const CVector v = gaussian_vector(rng, x.ambient_dim() + 1);
    const double t1 = uniform(rng, -7.0, 7.0), t2 = uniform(rng, -7.0, 7.0);
    const CVector lhs = s1_action(x, split, t1, s1_action(x, split, t2, v));
    const CVector rhs = s1_action(x, split, t1 + t2, v);
    return (lhs - rhs).norm() <= 1e-12 * v.norm() * 10.0 ? Trial::ok() : Trial::fail("action is not a homomorphism");
  });

  r.run("group", "s1_orbit_is_section_circle", base, [&r](Rng& rng, int) {
    const QuadricBombon x = random_form(rng, rand_int(rng, 1, 6), false);
    const CoreSplit split = core_split(x);
    const auto p = sample_on_quadric(x, rng);
    if (!p) return Trial::fail("no point on X found");
    const auto [u, v] = bundle_projection(x, split, p->rep());
    const ProjLine line(u, v);
    const LineSection s = r.classify(x, line);
    if (s.tag != SectionTag::Circle) return Trial::fail("fibre line is not a Circle section");
    for (int k = 0; k < 32; ++k) {
      const CVector y = s1_action(x, split, 2.0 * std::numbers::pi * k / 32.0, p->rep());
      if (std::abs(x.value(y)) > 1e-9 * x.form().norm_inf()) return Trial::fail("orbit left X");
      if (!point_on_line(line, ProjPoint(y), 1e-8)) return Trial::fail("orbit left the fibre line");
    }
    return Trial::ok();
  });

  r.run("group", "s1_fixed_points_are_cores", base, [](Rng& rng, int) {
    const QuadricBombon x = random_form(rng, rand_int(rng, 1, 6), false);
    const CoreSplit split = core_split(x);
    const Cores c = cores(x);
    const double t = uniform(rng, 0.5, 2.0 * std::numbers::pi - 0.5);
    for (const Subspace* core : {&c.c_u, &c.c_v}) {
      const CVector y = core->basis() * gaussian_vector(rng, core->basis().cols());
      if (sine_gap(s1_action(x, split, t, y), y) > 1e-12 * 100.0) return Trial::fail("core point moved");
    }
    const CVector g = gaussian_vector(rng, x.ambient_dim() + 1);
    return sine_gap(s1_action(x, split, t, g), g) > 1e-6 ? Trial::ok() : Trial::fail("generic point fixed");
  });

  r.run("group", "homogeneity_transport", base, [](Rng& rng, int) {
    const QuadricBombon x = random_form(rng, rand_int(rng, 1, 6), false);
    const auto p = sample_on_quadric(x, rng);
    const auto q = sample_on_quadric(x, rng);
    if (!p || !q) return Trial::fail("no point on X found");
    const TransportWitness w = homogeneity_transport(x, *p, *q);
    if (w.residual > 1e-8 * x.form().norm_inf()) return Trial::fail("residual " + std::to_string(w.residual));
    return sine_gap(w.T * p->rep(), q->rep()) <= 1e-8 ? Trial::ok() : Trial::fail("[Tx] != [y]");
  });

  r.run("group", "transport_preserves_sections", base, [&r](Rng& rng, int) {
    const int n = rand_int(rng, 1, 6);
    const QuadricBombon x = random_form(rng, n, false);
    const auto p = sample_on_quadric(x, rng);
    const auto q = sample_on_quadric(x, rng);
    if (!p || !q) return Trial::fail("no point on X found");
    const TransportWitness w = homogeneity_transport(x, *p, *q);
    const ProjPoint a = sample_point(rng, n), b = sample_point(rng, n);
    const LineSection s1 = r.classify(x, ProjLine(a, b));
    const LineSection s2 = r.classify(x, ProjLine(ProjPoint(CVector(w.T * a.rep())), ProjPoint(CVector(w.T * b.rep()))));
    if (s1.low_confidence || s2.low_confidence) return Trial::skip();
    return s1.tag == s2.tag ? Trial::ok() : Trial::fail("section class changed under transport");
  });

  r.run("group", "transport_via_intermediate", base, [](Rng& rng, int) {
    const int n = rand_int(rng, 3, 6);
    const int pos = rand_int(rng, 2, n - 1);
    const QuadricBombon x = form_with_counts(rng, pos, n + 1 - pos, 0);
    const CanonicalForm cf = canonical_form(x);
    const int np = cf.type.p + 1;  // columns 0..np-1 are positive for sign * A
    const CVector a = cf.witness.T.col(0) + cf.witness.T.col(np);
    const CVector b = cf.witness.T.col(1) + cf.witness.T.col(np + 1);
    if (classify_line_section(x, ProjLine(HVector(a), HVector(b))).tag != SectionTag::FullLine)
      return Trial::fail("isotropic line construction failed");
    for (int attempt = 0; attempt < 16; ++attempt) {
      const auto z = sample_on_quadric(x, rng);
      if (!z) continue;
      const ProjPoint pa(a), pb(b);
      if (classify_line_section(x, ProjLine(pa, *z)).tag != SectionTag::Circle ||
          classify_line_section(x, ProjLine(*z, pb)).tag != SectionTag::Circle)
        continue;
      const TransportWitness w1 = homogeneity_transport(x, pa, *z);
      const TransportWitness w2 = homogeneity_transport(x, *z, pb);
      const CMatrix t = w2.T * w1.T;
      if (!pseudo_unitary_check(t, x.form(), 1e-7)) return Trial::fail("composite is not pseudo-unitary");
      return sine_gap(t * a, b) <= 1e-8 ? Trial::ok() : Trial::fail("composite misses y");
    }
    return Trial::fail("no admissible intermediate point");
  });
}

convex::AffineComplexLine random_affine_line(Rng& rng, int dim, double spread) {
  return convex::AffineComplexLine(CVector(gaussian_vector(rng, dim) * spread), gaussian_vector(rng, dim));
}

std::vector<CVector> random_cloud(Rng& rng, int dim, int count) {
  std::vector<CVector> pts;
  for (int i = 0; i < count; ++i) pts.push_back(gaussian_vector(rng, dim));
  return pts;
}

std::vector<CVector> sphere_points(Rng& rng, int dim, int count) {
  std::vector<CVector> pts;
  for (int i = 0; i < count; ++i) pts.push_back(gaussian_vector(rng, dim).normalized());
  return pts;
}

void convex_properties(Runner& r, int base) {
  using namespace convex;
  r.run("convex", "ellipsoid_sections_are_disks", base, [](Rng& rng, int) {
    const int dim = rand_int(rng, 2, 3);
    const CMatrix g = gaussian_matrix(rng, dim, dim);
    const ComplexEllipsoid e{gaussian_vector(rng, dim) * 0.2, g.adjoint() * g + 0.5 * CMatrix::Identity(dim, dim)};
    const DiskVerdict v = disk_section_test(ellipsoid_body(e), random_affine_line(rng, dim, 0.5), 1e-3);
    return v.tag != DiskTag::NotADisk ? Trial::ok() : Trial::fail("ellipsoid section is not a disk");
  });

  r.run("convex", "bidisk_has_non_disk", std::max(1, base / 20), [](Rng& rng, int) {
    const ConvexBodyOracle body = polydisk(2);
    for (int k = 0; k < 100; ++k)
      if (disk_section_test(body, random_affine_line(rng, 2, 0.3), 1e-3).tag == DiskTag::NotADisk) return Trial::ok();
    return Trial::fail("no lens section in a batch of 100 lines");
  });

  r.run("convex", "mvee_certificate", base, [](Rng& rng, int) {
    const int dim = rand_int(rng, 1, 3);
    const std::vector<CVector> pts = random_cloud(rng, dim, rand_int(rng, dim + 2, 16));
    const double eps = 1e-6;
    const MveeResult m = mvee_complex(pts, eps);
    for (std::size_t i = 1; i < m.gap_history.size(); ++i)
      if (m.gap_history[i] > m.gap_history[i - 1] + 1e-12) return Trial::fail("duality gap increased");
    for (const CVector& p : pts)
      if (m.ellipsoid.gauge(p) > 1.0 + eps) return Trial::fail("point outside the ellipsoid");
    if (m.eps_achieved > eps) return Trial::fail("gap target missed");
    return john_touchpoint_check(pts, m.ellipsoid, eps) ? Trial::ok() : Trial::fail("touching points do not span");
  });

  r.run("convex", "mvee_equivariance", base, [](Rng& rng, int) {
    const int dim = rand_int(rng, 1, 3);
    const std::vector<CVector> pts = random_cloud(rng, dim, rand_int(rng, dim + 2, 12));
    const CMatrix t = random_invertible(rng, dim, 10.0);
    const CVector shift = gaussian_vector(rng, dim);
    std::vector<CVector> moved;
    for (const CVector& p : pts) moved.push_back(t * p + shift);
    const ComplexEllipsoid e = mvee_complex(pts, 1e-6).ellipsoid;
    const ComplexEllipsoid f = mvee_complex(moved, 1e-6).ellipsoid;
    const double dc = (t * e.center + shift - f.center).norm() / std::max(1.0, f.center.norm());
    const double dh = inf_norm(CMatrix(t.adjoint() * f.H * t - e.H)) / inf_norm(e.H);
    return dc <= 1e-6 && dh <= 1e-6 ? Trial::ok() : Trial::fail("not equivariant: " + std::to_string(std::max(dc, dh)));
  });

  r.run("convex", "linear_closure", base, [](Rng& rng, int) {
    const int dim = rand_int(rng, 2, 4);
    const std::vector<CVector> y = sphere_points(rng, dim, rand_int(rng, 1, dim));
    const AffineHull h = linear_closure(y);
    std::vector<CVector> more = y;
    for (const CVector& p : sample_closure(h, rng, 6)) more.push_back(p);
    const AffineHull h2 = linear_closure(more);
    if (!h.contains(h2, 1e-8) || !h2.contains(h, 1e-8)) return Trial::fail("closure is not idempotent");
    std::vector<CVector> bigger = y;
    bigger.push_back(gaussian_vector(rng, dim).normalized());
    if (!linear_closure(bigger).contains(h, 1e-8)) return Trial::fail("closure is not monotone");
    const ClosureAudit a = audit_linear_closure(h, rng, 20);
    return a.escapes == 0 ? Trial::ok() : Trial::fail(std::to_string(a.escapes) + " abstract-line escapes");
  });
}

void verify_properties(Runner& r, int base, const RunConfig& cfg) {
  r.run("verify", "oracle_vs_exact", std::max(1, base / 10), [cfg](Rng& rng, int) {
    const int n = rand_int(rng, 1, 4);
    const QuadricBombon x = random_form(rng, n, true);
    RunConfig local = cfg;
    local.seed = rng();
    local.n_lines = 10;
    const AxiomReport rep = verify_axioms(quadric_oracle(x), local);
    Rng replay = make_rng(local.seed);
    int disagreements = 0;
    bool all_excluded = true;
    for (int i = 0; i < local.n_lines; ++i) {
      const ProjPoint p = sample_point(replay, n), q = sample_point(replay, n);
      const ProjLine line(p, q);
      const LineSection exact = classify_line_section(x, line);
      const double rho = circle_angular_radius(restrict_form(x, line.basis()).matrix());
      if (exact.low_confidence || (rho >= 0.0 && rho < kMinCapRadius)) continue;
      all_excluded = false;
      if (!shapes_agree(exact.tag, rep.lines[static_cast<std::size_t>(i)].shape)) ++disagreements;
    }
    if (disagreements > 0) return Trial::fail(std::to_string(disagreements) + " disagreements");
    if (!rep.consistent()) return Trial::fail("quadric reported as violating the axioms");
    return all_excluded ? Trial::skip() : Trial::ok();
  });

  r.run("verify", "point_star_elliptic", std::max(1, base / 10), [cfg](Rng& rng, int i) {
    const int n = rand_int(rng, 2, 4);
    const QuadricBombon x = form_with_counts(rng, n, 1, 0);
    const CVector core = x.signature().negative_vectors().col(0);
    CVector z = core;
    if (i % 2 == 1) {
      // Just inside V, next to X.
      const auto p = sample_on_quadric(x, rng);
      if (!p) return Trial::fail("no point on X found");
      // Align the core's phase so the offset strictly enters V.
      const Complex c = core.dot(p->unit());
      z = p->unit() + 1e-3 * (std::abs(c) > 0.0 ? c / std::abs(c) : Complex(1.0)) * core;
    }
    RunConfig local = cfg;
    local.seed = rng();
    local.n_lines = 20;
    const AxiomReport rep = verify_point_star(quadric_oracle(x), ProjPoint(z), local);
    int narrow = 0;
    for (const LineVerdict& v : rep.lines) {
      if (v.shape == LineShape::Circle) continue;
      const double rho = circle_angular_radius(restrict_form(x, v.basis).matrix());
      if (rho >= 0.0 && rho < kMinCapRadius) {
        ++narrow;
        continue;
      }
      return Trial::fail("a line through z missed the circle class: " + to_string(v.shape) + " rho " + std::to_string(rho) + " res " + std::to_string(v.fit_residual));
    }
    return narrow > 0 ? Trial::skip() : Trial::ok();
  });

  r.run("verify", "bidisk_violations", 1, [cfg](Rng&, int) {
    RunConfig local = cfg;
    local.n_lines = 50;
    const AxiomReport rep = verify_axioms(bidisk_oracle(), local);
    return rep.consistent() ? Trial::fail("bidisk boundary passed as a bombon") : Trial::ok();
  });
}

}  // namespace

SuiteReport theorem_suite(const RunConfig& cfg, const SuiteOptions& opt) {
  Runner r(cfg, opt);
  const int base = std::max(1, cfg.n_lines);
  projective_properties(r, base);
  quadric_properties(r, base);
  section_properties(r, base, cfg.tol);
  moebius_properties(r, base);
  group_properties(r, base);
  convex_properties(r, base);
  verify_properties(r, base, cfg);
  return SuiteReport{cfg, opt, r.take()};
}

json::Json to_json(const SuiteReport& r) {
  json::Json props = json::Json::array();
  int failed = 0;
  for (const PropertyResult& p : r.properties) {
    if (!p.passed()) ++failed;
    json::Json j{{"module", p.module}, {"name", p.name}, {"trials", p.trials},
                 {"failures", p.failures}, {"excluded", p.excluded}, {"status", p.passed() ? "pass" : "fail"}};
    if (!p.passed()) j["first_failure"] = p.first_failure;
    props.push_back(std::move(j));
  }
  return json::Json{{"version", BOMBON_VERSION},
                    {"config", to_json(r.config)},
                    {"fault_injection", r.options.corrupt_classifier},
                    {"properties", props},
                    {"passed", static_cast<int>(r.properties.size()) - failed},
                    {"failed", failed},
                    {"verdict", r.passed() ? "pass" : "fail"}};
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite seed " << r.config.seed << ", n_lines " << r.config.n_lines
     << (r.options.corrupt_classifier ? ", fault injection on" : "") << "\n";
  for (const PropertyResult& p : r.properties) {
    os << (p.passed() ? "PASS " : "FAIL ") << p.module << "." << p.name << " (" << p.trials << " trials, "
       << p.failures << " failures, " << p.excluded << " excluded)";
    if (!p.passed()) os << "  " << p.first_failure;
    os << "\n";
  }
  os << (r.passed() ? "all properties passed" : "some properties failed") << "\n";
  return os.str();
}

}  // namespace bombon
