#include "bombon/sections.hpp"

#include <cmath>
#include <numbers>

#include "bombon/error.hpp"
#include "bombon/moebius.hpp"

namespace bombon {

std::string_view to_string(SectionTag t) {
  switch (t) {
    case SectionTag::Empty: return "Empty";
    case SectionTag::SinglePoint: return "SinglePoint";
    case SectionTag::Circle: return "Circle";
    case SectionTag::FullLine: return "FullLine";
  }
  return "?";
}

HermitianMatrix restrict_form(const QuadricBombon& x, const CMatrix& basis) {
  if (basis.rows() != x.form().size()) throw Error(ErrorCode::DimensionMismatch, "basis lives elsewhere");
  return x.form().congruence(basis);
}

HermitianMatrix restrict_form(const QuadricBombon& x, const Subspace& s) {
  if (s.empty()) throw Error(ErrorCode::PreconditionViolated, "cannot restrict to the empty subspace");
  return restrict_form(x, s.basis());
}

namespace {

TwoSidesReport sample_two_sides(const QuadricBombon& x, const CMatrix& basis, const Signature& sig) {
  // y = (sqrt(l+) alpha, sqrt|l-| beta) in the eigenbasis (e+, e-) turns the
  // restricted form into |y0|^2 - |y1|^2, whose zero set in the chart
  // w = y1 / y0 is the unit circle. Sampled values stay above 0.6 min |l|.
  const CVector e_pos = basis * sig.eigbasis.col(1) / std::sqrt(sig.eigvals[1]);
  const CVector e_neg = basis * sig.eigbasis.col(0) / std::sqrt(-sig.eigvals[0]);
  constexpr int kAngles = 16;
  TwoSidesReport report;
  report.samples_per_component = kAngles;
  bool inner_ok = true;
  bool outer_ok = true;
  for (int k = 0; k < kAngles; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / kAngles;
    for (double r : {0.5, 2.0}) {
      const CVector pt = e_pos + std::polar(r, phi) * e_neg;
      const SideSign side = x.side(pt);
      SideSign& slot = r < 1.0 ? report.inner_side : report.outer_side;
      bool& ok = r < 1.0 ? inner_ok : outer_ok;
      if (k == 0)
        slot = side;
      else if (side != slot)
        ok = false;
    }
  }
  report.consistent = inner_ok && outer_ok && report.inner_side != SideSign::ON &&
                      report.outer_side != SideSign::ON && report.inner_side != report.outer_side;
  return report;
}

}  // namespace

LineSection classify_line_section(const QuadricBombon& x, const ProjLine& line) {
  if (line.ambient_dim() != x.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "line lives elsewhere");
  const CMatrix& basis = line.basis();
  const HermitianMatrix restricted = restrict_form(x, basis);
  const Signature sig = hermitian_eig(restricted, x.tolerance());
  const double tau = x.tau();

  LineSection out;
  out.restricted_eigvals = sig.eigvals;
  int pos = 0, neg = 0;
  for (Eigen::Index i = 0; i < 2; ++i) {
    const double lam = sig.eigvals[i];
    if (lam > tau) ++pos;
    if (lam < -tau) ++neg;
    if (std::abs(lam) >= tau / 10.0 && std::abs(lam) <= 10.0 * tau) out.low_confidence = true;
  }

  if (pos == 1 && neg == 1) {
    out.tag = SectionTag::Circle;
    const double lam_neg = -sig.eigvals[0];
    const double lam_pos = sig.eigvals[1];
    const CVector e_neg = sig.eigbasis.col(0);
    const CVector e_pos = sig.eigbasis.col(1);
    const CVector w1 = std::sqrt(lam_neg) * e_pos + std::sqrt(lam_pos) * e_neg;
    const CVector w2 = std::sqrt(lam_neg) * e_pos - std::sqrt(lam_pos) * e_neg;
    CircleParam cp;
    cp.a = (basis * w1).normalized();
    cp.b = (basis * w2).normalized();
    cp.c = x.form().sesquilinear(cp.b, cp.a);
    out.circle = cp;
    out.sides = sample_two_sides(x, basis, sig);
  } else if (pos + neg == 2) {
    out.tag = SectionTag::Empty;
  } else if (pos + neg == 1) {
    out.tag = SectionTag::SinglePoint;
    const Eigen::Index k = std::abs(sig.eigvals[0]) <= tau ? 0 : 1;
    out.point = ProjPoint(CVector(basis * sig.eigbasis.col(k)));
  } else {
    out.tag = SectionTag::FullLine;
  }
  return out;
}

ProjPoint circle_points(const CircleParam& cp, double s, double t) {
  if (s == 0.0 && t == 0.0) throw Error(ErrorCode::ZeroVector, "(s, t) must not both vanish");
  const CVector v = Complex(0.0, s) * cp.a + (t * cp.c) * cp.b;
  return ProjPoint(v);
}

Subspace tangent_space(const QuadricBombon& x, const ProjPoint& p) {
  if (p.ambient_dim() != x.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "point lives elsewhere");
  const CVector u = p.unit();
  if (std::abs(x.form().quadratic(u)) > x.tau()) throw Error(ErrorCode::NotOnQuadric, "point is not on X");
  const CVector w = x.matrix() * u;
  if (w.norm() <= x.tau()) return Subspace::whole(x.ambient_dim());
  if (x.ambient_dim() == 1) return Subspace(CMatrix(u));
  // u* A y = <y, A u> = 0
  return Subspace(null_space(CMatrix(w.adjoint())));
}

TangentAudit audit_tangent_space(const QuadricBombon& x, const ProjPoint& p, Rng& rng, int lines_each) {
  TangentAudit audit;
  const int n = x.ambient_dim();
  if (n == 1) return audit;
  const Subspace t = tangent_space(x, p);
  const CVector u = p.unit();

  for (int i = 0; i < lines_each; ++i) {
    const CVector y = t.basis() * gaussian_vector(rng, t.basis().cols());
    if (projective_distance(y, u) < 1e-6) continue;
    const LineSection s = classify_line_section(x, ProjLine(HVector(u), HVector(y)));
    ++audit.in_lines;
    if (s.low_confidence) {
      ++audit.excluded;
      continue;
    }
    if (s.tag == SectionTag::Circle) ++audit.in_failures;
  }
  if (t.projective_dim() == n) return audit;
  for (int i = 0; i < lines_each; ++i) {
    const CVector y = gaussian_vector(rng, n + 1);
    if (t.contains(y, 1e-6)) continue;
    const LineSection s = classify_line_section(x, ProjLine(HVector(u), HVector(y)));
    ++audit.out_lines;
    if (s.low_confidence) {
      ++audit.excluded;
      continue;
    }
    if (s.tag != SectionTag::Circle) ++audit.out_failures;
  }
  return audit;
}

HyperSection section_with_subspace(const QuadricBombon& x, const Subspace& h) {
  if (h.projective_dim() < 1) throw Error(ErrorCode::PreconditionViolated, "subspace must have dimension >= 1");
  const HermitianMatrix m = restrict_form(x, h);
  const Signature sig = hermitian_eig(m, x.tolerance());
  const double tau = x.tau();
  int pos = 0, neg = 0;
  for (Eigen::Index i = 0; i < sig.eigvals.size(); ++i) {
    if (sig.eigvals[i] > tau) ++pos;
    if (sig.eigvals[i] < -tau) ++neg;
  }
  if (pos > 0 && neg > 0) return SubspaceBombon{QuadricBombon(m, x.tolerance()), h.basis()};
  Signature ambient_sig = sig;
  ambient_sig.tau = tau;
  const CMatrix kernel = ambient_sig.kernel_vectors();
  if (kernel.cols() == 0) return Subspace(x.ambient_dim());
  return Subspace(CMatrix(h.basis() * kernel));
}

ProjPoint tangent_section_singular_point(const QuadricBombon& x, const ProjPoint& p) {
  if (!x.smooth()) throw Error(ErrorCode::PreconditionViolated, "X must be smooth");
  if (classify_special(x) == SpecialClass::Elliptic)
    throw Error(ErrorCode::PreconditionViolated, "X must not be elliptic");
  const Subspace t = tangent_space(x, p);
  const HyperSection sect = section_with_subspace(x, t);
  const auto* bombon = std::get_if<SubspaceBombon>(&sect);
  if (bombon == nullptr) throw Error(ErrorCode::ExpectationViolated, "tangent hypersection is a subspace");
  const CMatrix kernel = bombon->form.signature().kernel_vectors();
  if (kernel.cols() != 1)
    throw Error(ErrorCode::ExpectationViolated, "tangent hypersection has singular locus of wrong dimension");
  const CVector k = (bombon->basis * kernel.col(0)).normalized();
  const CVector u = p.unit();
  const double sine = (u - k * k.dot(u)).norm();
  if (sine > 1e-8) throw Error(ErrorCode::ExpectationViolated, "singular point of the section differs from x");
  return ProjPoint(k);
}

std::optional<ProjLine> sample_circle_line(const QuadricBombon& x, Rng& rng, int max_tries) {
  const int n = x.ambient_dim();
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    const ProjPoint p = sample_point(rng, n);
    const SideSign sp = x.side(p.rep());
    if (sp == SideSign::ON) continue;
    const CMatrix core = sp == SideSign::U ? x.signature().negative_vectors() : x.signature().positive_vectors();
    const CVector c = (core * gaussian_vector(rng, core.cols())).normalized();
    CVector q = c + 0.25 * gaussian_vector(rng, n + 1);
    if (x.side(q) == sp || x.side(q) == SideSign::ON) q = c;
    if (projective_distance(p.rep(), q) < 1e-6) continue;
    const ProjLine line(HVector(p.rep()), HVector(q));
    const LineSection s = classify_line_section(x, line);
    if (s.tag == SectionTag::Circle && !s.low_confidence) return line;
  }
  return std::nullopt;
}

std::optional<ProjPoint> sample_on_quadric(const QuadricBombon& x, Rng& rng, int max_tries) {
  const auto line = sample_circle_line(x, rng, max_tries);
  if (!line) return std::nullopt;
  const LineSection s = classify_line_section(x, *line);
  const double angle = uniform(rng, 0.0, std::numbers::pi);
  return circle_points(*s.circle, std::cos(angle), std::sin(angle));
}

}  // namespace bombon
