// Desk-scale acceptance run: one PASS/FAIL line per criterion, exit code 1
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "bombon/convex.hpp"
#include "bombon/error.hpp"
#include "bombon/group_actions.hpp"
#include "bombon/sections.hpp"
#include "bombon/suite.hpp"
#include "oracles.hpp"

using namespace bombon;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int rand_int(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

QuadricBombon random_mixed(Rng& rng, int n, double cond = 1e3) {
  const SignatureCounts c = random_mixed_counts(rng, n, true);
  return QuadricBombon(random_hermitian_with_counts(rng, c.n_pos, c.n_neg, c.n_zero, cond));
}

QuadricBombon random_smooth(Rng& rng, int n, int min_pos, int min_neg) {
  const int pos = rand_int(rng, min_pos, n + 1 - min_neg);
  return QuadricBombon(random_hermitian_with_counts(rng, pos, n + 1 - pos, 0, 100.0));
}

bool agree(SectionTag t, oracle::GridTag g) {
  switch (t) {
    case SectionTag::Empty: return g == oracle::GridTag::Empty;
    case SectionTag::SinglePoint: return g == oracle::GridTag::SinglePoint;
    case SectionTag::Circle: return g == oracle::GridTag::Circle;
    case SectionTag::FullLine: return g == oracle::GridTag::FullLine;
  }
  return false;
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome line_section_oracle() {
  const auto t0 = Clock::now();
  Rng rng = make_rng(101);
  int disagreements = 0, low = 0;
  constexpr int kPairs = 1000;
  for (int i = 0; i < kPairs; ++i) {
    const int n = rand_int(rng, 1, 5);
    HermitianMatrix m = random_hermitian(rng, n + 1);
    while (!hermitian_eig(m).mixed()) m = random_hermitian(rng, n + 1);
    const QuadricBombon x(m);
    const ProjLine line(sample_point(rng, n), sample_point(rng, n));
    const LineSection s = classify_line_section(x, line);
    const oracle::GridTag g = oracle::grid_line_tag(m.matrix(), line.basis());
    if (s.low_confidence || g == oracle::GridTag::LowConfidence) {
        ++low;
        continue;
    }
    disagreements += agree(s.tag, g) ? 0 : 1;
  }
  const double secs = seconds_since(t0);
  return {disagreements == 0 && low < kPairs / 50 && secs < 10.0,
          fmt("%d disagreements, %d low-confidence of %d, %.2f s", disagreements, low, kPairs, secs)};
}

Outcome circle_parametrization() {
  Rng rng = make_rng(102);
  double worst = 0.0;
  int found = 0;
  while (found < 200) {
    const QuadricBombon x = random_mixed(rng, rand_int(rng, 1, 6));
    const auto line = sample_circle_line(x, rng);
    if (!line) continue;
    const LineSection s = classify_line_section(x, *line);
    if (s.tag != SectionTag::Circle) continue;
    ++found;
    for (int k = 0; k < 32; ++k) {
      const double phi = std::numbers::pi * k / 32;
      const double v = std::abs(x.value(circle_points(*s.circle, std::cos(phi), std::sin(phi)).unit()));
      worst = std::max(worst, v / x.form().norm_inf());
    }
  }
  return {worst <= 1e-9, fmt("200 circles, max |x*Ax| / |A| = %.2e", worst)};
}

Outcome fullness() {
  Rng rng = make_rng(103);
  int bad = 0;
  for (int i = 0; i < 500; ++i) {
    const BombonType t = bombon_type(random_mixed(rng, rand_int(rng, 1, 6)));
    bad += t.p + t.q + t.sing_dim == t.n - 2 ? 0 : 1;
  }
  return {bad == 0, fmt("%d of 500 forms violate p + q + dim sing = n - 2", bad)};
}

Outcome equivalence_witnesses() {
  Rng rng = make_rng(104);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int n = rand_int(rng, 1, 6);
    const SignatureCounts c = random_mixed_counts(rng, n, true);
    const QuadricBombon x(random_hermitian_with_counts(rng, c.n_pos, c.n_neg, c.n_zero));
    const bool swap = i % 2 == 1;
    const QuadricBombon y(random_hermitian_with_counts(rng, swap ? c.n_neg : c.n_pos, swap ? c.n_pos : c.n_neg, c.n_zero));
    const CongruenceWitness w = equivalence_witness(x, y);
    const CMatrix r = w.T.adjoint() * x.matrix() * w.T - w.signed_scale() * y.matrix();
    worst = std::max(worst, oracle::max_row_sum(r) / x.form().norm_inf());
  }
  int mismatches = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = rand_int(rng, 2, 6);
    SignatureCounts c = random_mixed_counts(rng, n, true), d = random_mixed_counts(rng, n, true);
    while (std::min(c.n_pos, c.n_neg) == std::min(d.n_pos, d.n_neg) && c.n_zero == d.n_zero)
      d = random_mixed_counts(rng, n, true);
    try {
      equivalence_witness(QuadricBombon(random_hermitian_with_counts(rng, c.n_pos, c.n_neg, c.n_zero)),
                          QuadricBombon(random_hermitian_with_counts(rng, d.n_pos, d.n_neg, d.n_zero)));
    } catch (const Error& e) {
      mismatches += e.code() == ErrorCode::TypeMismatch;
    }
  }
  return {worst <= 1e-8 && mismatches == 100,
          fmt("max |T*AT - lambda B| / |A| = %.2e, %d of 100 mismatched pairs rejected", worst, mismatches)};
}

Outcome tangent_audit() {
  Rng rng = make_rng(105);
  int failures = 0, excluded = 0, lines = 0;
  for (int i = 0; i < 100; ++i) {
    const QuadricBombon x = random_smooth(rng, rand_int(rng, 2, 6), 1, 1);
    const auto p = sample_on_quadric(x, rng);
    if (!p) return {false, "no point on X found"};
    const TangentAudit a = audit_tangent_space(x, *p, rng, 64);
    failures += a.in_failures + a.out_failures;
    excluded += a.excluded;
    lines += a.in_lines + a.out_lines;
  }
  return {failures == 0, fmt("%d failures over %d lines, %d excluded near tau", failures, lines, excluded)};
}

Outcome tangent_singular_point() {
  Rng rng = make_rng(106);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const QuadricBombon x = random_smooth(rng, rand_int(rng, 3, 6), 2, 2);
    const auto p = sample_on_quadric(x, rng);
    if (!p) return {false, "no point on X found"};
    try {
      worst = std::max(worst, oracle::line_sine(tangent_section_singular_point(x, *p).unit(), p->unit()));
    } catch (const Error& e) {
      return {false, e.what()};
    }
  }
  return {worst <= 1e-8, fmt("100 tangent hypersections, max direction error %.2e", worst)};
}

Outcome circle_action() {
  Rng rng = make_rng(107);
  double worst_value = 0.0, worst_line = 0.0;
  int fixed_bad = 0;
  for (int i = 0; i < 100; ++i) {
    const QuadricBombon x = random_smooth(rng, rand_int(rng, 1, 6), 1, 1);
    const CoreSplit sp = core_split(x);
    const auto p = sample_on_quadric(x, rng);
    if (!p) return {false, "no point on X found"};
    const auto [u, v] = bundle_projection(x, sp, p->unit());
    const Subspace line(ProjLine(u, v).basis());
    for (int k = 0; k < 32; ++k) {
      const CVector o = s1_action(x, sp, 2 * std::numbers::pi * k / 32, p->unit());
      worst_value = std::max(worst_value, std::abs(x.value(o)));
      worst_line = std::max(worst_line, (o.normalized() - line.projector() * o.normalized()).norm());
    }
    const Cores c = cores(x);
    const double theta = 1.0 + i % 4;
    for (const Subspace* core : {&c.c_u, &c.c_v}) {
      const CVector q = core->basis() * gaussian_vector(rng, core->basis().cols());
      fixed_bad += oracle::line_sine(s1_action(x, sp, theta, q), q) <= 1e-12 ? 0 : 1;
    }
    const CVector g = gaussian_vector(rng, x.ambient_dim() + 1);
    fixed_bad += oracle::line_sine(s1_action(x, sp, theta, g), g) > 1e-6 ? 0 : 1;
  }
  return {worst_value <= 1e-9 && worst_line <= 1e-9 && fixed_bad == 0,
          fmt("orbit |value| <= %.2e, off-line <= %.2e, %d fixed-point mismatches", worst_value, worst_line, fixed_bad)};
}

Outcome homogeneity() {
  Rng rng = make_rng(108);
  double worst_res = 0.0, worst_dir = 0.0;
  for (int i = 0; i < 100; ++i) {
    const QuadricBombon x = random_smooth(rng, rand_int(rng, 1, 6), 1, 1);
    const auto p = sample_on_quadric(x, rng), q = sample_on_quadric(x, rng);
    if (!p || !q) return {false, "no point on X found"};
    const TransportWitness w = homogeneity_transport(x, *p, *q);
    const CMatrix r = w.T.adjoint() * x.matrix() * w.T - x.matrix();
    worst_res = std::max(worst_res, oracle::max_row_sum(r) / x.form().norm_inf());
    worst_dir = std::max(worst_dir, oracle::line_sine(w.T * p->unit(), q->unit()));
  }
  return {worst_res <= 1e-8 && worst_dir <= 1e-8,
          fmt("100 pairs, residual / |A| <= %.2e, [Tx] vs [y] <= %.2e", worst_res, worst_dir)};
}

Outcome disk_sections() {
  using namespace convex;
  Rng rng = make_rng(109);
  const int dim = 2;
  const CMatrix g = gaussian_matrix(rng, dim, dim);
  const ComplexEllipsoid el{CVector(0.2 * gaussian_vector(rng, dim)), CMatrix(g.adjoint() * g + 0.3 * CMatrix::Identity(dim, dim))};
  const ConvexBodyOracle body = ellipsoid_body(el);
  int not_disk = 0, disks = 0;
  for (int i = 0; i < 500; ++i) {
    const AffineComplexLine line(CVector(0.5 * gaussian_vector(rng, dim)), gaussian_vector(rng, dim));
    const DiskVerdict v = disk_section_test(body, line, 1e-3);
    not_disk += v.tag == DiskTag::NotADisk;
    disks += v.tag == DiskTag::Disk;
  }
  const ConvexBodyOracle bidisk = polydisk(2);
  int batches_ok = 0;
  constexpr int kBatches = 5;
  for (int b = 0; b < kBatches; ++b) {
    int found = 0;
    for (int i = 0; i < 100; ++i) {
      const AffineComplexLine line(CVector(0.5 * gaussian_vector(rng, 2)), gaussian_vector(rng, 2));
      found += disk_section_test(bidisk, line, 1e-3).tag == DiskTag::NotADisk;
    }
    batches_ok += found > 0;
  }
  return {not_disk == 0 && batches_ok == kBatches,
          fmt("ellipsoid: %d of 500 not disks (%d disks); bidisk: %d of %d batches found a non-disk", not_disk, disks,
              batches_ok, kBatches)};
}

Outcome mvee() {
  using namespace convex;
  auto e = [](int dim, int i) { return CVector(CVector::Unit(dim, i)); };
  double worst = 0.0;
  for (int dim = 1; dim <= 3; ++dim) {
    std::vector<CVector> pts;
    for (int i = 0; i < dim; ++i) {
      pts.push_back(e(dim, i));
      pts.push_back(-e(dim, i));
      pts.push_back(Complex(0, 1) * e(dim, i));
    }
    const ComplexEllipsoid el = mvee_complex(pts, 1e-6).ellipsoid;
    worst = std::max({worst, el.center.norm(), (el.H - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff()});
  }
  Rng rng = make_rng(110);
  bool monotone = true;
  double equi = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int dim = rand_int(rng, 1, 3);
    std::vector<CVector> pts, moved;
    for (int i = rand_int(rng, dim + 2, 12); i > 0; --i) pts.push_back(gaussian_vector(rng, dim));
    const CMatrix tm = random_invertible(rng, dim, 10.0);
    const CVector shift = gaussian_vector(rng, dim);
    for (const CVector& p : pts) moved.push_back(tm * p + shift);
    const MveeResult a = mvee_complex(pts, 1e-6), b = mvee_complex(moved, 1e-6);
    for (std::size_t k = 1; k < a.gap_history.size(); ++k) monotone = monotone && a.gap_history[k] <= a.gap_history[k - 1];
    const ComplexEllipsoid& ea = a.ellipsoid;
    const ComplexEllipsoid& eb = b.ellipsoid;
    equi = std::max({equi, (tm * ea.center + shift - eb.center).norm() / std::max(1.0, eb.center.norm()),
                     oracle::max_row_sum(CMatrix(tm.adjoint() * eb.H * tm - ea.H)) / oracle::max_row_sum(ea.H)});
  }
  return {worst <= 1e-5 && monotone && equi <= 1e-6,
          fmt("symmetric sets within %.2e of (0, I); gap monotone: %s; equivariance %.2e", worst,
              monotone ? "yes" : "no", equi)};
}

Outcome full_suite() {
  RunConfig cfg;
  cfg.seed = 1;
  cfg.n_lines = 100;
  const auto t0 = Clock::now();
  const SuiteReport a = theorem_suite(cfg);
  const double secs = seconds_since(t0);
  const SuiteReport b = theorem_suite(cfg);
  const bool identical = to_json(a).dump() == to_json(b).dump();
  int failed = 0;
  std::string first;
  for (const PropertyResult& p : a.properties)
    if (!p.passed()) {
      if (failed++ == 0) first = " first: " + p.module + "." + p.name;
      }
  return {a.passed() && identical && secs < 60.0,
          fmt("%zu properties, %d failed, %.2f s, reruns identical: %s", a.properties.size(), failed, secs,
              identical ? "yes" : "no") +
              first};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"line sections match the value-grid oracle", line_section_oracle},
      {"circle parametrization lands on the quadric", circle_parametrization},
      {"fullness identity", fullness},
      {"equivalence witnesses and type mismatches", equivalence_witnesses},
      {"tangent hyperplane audit", tangent_audit},
      {"tangent hypersection is singular exactly at x", tangent_singular_point},
      {"circle action orbits and fixed points", circle_action},
      {"homogeneity transport", homogeneity},
      {"convex sections: ellipsoid disks, bidisk non-disks", disk_sections},
      {"MVEE recovery, certificate and equivariance", mvee},
      {"full suite deterministic and under 60 s", full_suite},
  };
  int failures = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s AC%02d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
  }
  std::printf("%d of %d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
