#include "bombon/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bombon/error.hpp"
#include "bombon/random.hpp"

namespace bombon {

OracleSet quadric_oracle(const QuadricBombon& x) {
  std::ostringstream d;
  d << "quadric n=" << x.ambient_dim();
  return {[x](const CVector& v) { return x.side(v); }, x.ambient_dim(), d.str()};
}

OracleSet bidisk_oracle(double band) {
  return {[band](const CVector& v) {
            const CVector u = v.normalized();
            const double g = std::max(std::abs(u[0]), std::abs(u[1])) - std::abs(u[2]);
            if (std::abs(g) <= band) return SideSign::ON;
            return g < 0.0 ? SideSign::U : SideSign::V;
          },
          2, "bidisk boundary in the chart x2 = 1"};
}

std::string to_string(LineShape s) {
  switch (s) {
    case LineShape::Empty: return "Empty";
    case LineShape::SinglePoint: return "SinglePoint";
    case LineShape::Circle: return "Circle";
    case LineShape::FullLine: return "FullLine";
    case LineShape::Nonconforming: return "Nonconforming";
  }
  return "?";
}

Eigen::Vector3d bloch_vector(const Vec2& x) {
  const Vec2 u = x.normalized();
  const Complex cross = std::conj(u[0]) * u[1];
  return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(u[0]) - std::norm(u[1])};
}

Vec2 bloch_point(const Eigen::Vector3d& s) {
  const double c = std::sqrt(std::max(0.0, (1.0 + s[2]) / 2.0));
  const double sn = std::sqrt(std::max(0.0, (1.0 - s[2]) / 2.0));
  const double phi = std::atan2(s[1], s[0]);
  return {Complex(c, 0.0), std::polar(sn, phi)};
}

double circle_angular_radius(const CMatrix& b) {
  const double tr = (b(0, 0) + b(1, 1)).real();
  const Eigen::Vector3d axis(2.0 * b(0, 1).real(), -2.0 * b(0, 1).imag(), (b(0, 0) - b(1, 1)).real());
  const double len = axis.norm();
  if (len <= std::abs(tr)) return -1.0;
  return std::acos(std::abs(tr) / len);
}

namespace {

std::vector<Eigen::Vector3d> fibonacci_sphere(int count) {
  std::vector<Eigen::Vector3d> pts;
  pts.reserve(static_cast<std::size_t>(count));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < count; ++k) {
    const double z = 1.0 - (2.0 * k + 1.0) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    pts.emplace_back(r * std::cos(golden * k), r * std::sin(golden * k), z);
  }
  return pts;
}

struct Sampled {
  std::vector<Eigen::Vector3d> pts;
  std::vector<SideSign> sides;
  int u = 0, v = 0, on = 0;
};

Sampled sample_grid(const OracleSet& s, const CMatrix& basis, int count, const std::vector<CVector>& seeds) {
  Sampled out;
  out.pts = fibonacci_sphere(count);
  for (const CVector& e : seeds) out.pts.push_back(bloch_vector(Vec2(basis.adjoint() * e)));
  for (const auto& p : out.pts) {
    const SideSign side = s.side(basis * bloch_point(p));
    out.sides.push_back(side);
    (side == SideSign::U ? out.u : side == SideSign::V ? out.v : out.on)++;
  }
  return out;
}

std::vector<Eigen::Vector3d> crossings(const OracleSet& s, const CMatrix& basis, const Sampled& g,
                                       const VerifyTolerances& tol) {
  std::vector<Eigen::Vector3d> out;
  const std::size_t m = g.pts.size();
  for (std::size_t i = 0; i < m; ++i)
    if (g.sides[i] == SideSign::ON) out.push_back(g.pts[i]);

  std::vector<std::pair<double, std::size_t>> near;
  for (std::size_t i = 0; i < m; ++i) {
    // Each unordered U/V pair is bisected once, from its U end.
    if (g.sides[i] != SideSign::U) continue;
    near.clear();
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) near.emplace_back((g.pts[i] - g.pts[j]).squaredNorm(), j);
    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(tol.neighbours), near.size());
    std::partial_sort(near.begin(), near.begin() + static_cast<std::ptrdiff_t>(k), near.end());
    for (std::size_t t = 0; t < k; ++t) {
      const std::size_t j = near[t].second;
      if (g.sides[j] != SideSign::V) continue;
      Eigen::Vector3d a = g.pts[i], b = g.pts[j];
      Eigen::Vector3d mid = (a + b).normalized();
      for (int step = 0; step < tol.bisection_steps; ++step) {
        mid = (a + b).normalized();
        const SideSign side = s.side(basis * bloch_point(mid));
        if (side == SideSign::ON) break;
        (side == SideSign::U ? a : b) = mid;
        mid = (a + b).normalized();
      }
      out.push_back(mid);
    }
  }
  return out;
}

bool clustered(const std::vector<Eigen::Vector3d>& pts, double radius) {
  for (const auto& p : pts)
    if ((p - pts.front()).norm() > radius) return false;
  return true;
}

bool check_two_sides(const OracleSet& s, const CMatrix& basis, const Eigen::Vector3d& normal, double offset) {
  const double rho = std::acos(std::clamp(offset, -1.0, 1.0));
  Eigen::Vector3d e1 = normal.unitOrthogonal();
  Eigen::Vector3d e2 = normal.cross(e1);
  SideSign inner = SideSign::ON, outer = SideSign::ON;
  for (int k = 0; k < 16; ++k) {
    const double beta = 2.0 * std::numbers::pi * k / 16.0;
    const Eigen::Vector3d dir = std::cos(beta) * e1 + std::sin(beta) * e2;
    for (int comp = 0; comp < 2; ++comp) {
      const double alpha = comp == 0 ? rho / 2.0 : (rho + std::numbers::pi) / 2.0;
      const SideSign side = s.side(basis * bloch_point(std::cos(alpha) * normal + std::sin(alpha) * dir));
      SideSign& slot = comp == 0 ? inner : outer;
      if (side == SideSign::ON) return false;
      if (k == 0) slot = side;
      else if (side != slot) return false;
    }
  }
  return inner != outer;
}

}  // namespace

LineVerdict classify_oracle_line(const OracleSet& s, const CMatrix& basis, const VerifyTolerances& tol,
                                 const std::vector<CVector>& seeds) {
  LineVerdict out;
  out.basis = basis;
  Sampled g = sample_grid(s, basis, tol.grid_points, seeds);
  if (g.u == 0 && g.v == 0) {
    out.shape = LineShape::FullLine;
    return out;
  }
  if (g.u == 0 || g.v == 0) g = sample_grid(s, basis, tol.dense_grid_points, seeds);
  if (g.u == 0 || g.v == 0) {
    std::vector<Eigen::Vector3d> on;
    for (std::size_t i = 0; i < g.pts.size(); ++i)
      if (g.sides[i] == SideSign::ON) on.push_back(g.pts[i]);
    if (on.empty()) out.shape = LineShape::Empty;
    else out.shape = clustered(on, tol.cluster_radius) ? LineShape::SinglePoint : LineShape::Nonconforming;
    return out;
  }

  const std::vector<Eigen::Vector3d> cross = crossings(s, basis, g, tol);
  out.crossings = static_cast<int>(cross.size());
  if (cross.size() < 3) {
    out.shape = LineShape::Nonconforming;
    return out;
  }
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (const auto& c : cross) centroid += c;
  centroid /= static_cast<double>(cross.size());
  Eigen::MatrixXd centered(static_cast<Eigen::Index>(cross.size()), 3);
  for (std::size_t i = 0; i < cross.size(); ++i) centered.row(static_cast<Eigen::Index>(i)) = (cross[i] - centroid).transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeFullV);
  Eigen::Vector3d normal = svd.matrixV().col(2);
  double offset = normal.dot(centroid);
  if (offset < 0.0) {
    normal = -normal;
    offset = -offset;
  }
  double residual = 0.0;
  for (const auto& c : cross) residual = std::max(residual, std::abs(normal.dot(c) - offset));
  out.plane_normal = normal;
  out.plane_offset = offset;
  out.fit_residual = residual;
  if (residual > tol.circle_residual || offset >= 1.0) {
    out.shape = LineShape::Nonconforming;
    return out;
  }
  out.shape = LineShape::Circle;
  out.low_confidence = std::acos(offset) < std::sqrt(4.0 * std::numbers::pi / tol.dense_grid_points);
  out.two_sides_ok = check_two_sides(s, basis, normal, offset);
  return out;
}

namespace {

void record(AxiomReport& r, LineVerdict v) {
  const int index = r.lines_tested++;
  r.tallies[v.shape]++;
  if (v.shape == LineShape::Nonconforming) r.nonconforming_lines.push_back(index);
  if (v.shape == LineShape::Circle && !v.two_sides_ok) r.two_sides_violations++;
  if (v.low_confidence) r.low_confidence_lines++;
  r.lines.push_back(std::move(v));
}

AxiomReport empty_report(const OracleSet& s, const RunConfig& cfg) {
  AxiomReport r;
  r.config = cfg;
  r.description = s.description;
  for (LineShape shape : {LineShape::Empty, LineShape::SinglePoint, LineShape::Circle, LineShape::FullLine,
                          LineShape::Nonconforming})
    r.tallies[shape] = 0;
  return r;
}

}  // namespace

AxiomReport verify_axioms(const OracleSet& s, const RunConfig& cfg) {
  AxiomReport r = empty_report(s, cfg);
  Rng rng = make_rng(cfg.seed);
  for (int i = 0; i < cfg.n_lines; ++i) {
    const ProjPoint p = sample_point(rng, s.ambient_dim);
    const ProjPoint q = sample_point(rng, s.ambient_dim);
    record(r, classify_oracle_line(s, ProjLine(p, q).basis(), cfg.tol));
  }
  return r;
}

AxiomReport verify_point_star(const OracleSet& s, const ProjPoint& z, const RunConfig& cfg) {
  if (z.ambient_dim() != s.ambient_dim) throw Error(ErrorCode::DimensionMismatch, "point and oracle differ in dimension");
  if (s.side(z.rep()) == SideSign::ON) throw Error(ErrorCode::PreconditionViolated, "star centre lies on the set");
  AxiomReport r = empty_report(s, cfg);
  Rng rng = make_rng(cfg.seed);
  for (int i = 0; i < cfg.n_lines; ++i) {
    const ProjPoint q = sample_point(rng, s.ambient_dim);
    record(r, classify_oracle_line(s, ProjLine(z, q).basis(), cfg.tol, {z.unit()}));
  }
  return r;
}

json::Json to_json(const RunConfig& cfg) {
  return json::Json{{"seed", cfg.seed},
                    {"n_lines", cfg.n_lines},
                    {"tolerances",
                     {{"grid_points", cfg.tol.grid_points},
                      {"dense_grid_points", cfg.tol.dense_grid_points},
                      {"bisection_steps", cfg.tol.bisection_steps},
                      {"neighbours", cfg.tol.neighbours},
                      {"circle_residual", cfg.tol.circle_residual},
                      {"cluster_radius", cfg.tol.cluster_radius}}},
                    {"output_format", cfg.output_format}};
}

json::Json to_json(const AxiomReport& r, bool include_lines) {
  json::Json tallies = json::Json::object();
  for (const auto& [shape, count] : r.tallies) tallies[to_string(shape)] = count;
  json::Json bad = json::Json::array();
  for (int idx : r.nonconforming_lines) {
    const LineVerdict& v = r.lines[static_cast<std::size_t>(idx)];
    bad.push_back({{"index", idx},
                   {"line", json::to_json(v.basis)},
                   {"crossings", v.crossings},
                   {"fit_residual", v.fit_residual}});
  }
  json::Json out{{"version", BOMBON_VERSION},
                 {"description", r.description},
                 {"config", to_json(r.config)},
                 {"lines_tested", r.lines_tested},
                 {"tallies", tallies},
                 {"two_sides_violations", r.two_sides_violations},
                 {"low_confidence_lines", r.low_confidence_lines},
                 {"nonconforming_lines", bad},
                 {"verdict", r.consistent() ? "ConsistentWithBombon" : "Violations"}};
  if (include_lines) {
    json::Json lines = json::Json::array();
    for (const LineVerdict& v : r.lines) lines.push_back(to_string(v.shape));
    out["line_shapes"] = lines;
  }
  return out;
}

std::string to_text(const AxiomReport& r) {
  std::ostringstream os;
  os << "oracle: " << r.description << "\n";
  os << "seed " << r.config.seed << ", lines " << r.lines_tested << "\n";
  for (const auto& [shape, count] : r.tallies) os << "  " << to_string(shape) << ": " << count << "\n";
  os << "two-sides violations: " << r.two_sides_violations << "\n";
  os << "low-confidence lines: " << r.low_confidence_lines << "\n";
  os << "nonconforming lines: " << r.nonconforming_lines.size() << "\n";
  os << "verdict: " << (r.consistent() ? "ConsistentWithBombon" : "Violations") << "\n";
  return os.str();
}

}  // namespace bombon
