#include "bombon/json_io.hpp"

#include "bombon/error.hpp"

namespace bombon::json {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

Json to_json(const CMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const RVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Json to_json(const BombonType& t) {
  return Json{{"p", t.p}, {"q", t.q}, {"n", t.n}, {"sing_dim", t.sing_dim}, {"full", t.full()}};
}

Json to_json(const QuadricBombon& x) { return Json{{"n", x.ambient_dim()}, {"A", to_json(x.matrix())}}; }

Json to_json(const Subspace& s) {
  return Json{{"dim", s.projective_dim()}, {"basis", to_json(s.basis())}};
}

Json to_json(const LineSection& s) {
  Json out{{"tag", std::string(to_string(s.tag))}, {"low_confidence", s.low_confidence},
           {"restricted_eigvals", to_json(s.restricted_eigvals)}};
  if (s.point) out["point"] = to_json(s.point->rep());
  if (s.circle) {
    out["c"] = to_json(s.circle->c);
    out["a"] = to_json(s.circle->a);
    out["b"] = to_json(s.circle->b);
  }
  if (s.sides) {
    out["sides"] = Json{{"inner", std::string(to_string(s.sides->inner_side))},
                        {"outer", std::string(to_string(s.sides->outer_side))},
                        {"samples_per_component", s.sides->samples_per_component},
                        {"consistent", s.sides->consistent}};
  }
  return out;
}

Json to_json(const convex::ComplexEllipsoid& e) {
  return Json{{"center", to_json(e.center)}, {"H", to_json(e.H)}};
}

Json to_json(const convex::DiskVerdict& v) {
  Json out{{"tag", convex::to_string(v.tag)}};
  if (v.tag == convex::DiskTag::Disk || v.tag == convex::DiskTag::Point) out["center"] = to_json(v.center);
  if (v.tag == convex::DiskTag::Disk) out["radius"] = v.radius;
  if (v.tag == convex::DiskTag::Disk || v.tag == convex::DiskTag::NotADisk) out["deviation"] = v.deviation;
  return out;
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadInput, what); }

}  // namespace

Complex complex_from(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  bad("expected a complex scalar [re, im]");
}

CVector vector_from(const Json& j) {
  if (!j.is_array() || j.empty()) bad("expected a nonempty array of complex scalars");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = complex_from(j[i]);
  return v;
}

CMatrix matrix_from(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) bad("expected a row-major matrix");
  const std::size_t cols = j[0].size();
  CMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) bad("matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from(j[r][c]);
  }
  return m;
}

HVector hvector_from(const Json& j) {
  try {
    return HVector(vector_from(j));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BadInput) throw;
    bad(e.what());
  }
}

QuadricBombon quadric_from(const Json& j, const Tolerance& tol) {
  const Json* a = &j;
  if (j.is_object()) {
    if (!j.contains("A")) bad("quadric needs field \"A\"");
    a = &j.at("A");
  }
  const CMatrix m = matrix_from(*a);
  if (m.rows() != m.cols()) bad("quadric matrix must be square");
  if (j.is_object() && j.contains("n") && j.at("n").get<long>() != m.rows() - 1)
    bad("quadric \"n\" disagrees with the matrix size");
  try {
    return QuadricBombon(HermitianMatrix(m), tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotABombon) throw;
    bad(e.what());
  }
}

GenCircle circle_from(const Json& j) {
  const CMatrix m = matrix_from(j.is_object() ? j.at("matrix") : j);
  if (m.rows() != 2 || m.cols() != 2) bad("circle form must be 2x2");
  const HermitianMatrix h{m};
  return GenCircle(h.matrix());
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace bombon::json
