#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>

#include "bombon/convex.hpp"
#include "bombon/error.hpp"
#include "bombon/group_actions.hpp"
#include "bombon/json_io.hpp"
#include "bombon/moebius.hpp"
#include "bombon/quadric.hpp"
#include "bombon/sections.hpp"
#include "bombon/suite.hpp"
#include "bombon/verify.hpp"

using namespace bombon;
using json::Json;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  double tol = 1e-9;
  std::string format = "json";
  std::string input;
  int n_lines = -1;
  bool fault_inject = false;
};

enum Exit { kOk = 0, kPropertyFailure = 1, kBadInput = 2 };

Json read_input(const Globals& g) {
  std::string text;
  if (g.input.empty() || g.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(g.input);
    if (!in) throw Error(ErrorCode::BadInput, "cannot open " + g.input);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return json::parse(text);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw Error(ErrorCode::BadInput, std::string("missing field \"") + name + "\"");
  return j.at(name);
}

double number(const Json& j, const char* name, double fallback) {
  if (!j.is_object() || !j.contains(name)) return fallback;
  if (!j.at(name).is_number()) throw Error(ErrorCode::BadInput, std::string("field \"") + name + "\" must be a number");
  return j.at(name).get<double>();
}

// Accepts either {"quadric": {...}} or the quadric object itself.
QuadricBombon quadric_of(const Json& j, const Globals& g) {
  const Tolerance tol{g.tol};
  if (j.is_object() && j.contains("quadric")) return json::quadric_from(j.at("quadric"), tol);
  return json::quadric_from(j, tol);
}

void emit_text(const Json& j, const std::string& indent = "") {
  if (!j.is_object()) {
    std::cout << indent << j.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      std::cout << indent << key << ":\n";
      emit_text(value, indent + "  ");
    } else {
      std::cout << indent << key << ": " << value.dump() << "\n";
    }
  }
}

void emit(const Globals& g, const Json& j) {
  if (g.format == "text")
    emit_text(j);
  else
    std::cout << j.dump(2) << "\n";
}

Json signature_json(const Signature& s) {
  return Json{{"n_pos", s.n_pos}, {"n_neg", s.n_neg}, {"n_zero", s.n_zero}, {"eigvals", json::to_json(s.eigvals)}};
}

int cmd_classify(const Globals& g) {
  const QuadricBombon x = quadric_of(read_input(g), g);
  emit(g, Json{{"type", json::to_json(bombon_type(x))},
               {"special", std::string(to_string(classify_special(x)))},
               {"smooth", x.smooth()},
               {"signature", signature_json(x.signature())}});
  return kOk;
}

int cmd_type(const Globals& g) {
  emit(g, json::to_json(bombon_type(quadric_of(read_input(g), g))));
  return kOk;
}

int cmd_section(const Globals& g) {
  const Json in = read_input(g);
  const QuadricBombon x = quadric_of(in, g);
  const Json& line = field(in, "line");
  if (!line.is_array() || line.size() != 2) throw Error(ErrorCode::BadInput, "\"line\" must hold two points");
  const ProjLine l(json::hvector_from(line[0]), json::hvector_from(line[1]));
  emit(g, json::to_json(classify_line_section(x, l)));
  return kOk;
}

int cmd_canonical(const Globals& g) {
  const QuadricBombon x = quadric_of(read_input(g), g);
  const CanonicalForm cf = canonical_form(x);
  emit(g, Json{{"type", json::to_json(cf.type)},
               {"T", json::to_json(cf.witness.T)},
               {"sign", cf.witness.sign_swapped ? -1 : 1},
               {"canonical", json::to_json(cf.canonical.matrix())},
               {"residual", cf.witness.residual(x.form(), cf.canonical)}});
  return kOk;
}

int cmd_equiv(const Globals& g) {
  const Json in = read_input(g);
  const Tolerance tol{g.tol};
  const QuadricBombon x = json::quadric_from(field(in, "X"), tol);
  const QuadricBombon y = json::quadric_from(field(in, "Y"), tol);
  try {
    const CongruenceWitness w = equivalence_witness(x, y);
    emit(g, Json{{"equivalent", true},
                 {"T", json::to_json(w.T)},
                 {"scale", w.scale},
                 {"sign_swapped", w.sign_swapped},
                 {"residual", w.residual(x.form(), y.form())}});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TypeMismatch) throw;
    emit(g, Json{{"equivalent", false}});
  }
  return kOk;
}

int cmd_join(const Globals& g) {
  const Json in = read_input(g);
  const QuadricBombon x = quadric_of(in, g);
  const CMatrix gamma = json::matrix_from(field(in, "gamma"));
  const CMatrix apex = json::matrix_from(field(in, "apex"));
  if (apex.rows() != gamma.rows()) throw Error(ErrorCode::BadInput, "gamma and apex differ in row count");
  const QuadricBombon j = join_with_apex(x, gamma, Subspace(apex));
  Json out = json::to_json(j);
  out["type"] = json::to_json(bombon_type(j));
  out["singular_locus"] = json::to_json(singular_locus(j));
  emit(g, out);
  return kOk;
}

int cmd_tangent(const Globals& g) {
  const Json in = read_input(g);
  const QuadricBombon x = quadric_of(in, g);
  const ProjPoint p(json::hvector_from(field(in, "x")));
  const Subspace t = tangent_space(x, p);
  emit(g, Json{{"tangent", json::to_json(t)}, {"singular_point", t.projective_dim() == x.ambient_dim() && x.ambient_dim() > 0}});
  return kOk;
}

int cmd_cores(const Globals& g) {
  const QuadricBombon x = quadric_of(read_input(g), g);
  const Cores c = cores(x);
  emit(g, Json{{"C_U", json::to_json(c.c_u)}, {"C_V", json::to_json(c.c_v)}, {"type", json::to_json(bombon_type(x))}});
  return kOk;
}

int cmd_orbit(const Globals& g) {
  const Json in = read_input(g);
  const QuadricBombon x = quadric_of(in, g);
  const CVector v = json::hvector_from(field(in, "x")).coords();
  const int samples = static_cast<int>(number(in, "samples", 8));
  if (samples < 1) throw Error(ErrorCode::BadInput, "\"samples\" must be positive");
  const CoreSplit split = core_split(x);
  const auto [u, w] = bundle_projection(x, split, v);
  Json orbit = Json::array();
  for (int k = 0; k < samples; ++k)
    orbit.push_back(json::to_json(ProjPoint(s1_action(x, split, 2.0 * std::numbers::pi * k / samples, v)).rep()));
  emit(g, Json{{"u", json::to_json(u.rep())}, {"v", json::to_json(w.rep())}, {"orbit", orbit}});
  return kOk;
}

int cmd_transport(const Globals& g) {
  const Json in = read_input(g);
  const QuadricBombon x = quadric_of(in, g);
  const ProjPoint from(json::hvector_from(field(in, "x")));
  const ProjPoint to(json::hvector_from(field(in, "y")));
  const TransportWitness w = homogeneity_transport(x, from, to);
  emit(g, Json{{"T", json::to_json(w.T)}, {"residual", w.residual}});
  return kOk;
}

int cmd_rotate(const Globals& g) {
  const Json in = read_input(g);
  const GenCircle c = json::circle_from(field(in, "circle"));
  const ProjPoint u(json::hvector_from(field(in, "u")));
  const double theta = number(in, "theta", 0.0);
  const MoebiusMap f = rotation(c, u, theta);
  emit(g, Json{{"matrix", json::to_json(CMatrix(f.matrix()))},
               {"fixed", Json::array({json::to_json(u.rep()), json::to_json(conjugate_point(c, u).rep())})}});
  return kOk;
}

int cmd_mvee(const Globals& g) {
  const Json in = read_input(g);
  const Json& pts = in.is_array() ? in : field(in, "points");
  if (!pts.is_array() || pts.empty()) throw Error(ErrorCode::BadInput, "need a nonempty point list");
  std::vector<CVector> points;
  for (const Json& p : pts) points.push_back(json::vector_from(p));
  const double eps = in.is_object() ? number(in, "eps", 1e-6) : 1e-6;
  const convex::MveeResult m = convex::mvee_complex(points, eps);
  Json out = json::to_json(m.ellipsoid);
  out["iterations"] = m.iterations;
  out["eps_achieved"] = m.eps_achieved;
  out["john_touchpoints_span"] = convex::john_touchpoint_check(points, m.ellipsoid, eps);
  emit(g, out);
  return kOk;
}

convex::ConvexBodyOracle body_of(const Json& b) {
  const std::string type = field(b, "type").get<std::string>();
  if (type == "ball") {
    const int dim = static_cast<int>(number(b, "dim", 2));
    return convex::ball(dim, number(b, "radius", 1.0));
  }
  if (type == "bidisk") return convex::polydisk(2);
  if (type == "ellipsoid") {
    const CMatrix h = json::matrix_from(field(b, "H"));
    const CVector c = b.contains("center") ? json::vector_from(b.at("center")) : CVector(CVector::Zero(h.rows()));
    if (h.rows() != h.cols() || c.size() != h.rows()) throw Error(ErrorCode::BadInput, "ellipsoid sizes disagree");
    return convex::ellipsoid_body({c, HermitianMatrix(h).matrix()});
  }
  throw Error(ErrorCode::BadInput, "unknown body type " + type);
}

int cmd_disksect(const Globals& g) {
  const Json in = read_input(g);
  const convex::ConvexBodyOracle body = body_of(field(in, "body"));
  const Json& line = field(in, "line");
  const convex::AffineComplexLine l(json::vector_from(field(line, "base")), json::vector_from(field(line, "direction")));
  if (l.base.size() != body.dim) throw Error(ErrorCode::BadInput, "line and body differ in dimension");
  emit(g, json::to_json(convex::disk_section_test(body, l, number(in, "tol", 1e-3))));
  return kOk;
}

int cmd_verify(const Globals& g) {
  const Json in = read_input(g);
  const Json& desc = field(in, "oracle");
  const std::string type = field(desc, "type").get<std::string>();
  OracleSet s;
  if (type == "quadric")
    s = quadric_oracle(quadric_of(desc, g));
  else if (type == "bidisk")
    s = bidisk_oracle();
  else
    throw Error(ErrorCode::BadInput, "unknown oracle type " + type);
  RunConfig cfg;
  cfg.seed = g.seed;
  cfg.output_format = g.format;
  cfg.n_lines = g.n_lines >= 0 ? g.n_lines : static_cast<int>(number(in, "n_lines", 200));
  const AxiomReport r = in.contains("point") ? verify_point_star(s, ProjPoint(json::hvector_from(in.at("point"))), cfg)
                                             : verify_axioms(s, cfg);
  if (g.format == "text")
    std::cout << to_text(r);
  else
    std::cout << to_json(r).dump(2) << "\n";
  return r.consistent() ? kOk : kPropertyFailure;
}

int cmd_suite(const Globals& g) {
  RunConfig cfg;
  cfg.seed = g.seed;
  cfg.output_format = g.format;
  cfg.n_lines = g.n_lines >= 0 ? g.n_lines : 100;
  const SuiteReport r = theorem_suite(cfg, SuiteOptions{g.fault_inject});
  if (g.format == "text")
    std::cout << to_text(r);
  else
    std::cout << to_json(r).dump(2) << "\n";
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian-quadric bombons in complex projective space"};
  app.set_version_flag("--version", BOMBON_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--tol", g.tol, "relative zero tolerance")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--input", g.input, "JSON input file (default: stdin)");

  struct Cmd {
    const char* name;
    const char* help;
    int (*run)(const Globals&);
  };
  const Cmd cmds[] = {
      {"classify", "type, special class and signature of a quadric", cmd_classify},
      {"section", "section of a quadric by a line", cmd_section},
      {"type", "bombon type (p, q)_n and singular dimension", cmd_type},
      {"canonical", "canonical form and congruence witness", cmd_canonical},
      {"equiv", "projective equivalence witness of two quadrics", cmd_equiv},
      {"join", "join of a quadric on a subspace with an apex", cmd_join},
      {"tangent", "tangent space at a point of the quadric", cmd_tangent},
      {"cores", "positive and negative cores", cmd_cores},
      {"orbit", "circle-action orbit of a point", cmd_orbit},
      {"transport", "pseudo-unitary map carrying x to y", cmd_transport},
      {"rotate", "rotation about a point preserving a circle of CP^1", cmd_rotate},
      {"mvee", "minimal-volume enclosing complex ellipsoid", cmd_mvee},
      {"disksect", "section of a convex body by a complex line", cmd_disksect},
      {"verify", "Monte-Carlo bombon-axiom check of an oracle set", cmd_verify},
      {"suite", "randomized property suite", cmd_suite},
  };
  int (*selected)(const Globals&) = nullptr;
  for (const Cmd& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->callback([&selected, &c] { selected = c.run; });
    if (std::string(c.name) == "verify" || std::string(c.name) == "suite")
      sub->add_option("--n-lines", g.n_lines, "lines (verify) or trial scale (suite)")->check(CLI::NonNegativeNumber);
    if (std::string(c.name) == "suite") sub->add_flag("--fault-inject", g.fault_inject, "corrupt the line classifier");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    return selected(g);
  } catch (const Error& e) {
    std::cout << Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << "\n";
    // Failed self-checks are property failures; everything else is the input's fault.
    switch (e.code()) {
      case ErrorCode::ExpectationViolated:
      case ErrorCode::OracleInconsistent:
      case ErrorCode::NoConvergence:
        return kPropertyFailure;
      default:
        return kBadInput;
    }
  } catch (const std::exception& e) {
    std::cout << Json{{"error", "BadInput"}, {"message", e.what()}}.dump() << "\n";
    return kBadInput;
  }
}
