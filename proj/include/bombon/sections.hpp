#pragma once

// Sections of a quadric bombon by lines and subspaces, the circle
// parametrization [s : t] -> (s i) a + (t c) b, and tangent hyperplanes.

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "bombon/quadric.hpp"
#include "bombon/random.hpp"

namespace bombon {

enum class SectionTag { Empty, SinglePoint, Circle, FullLine };
std::string_view to_string(SectionTag t);

/// Two isotropic vectors spanning the section line and the cross coefficient
/// c = sum_j eps_j a_j conj(b_j) = b* A a. The points (s i) a + (t c) b with
/// real (s, t) != (0, 0) sweep the circle.
struct CircleParam {
  CVector a;
  CVector b;
  Complex c;
};

/// Sides seen on the two components of L minus the circle (radii 0.5 and 2
/// after sending the circle to the unit circle).
struct TwoSidesReport {
  SideSign inner_side = SideSign::ON;
  SideSign outer_side = SideSign::ON;
  int samples_per_component = 0;
  bool consistent = false;  ///< every inner sample shares one strict side, every outer sample the other
};

struct LineSection {
  SectionTag tag = SectionTag::Empty;
  std::optional<ProjPoint> point;      ///< SinglePoint only
  std::optional<CircleParam> circle;   ///< Circle only
  std::optional<TwoSidesReport> sides; ///< Circle only
  RVector restricted_eigvals;          ///< eigenvalues of the form on an orthonormal basis of L
  bool low_confidence = false;         ///< an eigenvalue sits in [tau/10, 10 tau]
};

/// B* A B for the columns of `basis` (no orthonormalization applied).
HermitianMatrix restrict_form(const QuadricBombon& x, const CMatrix& basis);
/// Restriction to the orthonormal basis of S.
HermitianMatrix restrict_form(const QuadricBombon& x, const Subspace& s);

LineSection classify_line_section(const QuadricBombon& x, const ProjLine& line);

/// Point (s i) a + (t c) b.
ProjPoint circle_points(const CircleParam& cp, double s, double t);

/// Whole space at singular points, {x} when n = 1, else {y : x* A y = 0}.
/// Throws NotOnQuadric when |x* A x| > tau for the unit representative.
Subspace tangent_space(const QuadricBombon& x, const ProjPoint& p);

/// Lines through p inside / outside the tangent hyperplane, classified.
/// Lines whose restricted form is low-confidence are excluded and counted.
struct TangentAudit {
  int in_lines = 0;
  int out_lines = 0;
  int in_failures = 0;   ///< in-hyperplane lines classified Circle
  int out_failures = 0;  ///< transversal lines not classified Circle
  int excluded = 0;
  bool passed() const noexcept { return in_failures == 0 && out_failures == 0; }
};
TangentAudit audit_tangent_space(const QuadricBombon& x, const ProjPoint& p, Rng& rng, int lines_each = 64);

/// Bombon carried by a subspace H: `form` is written in the coordinates of
/// the orthonormal columns `basis`.
struct SubspaceBombon {
  QuadricBombon form;
  CMatrix basis;
};

/// Either H meets X in a bombon of H, or in a subspace (possibly empty).
using HyperSection = std::variant<SubspaceBombon, Subspace>;
HyperSection section_with_subspace(const QuadricBombon& x, const Subspace& h);

/// For a smooth, non-elliptic X and x on X, returns the unique singular
/// point of T_x X meet X, which must be x. Throws PreconditionViolated on
/// bad input and ExpectationViolated if the section misbehaves.
ProjPoint tangent_section_singular_point(const QuadricBombon& x, const ProjPoint& p);

/// Random line meeting X in a well-conditioned circle: it joins a random
/// point to a perturbed core point of the opposite side, so thin sides of
/// ill-conditioned forms are still reached.
std::optional<ProjLine> sample_circle_line(const QuadricBombon& x, Rng& rng, int max_tries = 64);

/// Random point of X: a uniform angle on the circle of sample_circle_line.
std::optional<ProjPoint> sample_on_quadric(const QuadricBombon& x, Rng& rng, int max_tries = 64);

}  // namespace bombon
