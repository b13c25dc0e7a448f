#pragma once

#include <array>
#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <string_view>

namespace twistcert {

// Closed surface. For nonorientable surfaces genus counts projective planes.
struct SurfaceSpec {
  bool orientable = true;
  int genus = 1;

  // "o:<g>" or "n:<g>"
  static SurfaceSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

// Topological type of one side of a separating curve: a surface with one
// boundary component.
struct SideType {
  bool orientable = true;
  int genus = 1;

  // Genus of the closed surface obtained by capping, counted in crosscaps.
  int crosscaps() const { return orientable ? 2 * genus : genus; }
  std::string to_string() const;  // "o<g>" or "n<g>"

  friend bool operator==(const SideType&, const SideType&) = default;
  friend auto operator<=>(const SideType&, const SideType&) = default;
};

// Two-sided curve class up to homeomorphism of the surface.
struct CurveClass {
  enum class Kind { kSeparating, kNonseparating };

  Kind kind = Kind::kNonseparating;
  std::array<SideType, 2> sides{};  // separating only
  bool complement_orientable = true;  // nonseparating only

  static CurveClass nonseparating(bool complement_orientable);
  static CurveClass separating(SideType a, SideType b);

  // "sep:<side>,<side>" with side = o<g> | n<g>, "nonsep:oc", "nonsep:nc"
  static CurveClass parse(std::string_view text);
  std::string to_string() const;

  bool separating_curve() const { return kind == Kind::kSeparating; }

  friend bool operator==(const CurveClass& a, const CurveClass& b);
};

// Canonical form of the pair: separating sides sorted (orientable first, then
// by genus). Throws Unrealizable when no such curve exists on the surface,
// including curves bounding a disc or a Moebius band.
CurveClass classify(const SurfaceSpec& surface, const CurveClass& curve);

enum class Flavor { kExtendedGroup, kTwistSubgroup, kEvenPower };

std::string_view flavor_name(Flavor f);

enum class Theorem { kExtended, kTwist, kEvenPower };

std::string_view theorem_name(Theorem t);

// Non-twist part of the second commutator entry.
enum class YChoice { kR, kRH, kS };

std::string_view y_choice_name(YChoice y);

// Determinant of the reflection on H_1(S; R), when it is known.
enum class ReflectionDet { kPlus, kMinus, kUnknown, kNotApplicable };

std::string_view reflection_det_name(ReflectionDet d);

struct TheoremCase {
  Theorem theorem = Theorem::kExtended;
  std::string case_id;
  int genus_bound = 0;
  YChoice y_choice = YChoice::kR;
  ReflectionDet reflection_det = ReflectionDet::kNotApplicable;
  std::optional<int> figure2_k;  // orientable complement: g = 2(k + 3)
  bool forced_rh = false;        // reflection det unknown, rh emitted
  bool in_twist_subgroup = false;  // the commutator entries lie in T(S)
  SurfaceSpec surface;
  CurveClass curve;
};

// Case of the construction that applies to (surface, curve) for the flavor.
// For kEvenPower the twist-subgroup variant is chosen whenever the complement
// of the curve supports a homeomorphism that is not a product of twists.
// Throws Unrealizable, NotCovered (hypotheses fail) or OutOfScope (the
// conjectural twist-subgroup cases: nonseparating with nonorientable
// complement and g = 7; orientable complement and g = 0 mod 4).
TheoremCase select_case(const SurfaceSpec& surface, const CurveClass& curve, Flavor flavor);

// True when S \ c is nonorientable of genus at least 2 (for a separating
// curve: one of its sides is).
bool complement_supports_crosscap_slide(const SurfaceSpec& surface, const CurveClass& curve);

// Whether a side can contain the three-holed torus T with the reflection
// extending to it and c1 as its boundary.
bool side_admits_torus(const SideType& side);

struct SclBound {
  boost::rational<long> value;
  std::string group;  // "M^(S)" or "T(S)"
  std::string justification;
};

SclBound scl_upper_bound(const TheoremCase& tc);

}  // namespace twistcert
