#include "twistcert/surfaces.h"

#include <algorithm>
#include <charconv>

#include "twistcert/error.h"
#include "twistcert/homology.h"

namespace twistcert {

namespace {

int parse_positive(std::string_view digits, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError("bad genus in '" + std::string(context) + "'");
  }
  return value;
}

SideType parse_side(std::string_view text, std::string_view context) {
  if (text.size() < 2 || (text[0] != 'o' && text[0] != 'n')) {
    throw ParseError("side must be o<genus> or n<genus> in '" + std::string(context) + "'");
  }
  return SideType{text[0] == 'o', parse_positive(text.substr(1), context)};
}

void check_side(const SideType& side) {
  if (side.genus < 1) throw Unrealizable("side genus must be positive");
  if (!side.orientable && side.genus < 2) {
    throw Unrealizable("a side of nonorientable genus 1 is a Moebius band; its twist is trivial");
  }
}

// Side of c1 containing T must admit T symmetrically; the other side is free.
bool has_torus_side(const CurveClass& c) {
  return side_admits_torus(c.sides[0]) || side_admits_torus(c.sides[1]);
}

}  // namespace

SurfaceSpec SurfaceSpec::parse(std::string_view text) {
  if (text.size() < 3 || (text[0] != 'o' && text[0] != 'n') || text[1] != ':') {
    throw ParseError("surface must be o:<genus> or n:<genus>, got '" + std::string(text) + "'");
  }
  SurfaceSpec s{text[0] == 'o', parse_positive(text.substr(2), text)};
  if (s.genus < 1) throw ParseError("surface genus must be at least 1");
  return s;
}

std::string SurfaceSpec::to_string() const {
  return std::string(orientable ? "o:" : "n:") + std::to_string(genus);
}

std::string SideType::to_string() const {
  return std::string(orientable ? "o" : "n") + std::to_string(genus);
}

CurveClass CurveClass::nonseparating(bool complement_orientable) {
  CurveClass c;
  c.kind = Kind::kNonseparating;
  c.complement_orientable = complement_orientable;
  return c;
}

CurveClass CurveClass::separating(SideType a, SideType b) {
  CurveClass c;
  c.kind = Kind::kSeparating;
  c.sides = {a, b};
  return c;
}

CurveClass CurveClass::parse(std::string_view text) {
  if (text == "nonsep:oc") return nonseparating(true);
  if (text == "nonsep:nc") return nonseparating(false);
  if (text.substr(0, 4) == "sep:") {
    std::string_view rest = text.substr(4);
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError("separating curve needs two sides, e.g. sep:o1,n5");
    }
    return separating(parse_side(rest.substr(0, comma), text), parse_side(rest.substr(comma + 1), text));
  }
  throw ParseError("curve must be sep:<side>,<side>, nonsep:oc or nonsep:nc, got '" +
                   std::string(text) + "'");
}

std::string CurveClass::to_string() const {
  if (kind == Kind::kNonseparating) return complement_orientable ? "nonsep:oc" : "nonsep:nc";
  return "sep:" + sides[0].to_string() + "," + sides[1].to_string();
}

bool operator==(const CurveClass& a, const CurveClass& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == CurveClass::Kind::kSeparating) return a.sides == b.sides;
  return a.complement_orientable == b.complement_orientable;
}

bool side_admits_torus(const SideType& side) {
  // T plus a piece X glued along c2, c3 that the reflection maps to itself
  // swapping c2 and c3: X = two discs or copies gives orientable genus >= 1;
  // a nonorientable result needs X a twisted annulus or nonorientable, so
  // at least 4 crosscaps.
  return side.orientable ? side.genus >= 1 : side.genus >= 4;
}

CurveClass classify(const SurfaceSpec& surface, const CurveClass& curve) {
  if (surface.genus < 1) throw Unrealizable("surface genus must be at least 1");
  if (curve.kind == CurveClass::Kind::kNonseparating) {
    if (surface.orientable) {
      if (!curve.complement_orientable) {
        throw Unrealizable("the complement of a curve in an orientable surface is orientable");
      }
    } else if (curve.complement_orientable) {
      if (surface.genus % 2 != 0) {
        throw Unrealizable("an orientable complement of a nonseparating curve needs even genus");
      }
    } else if (surface.genus < 3) {
      throw Unrealizable("a nonorientable complement of a nonseparating two-sided curve needs "
                         "genus at least 3");
    }
    return curve;
  }

  CurveClass out = curve;
  for (const SideType& side : out.sides) check_side(side);
  if (surface.orientable) {
    if (!out.sides[0].orientable || !out.sides[1].orientable) {
      throw Unrealizable("both sides of a curve in an orientable surface are orientable");
    }
  } else if (out.sides[0].orientable && out.sides[1].orientable) {
    throw Unrealizable("a separating curve of a nonorientable surface has a nonorientable side");
  }
  const int total = surface.orientable ? out.sides[0].genus + out.sides[1].genus
                                       : out.sides[0].crosscaps() + out.sides[1].crosscaps();
  if (total != surface.genus) {
    throw Unrealizable("side genera " + out.sides[0].to_string() + " and " +
                       out.sides[1].to_string() + " do not add up to " + surface.to_string());
  }
  std::sort(out.sides.begin(), out.sides.end(), [](const SideType& a, const SideType& b) {
    if (a.orientable != b.orientable) return a.orientable;
    return a.genus < b.genus;
  });
  return out;
}

std::string_view flavor_name(Flavor f) {
  switch (f) {
    case Flavor::kExtendedGroup: return "extended-group";
    case Flavor::kTwistSubgroup: return "twist-subgroup";
    case Flavor::kEvenPower: return "even-power";
  }
  return "?";
}

std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::kExtended: return "T1-extended";
    case Theorem::kTwist: return "T2-twist";
    case Theorem::kEvenPower: return "R4-even-power";
  }
  return "?";
}

std::string_view y_choice_name(YChoice y) {
  switch (y) {
    case YChoice::kR: return "r";
    case YChoice::kRH: return "rh";
    case YChoice::kS: return "s";
  }
  return "?";
}

std::string_view reflection_det_name(ReflectionDet d) {
  switch (d) {
    case ReflectionDet::kPlus: return "+1";
    case ReflectionDet::kMinus: return "-1";
    case ReflectionDet::kUnknown: return "unknown";
    case ReflectionDet::kNotApplicable: return "n/a";
  }
  return "?";
}

bool complement_supports_crosscap_slide(const SurfaceSpec& surface, const CurveClass& curve) {
  if (surface.orientable) return false;
  if (curve.kind == CurveClass::Kind::kNonseparating) {
    return !curve.complement_orientable && surface.genus - 2 >= 2;
  }
  return std::any_of(curve.sides.begin(), curve.sides.end(),
                     [](const SideType& s) { return !s.orientable && s.genus >= 2; });
}

TheoremCase select_case(const SurfaceSpec& surface, const CurveClass& curve, Flavor flavor) {
  TheoremCase tc;
  tc.surface = surface;
  tc.curve = classify(surface, curve);
  const int g = surface.genus;
  const bool sep = tc.curve.separating_curve();

  switch (flavor) {
    case Flavor::kExtendedGroup: {
      tc.theorem = Theorem::kExtended;
      tc.y_choice = YChoice::kR;
      if (surface.orientable) {
        tc.case_id = "T1-orientable";
        tc.genus_bound = 3;
      } else {
        tc.case_id = "T1-nonorientable";
        tc.genus_bound = 7;
      }
      if (g < tc.genus_bound) {
        throw NotCovered(tc.case_id + " needs genus at least " + std::to_string(tc.genus_bound) +
                         ", got " + surface.to_string());
      }
      if (sep && !has_torus_side(tc.curve)) {
        throw NotCovered("no side of " + tc.curve.to_string() + " contains the torus T");
      }
      return tc;
    }

    case Flavor::kTwistSubgroup: {
      tc.theorem = Theorem::kTwist;
      tc.in_twist_subgroup = true;
      if (surface.orientable) {
        throw NotCovered("the twist-subgroup construction concerns nonorientable surfaces");
      }
      if (sep) {
        tc.case_id = "T2-separating";
        tc.genus_bound = 7;
        if (g < 7) throw NotCovered("T2-separating needs genus at least 7, got " + surface.to_string());
        // T goes on one side, the other side must be nonorientable of genus >= 2.
        const auto& [s0, s1] = tc.curve.sides;
        const bool ok = (side_admits_torus(s0) && !s1.orientable && s1.genus >= 2) ||
                        (side_admits_torus(s1) && !s0.orientable && s0.genus >= 2);
        if (!ok) {
          throw NotCovered("no arrangement of " + tc.curve.to_string() +
                           " puts T on one side and a nonorientable genus >= 2 side opposite");
        }
      } else if (!tc.curve.complement_orientable) {
        tc.case_id = "T2-nonorientable-complement";
        tc.genus_bound = 8;
        if (g == 7) {
          throw OutOfScope("T2 with nonseparating curve, nonorientable complement and genus 7 "
                           "is conjectural");
        }
        if (g < 8) {
          throw NotCovered("T2-nonorientable-complement needs genus at least 8, got " +
                           surface.to_string());
        }
      } else {
        tc.case_id = "T2-orientable-complement";
        tc.genus_bound = 6;
        if (g < 6) {
          throw NotCovered("T2-orientable-complement needs genus at least 6, got " +
                           surface.to_string());
        }
        if (g % 4 == 0) {
          throw OutOfScope("T2 with orientable complement and genus " + std::to_string(g) +
                           " = 0 mod 4 is conjectural");
        }
        const int k = (g - 6) / 2;
        tc.figure2_k = k;
        tc.reflection_det = reflection_matrix_fig2(k).det() == 1 ? ReflectionDet::kPlus
                                                                 : ReflectionDet::kMinus;
        tc.y_choice = tc.reflection_det == ReflectionDet::kPlus ? YChoice::kR : YChoice::kRH;
        return tc;
      }
      // S \ T is nonorientable of genus >= 2 and carries h; det of the
      // reflection is not determined by the data, so rh is emitted with r as
      // the alternate.
      tc.reflection_det = ReflectionDet::kUnknown;
      tc.y_choice = YChoice::kRH;
      tc.forced_rh = true;
      return tc;
    }

    case Flavor::kEvenPower: {
      tc.theorem = Theorem::kEvenPower;
      tc.y_choice = YChoice::kS;
      tc.genus_bound = 1;
      if (complement_supports_crosscap_slide(surface, tc.curve)) {
        tc.case_id = "R4-even-power-twist";
        tc.in_twist_subgroup = true;
      } else {
        tc.case_id = "R4-even-power-extended";
      }
      return tc;
    }
  }
  throw Error("unknown flavor");
}

SclBound scl_upper_bound(const TheoremCase& tc) {
  SclBound out;
  out.value = 0;
  out.group = tc.in_twist_subgroup ? "T(S)" : "M^(S)";
  const std::string where = " on " + tc.surface.to_string() + " with curve " + tc.curve.to_string();
  if (tc.case_id.empty()) throw Error("scl_upper_bound needs a selected case");
  if (tc.theorem == Theorem::kEvenPower) {
    out.justification = "case " + tc.case_id + where + ": cl_" + out.group +
                        "(t_c^(2n)) <= 1 for every n, so scl(t_c) = lim cl(t_c^(2n))/(2n) "
                        "<= lim 1/(2n) = 0";
  } else {
    out.justification = "case " + tc.case_id + where + ": cl_" + out.group +
                        "(t_c^n) <= 1 for every n, so scl(t_c) = lim cl(t_c^n)/n <= lim 1/n = 0";
  }
  return out;
}

}  // namespace twistcert
