#include "twistcert/certificates.h"

#include <stdexcept>

#include "twistcert/error.h"

namespace twistcert {

namespace {

const Word& torus_square_root() {
  static const Word w = parse_word("b a2 a3 b a1 a2");
  return w;
}

// c1 -> (b a2 a3 b a1 a2)(b a2 a3 b a1 a2) c3^-1 c2^-1
const ProofScript& boundary_expansion() {
  static const ProofScript ps = [] {
    ScriptBuilder sb(parse_word("c1"));
    sb.insert_pair(1, Letter("c2"));
    sb.insert_pair(2, Letter("c3"));
    sb.embed(star_chain_script(), 0);
    return sb.finish();
  }();
  return ps;
}

// Q -> a1^-1 r P^-1 r a1
const ProofScript& reflection_rewrite() {
  static const ProofScript ps = [] {
    ScriptBuilder sb(rel1_right_factor());
    sb.insert_pair(0, Letter("a1", -1));
    sb.insert_pair(9, Letter("a1", -1));
    // a1^-1 (a1 Q a1^-1) a1 -> a1^-1 (c3^-1 a3 a1 b a2 a3 b) a1
    sb.embed_reversed(reflection_chain_script(), 1);
    // Each letter sigma(g)^-e becomes r g^e r; the r r between neighbours cancel.
    std::size_t pos = 1;
    for (std::size_t i = 0; i < rel1_left_factor().size(); ++i) {
      const Letter x = sb.current()[pos];
      sb.apply(RuleId::kConjReflect, {Letter(reflect_curve(x.name()), -x.sign())},
               Direction::kRL, pos);
      if (i == 0) {
        pos += 3;
      } else {
        sb.cancel_pair(pos - 1);
        pos += 1;
      }
    }
    ProofScript out = sb.finish();
    const Word expected = Word{Letter("a1", -1), Letter("r")} * invert(rel1_left_factor()) *
                          Word{Letter("r"), Letter("a1")};
    if (out.end != expected) throw std::logic_error("reflection_rewrite: unexpected end word");
    return out;
  }();
  return ps;
}

void check_n(long n, const BuildOptions& options) {
  if (n > options.max_abs_n || n < -options.max_abs_n) {
    throw std::out_of_range("|n| = " + std::to_string(n < 0 ? -n : n) + " exceeds the limit " +
                            std::to_string(options.max_abs_n));
  }
}

std::size_t abs_size(long n) { return static_cast<std::size_t>(n < 0 ? -n : n); }

// target = c1^n -> [P^n, a1^-1 r] or [P^n, a1^-1 r h].
ProofScript commutator_script(long n, bool with_h) {
  const Word target = power(Word{Letter("c1")}, n);
  ScriptBuilder sb(target);
  if (n == 0) return sb.finish();

  sb.embed(build_rel1(n).script, 0);
  const std::size_t m = abs_size(n);
  const std::size_t left = m * rel1_left_factor().size();
  const std::size_t q = rel1_right_factor().size();
  for (std::size_t j = m; j-- > 0;) {
    if (n > 0) {
      sb.embed(reflection_rewrite(), left + j * q);
    } else {
      sb.embed_inverted(reflection_rewrite(), left + j * q);
    }
  }
  sb.reduce_fully();
  if (with_h) {
    // P^n a1^-1 r P^-n r a1 -> P^n a1^-1 r h P^-n h^-1 r a1
    const std::size_t at = left + 2;
    sb.insert_pair(at, Letter("h"));
    for (std::size_t k = 0; k < left; ++k) sb.swap(at + 1 + k);
  }
  return sb.finish();
}

// c^(2n) -> [c^n, s]
ProofScript even_power_script(long n) {
  const Word c{Letter("c")};
  ScriptBuilder sb(power(c, 2 * n));
  const std::size_t m = abs_size(n);
  const Letter reversed_param = n > 0 ? Letter("c", -1) : Letter("c");
  for (std::size_t j = 0; j < m; ++j) {
    sb.apply(RuleId::kReverseS, {reversed_param}, Direction::kRL, m + 3 * j);
  }
  sb.reduce_fully();
  return sb.finish();
}

DetContext det_context_for(const SurfaceSpec& surface, const CurveClass& curve, CertFlavor flavor) {
  DetContext ctx;
  if (!surface.orientable && curve.kind == CurveClass::Kind::kNonseparating &&
      curve.complement_orientable && surface.genus >= 6 && surface.genus % 2 == 0) {
    ctx = DetContext::figure2(surface, surface.genus / 2 - 3);
  }
  ctx.s_in_twist_subgroup = flavor == CertFlavor::kEvenPowerTwist;
  return ctx;
}

bool is_twist_flavor(CertFlavor f) {
  return f == CertFlavor::kTwistSubgroup || f == CertFlavor::kEvenPowerTwist;
}

Word target_for(CertFlavor flavor, long n) {
  if (flavor == CertFlavor::kEvenPowerExtended || flavor == CertFlavor::kEvenPowerTwist) {
    return power(Word{Letter("c")}, 2 * n);
  }
  return power(Word{Letter("c1")}, n);
}

bool rep_matches(const Word& target, const Word& x, const Word& y, const HomologyAssignment& ha) {
  return evaluate_rep(target, ha) == evaluate_rep(commutator(x, y), ha);
}

MembershipRecord membership_for(const Certificate& cert) {
  MembershipRecord rec;
  const DetContext ctx = det_context_for(cert.surface, cert.curve, cert.flavor);
  rec.det_x = det_symbolic(cert.x, cert.surface, ctx);
  rec.det_y = det_symbolic(cert.y, cert.surface, ctx);
  const bool x_in = rec.det_x.known() && rec.det_x.sign == 1;
  if (cert.y_alt) {
    rec.det_y_alt = det_symbolic(*cert.y_alt, cert.surface, ctx);
    const DetValue& a = rec.det_y;
    const DetValue& b = *rec.det_y_alt;
    if (a.known() && b.known()) {
      rec.pass = x_in && (a.sign == 1 || b.sign == 1);
      rec.note = "one candidate has determinant +1";
    } else {
      // det(Y) = -det(Y-alt) with the same unknown factor: exactly one is +1.
      rec.pass = x_in && a.r_parity == b.r_parity && a.sign == -b.sign;
      rec.note = "det(Y) = -det(Y-alt): exactly one of Y, Y-alt lies in T(S)";
    }
  } else {
    rec.pass = x_in && rec.det_y.known() && rec.det_y.sign == 1;
    rec.note = rec.pass ? "X and Y lie in T(S)" : "an entry lies outside T(S)";
  }
  return rec;
}

Flavor case_flavor(CertFlavor f) {
  switch (f) {
    case CertFlavor::kExtendedGroup: return Flavor::kExtendedGroup;
    case CertFlavor::kTwistSubgroup: return Flavor::kTwistSubgroup;
    case CertFlavor::kEvenPowerExtended:
    case CertFlavor::kEvenPowerTwist: return Flavor::kEvenPower;
  }
  return Flavor::kExtendedGroup;
}

TheoremCase case_for(CertFlavor flavor, const SurfaceSpec& surface, const CurveClass& curve) {
  TheoremCase tc = select_case(surface, curve, case_flavor(flavor));
  if (flavor == CertFlavor::kEvenPowerTwist && !tc.in_twist_subgroup) {
    throw NotCovered("even powers in T(S) need S \\ c nonorientable of genus at least 2");
  }
  if (flavor == CertFlavor::kEvenPowerExtended) {
    tc.case_id = "R4-even-power-extended";
    tc.in_twist_subgroup = false;
  }
  return tc;
}

void finish_checks(Certificate& cert) {
  const HomologyAssignment ha = genus3_extended_assignment();
  cert.homology.assignment_id = ha.id();
  cert.homology.pass = rep_matches(cert.target, cert.x, cert.y, ha) &&
                       (!cert.y_alt || rep_matches(cert.target, cert.x, *cert.y_alt, ha));
  if (is_twist_flavor(cert.flavor)) cert.membership = membership_for(cert);
}

}  // namespace

std::string_view cert_flavor_name(CertFlavor f) {
  switch (f) {
    case CertFlavor::kExtendedGroup: return "extended-group";
    case CertFlavor::kTwistSubgroup: return "twist-subgroup";
    case CertFlavor::kEvenPowerExtended: return "even-power-extended";
    case CertFlavor::kEvenPowerTwist: return "even-power-twist";
  }
  return "?";
}

std::optional<CertFlavor> cert_flavor_from_name(std::string_view name) {
  for (CertFlavor f : {CertFlavor::kExtendedGroup, CertFlavor::kTwistSubgroup,
                       CertFlavor::kEvenPowerExtended, CertFlavor::kEvenPowerTwist}) {
    if (cert_flavor_name(f) == name) return f;
  }
  return std::nullopt;
}

const Word& rel1_left_factor() {
  static const Word w = parse_word("b a2 a3 b a1 a2 c2^-1");
  return w;
}

const Word& rel1_right_factor() {
  static const Word w = parse_word("c3^-1 b a2 a3 b a1 a2");
  return w;
}

Rel1 build_rel1(long n) {
  Rel1 out;
  out.lhs = power(Word{Letter("c1")}, n);
  out.rhs = power(rel1_left_factor(), n) * power(rel1_right_factor(), n);
  ScriptBuilder sb(out.lhs);
  const std::size_t block = 2 * torus_square_root().size() + 2;
  for (std::size_t j = 0; j < abs_size(n); ++j) {
    if (n > 0) {
      sb.embed(boundary_expansion(), j * block);
    } else {
      sb.embed_inverted(boundary_expansion(), j * block);
    }
  }
  sb.rearrange_to(out.rhs);
  out.script = sb.finish();
  return out;
}

Certificate build_theorem1_certificate(const SurfaceSpec& surface, const CurveClass& curve, long n,
                                       const BuildOptions& options) {
  check_n(n, options);
  Certificate cert;
  cert.flavor = CertFlavor::kExtendedGroup;
  cert.tcase = case_for(cert.flavor, surface, curve);
  cert.surface = surface;
  cert.curve = cert.tcase.curve;
  cert.n = n;
  cert.target = target_for(cert.flavor, n);
  cert.x = power(rel1_left_factor(), n);
  cert.y = parse_word("a1^-1 r");
  cert.script = commutator_script(n, false);
  finish_checks(cert);
  return cert;
}

Certificate build_theorem2_certificate(const SurfaceSpec& surface, const CurveClass& curve, long n,
                                       const BuildOptions& options) {
  check_n(n, options);
  Certificate cert;
  cert.flavor = CertFlavor::kTwistSubgroup;
  cert.tcase = case_for(cert.flavor, surface, curve);
  cert.surface = surface;
  cert.curve = cert.tcase.curve;
  cert.n = n;
  cert.target = target_for(cert.flavor, n);
  cert.x = power(rel1_left_factor(), n);
  const bool with_h = cert.tcase.y_choice == YChoice::kRH;
  cert.y = parse_word(with_h ? "a1^-1 r h" : "a1^-1 r");
  cert.script = commutator_script(n, with_h);
  if (cert.tcase.forced_rh) {
    cert.y_alt = parse_word("a1^-1 r");
    cert.alt_script = commutator_script(n, false);
  }
  finish_checks(cert);
  return cert;
}

Certificate build_even_power_certificate(const SurfaceSpec& surface, const CurveClass& curve,
                                         long n, CertFlavor flavor, const BuildOptions& options) {
  if (flavor != CertFlavor::kEvenPowerExtended && flavor != CertFlavor::kEvenPowerTwist) {
    throw Error("build_even_power_certificate needs an even-power flavor");
  }
  check_n(n, options);
  Certificate cert;
  cert.flavor = flavor;
  cert.tcase = case_for(flavor, surface, curve);
  cert.surface = surface;
  cert.curve = cert.tcase.curve;
  cert.n = n;
  cert.target = target_for(flavor, n);
  cert.x = power(Word{Letter("c")}, n);
  cert.y = Word{Letter("s")};
  cert.script = even_power_script(n);
  finish_checks(cert);
  return cert;
}

Certificate build_certificate(CertFlavor flavor, const SurfaceSpec& surface,
                              const CurveClass& curve, long n, const BuildOptions& options) {
  switch (flavor) {
    case CertFlavor::kExtendedGroup:
      return build_theorem1_certificate(surface, curve, n, options);
    case CertFlavor::kTwistSubgroup:
      return build_theorem2_certificate(surface, curve, n, options);
    case CertFlavor::kEvenPowerExtended:
    case CertFlavor::kEvenPowerTwist:
      return build_even_power_certificate(surface, curve, n, flavor, options);
  }
  throw Error("unknown certificate flavor");
}

CertificateReport verify_certificate(const Certificate& cert) {
  CertificateReport report;
  auto line = [&](bool ok, const std::string& what) {
    report.lines.push_back(std::string(ok ? "pass" : "FAIL") + " " + what);
  };

  bool case_ok = true;
  try {
    TheoremCase tc = case_for(cert.flavor, cert.surface, cert.curve);
    case_ok = cert.tcase.case_id.empty() || tc.case_id == cert.tcase.case_id;
    line(case_ok, "case: " + tc.case_id + " on " + cert.surface.to_string() + " " +
                      tc.curve.to_string());
  } catch (const Error& e) {
    case_ok = false;
    line(false, std::string("case: ") + e.what());
  }

  const Word expected_target = target_for(cert.flavor, cert.n);
  const bool target_ok = cert.target == expected_target;
  line(target_ok, "target: " + (expected_target.empty() ? std::string("(empty)")
                                                        : expected_target.to_string()));

  auto check_script = [&](const ProofScript& ps, const Word& y, const std::string& label) {
    const Word comm = commutator(cert.x, y);
    bool ok = true;
    if (ps.start != cert.target) {
      ok = false;
      line(false, label + ": starts at '" + ps.start.to_string() + "', not the target");
    }
    if (ps.end != comm) {
      ok = false;
      line(false, label + ": ends at '" + ps.end.to_string() + "', not [X, " + label + "-entry]");
    }
    VerificationReport vr = verify_script(ps);
    line(vr.ok, label + ": " + vr.message);
    return ok && vr.ok;
  };

  report.script_ok = target_ok && check_script(cert.script, cert.y, "script");
  if (cert.y_alt) {
    if (!cert.alt_script) {
      report.script_ok = false;
      line(false, "alt-script: missing for Y-alt");
    } else {
      report.script_ok = check_script(*cert.alt_script, *cert.y_alt, "alt-script") &&
                         report.script_ok;
    }
  }

  const HomologyAssignment ha = genus3_extended_assignment();
  try {
    report.homology_ok = rep_matches(cert.target, cert.x, cert.y, ha) &&
                         (!cert.y_alt || rep_matches(cert.target, cert.x, *cert.y_alt, ha));
    line(report.homology_ok, "homology: rep(target) = rep([X, Y]) under " + ha.id());
  } catch (const Error& e) {
    report.homology_ok = false;
    line(false, std::string("homology: ") + e.what());
  }

  if (is_twist_flavor(cert.flavor)) {
    try {
      MembershipRecord rec = membership_for(cert);
      report.membership_ok = rec.pass;
      std::string detail = "det(X) = " + rec.det_x.to_string() + ", det(Y) = " +
                           rec.det_y.to_string();
      if (rec.det_y_alt) detail += ", det(Y-alt) = " + rec.det_y_alt->to_string();
      line(rec.pass, "membership: " + detail + "; " + rec.note);
    } catch (const Error& e) {
      report.membership_ok = false;
      line(false, std::string("membership: ") + e.what());
    }
  }

  report.ok = case_ok && report.script_ok && report.homology_ok && report.membership_ok;
  return report;
}

}  // namespace twistcert
