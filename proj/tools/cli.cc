#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <future>
#include <optional>
#include <sstream>

#include "twistcert/certificates.h"
#include "twistcert/error.h"
#include "twistcert/homology.h"
#include "twistcert/script_io.h"
#include "twistcert/surfaces.h"
#include "twistcert/words.h"

namespace twistcert::cli {

namespace {

constexpr const char* kFooter = R"help(Word grammar:
  word    := item*            (whitespace separated; empty word allowed)
  item    := letter | "(" word ")" [ "^" int ]
  letter  := name [ "^-1" ]
  name    := [a-z][a-z0-9]*   b a1 a2 a3 c1 c2 c3 c r h s y are predefined;
                              other names are Dehn twists. r is an involution.
  example: "(b a1 a2 a3)^3 c1^-1"

Proof-script format:
  start: <word>
  step <k>: <RULE>(<params>) <LR|RL> @ <position>
  ...
  end: <word>
  Steps are numbered 1, 2, ... in order; positions are 0-based letter
  offsets in the word as it stands before the step. '#' starts a comment.
  Rules: COMMUTE(x,y) BRAID(b,ai) STAR() CENTRAL(ci,g) CONJ_REFLECT(g)
         REVERSE_S(c) COMMUTE_H(h,g) FREE_RED(x)

Exit codes: 0 ok, 1 verification failed, 2 usage or realizability error.)help";

struct Outcome {
  int code = kExitOk;
  std::string out;
  std::string err;
};

// Runs `body`, turning library exceptions into exit codes and messages.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const OutOfScope& e) {
    err << "OutOfScope: " << e.what() << '\n';
  } catch (const NotCovered& e) {
    err << "NotCovered: " << e.what() << '\n';
  } catch (const Unrealizable& e) {
    err << "Unrealizable: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "ParseError: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "OutOfRange: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

std::optional<CertFlavor> flavor_for(const std::string& name, const SurfaceSpec& surface,
                                     const CurveClass& curve) {
  if (name == "extended") return CertFlavor::kExtendedGroup;
  if (name == "twist") return CertFlavor::kTwistSubgroup;
  if (name == "even-extended") return CertFlavor::kEvenPowerExtended;
  if (name == "even-twist") return CertFlavor::kEvenPowerTwist;
  if (name == "even") {
    return select_case(surface, curve, Flavor::kEvenPower).in_twist_subgroup
               ? CertFlavor::kEvenPowerTwist
               : CertFlavor::kEvenPowerExtended;
  }
  return std::nullopt;
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](std::string_view s) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError("bad --n-range '" + text + "', expected a..b");
    }
    return v;
  };
  if (dots == std::string::npos) throw ParseError("bad --n-range '" + text + "', expected a..b");
  const long a = number(std::string_view(text).substr(0, dots));
  const long b = number(std::string_view(text).substr(dots + 2));
  if (a > b) throw ParseError("empty --n-range '" + text + "'");
  return {a, b};
}

struct CertifyArgs {
  std::string surface;
  std::string curve;
  std::string flavor;
  std::optional<long> n;
  std::string n_range;
  std::string emit_script;
  long max_n = kDefaultMaxAbsN;
};

Outcome certify_one(const CertifyArgs& a, long n, const std::optional<std::string>& script_path) {
  Outcome o;
  std::ostringstream out;
  std::ostringstream err;
  o.code = guarded(err, [&] {
    const SurfaceSpec surface = SurfaceSpec::parse(a.surface);
    const CurveClass curve = classify(surface, CurveClass::parse(a.curve));
    const auto flavor = flavor_for(a.flavor, surface, curve);
    if (!flavor) throw ParseError("unknown flavor '" + a.flavor + "'");
    const Certificate cert = build_certificate(*flavor, surface, curve, n, {a.max_n});
    const CertificateReport report = verify_certificate(cert);
    if (!report.ok) {
      for (const std::string& line : report.lines) err << line << '\n';
      err << "built certificate failed verification\n";
      return kExitFailed;
    }
    if (script_path) {
      write_script_file(*script_path, cert.script);
      if (cert.alt_script) write_script_file(*script_path + ".alt", *cert.alt_script);
    }
    out << format_certificate(cert, script_path);
    return kExitOk;
  });
  o.out = out.str();
  o.err = err.str();
  return o;
}

int certify(const CertifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n.has_value() == !a.n_range.empty()) {
    err << "certify needs exactly one of --n and --n-range\n";
    return kExitUsage;
  }
  if (a.n) {
    std::optional<std::string> path;
    if (!a.emit_script.empty()) path = a.emit_script;
    Outcome o = certify_one(a, *a.n, path);
    out << o.out;
    err << o.err;
    return o.code;
  }
  std::pair<long, long> range;
  if (int code = guarded(err, [&] { range = parse_range(a.n_range); return kExitOk; })) return code;
  if (range.second - range.first > 2 * a.max_n) {
    err << "OutOfRange: --n-range is wider than the --max-n limit allows\n";
    return kExitUsage;
  }
  std::vector<std::future<Outcome>> jobs;
  for (long n = range.first; n <= range.second; ++n) {
    std::optional<std::string> path;
    if (!a.emit_script.empty()) path = a.emit_script + ".n" + std::to_string(n);
    jobs.push_back(std::async(std::launch::async, certify_one, std::cref(a), n, path));
  }
  int code = kExitOk;
  bool first = true;
  for (auto& job : jobs) {
    Outcome o = job.get();
    if (!o.out.empty()) {
      out << (first ? "" : "\n") << o.out;
      first = false;
    }
    err << o.err;
    code = std::max(code, o.code);
  }
  return code;
}

int verify_cert(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Certificate cert = read_certificate_file(path);
    const CertificateReport report = verify_certificate(cert);
    for (const std::string& line : report.lines) out << line << '\n';
    out << "result: " << (report.ok ? "ok" : "FAIL") << '\n';
    return report.ok ? kExitOk : kExitFailed;
  });
}

int verify_script_cmd(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ProofScript ps = read_script_file(path);
    const VerificationReport report = verify_script(ps);
    out << "steps: " << ps.steps.size() << '\n';
    out << "final: " << report.final_word.to_string() << '\n';
    if (report.ok) {
      out << "result: ok\n";
      return kExitOk;
    }
    out << "result: FAIL";
    if (report.failed_step) out << " at step " << *report.failed_step + 1;
    out << ": " << report.message << '\n';
    return kExitFailed;
  });
}

int rep_check(const std::string& word, const std::string& assignment, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const HomologyAssignment ha = assignment_by_id(assignment);
    const IntMatrix m = evaluate_rep(parse_word(word), ha);
    out << "assignment: " << ha.id() << '\n';
    out << m.to_string();
    out << "identity: " << (m.is_identity() ? "yes" : "no") << '\n';
    return kExitOk;
  });
}

int det_cmd(const std::string& word, int genus, std::optional<int> k, bool s_in_twist,
            std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SurfaceSpec surface{false, genus};
    DetContext ctx = k ? DetContext::figure2(surface, *k) : DetContext{};
    ctx.s_in_twist_subgroup = s_in_twist;
    const DetValue v = det_symbolic(parse_word(word), surface, ctx);
    out << v.to_string();
    if (!v.known()) {
      out << " (membership depends on det(r))\n";
    } else {
      out << (v.sign > 0 ? " (in twist subgroup)\n" : " (not in twist subgroup)\n");
    }
    return kExitOk;
  });
}

int classify_cmd(const std::string& surface_text, const std::string& curve_text,
                 std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SurfaceSpec surface = SurfaceSpec::parse(surface_text);
    const CurveClass curve = classify(surface, CurveClass::parse(curve_text));
    out << "surface: " << surface.to_string() << '\n';
    out << "curve: " << curve.to_string() << '\n';
    for (Flavor f : {Flavor::kExtendedGroup, Flavor::kTwistSubgroup, Flavor::kEvenPower}) {
      out << flavor_name(f) << ": ";
      try {
        const TheoremCase tc = select_case(surface, curve, f);
        out << tc.case_id << " (genus >= " << tc.genus_bound
            << ", y = " << y_choice_name(tc.y_choice) << ")\n";
      } catch (const OutOfScope& e) {
        out << "OutOfScope: " << e.what() << '\n';
      } catch (const NotCovered& e) {
        out << "NotCovered: " << e.what() << '\n';
      }
    }
    return kExitOk;
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commutator certificates for powers of Dehn twists", "twistcert"};
  app.footer(kFooter);
  app.require_subcommand(1);

  CertifyArgs ca;
  auto* certify_cmd = app.add_subcommand("certify", "Build and check a certificate t_c^n = [X, Y]");
  certify_cmd->add_option("--surface", ca.surface, "o:<g> or n:<g>")->required();
  certify_cmd->add_option("--curve", ca.curve, "sep:<side>,<side> | nonsep:oc | nonsep:nc")
      ->required();
  certify_cmd
      ->add_option("--flavor", ca.flavor, "extended | twist | even | even-extended | even-twist")
      ->required();
  certify_cmd->add_option("--n", ca.n, "power of the twist");
  certify_cmd->add_option("--n-range", ca.n_range, "a..b, one certificate per n");
  certify_cmd->add_option("--emit-script", ca.emit_script,
                          "write the derivation here and reference it from the certificate");
  certify_cmd->add_option("--max-n", ca.max_n, "largest accepted |n|")->capture_default_str();

  std::string cert_path;
  auto* verify_cert_cmd = app.add_subcommand("verify-cert", "Replay every check of a certificate");
  verify_cert_cmd->add_option("path", cert_path, "certificate file")->required();

  std::string script_path;
  auto* verify_script_sub = app.add_subcommand("verify-script", "Replay a proof script");
  verify_script_sub->add_option("file", script_path, "proof-script file")->required();

  std::string rep_word;
  std::string assignment = "genus3";
  auto* rep_cmd = app.add_subcommand("rep-check", "Evaluate a word in a homology representation");
  rep_cmd->add_option("--word", rep_word, "word")->required();
  rep_cmd->add_option("--assignment", assignment, "genus3 | genus3-ext")->capture_default_str();

  std::string det_word;
  int det_genus = 0;
  std::optional<int> det_k;
  bool s_in_twist = false;
  auto* det_sub = app.add_subcommand("det", "Determinant homomorphism on a nonorientable surface");
  det_sub->add_option("--word", det_word, "word")->required();
  det_sub->add_option("--genus", det_genus, "nonorientable genus")->required();
  det_sub->add_option("--k", det_k, "embedding parameter for an orientable complement, genus = 2(k + 3)");
  det_sub->add_flag("--s-in-twist-subgroup", s_in_twist, "treat s as a product of twists");

  std::string cls_surface;
  std::string cls_curve;
  auto* classify_sub = app.add_subcommand("classify", "Normalize a curve class and list cases");
  classify_sub->add_option("--surface", cls_surface, "o:<g> or n:<g>")->required();
  classify_sub->add_option("--curve", cls_curve, "sep:<side>,<side> | nonsep:oc | nonsep:nc")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    err << "run 'twistcert --help' for usage\n";
    return kExitUsage;
  }

  if (*certify_cmd) return certify(ca, out, err);
  if (*verify_cert_cmd) return verify_cert(cert_path, out, err);
  if (*verify_script_sub) return verify_script_cmd(script_path, out, err);
  if (*rep_cmd) return rep_check(rep_word, assignment, out, err);
  if (*det_sub) return det_cmd(det_word, det_genus, det_k, s_in_twist, out, err);
  if (*classify_sub) return classify_cmd(cls_surface, cls_curve, out, err);
  return kExitUsage;
}

}  // namespace twistcert::cli
