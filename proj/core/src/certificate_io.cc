#include <charconv>
#include <filesystem>
#include <map>
#include <sstream>

#include "twistcert/certificates.h"
#include "twistcert/error.h"
#include "twistcert/script_io.h"

namespace twistcert {

namespace {

constexpr std::string_view kHeader = "twistcert-certificate 1";

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(ws) - first + 1);
}

std::string word_value(const Word& w) { return w.empty() ? "" : " " + w.to_string(); }

void emit_script(std::ostringstream& out, const char* key, const ProofScript& ps,
                 const std::optional<std::string>& path) {
  if (path) {
    out << key << ": " << *path << '\n';
    return;
  }
  out << key << ": inline\n";
  out << "begin-" << key << '\n' << format_script(ps) << "end-" << key << '\n';
}

long parse_long(std::string_view s, std::size_t line) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad integer '" + std::string(s) + "'", line);
  }
  return v;
}

}  // namespace

std::string format_certificate(const Certificate& cert,
                               const std::optional<std::string>& script_path) {
  std::ostringstream out;
  const TheoremCase& tc = cert.tcase;
  out << kHeader << '\n';
  out << "flavor: " << cert_flavor_name(cert.flavor) << '\n';
  out << "surface: " << cert.surface.to_string() << '\n';
  out << "curve: " << cert.curve.to_string() << '\n';
  out << "n: " << cert.n << '\n';
  out << "theorem: " << theorem_name(tc.theorem) << '\n';
  out << "case: " << tc.case_id << '\n';
  out << "genus-bound: " << tc.genus_bound << '\n';
  out << "y-choice: " << y_choice_name(tc.y_choice) << '\n';
  out << "reflection-det: " << reflection_det_name(tc.reflection_det) << '\n';
  if (tc.figure2_k) out << "figure2-k: " << *tc.figure2_k << '\n';
  out << "forced-rh: " << (tc.forced_rh ? "yes" : "no") << '\n';
  out << "target:" << word_value(cert.target) << '\n';
  out << "X:" << word_value(cert.x) << '\n';
  out << "Y:" << word_value(cert.y) << '\n';
  if (cert.y_alt) out << "Y-alt:" << word_value(*cert.y_alt) << '\n';
  out << "commutator:" << word_value(commutator(cert.x, cert.y)) << '\n';
  out << "check.script: " << cert.script.steps.size() << " step(s)\n";
  out << "check.homology: " << (cert.homology.pass ? "pass" : "fail") << ' '
      << cert.homology.assignment_id << '\n';
  if (cert.membership) {
    const MembershipRecord& m = *cert.membership;
    out << "check.membership: " << (m.pass ? "pass" : "fail") << " det(X)=" << m.det_x.to_string()
        << " det(Y)=" << m.det_y.to_string();
    if (m.det_y_alt) out << " det(Y-alt)=" << m.det_y_alt->to_string();
    out << '\n';
  }
  const SclBound scl = scl_upper_bound(tc);
  out << "scl-upper-bound: " << scl.value.numerator() << " in " << scl.group << '\n';
  emit_script(out, "script", cert.script, script_path);
  if (cert.alt_script) {
    std::optional<std::string> alt_path;
    if (script_path) alt_path = *script_path + ".alt";
    emit_script(out, "alt-script", *cert.alt_script, alt_path);
  }
  return out.str();
}

Certificate parse_certificate(std::string_view text, const ScriptLoader& loader) {
  std::map<std::string, std::string, std::less<>> fields;
  std::map<std::string, std::string, std::less<>> blocks;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!header) {
      if (line != kHeader) throw ParseError("expected '" + std::string(kHeader) + "'", line_no);
      header = true;
      continue;
    }
    if (line.substr(0, 6) == "begin-") {
      const std::string name(line.substr(6));
      const std::string terminator = "end-" + name;
      std::string body;
      bool closed = false;
      while (std::getline(in, raw)) {
        ++line_no;
        if (trim(raw) == terminator) {
          closed = true;
          break;
        }
        body += raw;
        body += '\n';
      }
      if (!closed) throw ParseError("unterminated block '" + name + "'", line_no);
      blocks[name] = std::move(body);
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected 'key: value'", line_no);
    }
    fields[std::string(trim(line.substr(0, colon)))] = std::string(trim(line.substr(colon + 1)));
  }
  if (!header) throw ParseError("empty certificate");

  auto need = [&](std::string_view key) -> const std::string& {
    auto it = fields.find(key);
    if (it == fields.end()) throw ParseError("certificate lacks '" + std::string(key) + "'");
    return it->second;
  };
  auto script_for = [&](const std::string& key) {
    const std::string& where = need(key);
    if (where == "inline") {
      auto it = blocks.find(key);
      if (it == blocks.end()) throw ParseError("missing begin-" + key + " block");
      return parse_script(it->second);
    }
    if (!loader) throw ParseError(key + " refers to '" + where + "' but no loader is available");
    return parse_script(loader(where));
  };

  Certificate cert;
  auto flavor = cert_flavor_from_name(need("flavor"));
  if (!flavor) throw ParseError("unknown flavor '" + need("flavor") + "'");
  cert.flavor = *flavor;
  cert.surface = SurfaceSpec::parse(need("surface"));
  cert.curve = CurveClass::parse(need("curve"));
  cert.n = parse_long(need("n"), 0);
  cert.tcase.case_id = need("case");
  cert.tcase.surface = cert.surface;
  cert.tcase.curve = cert.curve;
  cert.target = parse_word(need("target"));
  cert.x = parse_word(need("X"));
  cert.y = parse_word(need("Y"));
  cert.script = script_for("script");
  if (fields.count("Y-alt")) {
    cert.y_alt = parse_word(need("Y-alt"));
    cert.alt_script = script_for("alt-script");
  }
  return cert;
}

Certificate read_certificate_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const std::filesystem::path dir = path.parent_path();
  return parse_certificate(text, [&](const std::string& where) {
    std::filesystem::path p(where);
    if (p.is_relative() && !std::filesystem::exists(p) && !dir.empty()) p = dir / p;
    return read_text_file(p);
  });
}

}  // namespace twistcert
