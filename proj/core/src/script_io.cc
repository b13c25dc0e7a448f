#include "twistcert/script_io.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "twistcert/error.h"

namespace twistcert {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

bool consume(std::string_view& s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) != prefix) return false;
  s.remove_prefix(prefix.size());
  return true;
}

std::size_t parse_index(std::string_view s, std::size_t line, const char* what) {
  s = trim(s);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'", line);
  }
  return value;
}

ProofStep parse_step(std::string_view body, std::size_t expected_k, std::size_t line) {
  // body: "<k>: RULE(params) LR @ pos"
  auto colon = body.find(':');
  if (colon == std::string_view::npos) throw ParseError("missing ':' after step number", line);
  std::size_t k = parse_index(body.substr(0, colon), line, "step number");
  if (k != expected_k) {
    throw ParseError("expected step " + std::to_string(expected_k) + ", found step " +
                         std::to_string(k),
                     line);
  }
  std::string_view rest = trim(body.substr(colon + 1));
  auto close = rest.find(')');
  if (close == std::string_view::npos) throw ParseError("missing ')' in rule", line);
  Rule rule = [&] {
    try {
      return parse_rule(rest.substr(0, close + 1));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line);
    } catch (const InvalidRule& e) {
      throw ParseError(e.what(), line);
    }
  }();
  rest = trim(rest.substr(close + 1));
  Direction dir;
  if (consume(rest, "LR")) {
    dir = Direction::kLR;
  } else if (consume(rest, "RL")) {
    dir = Direction::kRL;
  } else {
    throw ParseError("expected LR or RL", line);
  }
  rest = trim(rest);
  if (!consume(rest, "@")) throw ParseError("expected '@ <position>'", line);
  return ProofStep{std::move(rule), parse_index(rest, line, "position"), dir};
}

Word parse_word_at(std::string_view text, std::size_t line) {
  try {
    return parse_word(text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

Rule parse_rule(std::string_view text) {
  text = trim(text);
  auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw ParseError("rule must look like NAME(params): '" + std::string(text) + "'");
  }
  std::string_view name = trim(text.substr(0, open));
  auto id = rule_from_name(name);
  if (!id) throw ParseError("unknown rule '" + std::string(name) + "'");
  std::string_view inner = trim(text.substr(open + 1, text.size() - open - 2));
  std::vector<Letter> params;
  while (!inner.empty()) {
    auto comma = inner.find(',');
    std::string_view token = trim(inner.substr(0, comma));
    params.push_back(parse_letter(token));
    if (comma == std::string_view::npos) break;
    inner = inner.substr(comma + 1);
  }
  return Rule::make(*id, std::move(params));
}

ProofScript parse_script(std::string_view text) {
  ProofScript ps;
  bool have_start = false;
  bool have_end = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (have_end) throw ParseError("content after 'end:'", line_no);
    if (consume(line, "start:")) {
      if (have_start) throw ParseError("duplicate 'start:'", line_no);
      ps.start = parse_word_at(line, line_no);
      have_start = true;
    } else if (!have_start) {
      throw ParseError("script must begin with 'start: <word>'", line_no);
    } else if (consume(line, "step")) {
      ps.steps.push_back(parse_step(line, ps.steps.size() + 1, line_no));
    } else if (consume(line, "end:")) {
      ps.end = parse_word_at(line, line_no);
      have_end = true;
    } else {
      throw ParseError("unrecognized line '" + std::string(line) + "'", line_no);
    }
  }
  if (!have_start) throw ParseError("missing 'start:' line");
  if (!have_end) throw ParseError("missing 'end:' line");
  return ps;
}

std::string format_script(const ProofScript& ps) {
  std::ostringstream out;
  auto word_line = [&](const char* key, const Word& w) {
    out << key;
    if (!w.empty()) out << ' ' << w.to_string();
    out << '\n';
  };
  word_line("start:", ps.start);
  for (std::size_t i = 0; i < ps.steps.size(); ++i) {
    const ProofStep& s = ps.steps[i];
    out << "step " << (i + 1) << ": " << s.rule.to_string() << ' '
        << (s.direction == Direction::kLR ? "LR" : "RL") << " @ " << s.position << '\n';
  }
  word_line("end:", ps.end);
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ProofScript read_script_file(const std::filesystem::path& path) {
  return parse_script(read_text_file(path));
}

void write_script_file(const std::filesystem::path& path, const ProofScript& ps) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << format_script(ps);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace twistcert
