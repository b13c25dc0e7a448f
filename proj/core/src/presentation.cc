#include "twistcert/presentation.h"

#include <algorithm>
#include <array>
#include <tuple>

#include "twistcert/error.h"

namespace twistcert {

namespace {

constexpr std::array<std::pair<RuleId, std::string_view>, 8> kRuleNames{{
    {RuleId::kCommute, "COMMUTE"},
    {RuleId::kBraid, "BRAID"},
    {RuleId::kStar, "STAR"},
    {RuleId::kCentral, "CENTRAL"},
    {RuleId::kConjReflect, "CONJ_REFLECT"},
    {RuleId::kReverseS, "REVERSE_S"},
    {RuleId::kCommuteH, "COMMUTE_H"},
    {RuleId::kFreeRed, "FREE_RED"},
}};

bool is_a_curve(std::string_view n) { return n == "a1" || n == "a2" || n == "a3"; }

bool commute_pair_admissible(std::string_view x, std::string_view y) {
  if (is_a_curve(x) && is_a_curve(y)) return x != y;
  if (is_boundary_twist(x) && is_torus_generator(y)) return true;
  if (is_boundary_twist(y) && is_torus_generator(x)) return true;
  return false;
}

[[noreturn]] void invalid(RuleId id, const std::vector<Letter>& params, const std::string& why) {
  std::string p;
  for (const Letter& l : params) {
    if (!p.empty()) p += ',';
    p += l.to_string();
  }
  throw InvalidRule(std::string(rule_name(id)) + "(" + p + "): " + why);
}

void expect_arity(RuleId id, const std::vector<Letter>& params, std::size_t n) {
  if (params.size() != n) {
    invalid(id, params, "expected " + std::to_string(n) + " parameter(s)");
  }
}

const Word& star_word() {
  static const Word w = parse_word("(b a1 a2 a3)^3");
  return w;
}

}  // namespace

std::string_view rule_name(RuleId id) {
  for (const auto& [rid, name] : kRuleNames) {
    if (rid == id) return name;
  }
  return "?";
}

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (const auto& [rid, n] : kRuleNames) {
    if (n == name) return rid;
  }
  return std::nullopt;
}

std::string reflect_curve(std::string_view name) {
  if (name == "a2") return "a3";
  if (name == "a3") return "a2";
  if (name == "c2") return "c3";
  if (name == "c3") return "c2";
  return std::string(name);
}

Rule Rule::make(RuleId id, std::vector<Letter> params) {
  switch (id) {
    case RuleId::kCommute: {
      expect_arity(id, params, 2);
      const Letter& x = params[0];
      const Letter& y = params[1];
      if (!commute_pair_admissible(x.name(), y.name())) {
        invalid(id, params, "curves are not known to be disjoint");
      }
      return Rule(id, params, Word{x, y}, Word{y, x});
    }
    case RuleId::kBraid: {
      expect_arity(id, params, 2);
      const Letter& b = params[0];
      const Letter& a = params[1];
      if (b != Letter("b") || !is_a_curve(a.name()) || a.sign() != 1) {
        invalid(id, params, "braid relations are BRAID(b,ai) for i = 1, 2, 3");
      }
      return Rule(id, params, Word{a, b, a}, Word{b, a, b});
    }
    case RuleId::kStar:
      expect_arity(id, params, 0);
      return Rule(id, params, parse_word("c1 c2 c3"), star_word());
    case RuleId::kCentral: {
      expect_arity(id, params, 2);
      const Letter& c = params[0];
      const Letter& g = params[1];
      if (!is_boundary_twist(c.name()) || !is_torus_generator(g.name())) {
        invalid(id, params, "CENTRAL moves c1, c2 or c3 past a curve of T");
      }
      return Rule(id, params, Word{c, g}, Word{g, c});
    }
    case RuleId::kConjReflect: {
      expect_arity(id, params, 1);
      const Letter& g = params[0];
      if (!is_torus_generator(g.name())) {
        invalid(id, params, "r conjugates twists about curves of T only");
      }
      Letter image(reflect_curve(g.name()), -g.sign());
      return Rule(id, params, Word{Letter("r"), g, Letter("r")}, Word{image});
    }
    case RuleId::kReverseS: {
      expect_arity(id, params, 1);
      const Letter& c = params[0];
      if (c.name() != "c") invalid(id, params, "s reverses the designated curve c only");
      return Rule(id, params, Word{Letter("s"), c, Letter("s", -1)}, Word{c.inverse()});
    }
    case RuleId::kCommuteH: {
      expect_arity(id, params, 2);
      const Letter& h = params[0];
      const Letter& g = params[1];
      if (h.name() != "h" || !is_torus_generator(g.name())) {
        invalid(id, params, "COMMUTE_H moves h past a curve of T");
      }
      return Rule(id, params, Word{h, g}, Word{g, h});
    }
    case RuleId::kFreeRed: {
      expect_arity(id, params, 1);
      const Letter& x = params[0];
      return Rule(id, params, Word{x, x.inverse()}, Word{});
    }
  }
  throw InvalidRule("unknown rule family");
}

std::string Rule::to_string() const {
  std::string out(rule_name(id_));
  out += '(';
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (i) out += ',';
    out += params_[i].to_string();
  }
  out += ')';
  return out;
}

void apply_rule_in_place(std::vector<Letter>& letters, const ProofStep& step) {
  const Word& pattern = step.pattern();
  const Word& replacement = step.replacement();
  const std::size_t pos = step.position;
  if (pos > letters.size() || pattern.size() > letters.size() - pos) {
    Word found(std::vector<Letter>(letters.begin() + std::min(pos, letters.size()), letters.end()));
    throw PatternMismatch(pos, pattern.to_string(), found.to_string());
  }
  if (!std::equal(pattern.begin(), pattern.end(), letters.begin() + pos)) {
    Word found(std::vector<Letter>(letters.begin() + pos, letters.begin() + pos + pattern.size()));
    throw PatternMismatch(pos, pattern.to_string(), found.to_string());
  }
  auto first = letters.begin() + pos;
  const std::size_t common = std::min(pattern.size(), replacement.size());
  std::copy(replacement.begin(), replacement.begin() + common, first);
  if (pattern.size() > replacement.size()) {
    letters.erase(first + common, first + pattern.size());
  } else if (replacement.size() > pattern.size()) {
    letters.insert(first + common, replacement.begin() + common, replacement.end());
  }
}

Word apply_rule(const Word& w, const ProofStep& step) {
  std::vector<Letter> letters = w.letters();
  apply_rule_in_place(letters, step);
  return Word(std::move(letters));
}

VerificationReport verify_script(const ProofScript& ps) {
  VerificationReport report;
  std::vector<Letter> current = ps.start.letters();
  for (std::size_t i = 0; i < ps.steps.size(); ++i) {
    try {
      apply_rule_in_place(current, ps.steps[i]);
    } catch (const PatternMismatch& e) {
      report.ok = false;
      report.failed_step = i;
      report.message = "step " + std::to_string(i + 1) + " " +
                       ps.steps[i].rule.to_string() + ": " + e.what();
      report.final_word = Word(std::move(current));
      return report;
    }
  }
  report.final_word = Word(std::move(current));
  if (report.final_word != ps.end) {
    report.ok = false;
    report.message = "replay ends in '" + report.final_word.to_string() + "', script claims '" +
                     ps.end.to_string() + "'";
    return report;
  }
  report.ok = true;
  report.message = "ok: " + std::to_string(ps.steps.size()) + " step(s) replayed";
  return report;
}

ProofScript star_chain_script() {
  using D = Direction;
  ScriptBuilder sb(parse_word("c1 c2 c3"));
  sb.apply(RuleId::kStar, {}, D::kLR, 0);
  // (b a1 a2 a3)^3 = b a2 a3 (a1 b a1) a2 (a3 b a3) a1 a2
  sb.apply(RuleId::kCommute, {Letter("a1"), Letter("a2")}, D::kLR, 1);
  sb.apply(RuleId::kCommute, {Letter("a1"), Letter("a3")}, D::kLR, 2);
  sb.apply(RuleId::kCommute, {Letter("a2"), Letter("a3")}, D::kLR, 10);
  sb.apply(RuleId::kCommute, {Letter("a1"), Letter("a3")}, D::kLR, 9);
  // = b a2 a3 b a1 (b a2 b) a3 b a1 a2
  sb.apply(RuleId::kBraid, {Letter("b"), Letter("a1")}, D::kLR, 3);
  sb.apply(RuleId::kBraid, {Letter("b"), Letter("a3")}, D::kLR, 7);
  // = (b a2 a3 b a1 a2)(b a2 a3 b a1 a2)
  sb.apply(RuleId::kBraid, {Letter("b"), Letter("a2")}, D::kRL, 5);
  return sb.finish();
}

ProofScript reflection_chain_script() {
  using D = Direction;
  ScriptBuilder sb(parse_word("c3^-1 a3 a1 b a2 a3 b"));
  // = c3^-1 a1 (a3 b a3) a2 b
  sb.apply(RuleId::kCommute, {Letter("a3"), Letter("a1")}, D::kLR, 1);
  sb.apply(RuleId::kCommute, {Letter("a2"), Letter("a3")}, D::kLR, 4);
  // = c3^-1 a1 b a3 (b a2 b)
  sb.apply(RuleId::kBraid, {Letter("b"), Letter("a3")}, D::kLR, 2);
  // = c3^-1 a1 b a3 a2 b a2
  sb.apply(RuleId::kBraid, {Letter("b"), Letter("a2")}, D::kRL, 4);
  // = a1 (c3^-1 b a2 a3 b a1 a2) a1^-1
  sb.apply(RuleId::kCentral, {Letter("c3", -1), Letter("a1")}, D::kLR, 0);
  sb.apply(RuleId::kCommute, {Letter("a3"), Letter("a2")}, D::kLR, 3);
  sb.apply(RuleId::kFreeRed, {Letter("a1")}, D::kRL, 7);
  sb.apply(RuleId::kCommute, {Letter("a2"), Letter("a1")}, D::kLR, 6);
  return sb.finish();
}

std::vector<ProofStep> applicable_steps(const Word& w,
                                        const std::vector<std::string>& insertable) {
  using D = Direction;
  std::vector<ProofStep> out;
  const auto& L = w.letters();
  const std::size_t n = L.size();
  auto add = [&](RuleId id, std::vector<Letter> params, D dir, std::size_t pos) {
    out.push_back({Rule::make(id, std::move(params)), pos, dir});
  };
  auto can_insert = [&](std::string_view name) {
    return std::find(insertable.begin(), insertable.end(), name) != insertable.end();
  };

  for (std::size_t pos = 0; pos <= n; ++pos) {
    if (pos + 1 < n) {
      const Letter& x = L[pos];
      const Letter& y = L[pos + 1];
      if (is_a_curve(x.name()) && is_a_curve(y.name()) && x.name() != y.name()) {
        add(RuleId::kCommute, {x, y}, D::kLR, pos);
      }
      if (is_boundary_twist(x.name()) && is_torus_generator(y.name())) {
        add(RuleId::kCentral, {x, y}, D::kLR, pos);
      } else if (is_boundary_twist(y.name()) && is_torus_generator(x.name())) {
        add(RuleId::kCentral, {y, x}, D::kRL, pos);
      }
      if (x.name() == "h" && is_torus_generator(y.name())) {
        add(RuleId::kCommuteH, {x, y}, D::kLR, pos);
      } else if (y.name() == "h" && is_torus_generator(x.name())) {
        add(RuleId::kCommuteH, {y, x}, D::kRL, pos);
      }
      if (x.cancels(y)) add(RuleId::kFreeRed, {x}, D::kLR, pos);
    }
    if (pos + 2 < n) {
      const Letter& x = L[pos];
      const Letter& y = L[pos + 1];
      const Letter& z = L[pos + 2];
      const Letter b("b");
      if (x == z && is_a_curve(x.name()) && x.sign() == 1 && y == b) {
        add(RuleId::kBraid, {b, x}, D::kLR, pos);
      }
      if (x == b && z == b && is_a_curve(y.name()) && y.sign() == 1) {
        add(RuleId::kBraid, {b, y}, D::kRL, pos);
      }
      if (x.name() == "r" && z.name() == "r" && is_torus_generator(y.name())) {
        add(RuleId::kConjReflect, {y}, D::kLR, pos);
      }
      if (x == Letter("s") && z == Letter("s", -1) && y.name() == "c") {
        add(RuleId::kReverseS, {y}, D::kLR, pos);
      }
    }
    static const Rule star = Rule::make(RuleId::kStar, {});
    if (pos + star.lhs().size() <= n &&
        std::equal(star.lhs().begin(), star.lhs().end(), L.begin() + pos)) {
      out.push_back({star, pos, D::kLR});
    }
    if (pos + star.rhs().size() <= n &&
        std::equal(star.rhs().begin(), star.rhs().end(), L.begin() + pos)) {
      out.push_back({star, pos, D::kRL});
    }
    if (pos < n) {
      const Letter& x = L[pos];
      if (can_insert("r") && is_torus_generator(x.name())) {
        add(RuleId::kConjReflect, {Letter(reflect_curve(x.name()), -x.sign())}, D::kRL, pos);
      }
      if (can_insert("s") && x.name() == "c") {
        add(RuleId::kReverseS, {x.inverse()}, D::kRL, pos);
      }
    }
    for (const std::string& name : insertable) {
      add(RuleId::kFreeRed, {Letter(name, 1)}, D::kRL, pos);
      if (!is_involution(name)) add(RuleId::kFreeRed, {Letter(name, -1)}, D::kRL, pos);
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const ProofStep& a, const ProofStep& b) {
    return std::make_tuple(a.rule.id(), a.position, a.rule.params(), a.direction) <
           std::make_tuple(b.rule.id(), b.position, b.rule.params(), b.direction);
  });
  return out;
}

std::vector<Rule> all_rule_instances(const std::vector<std::string>& names) {
  std::vector<Rule> out;
  std::vector<Letter> letters;
  for (const std::string& n : names) {
    letters.emplace_back(n, 1);
    if (!is_involution(n)) letters.emplace_back(n, -1);
  }
  auto has = [&](std::string_view n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  };
  auto try_add = [&](RuleId id, std::vector<Letter> params) {
    try {
      out.push_back(Rule::make(id, std::move(params)));
    } catch (const InvalidRule&) {
    }
  };
  for (const Letter& x : letters) {
    for (const Letter& y : letters) {
      try_add(RuleId::kCommute, {x, y});
      try_add(RuleId::kCentral, {x, y});
      try_add(RuleId::kCommuteH, {x, y});
    }
    try_add(RuleId::kBraid, {Letter("b"), x});
    if (has("r")) try_add(RuleId::kConjReflect, {x});
    if (has("s")) try_add(RuleId::kReverseS, {x});
    try_add(RuleId::kFreeRed, {x});
  }
  if (has("c1") && has("c2") && has("c3") && has("b") && has("a1") && has("a2") && has("a3")) {
    out.push_back(Rule::make(RuleId::kStar, {}));
  }
  return out;
}

}  // namespace twistcert
