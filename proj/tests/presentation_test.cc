#include "twistcert/presentation.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "test_util.h"
#include "twistcert/error.h"
#include "twistcert/homology.h"

namespace twistcert {
namespace {

ProofStep step(RuleId id, std::vector<Letter> params, Direction dir, std::size_t pos) {
  return {Rule::make(id, std::move(params)), pos, dir};
}

Letter L(const char* name, int sign = 1) { return Letter(name, sign); }

TEST(ApplyRuleTest, BraidLeftToRight) {
  const Word w = parse_word("c1 a1 b a1 a2");
  EXPECT_EQ(apply_rule(w, step(RuleId::kBraid, {L("b"), L("a1")}, Direction::kLR, 1)),
            parse_word("c1 b a1 b a2"));
}

TEST(ApplyRuleTest, ConjugationByReflection) {
  EXPECT_EQ(apply_rule(parse_word("r a2 r"),
                       step(RuleId::kConjReflect, {L("a2")}, Direction::kLR, 0)),
            parse_word("a3^-1"));
  EXPECT_EQ(apply_rule(parse_word("r c2^-1 r"),
                       step(RuleId::kConjReflect, {L("c2", -1)}, Direction::kLR, 0)),
            parse_word("c3"));
}

TEST(ApplyRuleTest, CommutationIsSymmetric) {
  const Word w = parse_word("a3 a2");
  EXPECT_EQ(apply_rule(w, step(RuleId::kCommute, {L("a2"), L("a3")}, Direction::kRL, 0)),
            parse_word("a2 a3"));
  EXPECT_EQ(apply_rule(w, step(RuleId::kCommute, {L("a3"), L("a2")}, Direction::kLR, 0)),
            parse_word("a2 a3"));
}

TEST(ApplyRuleTest, StarAndFreeReduction) {
  EXPECT_EQ(apply_rule(parse_word("c1 c2 c3"), step(RuleId::kStar, {}, Direction::kLR, 0)),
            parse_word("(b a1 a2 a3)^3"));
  EXPECT_EQ(apply_rule(parse_word("b"), step(RuleId::kFreeRed, {L("a1", -1)}, Direction::kRL, 1)),
            parse_word("b a1^-1 a1"));
  EXPECT_EQ(apply_rule(parse_word("b r r"), step(RuleId::kFreeRed, {L("r")}, Direction::kLR, 1)),
            parse_word("b"));
  EXPECT_EQ(apply_rule(parse_word("s c s^-1"), step(RuleId::kReverseS, {L("c")}, Direction::kLR, 0)),
            parse_word("c^-1"));
}

TEST(ApplyRuleTest, MismatchReportsPosition) {
  try {
    apply_rule(parse_word("b a1 b"), step(RuleId::kBraid, {L("b"), L("a1")}, Direction::kLR, 0));
    FAIL() << "expected PatternMismatch";
  } catch (const PatternMismatch& e) {
    EXPECT_EQ(e.position(), 0u);
    EXPECT_EQ(e.expected(), "a1 b a1");
  }
  EXPECT_THROW(apply_rule(parse_word("a1 b"),
                          step(RuleId::kBraid, {L("b"), L("a1")}, Direction::kLR, 0)),
               PatternMismatch);
  EXPECT_THROW(apply_rule(parse_word("a1 b a1"),
                          step(RuleId::kBraid, {L("b"), L("a1")}, Direction::kLR, 5)),
               PatternMismatch);
}

TEST(RuleTest, RejectsInadmissibleInstances) {
  EXPECT_THROW(Rule::make(RuleId::kCommute, {L("a1"), L("b")}), InvalidRule);  // meet once
  EXPECT_THROW(Rule::make(RuleId::kCommute, {L("a1"), L("a1")}), InvalidRule);
  EXPECT_THROW(Rule::make(RuleId::kBraid, {L("a1"), L("a2")}), InvalidRule);
  EXPECT_THROW(Rule::make(RuleId::kBraid, {L("b", -1), L("a2")}), InvalidRule);
  EXPECT_THROW(Rule::make(RuleId::kStar, {L("b")}), InvalidRule);
  EXPECT_THROW(Rule::make(RuleId::kCentral, {L("a1"), L("b")}), InvalidRule);
  EXPECT_THROW(Rule::make(RuleId::kCentral, {L("c1"), L("r")}), InvalidRule);
  EXPECT_THROW(Rule::make(RuleId::kConjReflect, {L("h")}), InvalidRule);
  EXPECT_THROW(Rule::make(RuleId::kReverseS, {L("b")}), InvalidRule);
  EXPECT_THROW(Rule::make(RuleId::kCommuteH, {L("b"), L("a1")}), InvalidRule);
  EXPECT_NO_THROW(Rule::make(RuleId::kCommute, {L("c2", -1), L("b")}));
  EXPECT_NO_THROW(Rule::make(RuleId::kCentral, {L("c3", -1), L("c2", -1)}));
  EXPECT_EQ(Rule::make(RuleId::kCentral, {L("c3", -1), L("a1")}).to_string(), "CENTRAL(c3^-1,a1)");
}

TEST(RuleTest, ReflectionSwapsTheRightCurves) {
  EXPECT_EQ(reflect_curve("a2"), "a3");
  EXPECT_EQ(reflect_curve("a3"), "a2");
  EXPECT_EQ(reflect_curve("c2"), "c3");
  EXPECT_EQ(reflect_curve("c3"), "c2");
  for (const std::string& g : testing::torus_names()) {
    EXPECT_EQ(reflect_curve(reflect_curve(g)), g);
  }
  EXPECT_EQ(reflect_curve("b"), "b");
  EXPECT_EQ(reflect_curve("a1"), "a1");
  EXPECT_EQ(reflect_curve("c1"), "c1");
}

TEST(RuleTest, NamesRoundTrip) {
  for (RuleId id : {RuleId::kCommute, RuleId::kBraid, RuleId::kStar, RuleId::kCentral,
                    RuleId::kConjReflect, RuleId::kReverseS, RuleId::kCommuteH,
                    RuleId::kFreeRed}) {
    EXPECT_EQ(rule_from_name(rule_name(id)), id);
  }
  EXPECT_FALSE(rule_from_name("NOPE"));
}

TEST(VerifyScriptTest, DisplayedChainsVerify) {
  const ProofScript a = star_chain_script();
  EXPECT_TRUE(verify_script(a).ok);
  EXPECT_EQ(a.start, parse_word("c1 c2 c3"));
  EXPECT_EQ(a.end, parse_word("(b a2 a3 b a1 a2)^2"));

  const ProofScript b = reflection_chain_script();
  EXPECT_TRUE(verify_script(b).ok);
  EXPECT_EQ(b.start, parse_word("c3^-1 a3 a1 b a2 a3 b"));
  EXPECT_EQ(b.end, parse_word("a1 c3^-1 b a2 a3 b a1 a2 a1^-1"));
}

TEST(VerifyScriptTest, EveryPositionPerturbationFailsAtThatStep) {
  for (const ProofScript& base : {star_chain_script(), reflection_chain_script()}) {
    for (std::size_t i = 0; i < base.steps.size(); ++i) {
      for (int delta : {-1, 1}) {
        if (delta < 0 && base.steps[i].position == 0) continue;
        ProofScript ps = base;
        ps.steps[i].position += delta;
        const VerificationReport report = verify_script(ps);
        EXPECT_FALSE(report.ok);
        ASSERT_TRUE(report.failed_step.has_value());
        if (base.steps[i].pattern().empty()) {
          // An insertion is valid at any position inside the word; the shifted
          // copy then derails a later step.
          EXPECT_GE(*report.failed_step, i) << "step " << i << " delta " << delta;
        } else {
          EXPECT_EQ(*report.failed_step, i) << "step " << i << " delta " << delta;
        }
      }
    }
  }
}

TEST(VerifyScriptTest, FlippedDirectionAndWrongEndAreCaught) {
  ProofScript ps = star_chain_script();
  ps.steps[5].direction = flip(ps.steps[5].direction);
  EXPECT_EQ(verify_script(ps).failed_step, std::optional<std::size_t>(5));

  ps = star_chain_script();
  ps.end = parse_word("b a2 a3 b a1 a2");
  const VerificationReport report = verify_script(ps);
  EXPECT_FALSE(report.ok);
  EXPECT_FALSE(report.failed_step.has_value());
  EXPECT_EQ(report.final_word, star_chain_script().end);

  ps = star_chain_script();
  ps.steps.pop_back();
  EXPECT_FALSE(verify_script(ps).ok);
}

TEST(VerifyScriptTest, EmptyScriptNeedsEqualEnds) {
  EXPECT_TRUE(verify_script({parse_word("b"), {}, parse_word("b")}).ok);
  EXPECT_FALSE(verify_script({parse_word("b"), {}, parse_word("a1")}).ok);
}

TEST(ScriptBuilderTest, OperationsRecordReplayableSteps) {
  ScriptBuilder sb(parse_word("c2 b a1"));
  sb.insert_word_and_inverse(3, parse_word("a2 b"));
  EXPECT_EQ(sb.current_word(), parse_word("c2 b a1 a2 b b^-1 a2^-1"));
  sb.rearrange_to(parse_word("b a1 a2 b b^-1 a2^-1 c2"));
  sb.reduce_fully();
  EXPECT_EQ(sb.current_word(), parse_word("b a1 c2"));
  const ProofScript ps = sb.finish();
  EXPECT_TRUE(verify_script(ps).ok);
  EXPECT_THROW(ScriptBuilder(parse_word("b a1")).rearrange_to(parse_word("a1 b")), Error);
}

TEST(ScriptBuilderTest, EmbedInvertedDerivesTheInverseIdentity) {
  const ProofScript a = star_chain_script();
  ScriptBuilder sb(invert(a.start));
  sb.embed_inverted(a, 0);
  EXPECT_EQ(sb.current_word(), invert(a.end));
  EXPECT_TRUE(verify_script(sb.finish()).ok);
}

// Every admissible instance, applied in every matching position of random
// words in both directions, leaves the homology value unchanged.
TEST(RuleProperty, RewritesPreserveTheRepresentation) {
  const HomologyAssignment ha = genus3_extended_assignment();
  const std::vector<Rule> rules = all_rule_instances(testing::all_names());
  ASSERT_FALSE(rules.empty());
  std::mt19937 rng(424242);
  std::size_t applied = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Word w = testing::random_word(rng, testing::all_names(), 12);
    const IntMatrix before = evaluate_rep(w, ha);
    for (const ProofStep& st : applicable_steps(w, testing::all_names())) {
      const Word after = apply_rule(w, st);
      ASSERT_EQ(evaluate_rep(after, ha), before) << st.rule.to_string() << " on " << w.to_string();
      ASSERT_EQ(apply_rule(after, st.reversed()), w);
      ++applied;
    }
  }
  EXPECT_GT(applied, 1000u);
}

// applicable_steps lists one canonical step per rewrite; the words it
// reaches must be exactly those reached by brute-force matching.
TEST(RuleProperty, ApplicableStepsReachEveryRewrite) {
  std::mt19937 rng(99);
  const std::vector<Rule> rules = all_rule_instances(testing::torus_names());
  for (int trial = 0; trial < 100; ++trial) {
    const Word w = testing::random_word(rng, testing::torus_names(), 10);
    std::set<std::string> listed;
    for (const ProofStep& st : applicable_steps(w, {})) {
      listed.insert(apply_rule(w, st).to_string());
    }
    std::set<std::string> expected;
    for (const Rule& rule : rules) {
      for (Direction d : {Direction::kLR, Direction::kRL}) {
        const Word& pat = d == Direction::kLR ? rule.lhs() : rule.rhs();
        // With nothing insertable, the inserting directions are never listed.
        const bool inserting = d == Direction::kRL && (rule.id() == RuleId::kFreeRed ||
                                                       rule.id() == RuleId::kConjReflect ||
                                                       rule.id() == RuleId::kReverseS);
        if (pat.empty() || inserting) continue;
        for (std::size_t pos = 0; pos + pat.size() <= w.size(); ++pos) {
          if (w.slice(pos, pat.size()) == pat) {
            expected.insert(apply_rule(w, ProofStep{rule, pos, d}).to_string());
          }
        }
      }
    }
    EXPECT_EQ(listed, expected) << w.to_string();
  }
}

}  // namespace
}  // namespace twistcert
