#include "twistcert/words.h"

#include <gtest/gtest.h>

#include "test_util.h"
#include "twistcert/error.h"

namespace twistcert {
namespace {

using testing::random_word;

// Cancels any adjacent pair it can find, restarting from scratch each time,
// choosing the leftmost or the rightmost pair. Independent of free_reduce.
Word cancel_to_fixpoint(Word w, bool rightmost) {
  std::vector<Letter> letters = w.letters();
  for (;;) {
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      const Letter& x = letters[i];
      const Letter& y = letters[i + 1];
      const bool cancel = x.name() == y.name() && (x.sign() != y.sign() || x.name() == "r");
      if (cancel) {
        hit = i;
        if (!rightmost) break;
      }
    }
    if (!hit) return Word(letters);
    letters.erase(letters.begin() + *hit, letters.begin() + *hit + 2);
  }
}

TEST(WordsTest, ParsesTokensAndInverses) {
  Word w = parse_word("b a1^-1  c3");
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[1], Letter("a1", -1));
  EXPECT_EQ(w.to_string(), "b a1^-1 c3");
  EXPECT_TRUE(parse_word("").empty());
  EXPECT_TRUE(parse_word("   ").empty());
}

TEST(WordsTest, ParsesParenthesizedPowers) {
  EXPECT_EQ(parse_word("(b a1 a2 a3)^3").size(), 12u);
  EXPECT_EQ(parse_word("(b a1)^-1"), parse_word("a1^-1 b^-1"));
  EXPECT_EQ(parse_word("((b)^2 a1)^2"), parse_word("b b a1 b b a1"));
  EXPECT_EQ(parse_word("( b )^0 a1"), parse_word("a1"));
  EXPECT_EQ(parse_word("(b a1)(b a1)"), parse_word("b a1 b a1"));
}

TEST(WordsTest, RejectsMalformedWords) {
  EXPECT_THROW(parse_word("B"), ParseError);
  EXPECT_THROW(parse_word("1a"), ParseError);
  EXPECT_THROW(parse_word("b^2"), ParseError);
  EXPECT_THROW(parse_word("(b a1"), ParseError);
  EXPECT_THROW(parse_word("b a1)"), ParseError);
  EXPECT_THROW(parse_word("(b)^x"), ParseError);
}

TEST(WordsTest, ReflectionIsAnInvolution) {
  EXPECT_EQ(Letter("r", -1), Letter("r"));
  EXPECT_EQ(parse_word("r^-1").to_string(), "r");
  EXPECT_TRUE(free_reduce(parse_word("r r")).empty());
  EXPECT_EQ(invert(parse_word("r")), parse_word("r"));
  EXPECT_FALSE(free_reduce(parse_word("h h")).empty());
}

TEST(WordsTest, FreeReduceExamples) {
  EXPECT_TRUE(free_reduce(parse_word("b b^-1")).empty());
  EXPECT_EQ(free_reduce(parse_word("a1 b b^-1 a1^-1 c2")), parse_word("c2"));
  EXPECT_TRUE(free_reduce(parse_word("b a1")).is_reduced());
}

TEST(WordsTest, InvertExamples) {
  EXPECT_EQ(invert(parse_word("b a1")), parse_word("a1^-1 b^-1"));
  EXPECT_TRUE(invert(Word{}).empty());
}

TEST(WordsTest, CommutatorExamples) {
  const Word b = parse_word("b");
  EXPECT_TRUE(commutator(b, b).empty());
  EXPECT_TRUE(commutator(b, Word{}).empty());
  EXPECT_EQ(commutator(b, parse_word("a1")), parse_word("b a1 b^-1 a1^-1"));
}

TEST(WordsTest, PowerExamples) {
  EXPECT_EQ(power(parse_word("b"), 3), parse_word("b b b"));
  EXPECT_EQ(power(parse_word("b a1"), -1), parse_word("a1^-1 b^-1"));
  const Word w = parse_word("b b^-1 a1");
  // Reduce-then-concatenate and concatenate-then-reduce agree.
  EXPECT_EQ(power(w, 2), free_reduce(w * w));
  EXPECT_EQ(power(w, 2), parse_word("a1 a1"));
  EXPECT_TRUE(power(w, 0).empty());
}

TEST(WordsTest, AlphabetInvariants) {
  const Alphabet& a = Alphabet::standard();
  EXPECT_EQ(a.find("r")->kind, GeneratorKind::kReflection);
  EXPECT_EQ(a.find("h")->kind, GeneratorKind::kComplementHomeo);
  EXPECT_EQ(a.find("s")->kind, GeneratorKind::kCurveReverser);
  EXPECT_EQ(a.find("b")->curve, "b");
  EXPECT_EQ(a.resolve("d7").kind, GeneratorKind::kTwist);
  Alphabet mine;
  mine.add({"t", GeneratorKind::kTwist, "t"});
  EXPECT_THROW(mine.add({"t", GeneratorKind::kTwist, "t"}), Error);
  EXPECT_THROW(mine.add({"u", GeneratorKind::kTwist, ""}), Error);
  EXPECT_THROW(mine.add({"v", GeneratorKind::kReflection, "v"}), Error);
}

TEST(WordsProperty, ReductionIsConfluentAndIdempotent) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 1000; ++trial) {
    // Small alphabet so that cancellations are frequent.
    const Word w = random_word(rng, {"b", "a1", "r"}, 50);
    const Word reduced = free_reduce(w);
    EXPECT_EQ(reduced, cancel_to_fixpoint(w, false));
    EXPECT_EQ(reduced, cancel_to_fixpoint(w, true));
    EXPECT_EQ(free_reduce(reduced), reduced);
    EXPECT_TRUE(reduced.is_reduced());
    EXPECT_LE(reduced.size(), w.size());
  }
}

TEST(WordsProperty, InvertIsAnInvolution) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = random_word(rng, testing::all_names(), 20);
    EXPECT_EQ(invert(invert(w)), free_reduce(w));
    EXPECT_TRUE(free_reduce(w * invert(w)).empty());
  }
}

TEST(WordsProperty, PowersAdd) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = random_word(rng, {"b", "a1", "a2", "r"}, 6);
    for (long m = -5; m <= 5; ++m) {
      for (long n = -5; n <= 5; ++n) {
        ASSERT_EQ(power(w, m + n), free_reduce(power(w, m) * power(w, n)))
            << w.to_string() << " m=" << m << " n=" << n;
      }
    }
  }
}

TEST(WordsProperty, CommutatorOfPowersOfOneGeneratorIsTrivial) {
  for (const std::string& name : testing::all_names()) {
    for (long m = -4; m <= 4; ++m) {
      for (long n = -4; n <= 4; ++n) {
        const Word g{Letter(name)};
        EXPECT_TRUE(commutator(power(g, m), power(g, n)).empty()) << name;
      }
    }
  }
}

}  // namespace
}  // namespace twistcert
