#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twistcert {

enum class GeneratorKind {
  kTwist,            // Dehn twist about a named two-sided curve
  kReflection,       // r: extension of the reflectional symmetry of T
  kComplementHomeo,  // h: homeomorphism supported off T, not a product of twists
  kCurveReverser,    // s: preserves c, reverses orientation of its neighbourhood
  kCrosscapSlide,    // y: crosscap slide (Y-homeomorphism)
};

struct Generator {
  std::string name;
  GeneratorKind kind = GeneratorKind::kTwist;
  std::string curve;  // only for kTwist

  bool is_involution() const { return kind == GeneratorKind::kReflection; }
};

// Named generators. Names are unique; lookups of names that were never added
// resolve to a twist about the curve of the same name.
class Alphabet {
 public:
  // b, a1, a2, a3, c1, c2, c3, c (twists), r, h, s, y.
  static const Alphabet& standard();

  void add(Generator g);
  const Generator* find(std::string_view name) const;
  Generator resolve(std::string_view name) const;
  const std::vector<Generator>& generators() const { return generators_; }

 private:
  std::vector<Generator> generators_;
};

// Curves of the three-holed torus T, the only generators the relation set
// speaks about apart from r, h and s.
inline constexpr std::string_view kTorusGenerators[] = {"b",  "a1", "a2", "a3",
                                                        "c1", "c2", "c3"};

bool is_torus_generator(std::string_view name);
bool is_boundary_twist(std::string_view name);  // c1, c2, c3
bool is_involution(std::string_view name);      // r

// A signed generator. Letters of involutions always carry sign +1.
class Letter {
 public:
  Letter() = default;
  Letter(std::string name, int sign = 1);

  const std::string& name() const { return name_; }
  int sign() const { return sign_; }
  Letter inverse() const { return Letter(name_, -sign_); }
  bool cancels(const Letter& other) const;

  std::string to_string() const;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;

 private:
  std::string name_;
  int sign_ = 1;
};

// Parses "name" or "name^-1".
Letter parse_letter(std::string_view token);

// An immutable sequence of letters. Words are kept exactly as written; use
// free_reduce() to obtain the reduced form.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  // True when no adjacent pair cancels.
  bool is_reduced() const;

  // Segment [pos, pos + len).
  Word slice(std::size_t pos, std::size_t len) const;

  // Space separated tokens; the empty word prints as "".
  std::string to_string() const;

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Word text grammar: whitespace separated tokens `name` or `name^-1` with
// names matching [a-z][a-z0-9]*, plus parenthesized powers `( w )^n`, which
// may nest and are expanded with power(). Empty input is the identity.
Word parse_word(std::string_view text);

Word free_reduce(const Word& w);
Word invert(const Word& w);
Word commutator(const Word& x, const Word& y);
Word power(const Word& w, long n);
// by * w * by^-1, reduced.
Word conjugate(const Word& w, const Word& by);

}  // namespace twistcert
