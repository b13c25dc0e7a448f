#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistcert/words.h"

namespace twistcert {

// Relation families of the mapping class group of the three-holed torus T
// (curves b, a1, a2, a3, boundary c1, c2, c3) together with the reflection r,
// the complement homeomorphism h and the curve reverser s.
//
//   COMMUTE(x,y)        x y = y x            disjoint curves
//   BRAID(b,ai)         ai b ai = b ai b
//   STAR()              c1 c2 c3 = (b a1 a2 a3)^3
//   CENTRAL(ci,g)       ci g = g ci          g any curve of T
//   CONJ_REFLECT(g)     r g r = sigma(g)^-1  sigma swaps a2<->a3, c2<->c3
//   REVERSE_S(c)        s c s^-1 = c^-1
//   COMMUTE_H(h,g)      h g = g h            g any curve of T
//   FREE_RED(x)         x x^-1 = (empty)
//
// Parameters are letters, so signs are part of the instance: CENTRAL(c3^-1,a1)
// rewrites "c3^-1 a1" to "a1 c3^-1". The left side of each family is the
// pattern consumed by an LR step.
enum class RuleId {
  kCommute,
  kBraid,
  kStar,
  kCentral,
  kConjReflect,
  kReverseS,
  kCommuteH,
  kFreeRed,
};

std::string_view rule_name(RuleId id);
std::optional<RuleId> rule_from_name(std::string_view name);

// sigma: b, a1, c1 fixed; a2 <-> a3; c2 <-> c3.
std::string reflect_curve(std::string_view name);

class Rule {
 public:
  // Validates the parameters against the family's admissible instances;
  // throws InvalidRule otherwise.
  static Rule make(RuleId id, std::vector<Letter> params);

  RuleId id() const { return id_; }
  const std::vector<Letter>& params() const { return params_; }
  const Word& lhs() const { return lhs_; }
  const Word& rhs() const { return rhs_; }

  // e.g. "CENTRAL(c3^-1,a1)"
  std::string to_string() const;

  friend bool operator==(const Rule& a, const Rule& b) {
    return a.id_ == b.id_ && a.params_ == b.params_;
  }

 private:
  Rule(RuleId id, std::vector<Letter> params, Word lhs, Word rhs)
      : id_(id), params_(std::move(params)), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

  RuleId id_;
  std::vector<Letter> params_;
  Word lhs_;
  Word rhs_;
};

enum class Direction { kLR, kRL };

inline Direction flip(Direction d) { return d == Direction::kLR ? Direction::kRL : Direction::kLR; }

struct ProofStep {
  Rule rule;
  std::size_t position = 0;  // 0-based, in the word as currently written
  Direction direction = Direction::kLR;

  const Word& pattern() const { return direction == Direction::kLR ? rule.lhs() : rule.rhs(); }
  const Word& replacement() const {
    return direction == Direction::kLR ? rule.rhs() : rule.lhs();
  }
  // The step undoing this one: same rule and position, opposite direction.
  ProofStep reversed() const { return {rule, position, flip(direction)}; }

  friend bool operator==(const ProofStep& a, const ProofStep& b) {
    return a.rule == b.rule && a.position == b.position && a.direction == b.direction;
  }
};

// A derivation start = ... = end; every step is explicit, including free
// cancellations and insertions.
struct ProofScript {
  Word start;
  std::vector<ProofStep> steps;
  Word end;
};

// Replaces the matched pattern at step.position; no implicit reduction.
// Throws PatternMismatch when the pattern does not occur there.
Word apply_rule(const Word& w, const ProofStep& step);

// In-place variant used by replay loops.
void apply_rule_in_place(std::vector<Letter>& letters, const ProofStep& step);

struct VerificationReport {
  bool ok = false;
  std::optional<std::size_t> failed_step;  // 0-based index into steps
  std::string message;
  Word final_word;
};

VerificationReport verify_script(const ProofScript& ps);

// The two derivations displayed for the three-holed torus:
// chain A rewrites c1 c2 c3 into (b a2 a3 b a1 a2)(b a2 a3 b a1 a2) with the
// star and braid relations; chain B rewrites
// c3^-1 a3 a1 b a2 a3 b into a1 (c3^-1 b a2 a3 b a1 a2) a1^-1.
ProofScript star_chain_script();
ProofScript reflection_chain_script();

// Every rule instance that can be applied to w, in (rule id, position,
// parameters, direction) order. Insertions (FREE_RED, CONJ_REFLECT and
// REVERSE_S right-to-left) are generated only for letters over
// `insertable`, which should list generator names.
std::vector<ProofStep> applicable_steps(const Word& w,
                                        const std::vector<std::string>& insertable);

// Every admissible rule instance whose letters are drawn from `names`.
std::vector<Rule> all_rule_instances(const std::vector<std::string>& names);

// Builds a derivation incrementally, recording each rewrite as a ProofStep.
// Every operation applies its steps immediately, so a builder bug surfaces
// as PatternMismatch at the offending step instead of a broken script.
class ScriptBuilder {
 public:
  explicit ScriptBuilder(Word start);

  const std::vector<Letter>& current() const { return current_; }
  Word current_word() const { return Word(current_); }
  std::size_t size() const { return current_.size(); }

  void apply(const ProofStep& step);
  void apply(RuleId id, std::vector<Letter> params, Direction dir, std::size_t position);

  // Inserts `l l^-1` at position (FREE_RED right-to-left).
  void insert_pair(std::size_t position, const Letter& l);
  // Cancels the pair starting at position (FREE_RED left-to-right).
  void cancel_pair(std::size_t position);
  // Inserts w w^-1 at position as nested cancelling pairs.
  void insert_word_and_inverse(std::size_t position, const Word& w);
  // Cancels the reduced word w^-1 w that starts at position.
  void cancel_inverse_and_word(std::size_t position, const Word& w);
  // Swaps the commuting letters at position, position+1.
  void swap(std::size_t position);

  // Replays `sub` (a derivation from sub.start) on the segment at offset,
  // with every position shifted.
  void embed(const ProofScript& sub, std::size_t offset);
  // Replays `sub` backwards on the segment at offset, turning sub.end into
  // sub.start.
  void embed_reversed(const ProofScript& sub, std::size_t offset);
  // With invert(sub.start) written at offset, derives invert(sub.end) there.
  // Works for any derivation, including ones whose rules have no inverted
  // form: insert E E^-1, run sub backwards on E, cancel S^-1 S.
  void embed_inverted(const ProofScript& sub, std::size_t offset);

  // Cancels adjacent inverse pairs, leftmost first, until reduced.
  void reduce_fully();
  // Reorders the current word into `target` using commutations only.
  // Central letters (c1, c2, c3) may move past anything; other letters move
  // only past central letters. Throws Error when the target is not reachable
  // this way.
  void rearrange_to(const Word& target);

  ProofScript finish() const;

 private:
  Word start_;
  std::vector<Letter> current_;
  std::vector<ProofStep> steps_;
};

// Whether two letters commute by a single COMMUTE/CENTRAL/COMMUTE_H step,
// and the step that swaps them at `position`.
std::optional<ProofStep> swap_step(const Letter& x, const Letter& y, std::size_t position);

// Bounded bidirectional breadth-first search for a derivation between u and v.
struct SearchOptions {
  std::size_t slack = 8;  // words longer than max(|u|,|v|) + slack are pruned
};

struct SearchResult {
  bool equal = false;  // false means "unknown", never "different"
  std::optional<ProofScript> witness;
  std::size_t expanded = 0;
};

SearchResult equal_modulo_rules(const Word& u, const Word& v, std::size_t budget,
                                const SearchOptions& options = {});

}  // namespace twistcert
