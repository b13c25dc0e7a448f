#include <algorithm>

#include "twistcert/error.h"
#include "twistcert/presentation.h"

namespace twistcert {

std::optional<ProofStep> swap_step(const Letter& x, const Letter& y, std::size_t position) {
  using D = Direction;
  auto step = [&](RuleId id, std::vector<Letter> params, D dir) {
    return ProofStep{Rule::make(id, std::move(params)), position, dir};
  };
  if (is_boundary_twist(x.name()) && is_torus_generator(y.name())) {
    return step(RuleId::kCentral, {x, y}, D::kLR);
  }
  if (is_boundary_twist(y.name()) && is_torus_generator(x.name())) {
    return step(RuleId::kCentral, {y, x}, D::kRL);
  }
  if (x.name() == "h" && is_torus_generator(y.name())) {
    return step(RuleId::kCommuteH, {x, y}, D::kLR);
  }
  if (y.name() == "h" && is_torus_generator(x.name())) {
    return step(RuleId::kCommuteH, {y, x}, D::kRL);
  }
  try {
    return step(RuleId::kCommute, {x, y}, D::kLR);
  } catch (const InvalidRule&) {
    return std::nullopt;
  }
}

ScriptBuilder::ScriptBuilder(Word start) : start_(std::move(start)), current_(start_.letters()) {}

void ScriptBuilder::apply(const ProofStep& step) {
  apply_rule_in_place(current_, step);
  steps_.push_back(step);
}

void ScriptBuilder::apply(RuleId id, std::vector<Letter> params, Direction dir,
                          std::size_t position) {
  apply(ProofStep{Rule::make(id, std::move(params)), position, dir});
}

void ScriptBuilder::insert_pair(std::size_t position, const Letter& l) {
  apply(RuleId::kFreeRed, {l}, Direction::kRL, position);
}

void ScriptBuilder::cancel_pair(std::size_t position) {
  if (position >= current_.size()) {
    throw PatternMismatch(position, "<cancelling pair>", "");
  }
  apply(RuleId::kFreeRed, {current_[position]}, Direction::kLR, position);
}

void ScriptBuilder::insert_word_and_inverse(std::size_t position, const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) insert_pair(position + i, w[i]);
}

void ScriptBuilder::cancel_inverse_and_word(std::size_t position, const Word& w) {
  for (std::size_t i = w.size(); i-- > 0;) cancel_pair(position + i);
}

void ScriptBuilder::swap(std::size_t position) {
  if (position + 1 >= current_.size()) {
    throw PatternMismatch(position, "<two letters>", "");
  }
  auto step = swap_step(current_[position], current_[position + 1], position);
  if (!step) {
    throw Error("letters '" + current_[position].to_string() + "' and '" +
                current_[position + 1].to_string() + "' do not commute by a single rule");
  }
  apply(*step);
}

void ScriptBuilder::embed(const ProofScript& sub, std::size_t offset) {
  for (const ProofStep& s : sub.steps) {
    apply(ProofStep{s.rule, s.position + offset, s.direction});
  }
}

void ScriptBuilder::embed_reversed(const ProofScript& sub, std::size_t offset) {
  for (auto it = sub.steps.rbegin(); it != sub.steps.rend(); ++it) {
    apply(ProofStep{it->rule, it->position + offset, flip(it->direction)});
  }
}

void ScriptBuilder::embed_inverted(const ProofScript& sub, std::size_t offset) {
  const std::size_t after = offset + sub.start.size();
  insert_word_and_inverse(after, sub.end);
  embed_reversed(sub, after);
  cancel_inverse_and_word(offset, sub.start);
}

void ScriptBuilder::reduce_fully() {
  std::size_t i = 0;
  while (i + 1 < current_.size()) {
    if (current_[i].cancels(current_[i + 1])) {
      cancel_pair(i);
      if (i > 0) --i;
    } else {
      ++i;
    }
  }
}

void ScriptBuilder::rearrange_to(const Word& target) {
  if (target.size() != current_.size()) {
    throw Error("rearrange_to: length " + std::to_string(current_.size()) +
                " cannot be reordered into length " + std::to_string(target.size()));
  }
  for (std::size_t i = 0; i < target.size(); ++i) {
    const Letter& want = target[i];
    if (current_[i] == want) continue;
    const bool central = is_boundary_twist(want.name());
    std::size_t j = i;
    for (std::size_t k = i; k < current_.size(); ++k) {
      if (current_[k] == want) {
        j = k;
        break;
      }
      if (!central && !is_boundary_twist(current_[k].name())) break;
      if (central && !swap_step(current_[k], want, 0)) break;
    }
    if (j == i) {
      throw Error("rearrange_to: cannot bring '" + want.to_string() + "' to position " +
                  std::to_string(i));
    }
    for (std::size_t k = j; k > i; --k) swap(k - 1);
  }
}

ProofScript ScriptBuilder::finish() const {
  return ProofScript{start_, steps_, Word(current_)};
}

}  // namespace twistcert
