#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "twistcert/presentation.h"

namespace twistcert {

namespace {

struct Node {
  Word word;
  std::string parent;  // key of the parent; empty for a root
  std::optional<ProofStep> step;  // parent --step--> this
};

using NodeMap = std::unordered_map<std::string, Node>;

std::vector<ProofStep> path_to_root(const NodeMap& nodes, const std::string& key) {
  std::vector<ProofStep> steps;
  std::string cur = key;
  for (;;) {
    const Node& n = nodes.at(cur);
    if (!n.step) break;
    steps.push_back(*n.step);
    cur = n.parent;
  }
  return steps;  // from key back towards the root
}

}  // namespace

SearchResult equal_modulo_rules(const Word& u, const Word& v, std::size_t budget,
                                const SearchOptions& options) {
  SearchResult result;
  if (u == v) {
    result.equal = true;
    result.witness = ProofScript{u, {}, v};
    return result;
  }
  if (budget == 0) return result;

  std::set<std::string> names;
  for (const Letter& l : u) names.insert(l.name());
  for (const Letter& l : v) names.insert(l.name());
  const std::vector<std::string> insertable(names.begin(), names.end());
  const std::size_t max_len = std::max(u.size(), v.size()) + options.slack;

  NodeMap forward;
  NodeMap backward;
  std::deque<std::string> forward_queue;
  std::deque<std::string> backward_queue;
  forward.emplace(u.to_string(), Node{u, {}, std::nullopt});
  backward.emplace(v.to_string(), Node{v, {}, std::nullopt});
  forward_queue.push_back(u.to_string());
  backward_queue.push_back(v.to_string());

  auto witness = [&](const std::string& meet) {
    ProofScript ps{u, {}, v};
    std::vector<ProofStep> head = path_to_root(forward, meet);
    ps.steps.assign(head.rbegin(), head.rend());
    for (const ProofStep& s : path_to_root(backward, meet)) ps.steps.push_back(s.reversed());
    return ps;
  };

  bool forward_turn = true;
  while (result.expanded < budget && (!forward_queue.empty() || !backward_queue.empty())) {
    if (forward_queue.empty()) forward_turn = false;
    if (backward_queue.empty()) forward_turn = true;
    NodeMap& mine = forward_turn ? forward : backward;
    NodeMap& other = forward_turn ? backward : forward;
    auto& queue = forward_turn ? forward_queue : backward_queue;

    std::string key = queue.front();
    queue.pop_front();
    ++result.expanded;
    const Word word = mine.at(key).word;
    for (const ProofStep& step : applicable_steps(word, insertable)) {
      Word child = apply_rule(word, step);
      if (child.size() > max_len) continue;
      std::string child_key = child.to_string();
      if (mine.count(child_key)) continue;
      mine.emplace(child_key, Node{child, key, step});
      if (other.count(child_key)) {
        result.equal = true;
        result.witness = witness(child_key);
        return result;
      }
      queue.push_back(std::move(child_key));
    }
    forward_turn = !forward_turn;
  }
  return result;
}

}  // namespace twistcert
