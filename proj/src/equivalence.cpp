#include "vsb/equivalence.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace vsb {

namespace {

Word const& source_of(Relation const& rel, Direction dir) {
  return dir == Direction::Forward ? rel.lhs : rel.rhs;
}

Word const& target_of(Relation const& rel, Direction dir) {
  return dir == Direction::Forward ? rel.rhs : rel.lhs;
}

Direction flip(Direction dir) {
  return dir == Direction::Forward ? Direction::Backward : Direction::Forward;
}

bool matches_at(std::span<Generator const> letters, Word const& pattern, std::size_t pos) {
  if (pos + pattern.size() > letters.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), letters.begin() + static_cast<long>(pos));
}

Word splice(Word const& w, std::size_t pos, std::size_t removed, Word const& inserted) {
  std::vector<Generator> out(w.begin(), w.begin() + static_cast<long>(pos));
  out.insert(out.end(), inserted.begin(), inserted.end());
  out.insert(out.end(), w.begin() + static_cast<long>(pos + removed), w.end());
  return Word(w.strands(), std::move(out));
}

}  // namespace

Word apply_relation_at(Word const& w, Relation const& rel, std::size_t pos, Direction dir) {
  Word const& source = source_of(rel, dir);
  if (w.strands() != source.strands()) {
    throw StrandMismatchError("relation and word have different strand counts");
  }
  if (!matches_at(w.letters(), source, pos)) {
    throw NoMatchError("relation " + rel.describe() + " does not match at offset " +
                       std::to_string(pos));
  }
  return splice(w, pos, source.size(), target_of(rel, dir));
}

Word replay(Word const& start, std::vector<RewriteStep> const& trace) {
  Word w = start;
  for (auto const& step : trace) w = apply_relation_at(w, step.relation, step.position, step.direction);
  return w;
}

std::vector<RewriteStep> invert_trace(std::vector<RewriteStep> const& trace) {
  std::vector<RewriteStep> out;
  out.reserve(trace.size());
  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    out.push_back(RewriteStep{it->relation, it->position, flip(it->direction)});
  }
  return out;
}

namespace {

struct Move {
  std::size_t relation;
  Direction direction;
};

struct Node {
  Word word;
  std::ptrdiff_t parent;  // -1 at the root
  std::vector<RewriteStep> steps;  // parent -> this node
  std::size_t depth;
};

class Side {
 public:
  std::vector<Node> nodes;
  std::unordered_map<Word, std::size_t> index;
  std::vector<std::size_t> frontier;
  std::size_t depth = 0;

  // Steps from the root to node id.
  std::vector<RewriteStep> path_to(std::size_t id) const {
    std::vector<std::vector<RewriteStep> const*> chunks;
    for (auto cur = static_cast<std::ptrdiff_t>(id); cur >= 0;
         cur = nodes[static_cast<std::size_t>(cur)].parent) {
      chunks.push_back(&nodes[static_cast<std::size_t>(cur)].steps);
    }
    std::vector<RewriteStep> out;
    for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) {
      out.insert(out.end(), (*it)->begin(), (*it)->end());
    }
    return out;
  }
};

class Searcher {
 public:
  Searcher(Catalog catalog, int strands, SearchBudget const& budget, std::size_t max_length)
      : relations_(instantiate_relations(catalog, strands)),
        budget_(budget),
        max_length_(max_length) {
    for (std::size_t r = 0; r < relations_.size(); ++r) {
      auto const& rel = relations_[r];
      for (Direction dir : {Direction::Forward, Direction::Backward}) {
        Word const& source = source_of(rel, dir);
        // Sources that are free-cancellable pairs never occur in reduced
        // states; empty sources only re-insert such pairs.
        if (source.empty()) {
          if (dir == Direction::Backward && rel.lhs.size() == 2) {
            auto const key = std::make_pair(rel.lhs[0], rel.lhs[1]);
            if (cancellers_.emplace(key, r).second) inserters_.push_back(r);
          }
          continue;
        }
        if (target_of(rel, dir).empty()) continue;
        by_first_[source[0]].push_back(Move{r, dir});
        longest_source_ = std::max(longest_source_, source.size());
      }
    }
  }

  // Reduces w, recording each cancellation as a forward identity-relation step.
  Word reduce(Word const& w, std::vector<RewriteStep>& steps) const {
    std::vector<std::size_t> at;
    Word current = w;
    Word reduced = free_reduce_traced(w, at);
    for (std::size_t pos : at) {
      auto const key = std::make_pair(current[pos], current[pos + 1]);
      auto it = cancellers_.find(key);
      if (it == cancellers_.end()) {
        throw std::logic_error("catalog has no identity relation for " + key.first.token() + " " +
                               key.second.token());
      }
      steps.push_back(RewriteStep{relations_[it->second], pos, Direction::Forward});
      current = apply_relation_at(current, relations_[it->second], pos, Direction::Forward);
    }
    return reduced;
  }

  Verdict run(Word const& w1, Word const& w2) {
    Verdict verdict;
    std::vector<RewriteStep> lead_in, lead_out;
    Word const a = reduce(w1, lead_in);
    Word const b = reduce(w2, lead_out);

    Side fwd, bwd;
    seed(fwd, a);
    seed(bwd, b);
    std::size_t states = a == b ? 1 : 2;

    auto finish = [&](std::size_t f_id, std::size_t b_id) {
      verdict.outcome = Outcome::Equivalent;
      verdict.trace = lead_in;
      auto forward = fwd.path_to(f_id);
      auto backward = invert_trace(bwd.path_to(b_id));
      verdict.trace.insert(verdict.trace.end(), forward.begin(), forward.end());
      verdict.trace.insert(verdict.trace.end(), backward.begin(), backward.end());
      auto tail = invert_trace(lead_out);
      verdict.trace.insert(verdict.trace.end(), tail.begin(), tail.end());
      verdict.relation_steps = fwd.nodes[f_id].depth + bwd.nodes[b_id].depth;
    };

    if (a == b) {
      finish(0, 0);
      verdict.stats = {states, 0, false};
      return verdict;
    }

    while (fwd.depth + bwd.depth < budget_.max_depth) {
      if (fwd.frontier.empty() || bwd.frontier.empty()) {
        verdict.stats.exhausted = true;
        break;
      }
      bool const expand_forward = fwd.frontier.size() <= bwd.frontier.size();
      Side& here = expand_forward ? fwd : bwd;
      Side const& there = expand_forward ? bwd : fwd;

      // Best meeting of this level: fewest total relation steps, then the
      // shortlex-least meeting word.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      auto better = [&](std::size_t h, std::size_t t) {
        if (!best) return true;
        auto const total = here.nodes[h].depth + there.nodes[t].depth;
        auto const best_total = here.nodes[best->first].depth + there.nodes[best->second].depth;
        if (total != best_total) return total < best_total;
        return here.nodes[h].word < here.nodes[best->first].word;
      };

      std::vector<std::size_t> next;
      bool out_of_states = false;
      for (std::size_t id : here.frontier) {
        for (auto& [word, steps] : successors(here.nodes[id].word)) {
          if (here.index.count(word)) continue;
          if (states >= budget_.max_states) {
            out_of_states = true;
            break;
          }
          std::size_t const child = here.nodes.size();
          here.nodes.push_back(Node{word, static_cast<std::ptrdiff_t>(id), std::move(steps),
                                    here.depth + 1});
          here.index.emplace(word, child);
          next.push_back(child);
          ++states;
          if (auto hit = there.index.find(word); hit != there.index.end()) {
            if (better(child, hit->second)) best = std::make_pair(child, hit->second);
          }
        }
        if (out_of_states) break;
      }
      here.frontier = std::move(next);
      ++here.depth;

      if (best) {
        if (expand_forward) {
          finish(best->first, best->second);
        } else {
          finish(best->second, best->first);
        }
        break;
      }
      if (out_of_states) break;
    }
    verdict.stats.states = states;
    verdict.stats.depth_reached = fwd.depth + bwd.depth;
    return verdict;
  }

 private:
  void seed(Side& side, Word const& w) const {
    side.nodes.push_back(Node{w, -1, {}, 0});
    side.index.emplace(w, 0);
    side.frontier = {0};
  }

  using Successors = std::vector<std::pair<Word, std::vector<RewriteStep>>>;

  // Applies every relation matching w at a position in [lo, hi] whose match
  // ends after offset `touch`.
  void apply_moves(Word const& w, std::size_t lo, std::size_t hi, std::size_t touch,
                   std::vector<RewriteStep> const& prefix, Successors& out) const {
    for (std::size_t pos = lo; pos <= hi && pos < w.size(); ++pos) {
      auto it = by_first_.find(w[pos]);
      if (it == by_first_.end()) continue;
      for (auto const& move : it->second) {
        auto const& rel = relations_[move.relation];
        Word const& source = source_of(rel, move.direction);
        if (pos + source.size() <= touch) continue;
        if (!matches_at(w.letters(), source, pos)) continue;
        Word raw = splice(w, pos, source.size(), target_of(rel, move.direction));
        std::vector<RewriteStep> steps = prefix;
        steps.push_back(RewriteStep{rel, pos, move.direction});
        Word reduced = reduce(raw, steps);
        if (reduced.size() > max_length_) continue;
        out.emplace_back(std::move(reduced), std::move(steps));
      }
    }
  }

  // Successors in deterministic order. Plain moves first (by position, then
  // relation order, forward before backward); then moves that insert a
  // cancelling pair at offset q and rewrite across it.
  Successors successors(Word const& w) const {
    Successors out;
    if (!w.empty()) apply_moves(w, 0, w.size() - 1, 0, {}, out);
    for (std::size_t q = 0; q <= w.size(); ++q) {
      for (std::size_t r : inserters_) {
        auto const& rel = relations_[r];
        Word const padded = splice(w, q, 0, rel.lhs);
        if (padded.size() > max_length_ + 2) continue;
        std::size_t const lo = q + 1 >= longest_source_ ? q + 1 - longest_source_ : 0;
        apply_moves(padded, lo, q + 1, q, {RewriteStep{rel, q, Direction::Backward}}, out);
      }
    }
    return out;
  }

  std::vector<Relation> relations_;
  SearchBudget budget_;
  std::size_t max_length_;
  std::unordered_map<Generator, std::vector<Move>> by_first_;
  std::map<std::pair<Generator, Generator>, std::size_t> cancellers_;
  std::vector<std::size_t> inserters_;
  std::size_t longest_source_ = 0;
};

}  // namespace

Verdict search_equivalent(Word const& w1, Word const& w2, Catalog catalog,
                          SearchBudget const& budget) {
  if (w1.strands() != w2.strands()) {
    throw StrandMismatchError("words have different strand counts");
  }
  for (Word const* w : {&w1, &w2}) {
    for (auto const& g : *w) {
      if (!in_alphabet(catalog, g)) {
        throw WordError("letter " + g.token() + " is not in the alphabet of catalog " +
                        catalog_name(catalog));
      }
    }
  }
  if (w1 == w2) return Verdict{Outcome::Equivalent, {}, {1, 0, false}, 0};

  std::size_t const max_length = budget.max_length.value_or(std::max(w1.size(), w2.size()) + 8);
  // Search from the shortlex-smaller endpoint so that swapping the arguments
  // yields exactly the inverted trace.
  if (w2 < w1) {
    Verdict v = Searcher(catalog, w1.strands(), budget, max_length).run(w2, w1);
    v.trace = invert_trace(v.trace);
    return v;
  }
  return Searcher(catalog, w1.strands(), budget, max_length).run(w1, w2);
}

}  // namespace vsb
