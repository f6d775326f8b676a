#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vsb/presentations.hpp"
#include "vsb/words.hpp"

namespace vsb {

enum class Direction { Forward, Backward };  // lhs -> rhs, rhs -> lhs

struct RewriteStep {
  Relation relation;
  std::size_t position = 0;
  Direction direction = Direction::Forward;
};

class NoMatchError : public WordError {
 public:
  using WordError::WordError;
};

/// Replaces the source side of rel found at pos by the other side.
Word apply_relation_at(Word const& w, Relation const& rel, std::size_t pos, Direction dir);

/// Folds apply_relation_at over a trace.
Word replay(Word const& start, std::vector<RewriteStep> const& trace);

/// The same steps undone in reverse order.
std::vector<RewriteStep> invert_trace(std::vector<RewriteStep> const& trace);

struct SearchBudget {
  std::size_t max_depth = 8;
  std::size_t max_states = 200000;
  std::optional<std::size_t> max_length;  // default max(|w1|, |w2|) + 8
};

struct SearchStats {
  std::size_t states = 0;          // distinct free-reduced words visited
  std::size_t depth_reached = 0;   // forward plus backward levels expanded
  bool exhausted = false;          // both frontiers emptied within the length bound
};

enum class Outcome { Equivalent, Unknown };

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::vector<RewriteStep> trace;  // w1 -> w2 when Equivalent
  SearchStats stats;
  // Moves in the trace. A move is one relation application, possibly preceded
  // by the insertion of a cancelling pair it overlaps; free cancellations are
  // not counted.
  std::size_t relation_steps = 0;
};

/// Bidirectional breadth-first search over free-reduced words using the
/// catalog's relations in both directions. Equivalent verdicts are proofs;
/// Unknown means the budget ran out. Free cancellations and pair insertions
/// appear in the trace as applications of the catalog's identity relations.
Verdict search_equivalent(Word const& w1, Word const& w2, Catalog catalog,
                          SearchBudget const& budget = {});

}  // namespace vsb
