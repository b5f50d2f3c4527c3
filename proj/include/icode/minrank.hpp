#pragma once

// Exact minrank over GF(2) of a side-information graph, and the edge
// criticality test built on it.
//
// A K x K matrix fits the graph when its diagonal is all ones and every
// off-diagonal one sits on an edge (i, j), i.e. j is in antidotes(i).

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "icode/gf2.hpp"
#include "icode/model.hpp"

namespace icode {

struct MinrankLimits {
  /// Graphs with more edges than this are refused.
  std::size_t max_free_entries = 26;
  /// Search nodes visited before giving up.
  std::uint64_t max_nodes = std::uint64_t{1} << 26;
};

/// The search could not finish within its limits. Never a wrong answer.
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MinrankResult {
  std::size_t value = 0;
  /// First optimal fitting matrix in search order.
  BitMatrix witness;
  std::uint64_t explored = 0;
};

bool fits(const BitMatrix& a, const ProblemSpec& g);

/// Depth-first over the edge entries, rows top-down and left to right inside
/// a row, 0 before 1. A branch is cut as soon as the completed rows already
/// span as much as the best matrix found.
MinrankResult minrank(const ProblemSpec& g, const MinrankLimits& limits = {});

struct EdgeCriticality {
  std::size_t i = 0;
  std::size_t j = 0;
  bool critical = false;
  std::size_t minrank_without = 0;
};

struct CriticalityReport {
  std::size_t minrank = 0;
  /// One entry per edge, ordered by (i, j).
  std::vector<EdgeCriticality> edges;
  /// True when every edge is critical (vacuously true without edges).
  bool critical = true;
};

/// An edge is critical when deleting it strictly raises the minrank.
CriticalityReport is_critical(const ProblemSpec& g, const MinrankLimits& limits = {});

}  // namespace icode
