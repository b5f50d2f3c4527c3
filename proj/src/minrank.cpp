#include "icode/minrank.hpp"

#include <string>

#include "bits.hpp"

namespace icode {

namespace {

class Search {
 public:
  Search(const ProblemSpec& g, const MinrankLimits& limits)
      : K_(g.K()), stride_(words_for(g.K())), limits_(limits), free_(K_),
        rows_(K_, std::vector<Word>(stride_, 0)), pivot_(K_), has_pivot_(K_, false),
        best_(K_ + 1) {
    for (std::size_t i = 0; i < K_; ++i) {
      bits::set(rows_[i], i);
      for (std::size_t j : g.antidotes(i + 1)) free_[i].push_back(j - 1);
    }
  }

  MinrankResult run() {
    descend(0, 0, 0);
    MinrankResult out;
    out.value = best_;
    out.witness = BitMatrix(K_, K_);
    for (std::size_t i = 0; i < K_; ++i)
      for (std::size_t j = 0; j < K_; ++j)
        if (bits::test(best_rows_[i], j)) out.witness.set(i + 1, j + 1);
    out.explored = explored_;
    return out;
  }

 private:
  void descend(std::size_t row, std::size_t entry, std::size_t rank) {
    if (++explored_ > limits_.max_nodes) throw Inconclusive("inconclusive: budget exhausted");
    if (row == K_) {
      if (rank < best_) {
        best_ = rank;
        best_rows_ = rows_;
      }
      return;
    }
    if (entry == free_[row].size()) {
      const bool grew = insert(rows_[row]);
      const std::size_t next = rank + (grew ? 1 : 0);
      if (next < best_) descend(row + 1, 0, next);
      if (grew) remove_last();
      return;
    }
    const std::size_t col = free_[row][entry];
    descend(row, entry + 1, rank);
    bits::set(rows_[row], col);
    descend(row, entry + 1, rank);
    bits::clear(rows_[row], col);
  }

  /// Adds v to the echelon basis; false when v is already in the span.
  bool insert(const std::vector<Word>& v) {
    std::vector<Word> r = v;
    while (true) {
      const std::size_t p = bits::lowest(r);
      if (p == bits::npos) return false;
      if (!has_pivot_[p]) {
        pivot_[p] = std::move(r);
        has_pivot_[p] = true;
        undo_.push_back(p);
        return true;
      }
      bits::xor_into(r, pivot_[p]);
    }
  }

  void remove_last() {
    has_pivot_[undo_.back()] = false;
    undo_.pop_back();
  }

  std::size_t K_;
  std::size_t stride_;
  MinrankLimits limits_;
  std::vector<std::vector<std::size_t>> free_;
  std::vector<std::vector<Word>> rows_;
  std::vector<std::vector<Word>> pivot_;
  std::vector<bool> has_pivot_;
  std::vector<std::size_t> undo_;
  std::size_t best_;
  std::vector<std::vector<Word>> best_rows_;
  std::uint64_t explored_ = 0;
};

}  // namespace

bool fits(const BitMatrix& a, const ProblemSpec& g) {
  const std::size_t K = g.K();
  if (a.rows() != K || a.cols() != K)
    throw DimensionError("fitting matrix must be " + std::to_string(K) + "x" + std::to_string(K));
  for (std::size_t i = 1; i <= K; ++i) {
    for (std::size_t j = 1; j <= K; ++j) {
      const bool bit = a.get(i, j);
      if (i == j && !bit) return false;
      if (i != j && bit && !g.has_edge(i, j)) return false;
    }
  }
  return true;
}

MinrankResult minrank(const ProblemSpec& g, const MinrankLimits& limits) {
  if (g.edge_count() > limits.max_free_entries)
    throw Inconclusive("inconclusive: budget exhausted (" + std::to_string(g.edge_count()) +
                       " edges, limit " + std::to_string(limits.max_free_entries) + ")");
  return Search(g, limits).run();
}

CriticalityReport is_critical(const ProblemSpec& g, const MinrankLimits& limits) {
  CriticalityReport report;
  report.minrank = minrank(g, limits).value;
  for (auto [i, j] : g.edges()) {
    EdgeCriticality e{.i = i, .j = j};
    e.minrank_without = minrank(g.without_edge(i, j), limits).value;
    e.critical = e.minrank_without > report.minrank;
    report.critical = report.critical && e.critical;
    report.edges.push_back(e);
  }
  return report;
}

}  // namespace icode
