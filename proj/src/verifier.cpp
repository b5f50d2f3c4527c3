#include "icode/verifier.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "bits.hpp"

namespace icode {

namespace {

void check_shape(const ProblemSpec& problem, const BitMatrix& code, std::size_t k) {
  if (code.rows() != problem.K())
    throw DimensionError("code has " + std::to_string(code.rows()) + " rows but K=" +
                         std::to_string(problem.K()));
  if (k < 1 || k > problem.K())
    throw DimensionError("receiver " + std::to_string(k) + " outside 1.." +
                         std::to_string(problem.K()));
}

/// The linear system sum_j s_j * column_j = e_k restricted to the
/// coordinates receiver k does not cache. Unknowns are code-symbol positions.
struct ReducedSystem {
  std::size_t unknowns = 0;
  std::size_t stride = 0;
  std::vector<std::vector<Word>> rows;  // coefficient bits, one row per free coordinate
  std::vector<bool> rhs;

  ReducedSystem(const ProblemSpec& problem, const BitMatrix& code, std::size_t k)
      : unknowns(code.cols()), stride(std::max<std::size_t>(1, words_for(code.cols()))) {
    const IndexSet& cached = problem.antidotes(k);
    for (std::size_t i = 1; i <= problem.K(); ++i) {
      if (std::ranges::binary_search(cached, i)) continue;
      std::vector<Word> row(stride, 0);
      auto src = code.row_words(i - 1);
      std::copy(src.begin(), src.end(), row.begin());
      rows.push_back(std::move(row));
      rhs.push_back(i == k);
    }
  }
};

struct Solution {
  bool consistent = false;
  std::vector<Word> particular;
  std::vector<std::vector<Word>> kernel;
};

/// Gauss-Jordan elimination with leftmost pivot column, topmost pivot row.
Solution solve(ReducedSystem sys) {
  const std::size_t n = sys.unknowns;
  auto& rows = sys.rows;
  auto& rhs = sys.rhs;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && !bits::test(rows[sel], c)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[r]);
    std::vector<bool>::swap(rhs[sel], rhs[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && bits::test(rows[i], c)) {
        bits::xor_into(rows[i], rows[r]);
        rhs[i] = rhs[i] != rhs[r];
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }

  Solution out;
  for (std::size_t i = r; i < rows.size(); ++i)
    if (rhs[i]) return out;
  out.consistent = true;

  out.particular.assign(sys.stride, 0);
  for (std::size_t i = 0; i < r; ++i)
    if (rhs[i]) bits::set(out.particular, pivot_cols[i]);

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Word> g(sys.stride, 0);
    bits::set(g, f);
    for (std::size_t i = 0; i < r; ++i)
      if (bits::test(rows[i], f)) bits::set(g, pivot_cols[i]);
    out.kernel.push_back(std::move(g));
  }
  return out;
}

bool better(std::span<const Word> candidate, std::size_t weight, std::span<const Word> best,
            std::size_t best_weight) {
  if (weight != best_weight) return weight < best_weight;
  return bits::lex_less_same_size(candidate, best);
}

std::vector<std::size_t> positions(std::span<const Word> w, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n; ++j)
    if (bits::test(w, j)) out.push_back(j + 1);
  return out;
}

/// Gray-code walk over particular + span(kernel).
std::vector<Word> best_in_coset(const Solution& sol) {
  std::vector<Word> cur = sol.particular;
  std::vector<Word> best = cur;
  std::size_t best_weight = bits::popcount(best);
  const std::size_t d = sol.kernel.size();
  const std::uint64_t total = std::uint64_t{1} << d;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto flip = static_cast<std::size_t>(std::countr_zero(step));
    bits::xor_into(cur, sol.kernel[flip]);
    const std::size_t w = bits::popcount(cur);
    if (better(cur, w, best, best_weight)) {
      best = cur;
      best_weight = w;
    }
  }
  return best;
}

/// Subsets by increasing size, each size in lexicographic order.
std::optional<std::vector<std::size_t>> search_by_cardinality(const ReducedSystem& sys,
                                                              std::size_t cap) {
  // Work column-wise: column j of the reduced system as bits over free coordinates.
  const std::size_t n = sys.unknowns;
  const std::size_t coords = sys.rows.size();
  const std::size_t cw = std::max<std::size_t>(1, words_for(coords));
  std::vector<std::vector<Word>> cols(n, std::vector<Word>(cw, 0));
  std::vector<Word> target(cw, 0);
  for (std::size_t i = 0; i < coords; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (bits::test(sys.rows[i], j)) bits::set(cols[j], i);
    if (sys.rhs[i]) bits::set(target, i);
  }

  for (std::size_t size = 1; size <= std::min(cap, n); ++size) {
    std::vector<std::size_t> pick(size);
    std::vector<std::vector<Word>> partial(size + 1, std::vector<Word>(cw, 0));
    // Depth-first over index tuples pick[0] < pick[1] < ... in lexicographic order.
    std::size_t depth = 0;
    pick[0] = 0;
    while (true) {
      if (pick[depth] + (size - depth) > n) {
        if (depth == 0) break;
        --depth;
        ++pick[depth];
        continue;
      }
      partial[depth + 1] = partial[depth];
      bits::xor_into(partial[depth + 1], cols[pick[depth]]);
      if (depth + 1 == size) {
        if (partial[size] == target) {
          std::vector<std::size_t> out;
          for (std::size_t j : pick) out.push_back(j + 1);
          return out;
        }
        ++pick[depth];
      } else {
        pick[depth + 1] = pick[depth] + 1;
        ++depth;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool DecodeReport::all_decodable() const noexcept {
  return std::ranges::all_of(receivers, [](const ReceiverResult& r) { return r.decodable; });
}

std::size_t DecodeReport::decodable_count() const noexcept {
  return static_cast<std::size_t>(
      std::ranges::count_if(receivers, [](const ReceiverResult& r) { return r.decodable; }));
}

std::vector<std::size_t> DecodeReport::min_tx_values() const {
  std::vector<std::size_t> out;
  for (const auto& r : receivers)
    if (r.min_tx) out.push_back(*r.min_tx);
  return out;
}

bool can_decode(const ProblemSpec& problem, const BitMatrix& code, std::size_t k) {
  check_shape(problem, code, k);
  std::vector<BitVector> basis = code.columns();
  for (std::size_t j : problem.antidotes(k)) basis.push_back(BitVector::unit(problem.K(), j));
  return solve_membership(BitVector::unit(problem.K(), k), basis).has_value();
}

ReceiverResult min_transmissions(const ProblemSpec& problem, const BitMatrix& code, std::size_t k,
                                 const SearchLimits& limits) {
  check_shape(problem, code, k);
  ReceiverResult result;
  result.receiver = k;
  ReducedSystem sys(problem, code, k);
  Solution sol = solve(sys);
  if (!sol.consistent) return result;

  result.decodable = true;
  if (sol.kernel.size() <= limits.max_coset_dimension) {
    std::vector<Word> best = best_in_coset(sol);
    result.witness = positions(best, code.cols());
  } else {
    result.witness = search_by_cardinality(sys, limits.max_cardinality);
    if (!result.witness) {
      result.status = SearchStatus::Capped;
      return result;
    }
  }
  result.status = SearchStatus::Exact;
  result.min_tx = result.witness->size();
  return result;
}

DecodeReport verify_all(const ProblemSpec& problem, const BitMatrix& code,
                        const SearchLimits& limits, unsigned threads) {
  if (code.rows() != problem.K())
    throw DimensionError("code has " + std::to_string(code.rows()) + " rows but K=" +
                         std::to_string(problem.K()));
  const std::size_t K = problem.K();
  DecodeReport report;
  report.receivers.resize(K);
  auto work = [&](std::size_t first, std::size_t step) {
    for (std::size_t k = first; k <= K; k += step)
      report.receivers[k - 1] = min_transmissions(problem, code, k, limits);
  };
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(K)));
  if (threads == 1) {
    work(1, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t + 1, threads);
  }
  return report;
}

bool replay_witness(const ProblemSpec& problem, const BitMatrix& code, std::size_t k,
                    const std::vector<std::size_t>& witness) {
  check_shape(problem, code, k);
  BitVector acc = BitVector::unit(problem.K(), k);
  for (std::size_t j : witness) acc ^= code.column(j);
  const IndexSet& cached = problem.antidotes(k);
  return std::ranges::all_of(acc.support(),
                             [&](std::size_t i) { return std::ranges::binary_search(cached, i); });
}

bool check_optimal_length(const CodeBook& code) {
  return code.length() == capacity_one_sided(code.params.K, code.params.D).den;
}

}  // namespace icode
