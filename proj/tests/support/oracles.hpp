#pragma once

// Deliberately naive reference computations. None of these share code with
// the library's elimination routines: vectors are plain std::vector<int> and
// everything is enumerated.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "icode/gf2.hpp"
#include "icode/model.hpp"

namespace oracle {

using Vec = std::vector<int>;

inline std::vector<Vec> columns(const icode::BitMatrix& m) {
  std::vector<Vec> cols(m.cols(), Vec(m.rows(), 0));
  for (std::size_t j = 1; j <= m.cols(); ++j)
    for (std::size_t i = 1; i <= m.rows(); ++i) cols[j - 1][i - 1] = m.get(i, j) ? 1 : 0;
  return cols;
}

inline std::vector<Vec> rows(const icode::BitMatrix& m) {
  std::vector<Vec> out(m.rows(), Vec(m.cols(), 0));
  for (std::size_t i = 1; i <= m.rows(); ++i)
    for (std::size_t j = 1; j <= m.cols(); ++j) out[i - 1][j - 1] = m.get(i, j) ? 1 : 0;
  return out;
}

/// Rank as log2 of the size of the span, enumerated by closure.
inline std::size_t span_rank(const std::vector<Vec>& vs, std::size_t length) {
  std::set<Vec> span{Vec(length, 0)};
  for (const Vec& v : vs) {
    std::set<Vec> next = span;
    for (const Vec& s : span) {
      Vec t = s;
      for (std::size_t i = 0; i < length; ++i) t[i] ^= v[i];
      next.insert(t);
    }
    span = std::move(next);
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < span.size()) ++r;
  return r;
}

inline std::size_t rank(const icode::BitMatrix& m) {
  return m.cols() <= m.rows() ? span_rank(columns(m), m.rows()) : span_rank(rows(m), m.cols());
}

/// Smallest subset of columns (lexicographically first among the smallest)
/// whose XOR agrees with e_k outside the antidote coordinates.
inline std::optional<std::vector<std::size_t>> min_tx(const icode::ProblemSpec& g,
                                                      const icode::BitMatrix& code,
                                                      std::size_t k) {
  const auto cols = columns(code);
  const std::size_t K = g.K();
  const std::size_t N = cols.size();
  const auto& cached = g.antidotes(k);
  auto ok = [&](const std::vector<std::size_t>& pick) {
    Vec acc(K, 0);
    for (std::size_t j : pick)
      for (std::size_t i = 0; i < K; ++i) acc[i] ^= cols[j - 1][i];
    acc[k - 1] ^= 1;
    for (std::size_t i = 0; i < K; ++i)
      if (acc[i] && !std::binary_search(cached.begin(), cached.end(), i + 1)) return false;
    return true;
  };
  for (std::size_t size = 1; size <= N; ++size) {
    std::vector<bool> mask(N, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(size), true);
    do {
      std::vector<std::size_t> pick;
      for (std::size_t j = 0; j < N; ++j)
        if (mask[j]) pick.push_back(j + 1);
      if (ok(pick)) return pick;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return std::nullopt;
}

/// Minimum rank over every fitting matrix, all 2^|E| of them.
inline std::size_t minrank(const icode::ProblemSpec& g) {
  const auto edges = g.edges();
  const std::size_t K = g.K();
  std::size_t best = K;
  for (std::size_t mask = 0; mask < (std::size_t{1} << edges.size()); ++mask) {
    std::vector<Vec> a(K, Vec(K, 0));
    for (std::size_t i = 0; i < K; ++i) a[i][i] = 1;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (mask >> e & 1U) a[edges[e].first - 1][edges[e].second - 1] = 1;
    best = std::min(best, span_rank(a, K));
  }
  return best;
}

}  // namespace oracle
