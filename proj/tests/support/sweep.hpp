#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "icode/model.hpp"

namespace sweep {

inline constexpr icode::Case kCases[] = {
    icode::Case::I,  icode::Case::II,   icode::Case::III, icode::Case::IV, icode::Case::V,
    icode::Case::VI, icode::Case::VII, icode::Case::VIII, icode::Case::IX, icode::Case::X};

/// Every (case, K, D, lambda) accepted by make_case_params with K <= max_K.
inline std::vector<icode::CaseParams> valid_instances(std::size_t max_K) {
  std::vector<icode::CaseParams> out;
  for (icode::Case c : kCases) {
    for (std::size_t K = 2; K <= max_K; ++K) {
      for (std::size_t D = 1; D < K; ++D) {
        std::vector<std::optional<std::size_t>> lambdas{std::nullopt};
        if (icode::uses_lambda(c)) {
          lambdas.clear();
          for (std::size_t l = 1; l < K; ++l) lambdas.push_back(l);
        }
        for (auto l : lambdas) {
          try {
            out.push_back(icode::make_case_params(c, K, D, l));
          } catch (const icode::InvalidParameters&) {
          }
        }
      }
    }
  }
  return out;
}

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

/// Transmission counts achieved by each case's own decoding scheme, as a
/// sorted multiset; receivers with no stated count get kUnbounded.
inline std::vector<std::size_t> scheme_counts(const icode::CaseParams& p) {
  using icode::Case;
  const std::size_t K = p.K, D = p.D, lam = p.lambda.value_or(0);
  std::vector<std::size_t> v;
  auto add = [&](std::size_t count, std::size_t value) { v.insert(v.end(), count, value); };
  switch (p.kind) {
    case Case::I: add(K - D, 1); add(D, K / D - 1); break;
    case Case::II: add(K, 1); break;
    case Case::III: add(K - 2 * p.m, 1); add(2 * p.m, p.n - 1); break;
    case Case::IV: add(K - D, 1); add(D, 3); break;
    case Case::V:
    case Case::VII: add(K - D, 1); add(D, kUnbounded); break;
    case Case::VI: add(D + lam, 1); add(K - D - lam, 2); break;
    case Case::VIII: add(p.m * p.p, 1); add(K - p.m * p.p, p.s); break;
    case Case::IX:
      if (lam == D) {
        add(K - D, 1);
        add(D, K / D - 1);
      } else {
        add(K - 2 * D + 2 * lam, 1);
        add(D - 2 * lam, 2);
        add(D, 2 * p.n - 3);
      }
      break;
    case Case::X: add(D + lam, 1); add(K - D - lam, std::max<std::size_t>(2, p.s - 1)); break;
    case Case::General: break;
  }
  std::sort(v.begin(), v.end());
  return v;
}

/// Sorted `actual` is dominated entrywise by the sorted scheme counts.
inline bool within_scheme(std::vector<std::size_t> actual, const std::vector<std::size_t>& scheme) {
  if (actual.size() != scheme.size()) return false;
  std::sort(actual.begin(), actual.end());
  for (std::size_t i = 0; i < actual.size(); ++i)
    if (actual[i] > scheme[i]) return false;
  return true;
}

}  // namespace sweep
