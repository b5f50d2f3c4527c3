#pragma once

// Decodability certificates for a code against an index coding instance.
//
// Receiver k decodes x_k when e_k lies in the span of the code's columns plus
// the unit vectors of its cached messages. Equivalently, some subset S of code
// symbols XORs to e_k modulo the antidote coordinates; the smallest such |S|
// is the receiver's transmission count.

#include <cstddef>
#include <optional>
#include <vector>

#include "icode/constructors.hpp"
#include "icode/gf2.hpp"
#include "icode/model.hpp"

namespace icode {

struct SearchLimits {
  /// Largest subset size tried when falling back to enumeration by size.
  std::size_t max_cardinality = 12;
  /// Solution sets of dimension up to this are enumerated in full.
  std::size_t max_coset_dimension = 20;
};

enum class SearchStatus {
  Exact,         ///< min_tx and witness are the true minimum.
  NotDecodable,  ///< e_k is outside the span.
  Capped,        ///< decodable, but no solution within max_cardinality.
};

struct ReceiverResult {
  std::size_t receiver = 0;
  bool decodable = false;
  SearchStatus status = SearchStatus::NotDecodable;
  std::optional<std::size_t> min_tx;
  /// 1-based code-symbol positions, ascending.
  std::optional<std::vector<std::size_t>> witness;
};

struct DecodeReport {
  std::vector<ReceiverResult> receivers;

  bool all_decodable() const noexcept;
  std::size_t decodable_count() const noexcept;
  /// min_tx per receiver in receiver order; absent entries are skipped.
  std::vector<std::size_t> min_tx_values() const;
};

bool can_decode(const ProblemSpec& problem, const BitMatrix& code, std::size_t k);
inline bool can_decode(const ProblemSpec& problem, const CodeBook& code, std::size_t k) {
  return can_decode(problem, code.matrix, k);
}

/// Exact minimum number of code symbols receiver k needs. Among minimum
/// subsets the lexicographically smallest (as ascending position lists) is
/// returned as witness.
ReceiverResult min_transmissions(const ProblemSpec& problem, const BitMatrix& code, std::size_t k,
                                 const SearchLimits& limits = {});
inline ReceiverResult min_transmissions(const ProblemSpec& problem, const CodeBook& code,
                                        std::size_t k, const SearchLimits& limits = {}) {
  return min_transmissions(problem, code.matrix, k, limits);
}

/// Runs min_transmissions for k = 1..K. With threads > 1 receivers are split
/// across workers; results are identical to the sequential run.
DecodeReport verify_all(const ProblemSpec& problem, const BitMatrix& code,
                        const SearchLimits& limits = {}, unsigned threads = 1);
inline DecodeReport verify_all(const ProblemSpec& problem, const CodeBook& code,
                               const SearchLimits& limits = {}, unsigned threads = 1) {
  return verify_all(problem, code.matrix, limits, threads);
}

/// True when the witness XORs to e_k plus a vector supported on antidotes(k).
bool replay_witness(const ProblemSpec& problem, const BitMatrix& code, std::size_t k,
                    const std::vector<std::size_t>& witness);

/// Length equals the denominator of the one-sided capacity 1/(K-D).
bool check_optimal_length(const CodeBook& code);

}  // namespace icode
