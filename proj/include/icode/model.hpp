#pragma once

// Index coding instances with symmetric neighbouring side information.
//
// Receiver k (1..K) demands message x_k and caches the messages listed in its
// antidote set. All message subscripts wrap modulo K into 1..K.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace icode {

/// Ascending, duplicate-free list of 1-based message indices.
using IndexSet = std::vector<std::size_t>;

/// Thrown when parameters violate the conditions of their case. The message
/// names the violated condition, e.g. "D must divide K".
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Case { I, II, III, IV, V, VI, VII, VIII, IX, X, General };

std::string_view to_string(Case c);
/// Accepts "I".."X" and "caseI".."caseX", case-insensitively, plus "general".
std::optional<Case> parse_case(std::string_view text);
bool uses_lambda(Case c);

/// Validated parameters of one instance together with the quantities each
/// construction is written in terms of. Fields a case does not define are 0.
struct CaseParams {
  Case kind = Case::General;
  std::size_t K = 0;
  std::size_t U = 0;
  std::size_t D = 0;
  std::optional<std::size_t> lambda;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t s = 0;

  friend bool operator==(const CaseParams&, const CaseParams&) = default;
};

/// Validates (kind, K, D, lambda) against the divisibility conditions of the
/// case and fills in the derived quantities. Throws InvalidParameters.
CaseParams make_case_params(Case kind, std::size_t K, std::size_t D,
                            std::optional<std::size_t> lambda = std::nullopt);

/// Two-sided instance with U messages before and D after; requires U+D <= K-1.
CaseParams make_general_params(std::size_t K, std::size_t U, std::size_t D);

/// Reduces any integer subscript into 1..K.
std::size_t wrap_index(long long index, std::size_t K);

/// {k-U..k-1} ∪ {k+1..k+D}, wrapped into 1..K.
IndexSet antidotes_general(std::size_t K, std::size_t U, std::size_t D, std::size_t k);

/// Antidote set of receiver k under the pattern of `params.kind`.
IndexSet antidotes_for_case(const CaseParams& params, std::size_t k);

/// Side-information graph: edge (i, j) when receiver i caches x_j.
class ProblemSpec {
 public:
  /// Validates: every set lies in 1..K and excludes its own receiver.
  ProblemSpec(std::size_t K, std::vector<IndexSet> antidotes,
              std::optional<CaseParams> origin = std::nullopt);

  static ProblemSpec from_case(const CaseParams& params);
  static ProblemSpec one_sided(std::size_t K, std::size_t D);
  static ProblemSpec general(std::size_t K, std::size_t U, std::size_t D);
  static ProblemSpec complete(std::size_t K);
  static ProblemSpec empty(std::size_t K);

  std::size_t K() const noexcept { return K_; }
  const IndexSet& antidotes(std::size_t k) const;
  const std::optional<CaseParams>& origin() const noexcept { return origin_; }

  bool has_edge(std::size_t i, std::size_t j) const;
  std::size_t edge_count() const noexcept;
  /// All edges, ordered by (i, j).
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  ProblemSpec without_edge(std::size_t i, std::size_t j) const;

 private:
  std::size_t K_;
  std::vector<IndexSet> antidotes_;
  std::optional<CaseParams> origin_;
};

/// Exact reduced fraction with positive numerator and denominator.
struct Rational {
  std::uint64_t num = 1;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den);
  /// "num/den", or just "num" for integers.
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Symmetric capacity per message for U messages before and D after.
Rational capacity_general(std::size_t K, std::size_t U, std::size_t D);

/// One-sided capacity: 1 when D = K-1, else 1/(K-D).
Rational capacity_one_sided(std::size_t K, std::size_t D);

}  // namespace icode
