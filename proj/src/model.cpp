#include "icode/model.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <string>

namespace icode {

namespace {

constexpr std::array<std::string_view, 11> kCaseNames = {
    "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X", "GENERAL"};

void require(bool ok, const char* condition) {
  if (!ok) throw InvalidParameters(condition);
}

bool divides(std::size_t a, std::size_t b) { return a != 0 && b % a == 0; }

IndexSet normalize(std::vector<long long> raw, std::size_t K) {
  IndexSet out;
  out.reserve(raw.size());
  for (long long i : raw) out.push_back(wrap_index(i, K));
  std::ranges::sort(out);
  auto dup = std::ranges::unique(out);
  out.erase(dup.begin(), dup.end());
  return out;
}

std::vector<long long> progression(long long first, long long step, std::size_t count) {
  std::vector<long long> v;
  v.reserve(count);
  for (std::size_t t = 0; t < count; ++t) v.push_back(first + static_cast<long long>(t) * step);
  return v;
}

}  // namespace

std::string_view to_string(Case c) { return kCaseNames[static_cast<std::size_t>(c)]; }

std::optional<Case> parse_case(std::string_view text) {
  std::string upper;
  for (char ch : text) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  std::string_view body = upper;
  if (body.starts_with("CASE")) body.remove_prefix(4);
  for (std::size_t i = 0; i < kCaseNames.size(); ++i)
    if (body == kCaseNames[i]) return static_cast<Case>(i);
  return std::nullopt;
}

bool uses_lambda(Case c) {
  switch (c) {
    case Case::V:
    case Case::VI:
    case Case::VII:
    case Case::VIII:
    case Case::IX:
    case Case::X:
      return true;
    default:
      return false;
  }
}

CaseParams make_case_params(Case kind, std::size_t K, std::size_t D,
                            std::optional<std::size_t> lambda) {
  if (kind == Case::General) return make_general_params(K, 0, D);

  require(K >= 2 && D >= 1 && D <= K - 1, "D must satisfy 1 <= D <= K-1");
  CaseParams p;
  p.kind = kind;
  p.K = K;
  p.D = D;

  if (uses_lambda(kind)) {
    require(lambda.has_value(), "lambda is required for this case");
    require(*lambda >= 1, "lambda must be positive");
    p.lambda = lambda;
  } else {
    require(!lambda.has_value(), "lambda is not a parameter of this case");
  }
  const std::size_t lam = lambda.value_or(0);

  switch (kind) {
    case Case::I:
      require(divides(D, K), "D must divide K");
      require(K >= 2 * D, "K must be at least 2D");
      p.n = K / D;
      break;
    case Case::II:
      p.m = K - D;
      require(divides(p.m, K), "K-D must divide K");
      p.n = K / p.m;
      break;
    case Case::III:
      require(K % 2 == 0, "K must be even");
      require(D > K / 2, "D-K/2 must be at least 1");
      p.m = D - K / 2;
      require(divides(p.m, K / 2), "D-K/2 must divide K/2");
      p.n = (K / 2) / p.m;
      break;
    case Case::IV:
      require(K % 2 == 0, "K must be even");
      require(D < K / 2, "K/2-D must be at least 1");
      p.m = K / 2 - D;
      require(divides(p.m, D), "K/2-D must divide D");
      p.n = K / p.m;
      p.p = D / p.m;
      break;
    case Case::V:
      require(divides(lam, D), "lambda must divide D");
      require(lam < K && divides(D, K - lam), "D must divide K-lambda");
      require((K - lam) / D > 1, "(K-lambda)/D must exceed 1");
      p.n = (K - lam) / D;
      break;
    case Case::VI:
      p.m = K - D;
      require(divides(lam, p.m), "lambda must divide K-D");
      require(divides(p.m, K - lam), "K-D must divide K-lambda");
      p.q = (K - lam) / p.m;
      break;
    case Case::VII:
      require(divides(lam, D), "lambda must divide D");
      require(divides(D + lam, K), "D+lambda must divide K");
      p.p = D / lam;
      p.n = K / (D + lam);
      break;
    case Case::VIII:
      p.m = K - D;
      require(divides(lam, p.m), "lambda must divide K-D");
      require(divides(p.m + lam, K), "K-D+lambda must divide K");
      p.p = K / (p.m + lam);
      p.s = p.m / lam;
      break;
    case Case::IX:
      require(divides(lam, D), "lambda must divide D");
      require(divides(D, K + lam), "D must divide K+lambda");
      require((K + lam) / D > 2, "(K+lambda)/D must exceed 2");
      p.n = (K + lam) / D;
      p.p = D - lam;
      break;
    case Case::X:
      p.m = K - D;
      require(divides(lam, p.m), "lambda must divide K-D");
      require(divides(p.m, K + lam), "K-D must divide K+lambda");
      require(p.m >= 2 * lam, "K-D-lambda must be at least lambda");
      p.p = p.m - lam;
      p.q = (K + lam) / p.m;
      p.s = p.m / lam;
      break;
    case Case::General:
      break;
  }
  return p;
}

CaseParams make_general_params(std::size_t K, std::size_t U, std::size_t D) {
  require(K >= 1, "K must be positive");
  require(U + D <= K - 1, "U+D must be at most K-1");
  CaseParams p;
  p.K = K;
  p.U = U;
  p.D = D;
  return p;
}

std::size_t wrap_index(long long index, std::size_t K) {
  const auto k = static_cast<long long>(K);
  long long r = (index - 1) % k;
  if (r < 0) r += k;
  return static_cast<std::size_t>(r + 1);
}

IndexSet antidotes_general(std::size_t K, std::size_t U, std::size_t D, std::size_t k) {
  require(K >= 1 && U + D <= K - 1, "U+D must be at most K-1");
  require(k >= 1 && k <= K, "receiver index must lie in 1..K");
  const auto kk = static_cast<long long>(k);
  std::vector<long long> raw;
  for (std::size_t t = 1; t <= U; ++t) raw.push_back(kk - static_cast<long long>(t));
  for (std::size_t t = 1; t <= D; ++t) raw.push_back(kk + static_cast<long long>(t));
  return normalize(std::move(raw), K);
}

IndexSet antidotes_for_case(const CaseParams& params, std::size_t k) {
  const std::size_t K = params.K;
  const std::size_t D = params.D;
  require(k >= 1 && k <= K, "receiver index must lie in 1..K");
  const auto kk = static_cast<long long>(k);
  const auto lam = static_cast<long long>(params.lambda.value_or(0));
  const auto m = static_cast<long long>(params.m);
  const auto d = static_cast<long long>(D);

  switch (params.kind) {
    case Case::General:
      return antidotes_general(K, params.U, D, k);
    case Case::I:
      return normalize({kk + d}, K);
    case Case::II:
      return normalize(progression(kk + m, m, params.n - 1), K);
    case Case::III:
      return normalize({kk + static_cast<long long>(K / 2), kk + m, kk + d}, K);
    case Case::IV:
      return normalize(progression(kk + m, m, params.p), K);
    case Case::V:
      if (k + D + params.lambda.value() <= K) return normalize({kk + d}, K);
      return normalize(progression(kk + lam, lam, D / *params.lambda), K);
    case Case::VI:
    case Case::X:
      return antidotes_general(K, 0, D, k);
    case Case::VII:
      return normalize(progression(kk + lam, lam, params.p), K);
    case Case::VIII: {
      std::vector<long long> raw{kk + lam};
      for (long long t = 1; t < static_cast<long long>(params.p); ++t) {
        raw.push_back(kk + t * lam + t * m);
        raw.push_back(kk + (t + 1) * lam + t * m);
      }
      return normalize(std::move(raw), K);
    }
    case Case::IX:
      if (k + 2 * D <= K + *params.lambda) return normalize({kk + d}, K);
      return normalize(progression(kk + lam, lam, D / *params.lambda), K);
  }
  return {};
}

// ---------------------------------------------------------------------------
// ProblemSpec

ProblemSpec::ProblemSpec(std::size_t K, std::vector<IndexSet> antidotes,
                         std::optional<CaseParams> origin)
    : K_(K), antidotes_(std::move(antidotes)), origin_(std::move(origin)) {
  if (K_ == 0) throw InvalidParameters("K must be positive");
  if (antidotes_.size() != K_)
    throw InvalidParameters("expected " + std::to_string(K_) + " antidote sets, got " +
                            std::to_string(antidotes_.size()));
  for (std::size_t k = 1; k <= K_; ++k) {
    IndexSet& s = antidotes_[k - 1];
    std::ranges::sort(s);
    auto dup = std::ranges::unique(s);
    s.erase(dup.begin(), dup.end());
    for (std::size_t j : s) {
      if (j < 1 || j > K_)
        throw InvalidParameters("antidote " + std::to_string(j) + " of receiver " +
                                std::to_string(k) + " outside 1..K");
      if (j == k)
        throw InvalidParameters("receiver " + std::to_string(k) + " cannot cache its own message");
    }
  }
}

ProblemSpec ProblemSpec::from_case(const CaseParams& params) {
  std::vector<IndexSet> sets;
  sets.reserve(params.K);
  for (std::size_t k = 1; k <= params.K; ++k) sets.push_back(antidotes_for_case(params, k));
  return ProblemSpec(params.K, std::move(sets), params);
}

ProblemSpec ProblemSpec::one_sided(std::size_t K, std::size_t D) {
  return from_case(make_general_params(K, 0, D));
}

ProblemSpec ProblemSpec::general(std::size_t K, std::size_t U, std::size_t D) {
  return from_case(make_general_params(K, U, D));
}

ProblemSpec ProblemSpec::complete(std::size_t K) {
  if (K == 0) throw InvalidParameters("K must be positive");
  return one_sided(K, K - 1);
}

ProblemSpec ProblemSpec::empty(std::size_t K) {
  return ProblemSpec(K, std::vector<IndexSet>(K));
}

const IndexSet& ProblemSpec::antidotes(std::size_t k) const {
  if (k < 1 || k > K_) throw InvalidParameters("receiver index must lie in 1..K");
  return antidotes_[k - 1];
}

bool ProblemSpec::has_edge(std::size_t i, std::size_t j) const {
  return std::ranges::binary_search(antidotes(i), j);
}

std::size_t ProblemSpec::edge_count() const noexcept {
  std::size_t n = 0;
  for (const auto& s : antidotes_) n += s.size();
  return n;
}

std::vector<std::pair<std::size_t, std::size_t>> ProblemSpec::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count());
  for (std::size_t i = 1; i <= K_; ++i)
    for (std::size_t j : antidotes_[i - 1]) out.emplace_back(i, j);
  return out;
}

ProblemSpec ProblemSpec::without_edge(std::size_t i, std::size_t j) const {
  if (!has_edge(i, j))
    throw InvalidParameters("(" + std::to_string(i) + "," + std::to_string(j) + ") is not an edge");
  std::vector<IndexSet> sets = antidotes_;
  std::erase(sets[i - 1], j);
  // The edited graph no longer follows the case pattern.
  return ProblemSpec(K_, std::move(sets));
}

// ---------------------------------------------------------------------------
// Capacity

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
  if (num == 0 || den == 0) throw InvalidParameters("rational parts must be positive");
  const std::uint64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational capacity_general(std::size_t K, std::size_t U, std::size_t D) {
  require(K >= 1 && U + D <= K - 1, "U+D must be at most K-1");
  if (U + D == K - 1) return Rational{1, 1};
  const std::size_t lo = std::min(U, D);
  const std::size_t hi = std::max(U, D);
  return Rational::make(lo + 1, K + lo - hi);
}

Rational capacity_one_sided(std::size_t K, std::size_t D) {
  require(D >= 1 && D <= K - 1, "D must satisfy 1 <= D <= K-1");
  if (D == K - 1) return Rational{1, 1};
  return Rational::make(1, K - D);
}

}  // namespace icode
