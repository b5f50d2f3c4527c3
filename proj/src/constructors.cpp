#include "icode/constructors.hpp"

#include <string>
#include <utility>

namespace icode {

namespace {

using ll = long long;

void expect_case(const CaseParams& params, Case kind) {
  if (params.kind != kind)
    throw InvalidParameters("parameters are for case " + std::string(to_string(params.kind)) +
                            ", not case " + std::string(to_string(kind)));
}

/// Builds a symbol from raw subscripts, wrapping each into 1..K.
class SymbolList {
 public:
  explicit SymbolList(std::size_t K) : K_(K) {}

  void add(std::initializer_list<ll> raw) { add(std::vector<ll>(raw)); }
  void add(const std::vector<ll>& raw) {
    Symbol s;
    s.reserve(raw.size());
    for (ll i : raw) s.push_back(wrap_index(i, K_));
    symbols_.push_back(std::move(s));
  }

  std::vector<Symbol> take() && { return std::move(symbols_); }

 private:
  std::size_t K_;
  std::vector<Symbol> symbols_;
};

/// first, first+step, ..., first+(count-1)*step
std::vector<ll> run(ll first, ll step, ll count) {
  std::vector<ll> v;
  for (ll t = 0; t < count; ++t) v.push_back(first + t * step);
  return v;
}

/// x_{i+(j-1)D} + x_{i+jD} for j = 1..blocks, i = 1..D (i fastest).
void add_pairs(SymbolList& out, ll D, ll blocks) {
  for (ll j = 1; j <= blocks; ++j)
    for (ll i = 1; i <= D; ++i) out.add({i + (j - 1) * D, i + j * D});
}

}  // namespace

CodeBook CodeBook::from_symbols(CaseParams params, std::vector<Symbol> symbols) {
  const std::size_t K = params.K;
  BitMatrix matrix(K, symbols.size());
  for (std::size_t j = 0; j < symbols.size(); ++j)
    for (std::size_t i : symbols[j]) matrix.set(i, j + 1);
  return CodeBook{std::move(params), std::move(symbols), std::move(matrix)};
}

CodeBook CodeBook::from_matrix(CaseParams params, BitMatrix matrix) {
  if (matrix.rows() != params.K)
    throw DimensionError("matrix has " + std::to_string(matrix.rows()) + " rows, expected K=" +
                         std::to_string(params.K));
  std::vector<Symbol> symbols;
  symbols.reserve(matrix.cols());
  for (std::size_t j = 1; j <= matrix.cols(); ++j) symbols.push_back(matrix.column(j).support());
  return CodeBook{std::move(params), std::move(symbols), std::move(matrix)};
}

CodeBook construct_case_I(const CaseParams& params) {
  expect_case(params, Case::I);
  SymbolList out(params.K);
  add_pairs(out, static_cast<ll>(params.D), static_cast<ll>(params.n) - 1);
  return CodeBook::from_symbols(params, std::move(out).take());
}

CodeBook construct_case_II(const CaseParams& params) {
  expect_case(params, Case::II);
  const auto m = static_cast<ll>(params.m);
  SymbolList out(params.K);
  for (ll i = 1; i <= m; ++i) out.add(run(i, m, static_cast<ll>(params.n)));
  return CodeBook::from_symbols(params, std::move(out).take());
}

CodeBook construct_case_III(const CaseParams& params) {
  expect_case(params, Case::III);
  const auto m = static_cast<ll>(params.m);
  const auto half = static_cast<ll>(params.K / 2);
  SymbolList out(params.K);
  for (ll j = 0; j <= static_cast<ll>(params.n) - 2; ++j)
    for (ll i = 1; i <= m; ++i)
      out.add({i + j * m, half + i + j * m, i + (j + 1) * m, half + i + (j + 1) * m});
  return CodeBook::from_symbols(params, std::move(out).take());
}

CodeBook construct_case_IV(const CaseParams& params) {
  expect_case(params, Case::IV);
  const auto m = static_cast<ll>(params.m);
  const auto p = static_cast<ll>(params.p);
  const auto n = static_cast<ll>(params.n);
  SymbolList out(params.K);
  for (ll l = 0; l <= n - p - 1; ++l)
    for (ll i = 1; i <= m; ++i) out.add(run(i + l * m, m, p + 1));
  return CodeBook::from_symbols(params, std::move(out).take());
}

CodeBook construct_case_V(const CaseParams& params) {
  expect_case(params, Case::V);
  const auto K = static_cast<ll>(params.K);
  const auto D = static_cast<ll>(params.D);
  const auto lam = static_cast<ll>(*params.lambda);
  SymbolList out(params.K);
  add_pairs(out, D, static_cast<ll>(params.n) - 1);
  // Tails x_{K-lambda+r-D} + x_{K-lambda+r-D+lambda} + ... + x_{K-lambda+r}.
  for (ll r = 1; r <= lam; ++r) out.add(run(K - lam + r - D, lam, D / lam + 1));
  return CodeBook::from_symbols(params, std::move(out).take());
}

CodeBook construct_case_VI(const CaseParams& params) {
  expect_case(params, Case::VI);
  const auto m = static_cast<ll>(params.m);
  const auto q = static_cast<ll>(params.q);
  const auto lam = static_cast<ll>(*params.lambda);
  SymbolList out(params.K);
  for (ll i = 1; i <= m; ++i) {
    std::vector<ll> sym = run(i, m, q);
    sym.push_back(q * m + 1 + (i - 1) % lam);
    out.add(sym);
  }
  return CodeBook::from_symbols(params, std::move(out).take());
}

CodeBook construct_case_VII(const CaseParams& params) {
  expect_case(params, Case::VII);
  const auto lam = static_cast<ll>(*params.lambda);
  const auto p = static_cast<ll>(params.p);
  const ll blocks = static_cast<ll>(params.K - params.D) / lam;
  SymbolList out(params.K);
  for (ll j = 0; j < blocks; ++j)
    for (ll i = 1; i <= lam; ++i) out.add(run(i + j * lam, lam, p + 1));
  return CodeBook::from_symbols(params, std::move(out).take());
}

CodeBook construct_case_VIII(const CaseParams& params) {
  expect_case(params, Case::VIII);
  const auto m = static_cast<ll>(params.m);
  const auto lam = static_cast<ll>(*params.lambda);
  const auto p = static_cast<ll>(params.p);
  SymbolList out(params.K);
  for (ll i = 1; i <= m; ++i) {
    std::vector<ll> sym;
    for (ll t = 0; t < p; ++t) {
      sym.push_back(i + t * lam + t * m);
      sym.push_back(i + (t + 1) * lam + t * m);
    }
    out.add(sym);
  }
  return CodeBook::from_symbols(params, std::move(out).take());
}

CodeBook construct_case_IX(const CaseParams& params) {
  expect_case(params, Case::IX);
  const auto K = static_cast<ll>(params.K);
  const auto D = static_cast<ll>(params.D);
  const auto lam = static_cast<ll>(*params.lambda);
  SymbolList out(params.K);
  add_pairs(out, D, static_cast<ll>(params.n) - 2);
  for (ll i = 0; i < static_cast<ll>(params.p); ++i)
    out.add({K - 2 * D + 1 + lam + i, K - D + 1 + i, K - lam + 1 + i % lam});
  return CodeBook::from_symbols(params, std::move(out).take());
}

CodeBook construct_case_X(const CaseParams& params) {
  expect_case(params, Case::X);
  const auto m = static_cast<ll>(params.m);
  const auto p = static_cast<ll>(params.p);
  const auto q = static_cast<ll>(params.q);
  const auto s = static_cast<ll>(params.s);
  const auto lam = static_cast<ll>(*params.lambda);
  SymbolList out(params.K);
  for (ll k = 1; k <= lam; ++k) {
    std::vector<ll> sym = run(k, m, q);
    for (ll t = 1; t <= s - 2; ++t) sym.push_back(k + (q - 1) * m + t * lam);
    out.add(sym);
  }
  for (ll k = lam + 1; k <= p; ++k) {
    std::vector<ll> sym = run(k, m, q - 1);
    sym.push_back(k + (q - 1) * m - lam);
    out.add(sym);
  }
  for (ll k = p + 1; k <= m; ++k) {
    std::vector<ll> sym = run(k, m, q - 1);
    for (ll t = 1; t <= s - 1; ++t) sym.push_back(k + (q - 2) * m + t * lam);
    out.add(sym);
  }
  return CodeBook::from_symbols(params, std::move(out).take());
}

CodeBook construct(const CaseParams& params) {
  switch (params.kind) {
    case Case::I: return construct_case_I(params);
    case Case::II: return construct_case_II(params);
    case Case::III: return construct_case_III(params);
    case Case::IV: return construct_case_IV(params);
    case Case::V: return construct_case_V(params);
    case Case::VI: return construct_case_VI(params);
    case Case::VII: return construct_case_VII(params);
    case Case::VIII: return construct_case_VIII(params);
    case Case::IX: return construct_case_IX(params);
    case Case::X: return construct_case_X(params);
    case Case::General: break;
  }
  throw InvalidParameters("no construction for two-sided or general instances");
}

std::string symbol_to_string(const Symbol& symbol) {
  std::string out;
  for (std::size_t t = 0; t < symbol.size(); ++t) {
    if (t) out += '+';
    out += 'x';
    out += std::to_string(symbol[t]);
  }
  return out;
}

}  // namespace icode
