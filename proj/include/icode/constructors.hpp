#pragma once

// Optimal-length (K-D) scalar linear index codes for the ten one-sided
// antidote patterns.
//
// Each constructor is a pure function of validated CaseParams; none of them
// looks at the antidote map. Symbols come out in a fixed order: for the
// two-level families the index that moves along a block varies fastest, so
// column j of the generator matrix has the j-th smallest leading message.

#include <cstddef>
#include <string>
#include <vector>

#include "icode/gf2.hpp"
#include "icode/model.hpp"

namespace icode {

/// One code symbol: the messages it XORs, in construction order, each
/// already wrapped into 1..K.
using Symbol = std::vector<std::size_t>;

struct CodeBook {
  CaseParams params;
  std::vector<Symbol> symbols;
  /// K x N generator matrix; column j is the indicator of symbols[j-1].
  BitMatrix matrix;

  std::size_t length() const noexcept { return symbols.size(); }

  /// Builds the matrix from the symbol list.
  static CodeBook from_symbols(CaseParams params, std::vector<Symbol> symbols);
  /// Recovers symbols (ascending supports) from a matrix read from a file.
  static CodeBook from_matrix(CaseParams params, BitMatrix matrix);
};

CodeBook construct_case_I(const CaseParams& params);
CodeBook construct_case_II(const CaseParams& params);
CodeBook construct_case_III(const CaseParams& params);
CodeBook construct_case_IV(const CaseParams& params);
CodeBook construct_case_V(const CaseParams& params);
CodeBook construct_case_VI(const CaseParams& params);
CodeBook construct_case_VII(const CaseParams& params);
CodeBook construct_case_VIII(const CaseParams& params);
CodeBook construct_case_IX(const CaseParams& params);
CodeBook construct_case_X(const CaseParams& params);

/// Dispatches on params.kind. Throws InvalidParameters for Case::General.
CodeBook construct(const CaseParams& params);

/// "x1+x5" style rendering of one symbol.
std::string symbol_to_string(const Symbol& symbol);

}  // namespace icode
