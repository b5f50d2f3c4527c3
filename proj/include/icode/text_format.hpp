#pragma once

// Plain-text serialization of generator matrices, symbol listings and
// decoding reports. Output never depends on locale.

#include <stdexcept>
#include <string>
#include <string_view>

#include "icode/constructors.hpp"
#include "icode/gf2.hpp"
#include "icode/verifier.hpp"

namespace icode {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "K N" header, then K rows of N space-separated 0/1, trailing newline.
std::string render_matrix(const BitMatrix& m);
BitMatrix parse_matrix(std::string_view text);

/// "y<j> = x<i1>+x<i2>+..." per symbol in construction order.
std::string render_symbols(const CodeBook& code);

/// Summary line "K= D= case= N= capacity= optimal=" followed by one line per
/// receiver "k= decodable= min_tx= witness=". A capped search shows "?".
std::string render_report(const CaseParams& params, std::size_t length, bool optimal,
                          const DecodeReport& report);

}  // namespace icode
