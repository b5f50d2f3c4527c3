#include "icode/text_format.hpp"

#include <charconv>
#include <vector>

namespace icode {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::size_t parse_count(std::string_view token, const char* what) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end)
    throw ParseError(std::string("bad ") + what + ": '" + std::string(token) + "'");
  return value;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t) out += ',';
    out += std::to_string(v[t]);
  }
  return out;
}

}  // namespace

std::string render_matrix(const BitMatrix& m) {
  std::string out = std::to_string(m.rows()) + ' ' + std::to_string(m.cols()) + '\n';
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      if (j > 1) out += ' ';
      out += m.get(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

BitMatrix parse_matrix(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty matrix file");

  const std::string_view header = lines[0];
  const auto sp = header.find(' ');
  if (sp == std::string_view::npos) throw ParseError("header must be 'K N'");
  const std::size_t rows = parse_count(header.substr(0, sp), "row count");
  const std::size_t cols = parse_count(header.substr(sp + 1), "column count");
  if (rows == 0) throw ParseError("matrix needs at least one row");
  // Rows of a zero-column matrix are blank, so only then are blank lines data.
  if (cols > 0)
    while (lines.size() > 1 && lines.back().empty()) lines.pop_back();
  if (lines.size() != rows + 1)
    throw ParseError("expected " + std::to_string(rows) + " rows, found " +
                     std::to_string(lines.size() - 1));

  BitMatrix m(rows, cols);
  for (std::size_t i = 1; i <= rows; ++i) {
    const std::string_view line = lines[i];
    const std::size_t want = cols == 0 ? 0 : 2 * cols - 1;
    if (line.size() != want)
      throw ParseError("row " + std::to_string(i) + ": expected " + std::to_string(cols) +
                       " entries");
    for (std::size_t j = 1; j <= cols; ++j) {
      const char c = line[2 * (j - 1)];
      if (c != '0' && c != '1')
        throw ParseError("row " + std::to_string(i) + ": entry " + std::to_string(j) +
                         " is not 0 or 1");
      if (j < cols && line[2 * j - 1] != ' ')
        throw ParseError("row " + std::to_string(i) + ": entries must be separated by one space");
      if (c == '1') m.set(i, j);
    }
  }
  return m;
}

std::string render_symbols(const CodeBook& code) {
  std::string out;
  for (std::size_t j = 0; j < code.symbols.size(); ++j)
    out += 'y' + std::to_string(j + 1) + " = " + symbol_to_string(code.symbols[j]) + '\n';
  return out;
}

std::string render_report(const CaseParams& params, std::size_t length, bool optimal,
                          const DecodeReport& report) {
  const Rational cap = capacity_one_sided(params.K, params.D);
  std::string out = "K=" + std::to_string(params.K) + " D=" + std::to_string(params.D) +
                    " case=" + std::string(to_string(params.kind)) +
                    " N=" + std::to_string(length) + " capacity=" + std::to_string(cap.num) +
                    '/' + std::to_string(cap.den) + " optimal=" + (optimal ? "true" : "false") +
                    '\n';
  for (const auto& r : report.receivers) {
    out += "k=" + std::to_string(r.receiver) + " decodable=" + (r.decodable ? "true" : "false");
    if (r.status == SearchStatus::Capped) {
      out += " min_tx=? witness=?\n";
      continue;
    }
    out += " min_tx=" + (r.min_tx ? std::to_string(*r.min_tx) : std::string("-"));
    out += " witness=" + (r.witness ? join(*r.witness) : std::string("-"));
    out += '\n';
  }
  return out;
}

}  // namespace icode
