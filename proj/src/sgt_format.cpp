#include "zdg/sgt_format.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace zdg {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string word; words >> word;) line.tokens.push_back(word);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw ParseError("line " + std::to_string(line) + ": " + message);
}

std::size_t parse_index(const std::string& token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line, "expected a non-negative integer, got '" + token + "'");
  }
  return value;
}

CayleyTable parse_record(const std::vector<Line>& lines, std::size_t& pos) {
  const Line& header = lines[pos++];
  if (header.tokens.size() != 1) fail(header.number, "expected the order on its own line");
  const std::size_t n = parse_index(header.tokens[0], header.number);
  if (n == 0) fail(header.number, "order must be positive");
  if (n > kMaxOrder) fail(header.number, "order exceeds " + std::to_string(kMaxOrder));

  CayleyTable table(n);
  if (pos < lines.size() && lines[pos].tokens[0] == "names:") {
    const Line& names = lines[pos++];
    if (names.tokens.size() != n + 1) {
      fail(names.number, "expected " + std::to_string(n) + " names");
    }
    table.names.emplace(names.tokens.begin() + 1, names.tokens.end());
  }
  for (std::size_t row = 0; row < n; ++row) {
    if (pos >= lines.size()) throw ParseError("unexpected end of input: missing table rows");
    const Line& line = lines[pos++];
    if (line.tokens.size() != n) {
      fail(line.number, "expected " + std::to_string(n) + " entries, got " +
                            std::to_string(line.tokens.size()));
    }
    for (std::size_t col = 0; col < n; ++col) {
      const std::size_t value = parse_index(line.tokens[col], line.number);
      if (value >= n) fail(line.number, "entry " + line.tokens[col] + " is out of range");
      table.at(static_cast<Element>(row), static_cast<Element>(col)) = static_cast<Element>(value);
    }
  }
  return table;
}

}  // namespace

std::vector<CayleyTable> read_sgt_stream(std::istream& in) {
  const auto lines = tokenize(in);
  std::vector<CayleyTable> tables;
  std::size_t pos = 0;
  while (pos < lines.size()) tables.push_back(parse_record(lines, pos));
  return tables;
}

CayleyTable parse_sgt(const std::string& text) {
  std::istringstream in(text);
  auto tables = read_sgt_stream(in);
  if (tables.size() != 1) {
    throw ParseError("expected exactly one table, found " + std::to_string(tables.size()));
  }
  return std::move(tables.front());
}

std::string format_sgt(const CayleyTable& table) {
  std::ostringstream out;
  out << table.order << '\n';
  if (table.names) {
    out << "names:";
    for (const auto& name : *table.names) out << ' ' << name;
    out << '\n';
  }
  for (Element i = 0; i < table.order; ++i) {
    for (Element j = 0; j < table.order; ++j) {
      if (j) out << ' ';
      out << table.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

void write_sgt_stream(std::ostream& out, const std::vector<CayleyTable>& tables) {
  for (std::size_t k = 0; k < tables.size(); ++k) {
    if (k) out << '\n';
    out << format_sgt(tables[k]);
  }
}

}  // namespace zdg
