#include "lineconf/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "lineconf/errors.hpp"

namespace lineconf {

Arrangement parseArrangement(std::string_view text) {
  std::vector<Line> lines;
  std::size_t rowNo = 0;
  while (!text.empty()) {
    ++rowNo;
    const auto nl = text.find('\n');
    std::string_view row = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (const auto hash = row.find('#'); hash != std::string_view::npos) row = row.substr(0, hash);

    std::vector<std::int64_t> vals;
    std::size_t i = 0;
    while (i < row.size()) {
      const char ch = row[i];
      if (ch == ' ' || ch == '\t' || ch == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < row.size() && row[j] != ' ' && row[j] != '\t' && row[j] != '\r') ++j;
      const std::string_view tok = row.substr(i, j - i);
      std::int64_t v = 0;
      const char* first = tok.data();
      if (!tok.empty() && tok.front() == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || first == tok.data() + tok.size()) {
        throw InvalidInput("row " + std::to_string(rowNo) + ": \"" + std::string(tok) + "\" is not an integer");
      }
      vals.push_back(v);
      i = j;
    }
    if (vals.empty()) continue;
    if (vals.size() != 3) {
      throw InvalidInput("row " + std::to_string(rowNo) + ": expected 3 integers, found " +
                         std::to_string(vals.size()));
    }
    try {
      lines.push_back(Line::make(vals[0], vals[1], vals[2]));
    } catch (const InvalidInput& e) {
      throw InvalidInput("row " + std::to_string(rowNo) + ": " + e.what());
    }
  }
  return Arrangement(std::move(lines));
}

Arrangement readArrangementFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseArrangement(buf.str());
}

std::string formatArrangement(const Arrangement& a) {
  std::ostringstream os;
  for (const Line& l : a.lines()) os << l.a() << ' ' << l.b() << ' ' << l.c() << "  # " << l.toString() << '\n';
  return os.str();
}

}  // namespace lineconf
