#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stabinterp/error.hpp"
#include "stabinterp/scalar.hpp"

namespace stabinterp {

/// Parses one scalar per line, written as `re` or `re im` separated by
/// whitespace. `#` starts a comment; blank lines are skipped.
inline std::vector<Complex> read_scalars(std::istream& in) {
  std::vector<Complex> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    double parts[2] = {0.0, 0.0};
    int count = 0;
    std::size_t pos = 0;
    while (true) {
      while (pos < view.size() && (view[pos] == ' ' || view[pos] == '\t' || view[pos] == '\r')) {
        ++pos;
      }
      if (pos == view.size()) break;
      std::size_t end = pos;
      while (end < view.size() && view[end] != ' ' && view[end] != '\t' && view[end] != '\r') {
        ++end;
      }
      const std::string_view token = view.substr(pos, end - pos);
      if (count == 2) throw InputFormatError(lineno, "more than two numbers");
      const char* first = token.data();
      if (!token.empty() && token.front() == '+') ++first;
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), v);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw InputFormatError(lineno, "cannot parse '" + std::string(token) + "'");
      }
      if (!std::isfinite(v)) throw InputFormatError(lineno, "value is not finite");
      parts[count++] = v;
      pos = end;
    }
    if (count > 0) out.emplace_back(parts[0], parts[1]);
  }
  return out;
}

inline std::vector<Complex> read_scalar_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputFormatError(0, "cannot open " + path);
  return read_scalars(in);
}

/// Scientific notation with 16 significant digits.
inline std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15e", x);
  return buf;
}

}  // namespace stabinterp
