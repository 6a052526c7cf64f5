#include "qsa/ident.hpp"

#include <algorithm>
#include <cctype>

namespace qsa {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string_view digit_run(std::string_view s, size_t& i) {
  size_t start = i;
  while (i < s.size() && is_digit(s[i])) ++i;
  return s.substr(start, i - start);
}

int compare_numeric(std::string_view a, std::string_view b) {
  auto strip = [](std::string_view s) {
    size_t k = 0;
    while (k + 1 < s.size() && s[k] == '0') ++k;
    return s.substr(k);
  };
  std::string_view x = strip(a), y = strip(b);
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  int c = x.compare(y);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace

int compare_ident(std::string_view a, std::string_view b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::string_view x = digit_run(a, i), y = digit_run(b, j);
      int c = compare_numeric(x, y);
      if (c != 0) return c;
      continue;
    }
    if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]) ? -1 : 1;
    ++i;
    ++j;
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  // Equal under numeric comparison ("01" vs "1"); fall back to raw order.
  int c = a.compare(b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

bool is_valid_ident(std::string_view s) {
  if (s.empty() || s == "+" || s == "-" || s == "->") return false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (c == '(' || c == ')' || c == ':' || c == '#' || c == ',') return false;
  }
  return true;
}

void sort_idents(std::vector<std::string>& v) { std::sort(v.begin(), v.end(), IdentLess{}); }

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace qsa
