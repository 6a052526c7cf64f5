#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qsa {

// Lexicographic order in which maximal digit runs compare by numeric value,
// so "2" < "10" and "3+" < "3-" < "4".
int compare_ident(std::string_view a, std::string_view b);

struct IdentLess {
  bool operator()(std::string_view a, std::string_view b) const { return compare_ident(a, b) < 0; }
};

// Identifiers are free-form tokens, minus characters the file format reserves.
bool is_valid_ident(std::string_view s);

void sort_idents(std::vector<std::string>& v);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace qsa
