#pragma once

#include <string>
#include <vector>

#include "schub/rootsystem.hpp"

namespace schub {

// Root grammar: signed integer coefficients over the simple roots,
// e.g. "3a1+2a2", "-a1-a2". Parsing accepts exactly what rendering emits.
std::string render_root(const Root& a);
Root parse_root(const std::string& text, int rank);

// Weyl word grammar: whitespace-separated "s<i>" tokens, e.g. "s1 s2 s1".
// The identity renders as "e"; the parser accepts "e" or an empty string.
std::string render_word(const std::vector<int>& indices);
std::vector<int> parse_word(const std::string& text, int rank);

// System spec string, e.g. "B3", "G2".
std::pair<Family, int> parse_system(const std::string& text);

}  // namespace schub
