#include "schub/format.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace schub {

std::string render_root(const Root& a) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < a.rank(); ++i) {
    int k = a.c[i];
    if (k == 0) continue;
    if (k > 0 && !first) out << '+';
    if (k == -1)
      out << '-';
    else if (k != 1)
      out << k;
    out << 'a' << (i + 1);
    first = false;
  }
  if (first) throw std::invalid_argument("cannot render the zero vector as a root");
  return out.str();
}

Root parse_root(const std::string& text, int rank) {
  Root r(std::vector<int>(rank, 0));
  size_t p = 0;
  bool any = false;
  while (p < text.size()) {
    int sign = 1;
    if (text[p] == '+') {
      ++p;
    } else if (text[p] == '-') {
      sign = -1;
      ++p;
    }
    int coeff = 1;
    if (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
      coeff = 0;
      while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
        coeff = coeff * 10 + (text[p++] - '0');
    }
    if (p >= text.size() || text[p] != 'a')
      throw std::invalid_argument("root grammar: expected 'a<i>' in '" + text + "'");
    ++p;
    if (p >= text.size() || !std::isdigit(static_cast<unsigned char>(text[p])))
      throw std::invalid_argument("root grammar: missing index in '" + text + "'");
    int idx = 0;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
      idx = idx * 10 + (text[p++] - '0');
    if (idx < 1 || idx > rank)
      throw std::invalid_argument("root grammar: index out of range in '" + text + "'");
    r.c[idx - 1] += sign * coeff;
    any = true;
  }
  if (!any) throw std::invalid_argument("root grammar: empty input");
  return r;
}

std::string render_word(const std::vector<int>& indices) {
  if (indices.empty()) return "e";
  std::ostringstream out;
  for (size_t i = 0; i < indices.size(); ++i) {
    if (i) out << ' ';
    out << 's' << indices[i];
  }
  return out.str();
}

std::vector<int> parse_word(const std::string& text, int rank) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    if (tok.size() < 2 || tok[0] != 's')
      throw std::invalid_argument("word grammar: bad token '" + tok + "'");
    int idx = 0;
    for (size_t i = 1; i < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        throw std::invalid_argument("word grammar: bad token '" + tok + "'");
      idx = idx * 10 + (tok[i] - '0');
    }
    if (idx < 1 || idx > rank)
      throw std::invalid_argument("word grammar: index " + std::to_string(idx) +
                                  " out of range 1.." + std::to_string(rank));
    out.push_back(idx);
  }
  return out;
}

std::pair<Family, int> parse_system(const std::string& text) {
  if (text.size() < 2)
    throw std::invalid_argument("system spec: expected e.g. 'B3', got '" + text + "'");
  char f = text[0];
  int rank = 0;
  for (size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("system spec: bad rank in '" + text + "'");
    rank = rank * 10 + (text[i] - '0');
  }
  switch (f) {
    case 'A': return {Family::A, rank};
    case 'B': return {Family::B, rank};
    case 'C': return {Family::C, rank};
    case 'D': return {Family::D, rank};
    case 'E':
      if (rank == 6) return {Family::E6, rank};
      if (rank == 7) return {Family::E7, rank};
      if (rank == 8) return {Family::E8, rank};
      throw std::invalid_argument("system spec: type E rank must be 6, 7 or 8");
    case 'F':
      if (rank == 4) return {Family::F4, rank};
      throw std::invalid_argument("system spec: type F rank must be 4");
    case 'G':
      if (rank == 2) return {Family::G2, rank};
      throw std::invalid_argument("system spec: type G rank must be 2");
    default:
      throw std::invalid_argument("system spec: unknown family '" + std::string(1, f) + "'");
  }
}

}  // namespace schub
