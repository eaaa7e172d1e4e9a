#pragma once

#include <cstddef>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "lieclass/error.hpp"
#include "lieclass/lie_algebra.hpp"
#include "lieclass/rational.hpp"

namespace lieclass {

/// Line-oriented text format:
///
///   # comment
///   dim 3
///   basis X H Y          (optional)
///   1 2 1 -2             (c_{12}^1 = -2; i < j; unlisted constants are 0)
struct AlgebraFile {
  std::size_t dim = 0;
  std::vector<std::string> names;
  std::vector<StructureConstant> constants;

  LieAlgebra to_algebra() const { return LieAlgebra(dim, constants, names); }
};

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size() && line[i] != '#') {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline std::size_t parse_index(const Token& t, std::size_t line, std::size_t dim) {
  if (t.text.empty() || t.text.size() > 9 || t.text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, t.column, "expected a positive integer index, got '" + t.text + "'");
  const std::size_t v = std::stoul(t.text);
  if (dim != 0 && (v < 1 || v > dim))
    throw ParseError(line, t.column, "index " + t.text + " outside 1.." + std::to_string(dim));
  return v;
}

}  // namespace detail

inline AlgebraFile parse_algebra_file(const std::string& text) {
  AlgebraFile file;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  bool have_dim = false;
  bool have_constants = false;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto tokens = detail::tokenize(raw);
    if (tokens.empty()) continue;
    const auto& head = tokens[0];
    if (!have_dim) {
      if (head.text != "dim") throw ParseError(line_no, head.column, "expected 'dim n' first");
      if (tokens.size() != 2)
        throw ParseError(line_no, tokens.size() < 2 ? raw.size() + 1 : tokens[2].column,
                         "'dim' takes exactly one value");
      file.dim = detail::parse_index(tokens[1], line_no, 0);
      if (file.dim == 0) throw ParseError(line_no, tokens[1].column, "dimension must be at least 1");
      have_dim = true;
      continue;
    }
    if (head.text == "dim") throw ParseError(line_no, head.column, "'dim' given twice");
    if (head.text == "basis") {
      if (!file.names.empty()) throw ParseError(line_no, head.column, "'basis' given twice");
      if (have_constants)
        throw ParseError(line_no, head.column, "'basis' must precede the structure constants");
      if (tokens.size() - 1 != file.dim)
        throw ParseError(line_no, head.column,
                         "expected " + std::to_string(file.dim) + " basis names, got " +
                             std::to_string(tokens.size() - 1));
      for (std::size_t t = 1; t < tokens.size(); ++t) file.names.push_back(tokens[t].text);
      continue;
    }
    if (tokens.size() != 4)
      throw ParseError(line_no, tokens.size() > 4 ? tokens[4].column : head.column,
                       "expected 'i j k p/q'");
    const std::size_t i = detail::parse_index(tokens[0], line_no, file.dim);
    const std::size_t j = detail::parse_index(tokens[1], line_no, file.dim);
    const std::size_t k = detail::parse_index(tokens[2], line_no, file.dim);
    if (i >= j) throw ParseError(line_no, tokens[0].column, "constants are given only for i < j");
    if (!seen.insert({i, j, k}).second)
      throw ParseError(line_no, tokens[0].column, "constant (" + tokens[0].text + "," + tokens[1].text +
                                                      "," + tokens[2].text + ") given twice");
    Rational value;
    try {
      value = parse_rational(tokens[3].text);
    } catch (const OutOfRange& e) {
      throw ParseError(line_no, tokens[3].column, e.what());
    }
    have_constants = true;
    if (value != 0) file.constants.push_back({i, j, k, value});
  }
  if (!have_dim) throw ParseError(line_no + 1, 1, "missing 'dim n' line");
  if (file.names.empty())
    for (std::size_t i = 1; i <= file.dim; ++i) file.names.push_back("e" + std::to_string(i));
  return file;
}

inline AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra_file(ss.str());
}

inline std::string serialize(const LieAlgebra& alg) {
  std::ostringstream os;
  os << "dim " << alg.dim() << "\nbasis";
  for (const auto& n : alg.names()) os << ' ' << n;
  os << '\n';
  for (const auto& c : alg.constants()) os << c.i << ' ' << c.j << ' ' << c.k << ' ' << to_string(c.value) << '\n';
  return os.str();
}

}  // namespace lieclass
