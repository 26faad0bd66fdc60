#include "matord/matrix_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace matord {

namespace {

struct Token {
  std::string text;
  int line, column;
};

/* Tokens are maximal runs of non-space characters; '#' swallows the rest of
 * its line.  Positions are 1-based for error messages. */
std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      ++line;
      column = 1;
      ++i;
    } else if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++column;
      ++i;
    } else {
      Token t{{}, line, column};
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '#') {
        t.text.push_back(text[i]);
        ++i;
        ++column;
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

int parse_count(const Token& t, const char* what) {
  if (t.text.empty() || t.text.size() > 9) throw ParseError(std::string("bad ") + what, t.line, t.column);
  long v = 0;
  for (char c : t.text) {
    if (c < '0' || c > '9') throw ParseError(std::string("bad ") + what, t.line, t.column);
    v = v * 10 + (c - '0');
  }
  if (v < 1) throw ParseError(std::string("bad ") + what, t.line, t.column);
  return static_cast<int>(v);
}

Rational parse_entry(const Token& t) {
  try {
    return Rational::from_string(t.text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), t.line, t.column);
  }
}

}  // namespace

ParseError::ParseError(std::string what, int l, int c)
    : std::runtime_error(what + " (line " + std::to_string(l) + ", column " +
                         std::to_string(c) + ")"),
      line(l),
      column(c) {}

Matrix parse_matrix(const std::string& text) {
  std::vector<Token> ts = tokenize(text);
  if (ts.size() < 2) throw ParseError("missing size header", 1, 1);
  int m = parse_count(ts[0], "row count");
  int n = parse_count(ts[1], "column count");
  const size_t need = 2 + static_cast<size_t>(m) * n;
  if (ts.size() < need) {
    const Token& last = ts.back();
    throw ParseError("fewer entries than the header promises", last.line, last.column);
  }
  if (ts.size() > need) {
    const Token& extra = ts[need];
    throw ParseError("more entries than the header promises", extra.line, extra.column);
  }
  Matrix out(m, n);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) out.at(r, c) = parse_entry(ts[2 + static_cast<size_t>(r) * n + c]);
  return out;
}

std::string render_matrix(const Matrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m.at(r, c).to_string();
    }
    os << '\n';
  }
  return os.str();
}

Monomial parse_monomial(const std::string& text) {
  std::vector<int> e;
  int column = 1;
  size_t i = 0;
  while (true) {
    size_t start = i;
    long v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9' && i - start < 9)
      v = v * 10 + (text[i++] - '0');
    if (i == start) throw ParseError("expected a nonnegative integer", 1, column);
    e.push_back(static_cast<int>(v));
    column += static_cast<int>(i - start);
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError("expected ','", 1, column);
    ++i;
    ++column;
  }
  return Monomial(std::move(e));
}

}  // namespace matord
