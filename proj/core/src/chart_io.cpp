#include "lqel/chart_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "lqel/errors.hpp"

namespace lqel {

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, std::size_t nvars)
      : s_(text), nvars_(nvars) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != s_.size())
      throw input_error("unexpected trailing input in polynomial: '" + s_ +
                        "'");
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly expr() {
    Poly p = eat('-') ? -term() : (eat('+'), term());
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }

  Poly term() {
    Poly p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  Poly factor() {
    Poly b = base();
    if (eat('^')) {
      const std::size_t e = digits("exponent");
      Poly p = Poly::constant(nvars_, Scalar(1));
      for (std::size_t k = 0; k < e; ++k) p = p * b;
      return p;
    }
    return b;
  }

  Poly base() {
    const char c = peek();
    if (c == '(') {
      eat('(');
      Poly p = expr();
      if (!eat(')')) throw input_error("missing ')' in polynomial: '" + s_ + "'");
      return p;
    }
    if (c == '-') {
      eat('-');
      return -base();
    }
    if (c == 'i') {
      ++pos_;
      return Poly::constant(nvars_, Scalar::i());
    }
    if (c == 't') {
      ++pos_;
      const std::size_t k = digits("variable index");
      if (k < 1 || k > nvars_)
        throw input_error("variable t" + std::to_string(k) +
                          " out of range (chart has " +
                          std::to_string(nvars_) + " parameters)");
      return Poly::variable(nvars_, k - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      digits("numerator");
      if (eat('/')) {
        skip_space();
        digits("denominator");
      }
      std::string lit = s_.substr(start, pos_ - start);
      lit.erase(std::remove_if(lit.begin(), lit.end(),
                               [](unsigned char ch) { return std::isspace(ch); }),
                lit.end());
      // "2i" and "3/4i": a rational glued to the unit is imaginary
      if (pos_ < s_.size() && s_[pos_] == 'i') {
        ++pos_;
        return Poly::constant(nvars_, Scalar(mpq_class(0), rational_from_string(lit)));
      }
      return Poly::constant(nvars_,
                            Scalar(rational_from_string(lit), mpq_class(0)));
    }
    throw input_error("unexpected character in polynomial: '" + s_ + "'");
  }

  std::size_t digits(const char* what) {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start)
      throw input_error(std::string("expected ") + what + " in polynomial: '" +
                        s_ + "'");
    std::size_t v = 0;
    for (std::size_t k = start; k < pos_; ++k) {
      v = v * 10 + static_cast<std::size_t>(s_[k] - '0');
      if (v > 1'000'000)
        throw input_error(std::string("value too large for ") + what);
    }
    return v;
  }

  const std::string& s_;
  std::size_t nvars_;
  std::size_t pos_{0};
};

}  // namespace

Poly parse_polynomial(const std::string& text, std::size_t nvars) {
  return PolyParser(text, nvars).parse();
}

Chart parse_chart_text(const std::string& text, const std::string& label) {
  std::istringstream in(text);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) {
        blank = false;
        break;
      }
    if (!blank) lines.push_back(line);
  }
  if (lines.empty()) throw input_error("chart file is empty: " + label);

  std::istringstream head(lines[0]);
  long n = 0, a = 0;
  if (!(head >> n >> a) || n < 1 || a < 1)
    throw input_error("chart file header must be 'n a' with n, a >= 1");
  std::string extra;
  if (head >> extra) throw input_error("chart file header has trailing tokens");
  const std::size_t total = static_cast<std::size_t>(n + a);
  if (lines.size() - 1 != total)
    throw input_error("chart file: expected " + std::to_string(total) +
                      " polynomials, found " +
                      std::to_string(lines.size() - 1));

  Chart c;
  c.label = label;
  c.param_dim = static_cast<std::size_t>(n);
  for (std::size_t k = 1; k <= total; ++k)
    c.coords.push_back(parse_polynomial(lines[k], c.param_dim));
  validate_chart(c);
  return c;
}

Chart read_chart_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open chart file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_chart_text(buf.str(), path);
}

}  // namespace lqel
