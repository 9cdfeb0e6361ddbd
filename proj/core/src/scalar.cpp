#include "lqel/scalar.hpp"

#include <cctype>
#include <cstddef>

#include "lqel/errors.hpp"

namespace lqel {

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw input_error("division by zero scalar");
  mpq_class n = o.norm();
  // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2)
  mpq_class r = (re * o.re + im * o.im) / n;
  im = (im * o.re - re * o.im) / n;
  re = r;
  return *this;
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  if (re != 0) s += re.get_str();
  if (im != 0) {
    if (re != 0 && im > 0) s += "+";
    if (im == 1)
      s += "i";
    else if (im == -1)
      s += "-i";
    else
      s += im.get_str() + "i";
  }
  return s;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class rational_from_string(const std::string& text) {
  std::size_t pos = 0;
  auto bad = [&]() -> input_error {
    return input_error("malformed rational: '" + text + "'");
  };
  if (text.empty()) throw bad();
  if (text[pos] == '-' || text[pos] == '+') ++pos;
  std::size_t digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
    ++digits;
  }
  if (digits == 0) throw bad();
  if (pos < text.size()) {
    if (text[pos] != '/') throw bad();
    ++pos;
    digits = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      ++digits;
    }
    if (digits == 0 || pos != text.size()) throw bad();
  }
  mpq_class q(text);
  q.canonicalize();
  if (q.get_den() == 0) throw input_error("zero denominator: '" + text + "'");
  return q;
}

namespace {

// One signed term of "a+bi": a rational, optionally suffixed with 'i',
// or a bare 'i'.
struct Term {
  mpq_class value;
  bool imaginary;
};

Term parse_term(const std::string& s, std::size_t& pos) {
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  if (pos < s.size() && s[pos] == 'i') {
    ++pos;
    return {mpq_class(negative ? -1 : 1), true};
  }
  std::size_t start = pos;
  while (pos < s.size() &&
         (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
    ++pos;
  if (pos == start)
    throw input_error("malformed scalar: '" + s + "'");
  mpq_class v = rational_from_string(s.substr(start, pos - start));
  if (negative) v = -v;
  if (pos < s.size() && s[pos] == 'i') {
    ++pos;
    return {v, true};
  }
  return {v, false};
}

}  // namespace

Scalar scalar_from_string(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw input_error("empty scalar literal");
  std::size_t pos = 0;
  Scalar out;
  Term first = parse_term(s, pos);
  (first.imaginary ? out.im : out.re) = first.value;
  if (pos < s.size()) {
    Term second = parse_term(s, pos);
    if (second.imaginary == first.imaginary || pos != s.size())
      throw input_error("malformed scalar: '" + text + "'");
    (second.imaginary ? out.im : out.re) = second.value;
  }
  return out;
}

namespace {

// Exact square root of a nonnegative rational, if it is one.
bool sqrt_rational(const mpq_class& q, mpq_class& root) {
  if (q < 0) return false;
  const mpz_class num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = mpq_class(rn) / mpq_class(rd);
  return true;
}

}  // namespace

bool sqrt_in_qi(const Scalar& value, Scalar& root) {
  const mpq_class &x = value.re, &y = value.im;
  if (y == 0) {
    mpq_class r;
    if (x >= 0 && sqrt_rational(x, r)) {
      root = Scalar(r, mpq_class(0));
      return true;
    }
    if (x < 0 && sqrt_rational(-x, r)) {
      root = Scalar(mpq_class(0), r);
      return true;
    }
    return false;
  }
  // (a+bi)^2 = x+yi needs s = sqrt(x^2+y^2), a = sqrt((x+s)/2), b = y/2a.
  mpq_class s;
  if (!sqrt_rational(x * x + y * y, s)) return false;
  mpq_class a;
  if (!sqrt_rational((x + s) / 2, a) || a == 0) return false;
  root = Scalar(a, y / (2 * a));
  return true;
}

}  // namespace lqel
