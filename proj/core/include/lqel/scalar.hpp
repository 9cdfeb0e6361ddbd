#pragma once

#include <gmpxx.h>

#include <string>

namespace lqel {

// Element of Q(i): re + im*i with both parts exact rationals in lowest
// terms. Every operation is exact; there are no tolerances anywhere.
struct Scalar {
  mpq_class re, im;

  Scalar() : re(0), im(0) {}
  Scalar(long x) : re(x), im(0) {}  // NOLINT: implicit by design
  Scalar(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Scalar conj() const { return Scalar(re, -im); }
  // N(z) = re^2 + im^2 as a rational (bilinear-form convention: no
  // complex conjugation is used elsewhere in the library).
  mpq_class norm() const { return re * re + im * im; }

  Scalar operator-() const { return Scalar(-re, -im); }
  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    mpq_class r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) {
    return !(a == b);
  }

  // Canonical text form: "0", "-3/2", "i", "-i", "2i", "1/2-i", "2+3/4i".
  std::string to_string() const;
};

// Parse the canonical form produced by Scalar::to_string (and the obvious
// relatives like "3 + 2i"). Throws input_error on malformed text.
Scalar scalar_from_string(const std::string& text);

// Parse "p" or "p/q" into a canonical rational. Throws input_error.
mpq_class rational_from_string(const std::string& text);

std::string rational_to_string(const mpq_class& q);

// Exact square root in Q(i) if one exists.
bool sqrt_in_qi(const Scalar& value, Scalar& root);

}  // namespace lqel
