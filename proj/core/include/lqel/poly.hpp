#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lqel/matrix.hpp"
#include "lqel/scalar.hpp"

namespace lqel {

// Sparse multivariate polynomial over Q(i). Terms are keyed by exponent
// vectors in a sorted map, so iteration order (and printing) is canonical.
class Poly {
 public:
  using Exponents = std::vector<unsigned>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Scalar& c);
  static Poly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t total_degree() const;
  Scalar constant_term() const;

  void add_term(const Exponents& e, const Scalar& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Scalar& c) const;

  Scalar eval(const Vec& point) const;
  Poly partial(std::size_t var) const;
  // Substitute each variable by the given polynomial (all over the same
  // new variable set).
  Poly substitute(const std::vector<Poly>& subs) const;
  // t -> offset + t, same variables.
  Poly shifted(const Vec& offset) const;

  const std::map<Exponents, Scalar>& terms() const { return terms_; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Human/file form, variables named t1..tn.
  std::string to_string() const;

 private:
  std::size_t nvars_{0};
  std::map<Exponents, Scalar> terms_;
};

}  // namespace lqel
