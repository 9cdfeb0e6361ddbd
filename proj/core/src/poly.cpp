#include "lqel/poly.hpp"

#include <cassert>

namespace lqel {

Poly Poly::constant(std::size_t nvars, const Scalar& c) {
  Poly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  assert(index < nvars);
  Poly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Scalar(1));
  return p;
}

std::size_t Poly::total_degree() const {
  std::size_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::size_t t = 0;
    for (unsigned x : e) t += x;
    if (t > d) d = t;
  }
  return d;
}

Scalar Poly::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Poly::add_term(const Exponents& e, const Scalar& c) {
  assert(e.size() == nvars_);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly p(nvars_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  assert(nvars_ == o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  assert(nvars_ == o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  assert(a.nvars_ == b.nvars_);
  Poly p(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Poly::Exponents e(a.nvars_);
      for (std::size_t k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
      p.add_term(e, ca * cb);
    }
  return p;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly p(nvars_);
  if (c.is_zero()) return p;
  for (const auto& [e, t] : terms_) p.terms_.emplace(e, c * t);
  return p;
}

Scalar Poly::eval(const Vec& point) const {
  assert(point.size() == nvars_);
  Scalar sum(0);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t k = 0; k < nvars_; ++k)
      for (unsigned j = 0; j < e[k]; ++j) t *= point[k];
    sum += t;
  }
  return sum;
}

Poly Poly::partial(std::size_t var) const {
  assert(var < nvars_);
  Poly p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    p.add_term(d, c * Scalar(static_cast<long>(e[var])));
  }
  return p;
}

Poly Poly::substitute(const std::vector<Poly>& subs) const {
  assert(subs.size() == nvars_);
  const std::size_t out_vars = nvars_ ? subs[0].nvars() : 0;
  Poly result(out_vars);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(out_vars, c);
    for (std::size_t k = 0; k < nvars_; ++k)
      for (unsigned j = 0; j < e[k]; ++j) term = term * subs[k];
    result += term;
  }
  return result;
}

Poly Poly::shifted(const Vec& offset) const {
  assert(offset.size() == nvars_);
  std::vector<Poly> subs;
  subs.reserve(nvars_);
  for (std::size_t k = 0; k < nvars_; ++k) {
    Poly s = Poly::variable(nvars_, k);
    s += Poly::constant(nvars_, offset[k]);
    subs.push_back(std::move(s));
  }
  return substitute(subs);
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coeff = c.to_string();
    bool negated = false;
    if (c.is_real() && c.re < 0) {
      coeff = (-c).to_string();
      negated = true;
    }
    if (first) {
      if (negated) s += "-";
      first = false;
    } else {
      s += negated ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    const bool needs_paren = !c.is_real() && c.re != 0 && !mono.empty();
    const bool coeff_is_one = (coeff == "1");
    if (mono.empty()) {
      s += needs_paren ? "(" + coeff + ")" : coeff;
    } else if (coeff_is_one) {
      s += mono;
    } else if (needs_paren) {
      s += "(" + coeff + ")*" + mono;
    } else {
      s += coeff + "*" + mono;
    }
  }
  return s;
}

}  // namespace lqel
