#include "cwb/ratfn.hpp"

#include <stdexcept>

namespace cwb {

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFn: zero denominator");
  if (den_.has_vars())
    throw std::domain_error(
        "RatFn: denominator must involve parameters only, got " +
        den_.render());
  reduce();
}

void RatFn::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  // Cancel the parameter-content gcd, then normalise rational content so
  // the denominator is primitive with positive leading coefficient.
  if (!den_.is_constant()) {
    // Parameter content of the numerator: gcd of its coefficient polynomials
    // when viewed as a polynomial in the variables.
    Poly pcontent;
    std::map<Mono, Poly, GrlexLess> by_varmono;
    for (const auto& [m, c] : num_.terms()) {
      Mono varpart, parpart;
      for (const auto& [s, k] : m.e)
        (s.is_var() ? varpart : parpart).e.emplace_back(s, k);
      by_varmono[varpart] += Poly::term(parpart, c);
    }
    for (const auto& [vm, cp] : by_varmono) pcontent = poly_gcd(pcontent, cp);
    Poly g = poly_gcd(pcontent, den_);
    if (!g.is_constant()) {
      num_ = poly_div_exact(num_, g);
      den_ = poly_div_exact(den_, g);
    }
  }
  Rat c = den_.content();
  if (den_.lead_coeff() < 0) c = -c;
  den_ = den_.scaled(Rat(1) / c);
  num_ = num_.scaled(Rat(1) / c);
}

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator*(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
  if (b.is_zero()) throw std::domain_error("RatFn: division by zero");
  if (b.num_.has_vars())
    throw std::domain_error("RatFn: division by a variable polynomial: " +
                            b.num_.render());
  return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

RatFn RatFn::specialized(const std::map<Sym, Poly>& vals) const {
  Poly d = den_.substitute_params(vals);
  if (d.is_zero())
    throw std::domain_error("specialization vanishes on denominator " +
                            den_.render());
  return RatFn(num_.substitute_params(vals), d);
}

std::string RatFn::render() const {
  if (den_ == Poly(Rat(1))) return num_.render();
  std::string n = num_.render();
  std::string d = den_.render();
  if (num_.size() > 1) n = "(" + n + ")";
  if (den_.size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

RatFn eval_with(const Poly& p, const std::map<Sym, RatFn>& bindings) {
  RatFn acc;
  for (const auto& [m, c] : p.terms()) {
    RatFn t{Poly(c)};
    Mono untouched;
    for (const auto& [s, k] : m.e) {
      auto it = bindings.find(s);
      if (it == bindings.end()) {
        untouched.e.emplace_back(s, k);
      } else {
        for (int i = 0; i < k; ++i) t *= it->second;
      }
    }
    t *= RatFn(Poly::term(untouched, Rat(1)));
    acc += t;
  }
  return acc;
}

}  // namespace cwb
