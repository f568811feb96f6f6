// Rational functions num/den over Q, where the denominator involves only
// parameters. These are the scalars of the fraction field Q(params) that the
// linear algebra works over; variables may still appear in numerators.
#pragma once

#include "cwb/poly.hpp"

namespace cwb {

class RatFn {
 public:
  RatFn() : num_(), den_(Rat(1)) {}
  explicit RatFn(const Rat& c) : num_(c), den_(Rat(1)) {}
  explicit RatFn(const Poly& p) : num_(p), den_(Rat(1)) {}
  RatFn(Poly num, Poly den);

  static RatFn zero() { return RatFn(); }
  static RatFn one() { return RatFn(Rat(1)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFn operator-() const;
  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b);
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }

  // Exact equality by cross multiplication.
  friend bool operator==(const RatFn& a, const RatFn& b) {
    return (a.num_ * b.den_) == (b.num_ * a.den_);
  }

  // Evaluates the parameters named in `vals`; throws if the denominator
  // vanishes (the message names the offending polynomial).
  RatFn specialized(const std::map<Sym, Poly>& vals) const;

  std::string render() const;

 private:
  void reduce();
  Poly num_;
  Poly den_;  // parameter-only, nonzero
};

// Evaluates p with some symbols bound to rational functions; unbound symbols
// stay formal.
RatFn eval_with(const Poly& p, const std::map<Sym, RatFn>& bindings);

}  // namespace cwb
