// Symbols: the fixed set of formal indeterminates (d, l, m, n, x, y standing
// for the operators/arguments of the lambda-calculus) and named parameters.
// Keeping the variable set closed prevents accidental capture in
// substitutions; parameters are declared per algebra and behave as exact
// transcendental field elements.
#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cwb {

enum class Var : unsigned char {
  del = 0,  // d, the translation generator (written ∂ in the literature)
  lam = 1,  // l
  mu = 2,   // m
  nu = 3,   // n
  xx = 4,   // x
  yy = 5,   // y
};

inline constexpr int kNumVars = 6;

inline const char* var_text(Var v) {
  static const char* names[] = {"d", "l", "m", "n", "x", "y"};
  return names[static_cast<int>(v)];
}

struct Sym {
  // kind 0: fixed variable; kind 1: named parameter.
  unsigned char kind = 0;
  unsigned char var = 0;
  std::string name;

  static Sym variable(Var v) {
    Sym s;
    s.kind = 0;
    s.var = static_cast<unsigned char>(v);
    return s;
  }
  static Sym param(std::string n) {
    Sym s;
    s.kind = 1;
    s.name = std::move(n);
    return s;
  }

  bool is_var() const { return kind == 0; }
  bool is_param() const { return kind == 1; }

  std::string text() const {
    return is_var() ? var_text(static_cast<Var>(var)) : name;
  }

  friend bool operator==(const Sym& a, const Sym& b) {
    if (a.kind != b.kind) return false;
    return a.is_var() ? a.var == b.var : a.name == b.name;
  }
  // Variables sort before parameters; parameters sort by name.
  friend std::strong_ordering operator<=>(const Sym& a, const Sym& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    if (a.is_var()) return a.var <=> b.var;
    return a.name <=> b.name;
  }
};

inline Sym sym_d() { return Sym::variable(Var::del); }
inline Sym sym_l() { return Sym::variable(Var::lam); }
inline Sym sym_m() { return Sym::variable(Var::mu); }
inline Sym sym_n() { return Sym::variable(Var::nu); }
inline Sym sym_x() { return Sym::variable(Var::xx); }
inline Sym sym_y() { return Sym::variable(Var::yy); }

using SymList = std::vector<Sym>;

}  // namespace cwb
