#include "cwb/dsl.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace cwb {

namespace {

struct Tok {
  enum Kind { Ident, Int, Punct, End } kind = End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Tok& peek() const { return tok_; }
  Tok next() {
    Tok t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++col_;
        ++pos_;
      } else if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    tok_ = Tok{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= s_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    char c = s_[pos_];
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      tok_.kind = Tok::Ident;
      tok_.text = s_.substr(start, pos_ - start);
    } else if (isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      tok_.kind = Tok::Int;
      tok_.text = s_.substr(start, pos_ - start);
    } else if (std::string("(){};:,=+-*^/").find(c) != std::string::npos) {
      tok_.kind = Tok::Punct;
      tok_.text = std::string(1, c);
      ++pos_;
    } else {
      throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }
    col_ += static_cast<int>(tok_.text.size());
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Tok tok_;
};

const std::set<std::string> kReservedVars = {"d", "l", "m", "n", "x", "y"};

class Parser {
 public:
  explicit Parser(const std::string& text) : lx_(text) {}

  AlgebraDoc parse() {
    expect_ident("algebra");
    Tok name = expect(Tok::Ident, "algebra name");
    doc_.name = name.text;
    expect_punct("(");
    if (!is_punct(")")) {
      while (true) {
        Tok p = expect(Tok::Ident, "parameter name");
        declare_param(p);
        if (is_punct(",")) {
          lx_.next();
          continue;
        }
        break;
      }
    }
    expect_punct(")");
    bool braced = is_punct("{");
    if (braced) lx_.next();
    while (!(braced ? is_punct("}") : lx_.peek().kind == Tok::End)) block();
    if (braced) lx_.next();
    if (lx_.peek().kind != Tok::End) {
      const Tok& t = lx_.peek();
      throw ParseError(t.line, t.col, "trailing input after document");
    }
    finalize();
    return std::move(doc_);
  }

 private:
  void declare_param(const Tok& p) {
    if (kReservedVars.count(p.text))
      throw ParseError(p.line, p.col, "'" + p.text + "' is a reserved variable name");
    Sym s = Sym::param(p.text);
    for (const Sym& q : doc_.params)
      if (q == s) throw ParseError(p.line, p.col, "duplicate parameter " + p.text);
    doc_.params.push_back(s);
  }

  void block() {
    Tok head = expect(Tok::Ident, "block keyword");
    if (head.text == "generators") {
      expect_punct(":");
      if (!doc_.gens.empty())
        throw ParseError(head.line, head.col, "duplicate generators block");
      while (true) {
        Tok g = expect(Tok::Ident, "generator name");
        if (kReservedVars.count(g.text))
          throw ParseError(g.line, g.col, "'" + g.text + "' is a reserved variable name");
        for (const Sym& q : doc_.params)
          if (q.name == g.text)
            throw ParseError(g.line, g.col, "generator shadows parameter " + g.text);
        for (const std::string& e : doc_.gens)
          if (e == g.text)
            throw ParseError(g.line, g.col, "duplicate generator " + g.text);
        doc_.gens.push_back(g.text);
        if (is_punct(",")) {
          lx_.next();
          continue;
        }
        break;
      }
      expect_punct(";");
    } else if (head.text == "bracket" || head.text == "novikov" ||
               head.text == "lie") {
      if (doc_.gens.empty())
        throw ParseError(head.line, head.col,
                         "generators must be declared before clauses");
      Tok gi = expect(Tok::Ident, "generator");
      Tok gj = expect(Tok::Ident, "generator");
      int i = gen_index(gi), j = gen_index(gj);
      expect_punct("=");
      Tok at = lx_.peek();
      Poly e = expr();
      expect_punct(";");
      std::vector<Poly> coeffs = split_targets(e, at, head.text != "bracket");
      if (head.text == "bracket")
        add_bracket(i, j, coeffs, head);
      else
        add_gd(head.text == "novikov", i, j, coeffs, head);
    } else if (head.text == "job") {
      JobDirective jd;
      Tok cmd = expect(Tok::Ident, "job command");
      jd.command = cmd.text;
      while (!is_punct(";")) {
        Tok t = lx_.next();
        if (t.kind == Tok::End)
          throw ParseError(t.line, t.col, "unterminated job directive");
        jd.args.push_back(t.text);
      }
      lx_.next();
      doc_.jobs.push_back(std::move(jd));
    } else {
      throw ParseError(head.line, head.col, "unknown block '" + head.text + "'");
    }
  }

  int gen_index(const Tok& g) {
    for (size_t k = 0; k < doc_.gens.size(); ++k)
      if (doc_.gens[k] == g.text) return static_cast<int>(k);
    throw ParseError(g.line, g.col, "unknown generator '" + g.text + "'");
  }

  // expr := term (('+'|'-') term)*
  Poly expr() {
    Poly acc = term();
    while (is_punct("+") || is_punct("-")) {
      bool plus = lx_.next().text == "+";
      Poly t = term();
      acc = plus ? acc + t : acc - t;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (is_punct("*")) {
      lx_.next();
      acc *= factor();
    }
    return acc;
  }

  Poly factor() {
    bool neg = false;
    while (is_punct("-")) {
      lx_.next();
      neg = !neg;
    }
    Poly b = base();
    if (is_punct("^")) {
      Tok caret = lx_.next();
      Tok e = expect(Tok::Int, "exponent");
      long k = std::stol(e.text);
      if (k < 0 || k > 64)
        throw ParseError(caret.line, caret.col, "exponent out of range");
      b = b.pow(static_cast<int>(k));
    }
    return neg ? -b : b;
  }

  Poly base() {
    Tok t = lx_.next();
    if (t.kind == Tok::Int) {
      Rat num = rat_from_string(t.text);
      if (is_punct("/")) {
        lx_.next();
        Tok den = expect(Tok::Int, "denominator");
        Rat d = rat_from_string(den.text);
        if (d == 0) throw ParseError(den.line, den.col, "zero denominator");
        return Poly(num / d);
      }
      return Poly(num);
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "d") return pd();
      if (t.text == "l") return pl();
      if (kReservedVars.count(t.text))
        throw ParseError(t.line, t.col,
                         "'" + t.text + "' is reserved and not usable here");
      for (const Sym& p : doc_.params)
        if (p.name == t.text) return Poly::sym(p);
      for (size_t k = 0; k < doc_.gens.size(); ++k)
        if (doc_.gens[k] == t.text) return Poly::param("@" + t.text);
      throw ParseError(t.line, t.col, "unknown identifier '" + t.text + "'");
    }
    if (t.kind == Tok::Punct && t.text == "(") {
      Poly e = expr();
      expect_punct(")");
      return e;
    }
    throw ParseError(t.line, t.col, "expected a number, identifier or '('");
  }

  // Splits an expression into per-generator coefficients; every additive term
  // must contain exactly one generator factor (to the first power).
  std::vector<Poly> split_targets(const Poly& e, const Tok& at, bool scalar_only) {
    std::vector<Poly> out(doc_.gens.size());
    for (const auto& [m, c] : e.terms()) {
      int target = -1;
      Mono rest;
      for (const auto& [s, k] : m.e) {
        if (s.is_param() && !s.name.empty() && s.name[0] == '@') {
          if (target >= 0 || k > 1)
            throw ParseError(at.line, at.col,
                             "each term must contain exactly one generator factor");
          for (size_t g = 0; g < doc_.gens.size(); ++g)
            if ("@" + doc_.gens[g] == s.name) target = static_cast<int>(g);
        } else {
          rest.e.emplace_back(s, k);
        }
      }
      if (target < 0)
        throw ParseError(at.line, at.col, "term without a generator factor");
      Poly coeff = Poly::term(rest, c);
      if (scalar_only && coeff.has_vars())
        throw ParseError(at.line, at.col,
                         "d/l are not allowed in novikov/lie clauses");
      out[static_cast<size_t>(target)] += coeff;
    }
    return out;
  }

  void add_bracket(int i, int j, const std::vector<Poly>& coeffs, const Tok& at) {
    auto key = std::make_pair(i, j);
    if (bracket_given_.count(key))
      throw ParseError(at.line, at.col, "duplicate bracket clause for (" +
                                            doc_.gens[static_cast<size_t>(i)] + "," +
                                            doc_.gens[static_cast<size_t>(j)] + ")");
    if (i != j && bracket_given_.count(std::make_pair(j, i)))
      throw ParseError(at.line, at.col,
                       "bracket clause conflicts with the skew-completion of (" +
                           doc_.gens[static_cast<size_t>(j)] + "," +
                           doc_.gens[static_cast<size_t>(i)] + ")");
    bracket_given_.insert(key);
    bracket_clauses_.emplace_back(i, j, coeffs);
    doc_.has_bracket_block = true;
  }

  void add_gd(bool is_circ, int i, int j, const std::vector<Poly>& coeffs,
              const Tok& at) {
    auto& seen = is_circ ? circ_given_ : lie_given_;
    auto key = std::make_pair(i, j);
    if (seen.count(key) || (!is_circ && seen.count(std::make_pair(j, i))))
      throw ParseError(at.line, at.col, "duplicate clause");
    seen.insert(key);
    (is_circ ? circ_clauses_ : lie_clauses_).emplace_back(i, j, coeffs);
    doc_.has_gd_block = true;
  }

  void finalize() {
    if (doc_.gens.empty())
      throw ParseError(1, 1, "document declares no generators");
    doc_.presentation =
        LcaPresentation::make(doc_.name, doc_.gens, doc_.params);
    for (const auto& [i, j, coeffs] : bracket_clauses_)
      for (size_t k = 0; k < coeffs.size(); ++k)
        doc_.presentation.set_entry(i, j, static_cast<int>(k), coeffs[k]);
    // Skew-completion of off-diagonal clauses.
    for (const auto& [i, j, coeffs] : bracket_clauses_)
      if (i != j) doc_.presentation.complete_skew(i, j);
    doc_.bialgebra = GdBialgebra::make(doc_.name, doc_.gens, doc_.params);
    for (const auto& [i, j, coeffs] : circ_clauses_)
      for (size_t k = 0; k < coeffs.size(); ++k)
        doc_.bialgebra.set_circ(i, j, static_cast<int>(k), coeffs[k]);
    for (const auto& [i, j, coeffs] : lie_clauses_) {
      if (i == j) {
        for (size_t k = 0; k < coeffs.size(); ++k)
          if (!coeffs[k].is_zero())
            throw ParseError(1, 1, "lie clause [x,x] must vanish");
        continue;
      }
      for (size_t k = 0; k < coeffs.size(); ++k)
        doc_.bialgebra.set_lie(i, j, static_cast<int>(k), coeffs[k]);
    }
  }

  bool is_punct(const std::string& p) const {
    return lx_.peek().kind == Tok::Punct && lx_.peek().text == p;
  }
  Tok expect(Tok::Kind k, const std::string& what) {
    Tok t = lx_.next();
    if (t.kind != k)
      throw ParseError(t.line, t.col, "expected " + what + ", got '" + t.text + "'");
    return t;
  }
  void expect_punct(const std::string& p) {
    Tok t = lx_.next();
    if (t.kind != Tok::Punct || t.text != p)
      throw ParseError(t.line, t.col, "expected '" + p + "', got '" + t.text + "'");
  }
  void expect_ident(const std::string& word) {
    Tok t = lx_.next();
    if (t.kind != Tok::Ident || t.text != word)
      throw ParseError(t.line, t.col, "expected '" + word + "'");
  }

  Lexer lx_;
  AlgebraDoc doc_;
  std::set<std::pair<int, int>> bracket_given_, circ_given_, lie_given_;
  std::vector<std::tuple<int, int, std::vector<Poly>>> bracket_clauses_,
      circ_clauses_, lie_clauses_;
};

std::string render_targets(const std::vector<Poly>& coeffs,
                           const std::vector<std::string>& gens) {
  std::string s;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    if (!s.empty()) s += "+";
    s += "(" + coeffs[k].render() + ")*" + gens[k];
  }
  return s;
}

}  // namespace

AlgebraDoc parse_algebra(const std::string& text) { return Parser(text).parse(); }

AlgebraDoc parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

std::string render_algebra(const AlgebraDoc& doc) {
  std::ostringstream os;
  os << "algebra " << doc.name << "(";
  for (size_t i = 0; i < doc.params.size(); ++i)
    os << (i ? ", " : "") << doc.params[i].text();
  os << ") {\n  generators: ";
  for (size_t i = 0; i < doc.gens.size(); ++i)
    os << (i ? ", " : "") << doc.gens[i];
  os << ";\n";
  const LcaPresentation& a = doc.presentation;
  if (doc.has_bracket_block)
    for (int i = 0; i < a.rank; ++i)
      for (int j = i; j < a.rank; ++j) {
        std::vector<Poly> coeffs;
        bool any = false;
        for (int k = 0; k < a.rank; ++k) {
          coeffs.push_back(a.entry(i, j, k));
          any = any || !a.entry(i, j, k).is_zero();
        }
        if (!any) continue;
        os << "  bracket " << doc.gens[static_cast<size_t>(i)] << " "
           << doc.gens[static_cast<size_t>(j)] << " = "
           << render_targets(coeffs, doc.gens) << ";\n";
      }
  if (doc.has_gd_block) {
    const GdBialgebra& g = doc.bialgebra;
    for (int i = 0; i < g.dim; ++i)
      for (int j = 0; j < g.dim; ++j) {
        std::vector<Poly> coeffs;
        bool any = false;
        for (int k = 0; k < g.dim; ++k) {
          coeffs.push_back(g.circ_at(i, j, k));
          any = any || !g.circ_at(i, j, k).is_zero();
        }
        if (!any) continue;
        os << "  novikov " << doc.gens[static_cast<size_t>(i)] << " "
           << doc.gens[static_cast<size_t>(j)] << " = "
           << render_targets(coeffs, doc.gens) << ";\n";
      }
    for (int i = 0; i < g.dim; ++i)
      for (int j = i + 1; j < g.dim; ++j) {
        std::vector<Poly> coeffs;
        bool any = false;
        for (int k = 0; k < g.dim; ++k) {
          coeffs.push_back(g.lie_at(i, j, k));
          any = any || !g.lie_at(i, j, k).is_zero();
        }
        if (!any) continue;
        os << "  lie " << doc.gens[static_cast<size_t>(i)] << " "
           << doc.gens[static_cast<size_t>(j)] << " = "
           << render_targets(coeffs, doc.gens) << ";\n";
      }
  }
  for (const JobDirective& j : doc.jobs) {
    os << "  job " << j.command;
    for (const std::string& a2 : j.args) os << " " << a2;
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cwb
