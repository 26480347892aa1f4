#include "lpdo/expr.hpp"

#include <cctype>

namespace lpdo {

namespace {

struct Token {
  enum Kind { Number, Ident, Symbol, End } kind = End;
  std::string text;
  int line = 1, column = 1;
};

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  int line = 1, column = 1;

  explicit Lexer(const std::string& s) : src(s) {}

  void advance() {
    if (pos < src.size() && src[pos] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++pos;
  }

  Token next() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) advance();
    Token t;
    t.line = line;
    t.column = column;
    if (pos >= src.size()) return t;
    char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Number;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        t.text += src[pos];
        advance();
      }
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      t.kind = Token::Ident;
      while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) {
        t.text += src[pos];
        advance();
      }
      return t;
    }
    if (std::string("+-*/^()").find(c) != std::string::npos) {
      t.kind = Token::Symbol;
      t.text = c;
      advance();
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, column);
  }
};

std::string lowered(const std::string& s) {
  std::string out;
  for (char c : s) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

struct Parser {
  Lexer lex;
  Token cur;

  explicit Parser(const std::string& s) : lex(s) { cur = lex.next(); }

  void bump() { cur = lex.next(); }

  bool at_symbol(const char* s) const { return cur.kind == Token::Symbol && cur.text == s; }

  void expect_symbol(const char* s) {
    if (!at_symbol(s))
      throw ParseError(std::string("expected '") + s + "'", cur.line, cur.column);
    bump();
  }

  OperatorExpr node(ExprKind k, const Token& at) {
    OperatorExpr e;
    e.kind = k;
    e.line = at.line;
    e.column = at.column;
    return e;
  }

  OperatorExpr parse_expr() {
    OperatorExpr lhs = parse_term();
    while (at_symbol("+") || at_symbol("-")) {
      Token op = cur;
      bump();
      OperatorExpr n = node(op.text == "+" ? ExprKind::Add : ExprKind::Subtract, op);
      n.args.push_back(std::move(lhs));
      n.args.push_back(parse_term());
      lhs = std::move(n);
    }
    return lhs;
  }

  OperatorExpr parse_term() {
    OperatorExpr lhs = parse_factor();
    while (at_symbol("*") || at_symbol("/")) {
      Token op = cur;
      bump();
      OperatorExpr n = node(op.text == "*" ? ExprKind::Multiply : ExprKind::Divide, op);
      n.args.push_back(std::move(lhs));
      n.args.push_back(parse_factor());
      lhs = std::move(n);
    }
    return lhs;
  }

  OperatorExpr parse_factor() {
    if (at_symbol("-")) {
      Token op = cur;
      bump();
      OperatorExpr n = node(ExprKind::Negate, op);
      n.args.push_back(parse_factor());
      return n;
    }
    return parse_power();
  }

  OperatorExpr parse_power() {
    OperatorExpr base = parse_primary();
    while (at_symbol("^")) {
      Token op = cur;
      bump();
      OperatorExpr n = node(ExprKind::Power, op);
      n.exponent = parse_exponent();
      n.args.push_back(std::move(base));
      base = std::move(n);
    }
    return base;
  }

  int parse_exponent() {
    if (at_symbol("(")) {
      bump();
      int e = parse_exponent();
      expect_symbol(")");
      return e;
    }
    if (cur.kind != Token::Number)
      throw ParseError("exponent must be a nonnegative integer", cur.line, cur.column);
    int e;
    try {
      e = std::stoi(cur.text);
    } catch (const std::exception&) {
      throw ParseError("exponent out of range", cur.line, cur.column);
    }
    bump();
    return e;
  }

  OperatorExpr parse_primary() {
    if (at_symbol("(")) {
      bump();
      OperatorExpr e = parse_expr();
      expect_symbol(")");
      return e;
    }
    if (cur.kind == Token::Number) {
      OperatorExpr e = node(ExprKind::Number, cur);
      e.value = Rational(cur.text);
      bump();
      return e;
    }
    if (cur.kind == Token::Ident) {
      std::string id = lowered(cur.text);
      OperatorExpr e = node(ExprKind::Number, cur);
      if (id == "x" || id == "y") {
        e.kind = ExprKind::Variable;
        e.var = id == "x" ? Var::x : Var::y;
      } else if (id == "dx" || id == "dy") {
        e.kind = ExprKind::Derivation;
        e.var = id == "dx" ? Var::x : Var::y;
      } else {
        throw ParseError("unknown identifier '" + cur.text + "'", cur.line, cur.column);
      }
      bump();
      return e;
    }
    throw ParseError("expected a number, x, y, Dx, Dy, or '('", cur.line, cur.column);
  }
};

}  // namespace

OperatorExpr parse_expression(const std::string& text) {
  Parser p(text);
  OperatorExpr e = p.parse_expr();
  if (p.cur.kind != Token::End)
    throw ParseError("unexpected trailing input", p.cur.line, p.cur.column);
  return e;
}

DiffOp evaluate(const OperatorExpr& e) {
  switch (e.kind) {
    case ExprKind::Number:
      return DiffOp(RatFunc(Poly(e.value)));
    case ExprKind::Variable:
      return DiffOp(RatFunc(Poly::variable(e.var)));
    case ExprKind::Derivation:
      return e.var == Var::x ? DiffOp::dx() : DiffOp::dy();
    case ExprKind::Negate:
      return DiffOp(RatFunc(-1)) * evaluate(e.args[0]);
    case ExprKind::Add:
      return evaluate(e.args[0]) + evaluate(e.args[1]);
    case ExprKind::Subtract:
      return evaluate(e.args[0]) - evaluate(e.args[1]);
    case ExprKind::Multiply:
      return evaluate(e.args[0]) * evaluate(e.args[1]);
    case ExprKind::Divide: {
      DiffOp den = evaluate(e.args[1]);
      if (den.is_zero()) throw MathError("division by zero");
      if (den.order() > 0)
        throw ParseError("division by an operator of positive order", e.line, e.column);
      RatFunc f = den.coeff(Exp2{0, 0});
      return evaluate(e.args[0]) * DiffOp(f.inverse());
    }
    case ExprKind::Power:
      return evaluate(e.args[0]).pow(e.exponent);
  }
  throw MathError("corrupt expression tree");
}

DiffOp parse_operator(const std::string& text) { return evaluate(parse_expression(text)); }

namespace {

bool is_negative(const Rational& r) { return r.sign() < 0; }

bool is_negative(const RatFunc& f) {
  return !f.is_zero() && f.num().leading_coeff().sign() < 0;
}

// Monomial like "x^2*y"; empty for the constant term.
std::string poly_monomial(Exp2 e) {
  std::string out;
  auto emit = [&](const char* name, int k) {
    if (k == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (k > 1) out += "^" + std::to_string(k);
  };
  emit("x", e.x);
  emit("y", e.y);
  return out;
}

// True when the polynomial prints as a single power of one variable, which
// is safe unparenthesized after '/'.
bool bare_denominator(const Poly& p) {
  if (p.terms().size() != 1) return false;
  const auto& [e, c] = *p.terms().begin();
  if (!c.is_one()) return false;
  return e.x == 0 || e.y == 0;
}

}  // namespace

std::string to_string(const Rational& r) { return r.str(); }

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Rational c = it->second;
    if (out.empty()) {
      if (is_negative(c)) out += "-";
    } else {
      out += is_negative(c) ? " - " : " + ";
    }
    if (is_negative(c)) c = -c;
    std::string mono = poly_monomial(it->first);
    if (mono.empty())
      out += c.str();
    else if (c.is_one())
      out += mono;
    else
      out += c.str() + "*" + mono;
  }
  return out;
}

std::string to_string(const RatFunc& f) {
  std::string num = to_string(f.num());
  if (f.is_polynomial()) return num;
  if (f.num().terms().size() > 1) num = "(" + num + ")";
  std::string den = to_string(f.den());
  if (!bare_denominator(f.den())) den = "(" + den + ")";
  return num + "/" + den;
}

namespace {

// Shared by the operator, form, and z-polynomial printers: signed term list
// with parenthesized coefficients and the factor 1 suppressed.
void append_term(std::string& out, const RatFunc& coeff, const std::string& mono) {
  RatFunc c = coeff;
  if (out.empty()) {
    if (is_negative(c)) out += "-";
  } else {
    out += is_negative(c) ? " - " : " + ";
  }
  if (is_negative(c)) c = -c;
  if (mono.empty())
    out += "(" + to_string(c) + ")";
  else if (c.is_one())
    out += mono;
  else
    out += "(" + to_string(c) + ")*" + mono;
}

std::string power_string(const char* name, int k) {
  if (k == 0) return "";
  std::string s = name;
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

std::string join_powers(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

}  // namespace

std::string print_canonical(const DiffOp& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    append_term(out, it->second,
                join_powers(power_string("Dx", it->first.x), power_string("Dy", it->first.y)));
  return out;
}

std::string to_string(const BinaryForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    RatFunc c = f.coeff(i);
    if (c.is_zero()) continue;
    append_term(out, c,
                join_powers(power_string("v", i), power_string("w", f.degree() - i)));
  }
  return out;
}

std::string to_string_in_z(const UniPoly<RatFunc>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    RatFunc c = p.coeff(k);
    if (c.is_zero()) continue;
    append_term(out, c, power_string("z", k));
  }
  return out;
}

}  // namespace lpdo
