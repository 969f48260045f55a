#pragma once
// S-expression input language for algebra elements:
//   element := scalar | gen | (+ e ...) | (smul scalar e) | (brk e e)
//            | (mul e ...) | (exp e) | (log e) | (bch e e ...)
//   scalar  := integer | int/int | ?name
// Generators are looked up by name in the alphabet of the evaluation
// context.  Parsing reports positioned syntax errors; printing is canonical
// and round-trips.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dk/lie.hpp"
#include "dk/scalar.hpp"
#include "dk/tensor.hpp"

namespace dk {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Scalar, Gen, Sum, Smul, Brk, Mul, Exp, Log, Bch };
  Kind kind;
  Scalar value;            // Kind::Scalar, and the coefficient of Smul
  std::string name;        // Kind::Gen
  std::vector<ExprPtr> args;
};

namespace expr_detail {

struct Token {
  std::string text;  // "(", ")" or a symbol
  int line = 1, col = 1;
};

inline std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (ch == '(' || ch == ')') {
      out.push_back({std::string(1, ch), line, col});
      ++col;
      ++i;
      continue;
    }
    Token t{"", line, col};
    while (i < text.size() && text[i] != '(' && text[i] != ')' &&
           text[i] != ' ' && text[i] != '\t' && text[i] != '\n' &&
           text[i] != '\r') {
      t.text += text[i];
      ++i;
      ++col;
    }
    out.push_back(std::move(t));
  }
  return out;
}

inline Error parseError(const std::string& msg, int line, int col) {
  return Error("syntax error at " + std::to_string(line) + ":" +
               std::to_string(col) + ": " + msg);
}

inline bool isInteger(const std::string& s) {
  size_t i = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

// scalar := integer | int/int | ?name ; returns false if not scalar-shaped.
inline bool parseScalar(const std::string& s, Scalar* out) {
  if (!s.empty() && s[0] == '?') {
    if (s.size() == 1) throw Error("empty indeterminate name '?'");
    *out = Scalar::var(s.substr(1));
    return true;
  }
  std::string body = (s.size() > 1 && s[0] == '+') ? s.substr(1) : s;
  size_t slash = body.find('/');
  if (slash == std::string::npos) {
    if (!isInteger(body)) return false;
    *out = Scalar(Rat(body));
    return true;
  }
  std::string num = body.substr(0, slash), den = body.substr(slash + 1);
  if (!isInteger(num) || !isInteger(den)) return false;
  Rat r(body);
  if (r.get_den() == 0) throw Error("zero denominator in scalar " + s);
  r.canonicalize();  // mpq_class does not canonicalize "p/q" input
  *out = Scalar(r);
  return true;
}

struct Parser {
  const std::vector<Token>& toks;
  size_t pos = 0;

  const Token& peek() const {
    if (pos >= toks.size()) {
      static Token eof{"<end of input>", 0, 0};
      return eof;
    }
    return toks[pos];
  }

  ExprPtr element() {
    if (pos >= toks.size()) throw Error("syntax error: unexpected end of input");
    Token t = toks[pos++];
    if (t.text == ")") throw parseError("unexpected ')'", t.line, t.col);
    if (t.text != "(") return atom(t);

    if (pos >= toks.size())
      throw parseError("unterminated '('", t.line, t.col);
    Token op = toks[pos++];
    auto node = std::make_shared<Expr>();
    std::size_t minA = 0, maxA = 0;
    if (op.text == "+") {
      node->kind = Expr::Kind::Sum;
      minA = 1;
      maxA = SIZE_MAX;
    } else if (op.text == "smul") {
      node->kind = Expr::Kind::Smul;
      if (pos >= toks.size() || toks[pos].text == "(" || toks[pos].text == ")")
        throw parseError("smul expects a scalar", op.line, op.col);
      if (!parseScalar(toks[pos].text, &node->value))
        throw parseError("bad scalar '" + toks[pos].text + "'", toks[pos].line,
                         toks[pos].col);
      ++pos;
      minA = maxA = 1;
    } else if (op.text == "brk") {
      node->kind = Expr::Kind::Brk;
      minA = maxA = 2;
    } else if (op.text == "mul") {
      node->kind = Expr::Kind::Mul;
      minA = 1;
      maxA = SIZE_MAX;
    } else if (op.text == "exp") {
      node->kind = Expr::Kind::Exp;
      minA = maxA = 1;
    } else if (op.text == "log") {
      node->kind = Expr::Kind::Log;
      minA = maxA = 1;
    } else if (op.text == "bch") {
      node->kind = Expr::Kind::Bch;
      minA = 2;
      maxA = SIZE_MAX;
    } else {
      throw parseError("unknown operator '" + op.text + "'", op.line, op.col);
    }
    while (pos < toks.size() && toks[pos].text != ")")
      node->args.push_back(element());
    if (pos >= toks.size()) throw parseError("unterminated '('", t.line, t.col);
    ++pos;  // ')'
    if (node->args.size() < minA || node->args.size() > maxA)
      throw parseError("operator '" + op.text + "' got " +
                           std::to_string(node->args.size()) + " argument(s)",
                       op.line, op.col);
    return node;
  }

  ExprPtr atom(const Token& t) {
    auto node = std::make_shared<Expr>();
    Scalar s;
    if (parseScalar(t.text, &s)) {
      node->kind = Expr::Kind::Scalar;
      node->value = s;
    } else {
      node->kind = Expr::Kind::Gen;
      node->name = t.text;
    }
    return node;
  }
};

}  // namespace expr_detail

inline ExprPtr parseExpr(const std::string& text) {
  auto toks = expr_detail::lex(text);
  expr_detail::Parser p{toks};
  ExprPtr e = p.element();
  if (p.pos != toks.size()) {
    const auto& t = toks[p.pos];
    throw expr_detail::parseError("trailing input '" + t.text + "'", t.line,
                                  t.col);
  }
  return e;
}

inline std::string scalarToken(const Scalar& s) {
  if (s.isConstant()) return s.rat().get_str();
  if (s.terms().size() == 1 && s.constantTerm() == 0) {
    const auto& [m, c] = *s.terms().begin();
    if (m.size() == 1 && m[0].second == 1 && c == 1)
      return "?" + varName(m[0].first);
  }
  throw Error("scalar is not a single token: " + s.toString());
}

inline std::string printExpr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Scalar:
      return scalarToken(e.value);
    case Expr::Kind::Gen:
      return e.name;
    default:
      break;
  }
  std::string op;
  switch (e.kind) {
    case Expr::Kind::Sum: op = "+"; break;
    case Expr::Kind::Smul: op = "smul " + scalarToken(e.value); break;
    case Expr::Kind::Brk: op = "brk"; break;
    case Expr::Kind::Mul: op = "mul"; break;
    case Expr::Kind::Exp: op = "exp"; break;
    case Expr::Kind::Log: op = "log"; break;
    case Expr::Kind::Bch: op = "bch"; break;
    default: throw Error("corrupt expression node");
  }
  std::string out = "(" + op;
  for (const auto& a : e.args) out += " " + printExpr(*a);
  return out + ")";
}

// Evaluation in the truncated tensor algebra over the given alphabet, with
// polynomial scalars (plain rationals are the constant polynomials).
inline Tensor<Scalar> evalTensor(const Expr& e, const AlphabetPtr& alpha,
                                 int D) {
  auto evalAll = [&](const std::vector<ExprPtr>& args) {
    std::vector<Tensor<Scalar>> r;
    r.reserve(args.size());
    for (const auto& a : args) r.push_back(evalTensor(*a, alpha, D));
    return r;
  };
  switch (e.kind) {
    case Expr::Kind::Scalar:
      return Tensor<Scalar>::constant(alpha, D, e.value);
    case Expr::Kind::Gen: {
      int id = alpha->find(e.name);
      if (id < 0) throw Error("unknown generator '" + e.name + "'");
      return Tensor<Scalar>::gen(alpha, D, id);
    }
    case Expr::Kind::Sum: {
      Tensor<Scalar> r(alpha, D);
      for (const auto& a : e.args) r += evalTensor(*a, alpha, D);
      return r;
    }
    case Expr::Kind::Smul:
      return evalTensor(*e.args[0], alpha, D).scaled(e.value);
    case Expr::Kind::Brk: {
      Tensor<Scalar> a = evalTensor(*e.args[0], alpha, D);
      Tensor<Scalar> b = evalTensor(*e.args[1], alpha, D);
      return a * b - b * a;
    }
    case Expr::Kind::Mul: {
      auto args = evalAll(e.args);
      Tensor<Scalar> r = args[0];
      for (size_t i = 1; i < args.size(); ++i) r = r * args[i];
      return r;
    }
    case Expr::Kind::Exp:
      return evalTensor(*e.args[0], alpha, D).exp();
    case Expr::Kind::Log:
      return evalTensor(*e.args[0], alpha, D).log();
    case Expr::Kind::Bch: {
      auto args = evalAll(e.args);
      Tensor<Scalar> p = Tensor<Scalar>::constant(alpha, D, Scalar(1));
      for (const auto& a : args) p = p * a.exp();
      return p.log();
    }
  }
  throw Error("corrupt expression node");
}

// Evaluation as a Lie element (validated via the Lyndon elimination).
inline Lie<Scalar> evalLie(const Expr& e, const AlphabetPtr& alpha, int D) {
  return Lie<Scalar>::fromTensor(evalTensor(e, alpha, D));
}

// Strip polynomial scalars, for the verbs that require plain rationals.
template <class V>
auto toRational(const V& v) {
  if constexpr (std::is_same_v<V, Tensor<Scalar>>) {
    Tensor<Rat> r(v.alphabet(), v.degree());
    for (const auto& [w, c] : v.terms()) r.add(w, c.rat());
    return r;
  } else {
    Lie<Rat> r(v.alphabet(), v.degree());
    for (const auto& [w, c] : v.terms()) r.add(w, c.rat());
    return r;
  }
}

}  // namespace dk
