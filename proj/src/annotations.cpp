#include "ringopt/annotations.hpp"

#include <cctype>
#include <set>

namespace ringopt {

namespace {

// ---------------------------------------------------------------- lexer

struct Token {
  enum Kind { Ident, Number, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && (s[j] == '.' || s[j] == 'e' || s[j] == 'E'))
        throw Error(Errc::NonPolynomial, "fractional literal", i);
      out.push_back({Token::Number, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    switch (c) {
      case '+': out.push_back({Token::Plus, "+", i}); break;
      case '-': out.push_back({Token::Minus, "-", i}); break;
      case '*': out.push_back({Token::Star, "*", i}); break;
      case '^': out.push_back({Token::Caret, "^", i}); break;
      case '(': out.push_back({Token::LParen, "(", i}); break;
      case ')': out.push_back({Token::RParen, ")", i}); break;
      case '/':
      case '%':
        throw Error(Errc::NonPolynomial, "operator '" + std::string(1, c) +
                                             "' is not a ring operation", i);
      default:
        throw Error(Errc::SyntaxError,
                    "unexpected character '" + std::string(1, c) + "'", i);
    }
    ++i;
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

// --------------------------------------------------------------- parser

class ExprParser {
public:
  ExprParser(std::vector<Token> toks, std::string variable)
      : toks_(std::move(toks)), variable_(std::move(variable)) {}

  ExprPtr parse() {
    if (toks_.front().kind == Token::End)
      throw Error(Errc::EmptyExpression, "empty expression");
    ExprPtr e = parse_expr(0);
    if (peek().kind != Token::End)
      throw Error(Errc::SyntaxError, "trailing input after expression", peek().pos);
    return e;
  }

private:
  static constexpr int kAddPrec = 10;
  static constexpr int kMulPrec = 20;
  static constexpr int kUnaryPrec = 30;
  static constexpr int kPowPrec = 40;

  const Token& peek() const { return toks_[idx_]; }
  Token next() { return toks_[idx_++]; }

  ExprPtr parse_expr(int min_prec) {
    ExprPtr lhs = parse_prefix();
    for (;;) {
      const Token& t = peek();
      if (t.kind == Token::Plus && kAddPrec >= min_prec) {
        next();
        lhs = Expr::sum(lhs, parse_expr(kAddPrec + 1));
      } else if (t.kind == Token::Minus && kAddPrec >= min_prec) {
        next();
        lhs = Expr::sum(lhs, Expr::negation(parse_expr(kAddPrec + 1)));
      } else if (t.kind == Token::Star && kMulPrec >= min_prec) {
        next();
        lhs = Expr::product(lhs, parse_expr(kMulPrec + 1));
      } else if (t.kind == Token::Caret && kPowPrec >= min_prec) {
        std::size_t at = next().pos;
        // right associative
        ExprPtr exp = parse_expr(kPowPrec);
        lhs = Expr::power(lhs, fold_exponent(exp, at));
      } else {
        break;
      }
    }
    return lhs;
  }

  ExprPtr parse_prefix() {
    Token t = next();
    switch (t.kind) {
      case Token::Ident:
        return t.text == variable_ ? Expr::variable(t.text)
                                   : Expr::coefficient(t.text);
      case Token::Number:
        return Expr::literal(BigInt(t.text));
      case Token::Minus:
        return Expr::negation(parse_expr(kUnaryPrec));
      case Token::LParen: {
        if (peek().kind == Token::RParen)
          throw Error(Errc::EmptyExpression, "empty parentheses", peek().pos);
        ExprPtr e = parse_expr(0);
        if (peek().kind != Token::RParen)
          throw Error(Errc::SyntaxError, "expected ')'", peek().pos);
        next();
        return e;
      }
      default:
        throw Error(Errc::SyntaxError, "unexpected token '" + t.text + "'", t.pos);
    }
  }

  // The exponent subtree must fold to a non-negative integer constant.
  unsigned fold_exponent(const ExprPtr& e, std::size_t at) {
    BigInt v = fold_const(e, at);
    if (v < 0) throw Error(Errc::NonPolynomial, "negative exponent", at);
    if (v > 4096) throw Error(Errc::NonPolynomial, "exponent too large", at);
    return v.convert_to<unsigned>();
  }

  BigInt fold_const(const ExprPtr& e, std::size_t at) {
    switch (e->kind) {
      case ExprKind::Literal: return e->value;
      case ExprKind::Variable:
        throw Error(Errc::VariableInExponent, "variable in exponent", at);
      case ExprKind::Coefficient:
        throw Error(Errc::NonPolynomial, "non-constant exponent", at);
      case ExprKind::Sum: return fold_const(e->lhs, at) + fold_const(e->rhs, at);
      case ExprKind::Product: return fold_const(e->lhs, at) * fold_const(e->rhs, at);
      case ExprKind::Negation: return -fold_const(e->lhs, at);
      case ExprKind::Power: {
        BigInt b = fold_const(e->lhs, at), r = 1;
        for (unsigned i = 0; i < e->exponent; ++i) r *= b;
        return r;
      }
    }
    throw Error(Errc::SyntaxError, "bad exponent expression", at);
  }

  std::vector<Token> toks_;
  std::string variable_;
  std::size_t idx_ = 0;
};

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool is_operator_token(const std::string& t) {
  static const std::set<std::string> ops = {"+", "-", "*", "&", "|", "^", "~", "."};
  return ops.count(t) != 0;
}

bool is_integer_token(const std::string& t) {
  if (t.empty()) return false;
  std::size_t i = t[0] == '-' ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

// Text after `#pragma <name>`, or empty if the line is not that pragma.
std::string pragma_rest(const std::string& line, const std::string& name, bool& matched) {
  matched = false;
  std::size_t i = line.find_first_not_of(" \t");
  if (i == std::string::npos || line.compare(i, 7, "#pragma") != 0) return {};
  i += 7;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  if (line.compare(i, name.size(), name) != 0) return {};
  i += name.size();
  if (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
      line[i] != '(')
    return {};
  matched = true;
  return trim(line.substr(i));
}

}  // namespace

ExprPtr parse_expression(const std::string& text, const std::string& variable) {
  return ExprParser(lex(text), variable).parse();
}

RingSpec parse_ring_prop(const std::string& line) {
  bool matched = false;
  std::string rest = pragma_rest(line, "ring_prop", matched);
  if (!matched)
    throw Error(Errc::MalformedRingProp, "not a ring_prop pragma");
  if (rest.empty() || rest[0] != '(')
    throw Error(Errc::MalformedRingProp, "expected '(' after ring_prop");
  std::size_t close = rest.find(')');
  if (close == std::string::npos)
    throw Error(Errc::MalformedRingProp, "unbalanced parentheses in ring_prop");

  std::vector<std::string> toks;
  std::size_t start = 1;
  for (std::size_t i = 1; i <= close; ++i) {
    if (rest[i] == ',' || rest[i] == ')') {
      toks.push_back(trim(rest.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (toks.size() != 5)
    throw Error(Errc::MalformedRingProp,
                "ring_prop takes exactly 5 tokens, got " + std::to_string(toks.size()));

  RingSpec ring;
  ring.add_op = toks[0];
  ring.add_identity = toks[1];
  ring.add_inverse = toks[2];
  ring.mul_op = toks[3];
  ring.mul_identity = toks[4];
  ring.carrier = trim(rest.substr(close + 1));

  if (!is_operator_token(ring.add_op) || !is_operator_token(ring.add_inverse) ||
      !is_operator_token(ring.mul_op))
    throw Error(Errc::MalformedRingProp, "operator positions must hold operator symbols");
  if (!is_integer_token(ring.add_identity) || !is_integer_token(ring.mul_identity))
    throw Error(Errc::MalformedRingProp, "identity positions must hold integer literals");
  if (ring.add_op == ring.mul_op)
    throw Error(Errc::MalformedRingProp, "addition and multiplication operators coincide");
  if (ring.add_identity == ring.mul_identity)
    throw Error(Errc::MalformedRingProp, "additive and multiplicative identities coincide");
  if (ring.carrier.empty())
    throw Error(Errc::MalformedRingProp, "missing carrier type");
  carrier_width(ring.carrier);  // throws UnsupportedCarrier
  return ring;
}

ExprPtr parse_math_exp(const std::string& line, const std::string& variable) {
  bool matched = false;
  std::string rest = pragma_rest(line, "math_exp", matched);
  if (!matched) throw Error(Errc::SyntaxError, "not a math_exp pragma");
  if (rest.empty()) throw Error(Errc::EmptyExpression, "math_exp has no expression");
  return parse_expression(rest, variable);
}

std::string to_pragma(const RingSpec& ring) {
  return "#pragma ring_prop (" + ring.add_op + ", " + ring.add_identity + ", " +
         ring.add_inverse + ", " + ring.mul_op + ", " + ring.mul_identity + ") " +
         ring.carrier;
}

std::string to_pragma(const ExprPtr& math) {
  return "#pragma math_exp (" + to_string(math) + ")";
}

// ---------------------------------------------------------- source scan

namespace {

enum class Region : char { Code, Comment, String };

// Per-byte classification so brace matching and pragma detection can skip
// comments and string/char literals.
std::vector<Region> classify(const std::string& t) {
  std::vector<Region> r(t.size(), Region::Code);
  enum { Code, Line, Block, Str, Chr } st = Code;
  for (std::size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    switch (st) {
      case Code:
        if (c == '/' && i + 1 < t.size() && t[i + 1] == '/') {
          st = Line;
          r[i] = Region::Comment;
        } else if (c == '/' && i + 1 < t.size() && t[i + 1] == '*') {
          st = Block;
          r[i] = Region::Comment;
        } else if (c == '"') {
          st = Str;
          r[i] = Region::String;
        } else if (c == '\'') {
          st = Chr;
          r[i] = Region::String;
        }
        break;
      case Line:
        if (c == '\n')
          st = Code;
        else
          r[i] = Region::Comment;
        break;
      case Block:
        r[i] = Region::Comment;
        if (c == '/' && i > 0 && t[i - 1] == '*') st = Code;
        break;
      case Str:
      case Chr:
        r[i] = Region::String;
        if (c == '\\') {
          if (i + 1 < t.size()) r[++i] = Region::String;
        } else if ((st == Str && c == '"') || (st == Chr && c == '\'')) {
          st = Code;
        }
        break;
    }
  }
  return r;
}

struct PragmaLine {
  enum Type { RingProp, MathExp } type;
  std::size_t begin, end;  // byte range of the line (excl. newline)
  std::string text;
};

struct Scanner {
  const std::string& t;
  const std::vector<Region> region;

  explicit Scanner(const std::string& text) : t(text), region(classify(text)) {}

  bool in_code(std::size_t i) const { return region[i] == Region::Code; }

  std::size_t skip_ws_comments(std::size_t i) const {
    while (i < t.size()) {
      if (region[i] == Region::Comment ||
          (in_code(i) && std::isspace(static_cast<unsigned char>(t[i]))))
        ++i;
      else
        break;
    }
    return i;
  }

  std::size_t line_end(std::size_t i) const {
    while (i < t.size() && t[i] != '\n') ++i;
    return i;
  }
};

std::vector<std::string> ident_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back(s.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace

std::vector<AnnotatedFunction> scan_source(const std::string& file_text) {
  Scanner sc(file_text);
  const std::string& t = file_text;

  // Locate ring_prop / math_exp pragma lines outside comments and strings.
  std::vector<PragmaLine> pragmas;
  std::size_t pos = 0;
  while (pos < t.size()) {
    std::size_t eol = sc.line_end(pos);
    std::size_t first = pos;
    while (first < eol && std::isspace(static_cast<unsigned char>(t[first]))) ++first;
    if (first < eol && t[first] == '#' && sc.in_code(first)) {
      std::string line = t.substr(pos, eol - pos);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      bool m = false;
      pragma_rest(line, "ring_prop", m);
      if (m) {
        pragmas.push_back({PragmaLine::RingProp, pos, eol, line});
      } else {
        pragma_rest(line, "math_exp", m);
        if (m) pragmas.push_back({PragmaLine::MathExp, pos, eol, line});
      }
    }
    pos = eol + 1;
  }

  std::vector<AnnotatedFunction> result;
  std::size_t i = 0;
  while (i < pragmas.size()) {
    // Group consecutive pragma lines with only whitespace/comments between.
    std::size_t g = i + 1;
    while (g < pragmas.size() &&
           sc.skip_ws_comments(pragmas[g - 1].end) >= pragmas[g].begin)
      ++g;

    const PragmaLine* ring_line = nullptr;
    const PragmaLine* math_line = nullptr;
    for (std::size_t k = i; k < g; ++k) {
      const PragmaLine*& slot =
          pragmas[k].type == PragmaLine::RingProp ? ring_line : math_line;
      if (slot)
        throw Error(Errc::DuplicatePragma,
                    "duplicate pragma before one function", pragmas[k].begin);
      slot = &pragmas[k];
    }
    if (!ring_line || !math_line)
      throw Error(Errc::OrphanPragma,
                  std::string("pragma pair incomplete: missing ") +
                      (ring_line ? "math_exp" : "ring_prop"),
                  pragmas[i].begin);

    // Function header: tokens up to '(' then parameter list then '{'.
    std::size_t p = sc.skip_ws_comments(pragmas[g - 1].end);
    std::vector<std::string> head;
    while (p < t.size()) {
      p = sc.skip_ws_comments(p);
      if (p < t.size() &&
          (std::isalpha(static_cast<unsigned char>(t[p])) || t[p] == '_')) {
        std::size_t j = p;
        while (j < t.size() &&
               (std::isalnum(static_cast<unsigned char>(t[j])) || t[j] == '_'))
          ++j;
        head.push_back(t.substr(p, j - p));
        p = j;
      } else {
        break;
      }
    }
    if (p >= t.size() || t[p] != '(' || head.size() < 2)
      throw Error(Errc::OrphanPragma,
                  "pragmas not followed by a function definition", pragmas[i].begin);

    AnnotatedFunction fn;
    fn.function_name = head.back();
    fn.return_type = head[0];
    for (std::size_t k = 1; k + 1 < head.size(); ++k) fn.return_type += " " + head[k];

    // Parameter list up to the matching ')'.
    std::size_t close = p + 1;
    int depth = 1;
    std::size_t arg_start = p + 1;
    std::vector<std::string> arg_texts;
    for (; close < t.size() && depth > 0; ++close) {
      if (!sc.in_code(close)) continue;
      if (t[close] == '(') ++depth;
      else if (t[close] == ')') {
        if (--depth == 0) arg_texts.push_back(t.substr(arg_start, close - arg_start));
      } else if (t[close] == ',' && depth == 1) {
        arg_texts.push_back(t.substr(arg_start, close - arg_start));
        arg_start = close + 1;
      }
    }
    if (depth != 0)
      throw Error(Errc::OrphanPragma, "unterminated parameter list", p);
    for (const auto& a : arg_texts) {
      auto toks = ident_tokens(a);
      if (toks.empty()) continue;  // empty list
      if (toks.size() == 1 && toks[0] == "void") continue;
      if (toks.size() < 2)
        throw Error(Errc::OrphanPragma, "unparsable parameter '" + trim(a) + "'", p);
      Parameter param;
      param.name = toks.back();
      param.type = toks[0];
      for (std::size_t k = 1; k + 1 < toks.size(); ++k) param.type += " " + toks[k];
      fn.parameters.push_back(std::move(param));
    }

    std::size_t brace = sc.skip_ws_comments(close);
    if (brace >= t.size() || t[brace] != '{')
      throw Error(Errc::OrphanPragma,
                  "pragmas bound to a declaration, not a definition", pragmas[i].begin);

    // Body span by brace matching (strings and comments masked out).
    depth = 0;
    std::size_t end = brace;
    for (; end < t.size(); ++end) {
      if (!sc.in_code(end)) continue;
      if (t[end] == '{') ++depth;
      else if (t[end] == '}' && --depth == 0) break;
    }
    if (end >= t.size())
      throw Error(Errc::UnbalancedBraces, "unbalanced braces in function body", brace);
    fn.body_begin = brace + 1;
    fn.body_end = end;

    // Designate the polynomial variable among the parameters.
    bool m = false;
    fn.math_text = pragma_rest(math_line->text, "math_exp", m);
    if (fn.parameters.empty())
      throw Error(Errc::AmbiguousVariable,
                  "annotated function has no parameters", pragmas[i].begin);
    if (fn.parameters.size() == 1) {
      fn.variable = fn.parameters[0].name;
    } else {
      auto idents = ident_tokens(fn.math_text);
      std::set<std::string> used(idents.begin(), idents.end());
      std::vector<std::string> hits;
      for (const auto& par : fn.parameters)
        if (used.count(par.name)) hits.push_back(par.name);
      if (hits.size() != 1)
        throw Error(Errc::AmbiguousVariable,
                    hits.empty() ? "no parameter name appears in math_exp"
                                 : "several parameter names appear in math_exp",
                    math_line->begin);
      fn.variable = hits[0];
    }

    fn.ring = parse_ring_prop(ring_line->text);
    fn.math = parse_math_exp(math_line->text, fn.variable);
    result.push_back(std::move(fn));
    i = g;
  }
  return result;
}

}  // namespace ringopt
