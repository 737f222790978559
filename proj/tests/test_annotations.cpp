#include <doctest.h>

#include <functional>

#include "helpers.hpp"

using namespace ringopt;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::SyntaxError;
}

const char* kListing6 =
    "#define A0 1\n"
    "#define A1 2\n"
    "\n"
    "#pragma ring_prop (+, 0, -, *, 1) int\n"
    "#pragma math_exp (A0 + A1*x + A2*x^2 + A3*x^3 + A4*x^4)\n"
    "int polyCalc(int x) {\n"
    "  int res;\n"
    "\n"
    "  res = A4*x*x*x*x + A3*x*x*x + A2*x*x + A1*x + A0;\n"
    "\n"
    "  return res;\n"
    "}\n";

}  // namespace

TEST_CASE("parse_ring_prop accepts the annotated form") {
  RingSpec r = parse_ring_prop("#pragma ring_prop (+, 0, -, *, 1) int");
  CHECK(r.add_op == "+");
  CHECK(r.add_identity == "0");
  CHECK(r.add_inverse == "-");
  CHECK(r.mul_op == "*");
  CHECK(r.mul_identity == "1");
  CHECK(r.carrier == "int");
}

TEST_CASE("parse_ring_prop rejections") {
  CHECK(code_of([] { parse_ring_prop("#pragma ring_prop (+, 0, -, *) int"); }) ==
        Errc::MalformedRingProp);
  CHECK(code_of([] { parse_ring_prop("#pragma ring_prop (+, 0, -, *, 1) float"); }) ==
        Errc::UnsupportedCarrier);
  CHECK(code_of([] { parse_ring_prop("#pragma ring_prop (+, 0, -, *, 1"); }) ==
        Errc::MalformedRingProp);
  CHECK(code_of([] { parse_ring_prop("#pragma ring_prop (+, 0, -, +, 1) int"); }) ==
        Errc::MalformedRingProp);
  CHECK(code_of([] { parse_ring_prop("#pragma ring_prop (+, 0, -, *, 0) int"); }) ==
        Errc::MalformedRingProp);
  CHECK(code_of([] { parse_ring_prop("#pragma ring_prop (+, 0, -, *, 1)"); }) ==
        Errc::MalformedRingProp);
}

TEST_CASE("parse_ring_prop accepts sized integer carriers") {
  CHECK(parse_ring_prop("#pragma ring_prop (+, 0, -, *, 1) uint32_t").carrier ==
        "uint32_t");
  CHECK(parse_ring_prop("#pragma ring_prop (+, 0, -, *, 1) long").carrier == "long");
}

TEST_CASE("parse_math_exp: five-term sum tree") {
  ExprPtr e = parse_math_exp(
      "#pragma math_exp (A0 + A1*x + A2*x^2 + A3*x^3 + A4*x^4)", "x");
  // Left-associated sum of 5 terms.
  int terms = 1;
  ExprPtr cur = e;
  while (cur->kind == ExprKind::Sum) {
    ++terms;
    cur = cur->lhs;
  }
  CHECK(terms == 5);
  CHECK(cur->kind == ExprKind::Coefficient);
  CHECK(cur->name == "A0");
}

TEST_CASE("parse_math_exp: single variable") {
  ExprPtr e = parse_math_exp("#pragma math_exp (x)", "x");
  CHECK(e->kind == ExprKind::Variable);
  CHECK(e->name == "x");
}

TEST_CASE("parse_math_exp: binary minus becomes negation") {
  ExprPtr e = parse_math_exp("#pragma math_exp (A1*x^2 - A0)", "x");
  REQUIRE(e->kind == ExprKind::Sum);
  REQUIRE(e->lhs->kind == ExprKind::Product);
  CHECK(e->lhs->lhs->name == "A1");
  CHECK(e->lhs->rhs->kind == ExprKind::Power);
  CHECK(e->lhs->rhs->exponent == 2);
  REQUIRE(e->rhs->kind == ExprKind::Negation);
  CHECK(e->rhs->lhs->name == "A0");
}

TEST_CASE("expression grammar precedence") {
  // ^ binds tighter than unary minus
  ExprPtr e = parse_expression("-x^2", "x");
  REQUIRE(e->kind == ExprKind::Negation);
  CHECK(e->lhs->kind == ExprKind::Power);
  // ^ is right associative: x^2^3 = x^(2^3)
  CHECK(parse_expression("x^2^3", "x")->exponent == 8);
  // * over +
  ExprPtr f = parse_expression("A0 + A1*x", "x");
  REQUIRE(f->kind == ExprKind::Sum);
  CHECK(f->rhs->kind == ExprKind::Product);
}

TEST_CASE("syntax errors carry byte offsets") {
  try {
    parse_expression("A0 + $", "x");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SyntaxError);
    CHECK(e.offset() == 5);
  }
}

TEST_CASE("scan_source: annotated quartic file") {
  auto fns = scan_source(kListing6);
  REQUIRE(fns.size() == 1);
  const AnnotatedFunction& fn = fns[0];
  CHECK(fn.function_name == "polyCalc");
  CHECK(fn.return_type == "int");
  REQUIRE(fn.parameters.size() == 1);
  CHECK(fn.parameters[0].type == "int");
  CHECK(fn.parameters[0].name == "x");
  CHECK(fn.variable == "x");
  CHECK(fn.ring.carrier == "int");
  // body_span indexes the original bytes exactly
  std::string body(kListing6 + fn.body_begin, kListing6 + fn.body_end);
  CHECK(body.find("res = A4*x*x*x*x") != std::string::npos);
  CHECK(body.find('{') == std::string::npos);
}

TEST_CASE("scan_source: empty file") { CHECK(scan_source("").empty()); }

TEST_CASE("scan_source: file without pragmas") {
  CHECK(scan_source("int f(int x) { return x; }\n").empty());
}

TEST_CASE("scan_source: orphan and duplicate pragmas") {
  CHECK(code_of([] {
          scan_source("#pragma math_exp (x)\nint f(int x) { return x; }\n");
        }) == Errc::OrphanPragma);
  CHECK(code_of([] {
          scan_source("#pragma ring_prop (+, 0, -, *, 1) int\n"
                      "#pragma math_exp (x)\n"
                      "int g;\n");
        }) == Errc::OrphanPragma);
  CHECK(code_of([] {
          scan_source("#pragma ring_prop (+, 0, -, *, 1) int\n"
                      "#pragma ring_prop (+, 0, -, *, 1) int\n"
                      "#pragma math_exp (x)\n"
                      "int f(int x) { return x; }\n");
        }) == Errc::DuplicatePragma);
}

TEST_CASE("scan_source: unbalanced braces") {
  CHECK(code_of([] {
          scan_source("#pragma ring_prop (+, 0, -, *, 1) int\n"
                      "#pragma math_exp (x)\n"
                      "int f(int x) { if (x) { return x; \n");
        }) == Errc::UnbalancedBraces);
}

TEST_CASE("scan_source ignores braces in strings and comments") {
  std::string src =
      "#pragma ring_prop (+, 0, -, *, 1) int\n"
      "#pragma math_exp (x)\n"
      "int f(int x) {\n"
      "  const char* s = \"}{\"; // }\n"
      "  /* } */\n"
      "  return x;\n"
      "}\n";
  auto fns = scan_source(src);
  REQUIRE(fns.size() == 1);
  CHECK(src.substr(fns[0].body_end) == "}\n");
}

TEST_CASE("scan_source handles CRLF") {
  std::string src =
      "#pragma ring_prop (+, 0, -, *, 1) int\r\n"
      "#pragma math_exp (A0 + x)\r\n"
      "int f(int x) {\r\n  return x + A0;\r\n}\r\n";
  auto fns = scan_source(src);
  REQUIRE(fns.size() == 1);
  CHECK(fns[0].function_name == "f");
}

TEST_CASE("scan_source: comments allowed between pragmas and header") {
  std::string src =
      "#pragma ring_prop (+, 0, -, *, 1) int\n"
      "/* ring of machine ints */\n"
      "#pragma math_exp (x)\n"
      "// evaluator\n"
      "int f(int x) { return x; }\n";
  CHECK(scan_source(src).size() == 1);
}

TEST_CASE("scan_source: variable designation with several parameters") {
  std::string two =
      "#pragma ring_prop (+, 0, -, *, 1) int\n"
      "#pragma math_exp (A0 + A1*y)\n"
      "int f(int n, int y) { return y; }\n";
  auto fns = scan_source(two);
  REQUIRE(fns.size() == 1);
  CHECK(fns[0].variable == "y");

  std::string ambiguous =
      "#pragma ring_prop (+, 0, -, *, 1) int\n"
      "#pragma math_exp (n + y)\n"
      "int f(int n, int y) { return y; }\n";
  CHECK(code_of([&] { scan_source(ambiguous); }) == Errc::AmbiguousVariable);
}

TEST_CASE("pragma round-trip reparses structurally identical") {
  RingSpec r = parse_ring_prop("#pragma   ring_prop   ( + ,0 , - , * , 1 )   int");
  std::string line = to_pragma(r);
  CHECK(line == "#pragma ring_prop (+, 0, -, *, 1) int");
  RingSpec r2 = parse_ring_prop(line);
  CHECK(r2.add_op == r.add_op);
  CHECK(r2.carrier == r.carrier);

  ExprPtr e = parse_math_exp("#pragma math_exp (A0+A1*x+A2*x^2)", "x");
  std::string m = to_pragma(e);
  CHECK(m == "#pragma math_exp (A0 + A1*x + A2*x^2)");
  CHECK(expr_equal(parse_math_exp(m, "x"), e));
}
