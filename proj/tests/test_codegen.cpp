#include <doctest.h>

#include "helpers.hpp"
#include "ringopt/codegen.hpp"
#include "ringopt/oracle.hpp"

using namespace ringopt;
using namespace ringopt::test;

namespace {

FunctionSig quartic_sig() { return {"int", "polyCalc", {{"int", "x"}}}; }

const char* kAnnotated =
    "#define A0 3\n"
    "#define A1 5\n"
    "#define A2 7\n"
    "#define A3 11\n"
    "#define A4 13\n"
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

TEST_CASE("emit_function: horner quartic") {
  EmittedUnit u = emit_function(scheme_horner(atom_poly(4)), quartic_sig());
  CHECK(u.text.find("(((A4*x + A3)*x + A2)*x + A1)*x + A0") != std::string::npos);
  CHECK(u.adds == 4);
  CHECK(u.muls == 4);
}

TEST_CASE("emit_function: naive quartic matches the direct form") {
  EmittedUnit u = emit_function(scheme_naive(atom_poly(4)), quartic_sig());
  CHECK(u.text.find("A4*x*x*x*x + A3*x*x*x + A2*x*x + A1*x + A0") !=
        std::string::npos);
  CHECK(u.muls == 10);
}

TEST_CASE("emit_function: degree 0") {
  EmittedUnit u = emit_function(scheme_horner(atom_poly(0)), quartic_sig());
  CHECK(u.text == "\n  return A0;\n");
  CHECK(u.adds == 0);
  CHECK(u.muls == 0);
}

TEST_CASE("emit_function: incremental accumulator shape") {
  EmittedUnit u = emit_function(scheme_incremental(atom_poly(4)), quartic_sig());
  CHECK(u.text.find("int res, _x;") != std::string::npos);
  CHECK(u.text.find("res = A0;") != std::string::npos);
  CHECK(u.text.find("res += A1*x;") != std::string::npos);
  CHECK(u.text.find("_x = x*x;") != std::string::npos);
  CHECK(u.text.find("_x *= x;") != std::string::npos);
  CHECK(u.text.find("res += A4*_x;") != std::string::npos);
  CHECK(u.muls == 7);
  CHECK(u.adds == 4);
}

TEST_CASE("emit_function: balanced uses stable locals") {
  EmittedUnit u = emit_function(scheme_balanced(atom_poly(4)), quartic_sig());
  CHECK(u.text.find("int t0 = ") != std::string::npos);
  CHECK(u.muls == 6);
  CHECK(u.adds == 4);
  EmittedUnit v = emit_function(scheme_balanced(atom_poly(4)), quartic_sig());
  CHECK(u.text == v.text);  // deterministic
}

TEST_CASE("emit_function: signature mismatch") {
  FunctionSig bad{"int", "f", {{"int", "y"}}};
  CHECK_THROWS_AS(emit_function(scheme_horner(atom_poly(2)), bad), Error);
}

TEST_CASE("textual operator counts equal the cost report") {
  for (int n = 0; n <= 10; ++n) {
    Polynomial p = atom_poly(n);
    for (const auto& [name, fn] : scheme_table()) {
      EvalDag d = fn(p, false);
      EmittedUnit u = emit_function(d, quartic_sig());
      auto [adds, muls] = count_ops(d);
      CAPTURE(name); CAPTURE(n);
      CHECK(u.adds == adds);
      CHECK(u.muls == muls);
      auto [ta, tm] = textual_op_counts(u.text);
      CHECK(ta == adds);
      CHECK(tm == muls);
    }
  }
}

TEST_CASE("compound coefficients are hoisted out of the counted body") {
  Polynomial p = normalize(parse_expression("(A0*A1 + B)*x^2 + C*x + 1", "x"),
                           int_ring(), "x");
  for (const auto& [name, fn] : scheme_table()) {
    EvalDag d = fn(p, false);
    EmittedUnit u = emit_function(d, quartic_sig());
    auto [adds, muls] = count_ops(d);
    CAPTURE(name);
    CHECK(u.adds == adds);
    CHECK(u.muls == muls);
    CHECK(u.text.find("const int c0 = A0*A1 + B;") != std::string::npos);
  }
}

TEST_CASE("transform_source: horner rewrite keeps everything else intact") {
  std::string out = transform_source(kAnnotated, "horner");
  CHECK(out.find("(((A4*x + A3)*x + A2)*x + A1)*x + A0") != std::string::npos);
  CHECK(out.find("A4*x*x*x*x") == std::string::npos);
  // pragmas and defines untouched
  CHECK(out.find("#pragma ring_prop (+, 0, -, *, 1) int") != std::string::npos);
  CHECK(out.find("#define A4 13") != std::string::npos);
  // the output re-scans to the same annotated function
  auto fns = scan_source(out);
  REQUIRE(fns.size() == 1);
  CHECK(fns[0].function_name == "polyCalc");
  // idempotent
  CHECK(transform_source(out, "horner") == out);
}

TEST_CASE("transform_source: naive rewrite of an already-naive file") {
  std::string out = transform_source(kAnnotated, "naive");
  auto fns = scan_source(out);
  REQUIRE(fns.size() == 1);
  std::string body = out.substr(fns[0].body_begin, fns[0].body_end - fns[0].body_begin);
  CHECK(body.find("A4*x*x*x*x + A3*x*x*x + A2*x*x + A1*x + A0") != std::string::npos);
  CHECK(transform_source(out, "naive") == out);
}

TEST_CASE("transform_source: two annotated functions, order preserved") {
  std::string two =
      "#pragma ring_prop (+, 0, -, *, 1) int\n"
      "#pragma math_exp (A0 + A1*x)\n"
      "int first(int x) { return 0; }\n"
      "\n"
      "int plain(int v) { return v; }\n"
      "\n"
      "#pragma ring_prop (+, 0, -, *, 1) int\n"
      "#pragma math_exp (B0 + B1*y + B2*y^2)\n"
      "int second(int y) { return 0; }\n";
  std::string out = transform_source(two, "horner");
  auto fns = scan_source(out);
  REQUIRE(fns.size() == 2);
  CHECK(fns[0].function_name == "first");
  CHECK(fns[1].function_name == "second");
  CHECK(out.find("A1*x + A0") != std::string::npos);
  CHECK(out.find("(B2*y + B1)*y + B0") != std::string::npos);
  CHECK(out.find("int plain(int v) { return v; }") != std::string::npos);
}

TEST_CASE("transform_source error paths") {
  CHECK_THROWS_AS(transform_source("int f(int x) { return x; }", "horner"), Error);
  CHECK_THROWS_AS(transform_source(kAnnotated, "fastest"), Error);
}

TEST_CASE("emit_benchmark: structure and determinism") {
  std::string prog = emit_benchmark(4, {"naive", "incremental", "horner", "balanced"},
                                    128, 32, 0);
  for (const char* fn : {"poly_naive", "poly_incremental", "poly_horner", "poly_balanced"})
    CHECK(prog.find(fn) != std::string::npos);
  CHECK(prog.find("#define ITERATIONS 128") != std::string::npos);
  CHECK(prog.find("rdtscp") != std::string::npos);
  CHECK(prog.find("volatile") != std::string::npos);
  CHECK(prog == emit_benchmark(4, {"naive", "incremental", "horner", "balanced"},
                               128, 32, 0));

  std::string two = emit_benchmark(9, {"naive", "horner"}, 128, 32, 0);
  CHECK(two.find("poly_naive") != std::string::npos);
  CHECK(two.find("poly_horner") != std::string::npos);
  CHECK(two.find("poly_balanced") == std::string::npos);

  CHECK(emit_benchmark(2, {"horner"}, 1, 8, 0).find("#define ITERATIONS 1") !=
        std::string::npos);
}

TEST_CASE("emit_benchmark error paths") {
  CHECK_THROWS_AS(emit_benchmark(65, {"horner"}, 128, 32, 0), Error);
  CHECK_THROWS_AS(emit_benchmark(4, {}, 128, 32, 0), Error);
  CHECK_THROWS_AS(emit_benchmark(4, {"horner"}, 0, 32, 0), Error);
  CHECK_THROWS_AS(emit_benchmark(4, {"horner"}, 128, 12, 0), Error);
}

TEST_CASE("benchmark schemes agree under oracle semantics") {
  // Simulates the emitted self-check: same coefficients, all plans equal.
  const int degree = 9;
  const unsigned width = 16;
  auto coeffs = benchmark_coefficients(degree, width, 0);
  Polynomial p = atom_poly(degree);
  Binding b;
  b.width = width;
  for (int i = 0; i <= degree; ++i)
    b.coefficient_values["A" + std::to_string(i)] = coeffs[i];
  for (std::uint64_t x = 0; x < 500; ++x) {
    b.variable_value = x * 131;
    std::uint64_t ref = eval_poly_reference(p, b);
    for (const auto& [name, fn] : scheme_table())
      CHECK(eval_dag(fn(p, false), b) == ref);
  }
}
