#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>

#include "ringopt/codegen.hpp"
#include "ringopt/report.hpp"

namespace {

using namespace ringopt;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::SyntaxError, "cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::SyntaxError, "cannot write file: " + path);
  out << text;
}

bool use_color() {
  if (std::getenv("RINGOPT_NO_COLOR")) return false;
  return isatty(1) != 0;
}

SchemeFn scheme_by_name(const std::string& name) {
  for (const auto& [n, f] : scheme_table())
    if (n == name) return f;
  throw Error(Errc::SyntaxError, "unknown scheme '" + name + "'");
}

FunctionReport base_report(const AnnotatedFunction& fn, bool sparse) {
  FunctionReport r;
  r.name = fn.function_name;
  r.ring_pragma = to_pragma(fn.ring);
  r.math_pragma = to_pragma(fn.math);
  r.polynomial = normalize(fn.math, fn.ring, fn.variable);
  r.costs = compare_schemes(r.polynomial, sparse);
  return r;
}

void print_report(const Json& doc, const std::vector<FunctionReport>& fns,
                  bool json) {
  if (json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << render_table(fns, use_color());
}

struct VerifyOpts {
  unsigned width = 8;
  int samples = 0;  // 0 = exhaustive
  int draws = 32;
  std::uint64_t seed = 0;
  std::string scheme = "all";
  int mutate = -1;
};

// Generates the selected plans for one polynomial (fixture included for
// degree 4) and verifies each against the reference evaluation.
bool verify_function(FunctionReport& rep, const VerifyOpts& o) {
  std::vector<EvalDag> dags;
  for (const auto& [name, fn] : scheme_table())
    if (o.scheme == "all" || o.scheme == name) dags.push_back(fn(rep.polynomial, false));
  if (rep.polynomial.degree() == 4 && (o.scheme == "all" || o.scheme == "llvm-deg4"))
    dags.push_back(llvm_fixture_deg4(rep.polynomial));
  if (dags.empty())
    throw Error(Errc::SyntaxError, "scheme '" + o.scheme + "' selects nothing");

  VerifyMode mode = o.samples > 0 ? VerifyMode::sampled(o.samples, o.seed)
                                  : VerifyMode::exhaustive(o.draws, o.seed);
  bool ok = true;
  for (auto& dag : dags) {
    EvalDag plan = o.mutate >= 0 ? mutate_op(dag, o.mutate) : std::move(dag);
    VerificationReport vr = verify_equivalence(plan, rep.polynomial, o.width, mode);
    ok = ok && vr.passed;
    rep.verifications.push_back(std::move(vr));
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial evaluation plans from ring_prop/math_exp annotations"};
  app.require_subcommand(1);

  std::string file, out = "-", scheme = "horner", expr_text, var = "x";
  bool sparse = false, json = false, do_verify = false;
  VerifyOpts vo;
  int degree = 4, iterations = 128;
  unsigned width = 32;
  std::uint64_t seed = 0;
  std::vector<std::string> schemes;

  auto* analyze = app.add_subcommand("analyze", "Operation-count report per scheme");
  analyze->add_option("file", file, "annotated C source")->required();
  analyze->add_flag("--sparse", sparse, "skip zero-literal terms in naive/incremental");
  analyze->add_flag("--json", json, "JSON report instead of a table");

  auto* transform = app.add_subcommand("transform", "Rewrite annotated function bodies");
  transform->add_option("file", file)->required();
  transform->add_option("--scheme", scheme, "naive|incremental|horner|balanced")
      ->required();
  transform->add_option("-o,--output", out, "output path, '-' for stdout");
  transform->add_flag("--sparse", sparse);

  auto* verify = app.add_subcommand("verify", "Check plan/polynomial equivalence");
  verify->add_option("file", file)->required();
  verify->add_option("--width", vo.width, "ring width in bits (default 8)");
  verify->add_option("--samples", vo.samples, "sampled mode with N points");
  verify->add_flag("--exhaustive", "exhaustive over the variable (default)");
  verify->add_option("--draws", vo.draws, "coefficient draws in exhaustive mode");
  verify->add_option("--seed", vo.seed, "randomness seed");
  verify->add_option("--scheme", vo.scheme, "scheme name or 'all'");
  verify->add_option("--mutate", vo.mutate,
                     "self-test: flip the k-th Add/Mul before verifying");
  verify->add_flag("--json", json);

  auto* bench = app.add_subcommand("emit-bench", "Emit a C99 timing harness");
  bench->add_option("--degree", degree)->required();
  bench->add_option("--schemes", schemes, "subset of schemes (default all)")
      ->delimiter(',');
  bench->add_option("--iterations", iterations, "evaluations per timing (default 128)");
  bench->add_option("--width", width, "8|16|32|64 (default 32)");
  bench->add_option("--seed", seed);
  bench->add_option("-o,--output", out);

  auto* expr = app.add_subcommand("expr", "Analyze a bare expression");
  expr->add_option("--expr", expr_text)->required();
  expr->add_option("--var", var, "polynomial variable (default x)");
  expr->add_flag("--sparse", sparse);
  expr->add_flag("--json", json);
  expr->add_flag("--verify", do_verify, "also verify all schemes");
  expr->add_option("--width", vo.width);
  expr->add_option("--samples", vo.samples);
  expr->add_option("--seed", vo.seed);
  expr->add_option("--draws", vo.draws);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed() || verify->parsed()) {
      std::string text = read_file(file);
      auto fns = scan_source(text);
      if (fns.empty())
        std::cerr << "warning: no annotated functions in " << file << "\n";
      bool all_ok = true;
      std::vector<FunctionReport> reports;
      for (const auto& fn : fns) {
        FunctionReport rep = base_report(fn, sparse);
        if (verify->parsed()) all_ok = verify_function(rep, vo) && all_ok;
        reports.push_back(std::move(rep));
      }
      print_report(report_document(file, vo.seed, reports), reports, json);
      return all_ok ? 0 : 1;
    }

    if (transform->parsed()) {
      write_output(out, transform_source(read_file(file), scheme, sparse));
      return 0;
    }

    if (bench->parsed()) {
      if (schemes.empty())
        for (const auto& [n, f] : scheme_table()) schemes.push_back(n);
      write_output(out, emit_benchmark(degree, schemes, iterations, width, seed));
      return 0;
    }

    if (expr->parsed()) {
      RingSpec ring{"+", "0", "-", "*", "1", "int"};
      ExprPtr e = parse_expression(expr_text, var);
      FunctionReport rep;
      rep.name = "<expr>";
      rep.ring_pragma = to_pragma(ring);
      rep.math_pragma = to_pragma(e);
      rep.polynomial = normalize(e, ring, var);
      rep.costs = compare_schemes(rep.polynomial, sparse);
      bool ok = do_verify ? verify_function(rep, vo) : true;
      std::vector<FunctionReport> reports{std::move(rep)};
      print_report(report_document("<expr>", vo.seed, reports), reports, json);
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.what();
    if (e.has_offset()) std::cerr << " (byte " << e.offset() << ")";
    std::cerr << "\n";
    return 2;
  }
  return 0;
}
