#include "ringopt/codegen.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ringopt/oracle.hpp"

namespace ringopt {

namespace {

bool inline_constant(const ExprPtr& c) {
  if (c->kind == ExprKind::Coefficient || c->kind == ExprKind::Literal) return true;
  // -3 etc. renders fine inline
  return c->kind == ExprKind::Negation && c->lhs->kind == ExprKind::Literal;
}

struct BodyBuilder {
  const EvalDag& dag;
  const FunctionSig& sig;
  std::vector<std::string> preamble;   // hoisted coefficient constants
  std::vector<std::string> stmts;
  std::vector<std::string> text;       // per-node operand text
  int hoisted = 0;

  BodyBuilder(const EvalDag& d, const FunctionSig& s)
      : dag(d), sig(s), text(d.nodes.size()) {}

  std::string constant_text(const DagNode& n) {
    if (inline_constant(n.constant)) return to_string(n.constant);
    std::string local = "c" + std::to_string(hoisted++);
    preamble.push_back("const " + sig.return_type + " " + local + " = " +
                       to_string(n.constant) + ";");
    return local;
  }
};

// Inline expression rendering for tree-shaped plans (naive, horner).
// Precedence: Add 1, Mul 2, leaf 3; parens only when a lower-precedence
// subterm feeds a higher-precedence operator.
std::string render_inline(BodyBuilder& b, int idx, int ctx) {
  const DagNode& n = b.dag.nodes[idx];
  switch (n.kind) {
    case DagNode::Kind::Input:
      return n.input_name;
    case DagNode::Kind::Constant:
      if (b.text[idx].empty()) b.text[idx] = b.constant_text(n);
      return b.text[idx];
    case DagNode::Kind::Add: {
      std::string s = render_inline(b, n.lhs, 1) + " + " + render_inline(b, n.rhs, 1);
      return ctx > 1 ? "(" + s + ")" : s;
    }
    case DagNode::Kind::Mul:
      return render_inline(b, n.lhs, 2) + "*" + render_inline(b, n.rhs, 2);
  }
  return {};
}

// Listing-2 shape: `res` accumulator plus `_x` running power.
void build_incremental(BodyBuilder& b) {
  bool res_init = false;
  bool have_x = false;
  for (std::size_t i = 0; i < b.dag.nodes.size(); ++i) {
    const DagNode& n = b.dag.nodes[i];
    switch (n.kind) {
      case DagNode::Kind::Input:
        b.text[i] = n.input_name;
        break;
      case DagNode::Kind::Constant:
        b.text[i] = b.constant_text(n);
        break;
      case DagNode::Kind::Mul: {
        bool lconst = b.dag.nodes[n.lhs].kind == DagNode::Kind::Constant;
        bool rconst = b.dag.nodes[n.rhs].kind == DagNode::Kind::Constant;
        if (!lconst && !rconst) {
          // power step
          bool from_inputs =
              b.dag.nodes[n.lhs].kind == DagNode::Kind::Input &&
              b.dag.nodes[n.rhs].kind == DagNode::Kind::Input;
          if (from_inputs)
            b.stmts.push_back("_x = " + b.text[n.lhs] + "*" + b.text[n.rhs] + ";");
          else
            b.stmts.push_back("_x *= " + b.text[n.rhs] + ";");
          b.text[i] = "_x";
          have_x = true;
        } else {
          b.text[i] = b.text[n.lhs] + "*" + b.text[n.rhs];
        }
        break;
      }
      case DagNode::Kind::Add:
        if (!res_init) {
          b.stmts.push_back("res = " + b.text[n.lhs] + ";");
          res_init = true;
        }
        b.stmts.push_back("res += " + b.text[n.rhs] + ";");
        b.text[i] = "res";
        break;
    }
  }
  if (!res_init) b.stmts.push_back("res = " + b.text[b.dag.root] + ";");
  std::string decl = b.sig.return_type + " res";
  if (have_x) decl += ", _x";
  b.stmts.insert(b.stmts.begin(), decl + ";");
}

// One local per Add/Mul node, t0, t1, ... in topological order.
void build_locals(BodyBuilder& b) {
  int next = 0;
  for (std::size_t i = 0; i < b.dag.nodes.size(); ++i) {
    const DagNode& n = b.dag.nodes[i];
    switch (n.kind) {
      case DagNode::Kind::Input:
        b.text[i] = n.input_name;
        break;
      case DagNode::Kind::Constant:
        b.text[i] = b.constant_text(n);
        break;
      case DagNode::Kind::Add:
      case DagNode::Kind::Mul: {
        std::string local = "t" + std::to_string(next++);
        const char* op = n.kind == DagNode::Kind::Add ? " + " : "*";
        b.stmts.push_back(b.sig.return_type + " " + local + " = " +
                          b.text[n.lhs] + op + b.text[n.rhs] + ";");
        b.text[i] = local;
        break;
      }
    }
  }
}

}  // namespace

std::pair<int, int> textual_op_counts(const std::string& body) {
  int adds = 0, muls = 0;
  bool line_comment = false, block_comment = false;
  for (std::size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (line_comment) {
      if (c == '\n') line_comment = false;
      continue;
    }
    if (block_comment) {
      if (c == '/' && i > 0 && body[i - 1] == '*') block_comment = false;
      continue;
    }
    if (c == '/' && i + 1 < body.size() && body[i + 1] == '/') line_comment = true;
    else if (c == '/' && i + 1 < body.size() && body[i + 1] == '*') block_comment = true;
    else if (c == '+') ++adds;
    else if (c == '*') ++muls;
  }
  return {adds, muls};
}

EmittedUnit emit_function(const EvalDag& dag, const FunctionSig& sig) {
  validate(dag);
  for (const auto& n : dag.nodes) {
    if (n.kind != DagNode::Kind::Input) continue;
    bool found = false;
    for (const auto& p : sig.parameters) found = found || p.name == n.input_name;
    if (!found)
      throw Error(Errc::SignatureMismatch,
                  "dag input '" + n.input_name + "' is not a parameter of " + sig.name);
  }

  EmittedUnit unit;
  unit.scheme_name = dag.scheme_name;
  unit.function_name = sig.name;

  BodyBuilder b(dag, sig);
  std::string computation;

  const DagNode& root = dag.nodes[dag.root];
  if (root.kind == DagNode::Kind::Constant) {
    computation = "  return " + b.constant_text(root) + ";\n";
  } else if (dag.scheme_name == "naive" || dag.scheme_name == "horner") {
    std::string expr = render_inline(b, dag.root, 0);
    computation = "  " + sig.return_type + " res;\n\n  res = " + expr +
                  ";\n\n  return res;\n";
  } else if (dag.scheme_name == "incremental") {
    build_incremental(b);
    computation = "  " + b.stmts[0] + "\n\n";
    for (std::size_t i = 1; i < b.stmts.size(); ++i)
      computation += "  " + b.stmts[i] + "\n";
    computation += "\n  return res;\n";
  } else {
    build_locals(b);
    for (const auto& s : b.stmts) computation += "  " + s + "\n";
    computation += "\n  return " + b.text[dag.root] + ";\n";
  }

  auto [adds, muls] = textual_op_counts(computation);
  unit.adds = adds;
  unit.muls = muls;

  std::string body = "\n";
  for (const auto& p : b.preamble) body += "  " + p + "\n";
  if (!b.preamble.empty()) body += "\n";
  body += computation;
  unit.text = body;
  return unit;
}

std::string emit_function_definition(const EvalDag& dag, const FunctionSig& sig) {
  EmittedUnit unit = emit_function(dag, sig);
  std::string out = sig.return_type + " " + sig.name + "(";
  for (std::size_t i = 0; i < sig.parameters.size(); ++i) {
    if (i) out += ", ";
    out += sig.parameters[i].type + " " + sig.parameters[i].name;
  }
  out += ") {" + unit.text + "}\n";
  return out;
}

std::string transform_source(const std::string& file_text, const std::string& scheme,
                             bool sparse) {
  SchemeFn fn = nullptr;
  for (const auto& [name, f] : scheme_table())
    if (name == scheme) fn = f;
  if (!fn) throw Error(Errc::SyntaxError, "unknown scheme '" + scheme + "'");

  auto fns = scan_source(file_text);
  if (fns.empty())
    throw Error(Errc::NoAnnotatedFunctions, "no annotated functions in input");

  std::string out = file_text;
  // Splice back-to-front so earlier body spans stay valid.
  for (auto it = fns.rbegin(); it != fns.rend(); ++it) {
    Polynomial poly = normalize(it->math, it->ring, it->variable);
    EvalDag dag = fn(poly, sparse);
    FunctionSig sig{it->return_type, it->function_name, it->parameters};
    EmittedUnit unit = emit_function(dag, sig);
    out = out.substr(0, it->body_begin) + unit.text + out.substr(it->body_end);
  }
  return out;
}

std::vector<std::uint64_t> benchmark_coefficients(int degree, unsigned width,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t mask = width >= 64 ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << width) - 1;
  std::vector<std::uint64_t> out;
  for (int i = 0; i <= degree; ++i) out.push_back(rng() & mask);
  return out;
}

std::string emit_benchmark(int degree, const std::vector<std::string>& schemes,
                           int iterations, unsigned width, std::uint64_t seed) {
  if (degree < 0 || degree > 64)
    throw Error(Errc::UnsupportedDegree,
                "degree must be in 0..64, got " + std::to_string(degree));
  if (schemes.empty()) throw Error(Errc::EmptySchemeList, "no schemes requested");
  if (iterations < 1)
    throw Error(Errc::SyntaxError, "iterations must be >= 1");
  if (width != 8 && width != 16 && width != 32 && width != 64)
    throw Error(Errc::SyntaxError, "width must be 8, 16, 32 or 64");

  Polynomial poly;
  poly.variable = "x";
  for (int i = 0; i <= degree; ++i)
    poly.coeffs.push_back(Expr::coefficient("A" + std::to_string(i)));

  std::vector<std::pair<std::string, EvalDag>> plans;
  for (const auto& s : schemes) {
    SchemeFn fn = nullptr;
    for (const auto& [name, f] : scheme_table())
      if (name == s) fn = f;
    if (!fn) throw Error(Errc::SyntaxError, "unknown scheme '" + s + "'");
    plans.emplace_back(s, fn(poly, false));
  }

  const std::string narrow = "uint" + std::to_string(width) + "_t";
  std::vector<std::uint64_t> coeffs = benchmark_coefficients(degree, width, seed);

  std::ostringstream os;
  os << "/* generated by ringopt: degree " << degree << ", width " << width
     << ", seed " << seed << " */\n";
  os << "#define _POSIX_C_SOURCE 199309L\n";
  os << "#include <inttypes.h>\n#include <stdint.h>\n#include <stdio.h>\n\n";

  // All arithmetic runs in uint64_t; results are truncated to the requested
  // width at the interface, which matches w-bit wrapping exactly.
  for (int i = 0; i <= degree; ++i)
    os << "static const uint64_t A" << i << " = " << coeffs[i] << "u;\n";
  os << "\n";

  for (const auto& [name, dag] : plans) {
    FunctionSig sig{"uint64_t", "poly_" + name, {{"uint64_t", "x"}}};
    os << "static " << emit_function_definition(dag, sig) << "\n";
  }

  os << "#if !defined(RINGOPT_USE_CLOCK) && defined(__x86_64__)\n"
        "static uint64_t now_ticks(void) {\n"
        "  uint32_t lo, hi;\n"
        "  __asm__ __volatile__(\"rdtscp\" : \"=a\"(lo), \"=d\"(hi) : : \"rcx\");\n"
        "  return ((uint64_t)hi << 32) | (uint64_t)lo;\n"
        "}\n"
        "#else\n"
        "#include <time.h>\n"
        "static uint64_t now_ticks(void) {\n"
        "  struct timespec ts;\n"
        "  clock_gettime(CLOCK_MONOTONIC, &ts);\n"
        "  return (uint64_t)ts.tv_sec * 1000000000u + (uint64_t)ts.tv_nsec;\n"
        "}\n"
        "#endif\n\n";

  os << "#define ITERATIONS " << iterations << "\n"
     << "#define REPETITIONS 5\n\n"
     << "static " << narrow << " inputs[ITERATIONS];\n"
     << "static volatile " << narrow << " sink;\n\n";

  os << "static uint64_t mix64(uint64_t *s) {\n"
        "  uint64_t z = (*s += 0x9e3779b97f4a7c15u);\n"
        "  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9u;\n"
        "  z = (z ^ (z >> 27)) * 0x94d049bb133111ebu;\n"
        "  return z ^ (z >> 31);\n"
        "}\n\n";

  os << "int main(void) {\n"
     << "  uint64_t state = " << seed << "u;\n"
     << "  int i, r, mismatch = 0;\n\n"
     << "  for (i = 0; i < ITERATIONS; i++)\n"
     << "    inputs[i] = (" << narrow << ")mix64(&state);\n\n";

  for (const auto& [name, dag] : plans) {
    os << "  {\n"
       << "    uint64_t best = (uint64_t)-1;\n"
       << "    for (r = 0; r < REPETITIONS; r++) {\n"
       << "      uint64_t t0 = now_ticks();\n"
       << "      for (i = 0; i < ITERATIONS; i++)\n"
       << "        sink = (" << narrow << ")poly_" << name << "(inputs[i]);\n"
       << "      uint64_t t1 = now_ticks();\n"
       << "      if (t1 - t0 < best) best = t1 - t0;\n"
       << "    }\n"
       << "    printf(\"" << name << ",%\" PRIu64 \"\\n\", best);\n"
       << "  }\n";
  }

  os << "\n  for (i = 0; i < ITERATIONS; i++) {\n"
     << "    " << narrow << " ref = (" << narrow << ")poly_" << plans[0].first
     << "(inputs[i]);\n";
  for (std::size_t k = 1; k < plans.size(); ++k)
    os << "    if ((" << narrow << ")poly_" << plans[k].first
       << "(inputs[i]) != ref) mismatch = 1;\n";
  os << "    (void)ref;\n"
     << "  }\n\n"
     << "  if (mismatch) {\n"
     << "    printf(\"MISMATCH\\n\");\n"
     << "    return 1;\n"
     << "  }\n"
     << "  printf(\"OK\\n\");\n"
     << "  return 0;\n"
     << "}\n";
  return os.str();
}

}  // namespace ringopt
