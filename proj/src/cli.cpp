#include "lpdo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "lpdo/classify.hpp"
#include "lpdo/errors.hpp"
#include "lpdo/expr.hpp"
#include "lpdo/laplace.hpp"
#include "lpdo/newton.hpp"
#include "lpdo/report.hpp"

namespace lpdo {
namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMath = 2;
constexpr int kObstruction = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Sink {
  bool json = false;
  std::ostringstream text;
  std::string command;
  Json input = Json::object();
  Json result = Json::object();
  Json evidence = Json::array();
  Json citations = Json::array();
  Json diagnostics = Json::array();
  std::string err_message;

  void line(const std::string& s) { text << s << '\n'; }
  void note(const std::string& s) {
    diagnostics.push_back(s);
    line("note: " + s);
  }
  std::string payload() const {
    if (!json) return text.str();
    return envelope(command, input, result, evidence, citations, diagnostics).dump(2) + "\n";
  }
};

RatFunc parse_function(const std::string& text, const std::string& what) {
  const DiffOp p = parse_operator(text);
  if (p.order() > 0) throw UsageError(what + " must not involve Dx or Dy");
  return p.coeff(Exp2{0, 0});
}

// Symbols live in Q(x,y)[v,w]; accept v/w spellings by rewriting the
// identifier tokens to the matching derivations and reusing the parser.
BinaryForm parse_form(const std::string& text) {
  std::string rewritten;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      size_t j = i;
      while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
      std::string word = text.substr(i, j - i);
      if (word == "v" || word == "V") {
        word = "Dx";
      } else if (word == "w" || word == "W") {
        word = "Dy";
      }
      rewritten += word;
      i = j;
    } else {
      rewritten += text[i++];
    }
  }
  const DiffOp p = parse_operator(rewritten);
  if (p.is_zero()) throw UsageError("divisor form must be nonzero");
  const int n = p.order();
  for (const auto& [e, c] : p.terms())
    if (e.x + e.y != n) throw UsageError("divisor must be a homogeneous form in v and w");
  return op_symbol(p);
}

struct LaplaceArgs {
  std::string op_text, a_text, b_text, c_text;
  int max_steps = 10;
};

void add_laplace_options(CLI::App* sub, LaplaceArgs& in) {
  sub->add_option("operator", in.op_text, "operator expression with monic-up-to-scale Dx*Dy part");
  sub->add_option("--a", in.a_text, "coefficient of Dx");
  sub->add_option("--b", in.b_text, "coefficient of Dy");
  sub->add_option("--c", in.c_text, "order-0 coefficient");
  sub->add_option("--max-steps", in.max_steps, "bound on transformation steps (default 10)")
      ->check(CLI::PositiveNumber);
}

HyperbolicOp resolve_hyperbolic(const LaplaceArgs& in, Sink& sink) {
  const bool coeffs = !in.a_text.empty() || !in.b_text.empty() || !in.c_text.empty();
  if (!in.op_text.empty() && coeffs)
    throw UsageError("give either an operator expression or --a/--b/--c, not both");
  if (in.op_text.empty() && !coeffs)
    throw UsageError("missing operator: pass an expression or --a/--b/--c");
  HyperbolicOp q;
  if (!in.op_text.empty()) {
    DiffOp p = parse_operator(in.op_text);
    const RatFunc lead = p.coeff(Exp2{1, 1});
    if (lead.is_zero())
      throw MathError("operator has no d_x d_y term, so it is not of hyperbolic shape");
    if (!lead.is_one()) {
      p = DiffOp(lead.inverse()) * p;
      sink.note("scaled by " + to_string(lead.inverse()) + " to make the d_x d_y term monic");
    }
    q = HyperbolicOp::from_diffop(p);
  } else {
    q.a = in.a_text.empty() ? RatFunc(0) : parse_function(in.a_text, "--a");
    q.b = in.b_text.empty() ? RatFunc(0) : parse_function(in.b_text, "--b");
    q.c = in.c_text.empty() ? RatFunc(0) : parse_function(in.c_text, "--c");
  }
  sink.input["a"] = to_string(q.a);
  sink.input["b"] = to_string(q.b);
  sink.input["c"] = to_string(q.c);
  sink.input["max_steps"] = in.max_steps;
  return q;
}

int run_mul(const std::vector<std::string>& texts, Sink& sink) {
  sink.command = "mul";
  sink.input["factors"] = texts;
  DiffOp prod = parse_operator(texts.front());
  for (size_t i = 1; i < texts.size(); ++i) prod = prod * parse_operator(texts[i]);
  sink.result["product"] = print_canonical(prod);
  sink.result["order"] = prod.is_zero() ? Json(nullptr) : Json(prod.order());
  sink.line(print_canonical(prod));
  return kOk;
}

int run_apply(const std::string& op_text, const std::string& fn_text, Sink& sink) {
  sink.command = "apply";
  sink.input = Json{{"operator", op_text}, {"argument", fn_text}};
  const DiffOp p = parse_operator(op_text);
  const RatFunc f = parse_function(fn_text, "argument");
  const RatFunc value = p.apply(f);
  sink.result = Json{{"value", to_string(value)}};
  sink.line(to_string(value));
  return kOk;
}

int run_divide(const std::string& op_text, const std::string& ell_text, Sink& sink) {
  sink.command = "divide";
  sink.input = Json{{"operator", op_text}, {"divisor", ell_text}};
  const LinearDivision d = right_divide_linear(parse_operator(op_text), parse_operator(ell_text));
  sink.result = Json{{"quotient", print_canonical(d.quotient)},
                     {"remainder", to_string(d.remainder)},
                     {"exact", d.remainder.is_zero()}};
  sink.line("quotient: " + print_canonical(d.quotient));
  sink.line("remainder: " + to_string(d.remainder));
  return kOk;
}

int run_symbol(const std::string& op_text, Sink& sink) {
  sink.command = "symbol";
  sink.input["operator"] = op_text;
  const DiffOp p = parse_operator(op_text);
  if (p.is_zero()) throw MathError("the zero operator has no symbol");
  const BinaryForm sym = op_symbol(p);
  sink.result["order"] = p.order();
  sink.result["symbol"] = to_string(sym);
  sink.line("order: " + std::to_string(p.order()));
  sink.line("symbol: " + to_string(sym));
  if (p.order() >= 1) {
    const bool sep = is_separable(sym);
    sink.result["separable"] = sep;
    sink.result["pattern"] = json_of(multiplicity_pattern(sym));
    const LinearSplit split = rational_linear_divisors(sym);
    Json divisors = Json::array();
    for (const auto& d : split.divisors)
      divisors.push_back(Json{{"divisor", to_string(d.form())}, {"multiplicity", d.multiplicity}});
    sink.result["linear_divisors"] = divisors;
    sink.result["residual"] = to_string(split.residual);
    sink.line(std::string("separable: ") + (sep ? "yes" : "no"));
    for (const auto& d : split.divisors)
      sink.line("divisor: " + to_string(d.form()) + " (multiplicity " +
                std::to_string(d.multiplicity) + ")");
    if (split.residual.degree() > 0)
      sink.line("residual with no rational linear divisor: " + to_string(split.residual));
  }
  return kOk;
}

int run_chain(const LaplaceArgs& in, Sink& sink) {
  sink.command = "laplace chain";
  const HyperbolicOp q = resolve_hyperbolic(in, sink);
  const LaplaceChain ch = laplace_chain(q, in.max_steps);
  sink.result = json_of(ch);
  sink.line("operator: " + print_canonical(q.to_diffop()));
  sink.line("a = " + to_string(ch.a));
  for (size_t i = 0; i < ch.steps.size(); ++i) {
    const ChainStep& s = ch.steps[i];
    sink.line("step " + std::to_string(i) + ": b = " + to_string(s.b) + ", c = " + to_string(s.c) +
              ", K = " + to_string(s.k));
  }
  if (ch.m) {
    sink.line("chain terminates: K_" + std::to_string(*ch.m) + " = 0");
  } else {
    sink.note("no vanishing K within " + std::to_string(in.max_steps) + " steps");
  }
  return kOk;
}

int report_divisor_diagnosis(const DivisorDiagnosis& diag, Sink& sink) {
  sink.result = json_of(diag);
  sink.line("obstruction: " + diag.message);
  sink.diagnostics.push_back(diag.message);
  sink.err_message = diag.message;
  return kObstruction;
}

int run_divisor(const LaplaceArgs& in, int order, Sink& sink) {
  sink.command = "laplace divisor";
  const HyperbolicOp q = resolve_hyperbolic(in, sink);
  sink.input["order"] = order;
  const auto res = laplace_divisor(q, order, in.max_steps);
  if (const auto* diag = std::get_if<DivisorDiagnosis>(&res)) return report_divisor_diagnosis(*diag, sink);
  const auto& d = std::get<LaplaceDivisor>(res);
  sink.result = json_of(d);
  sink.line("divisor of order " + std::to_string(d.n) + ": " + print_canonical(d.divisor));
  sink.line("cofactor: " + print_canonical(d.cofactor));
  sink.line(std::string("verified: ") + (d.verified ? "yes" : "no"));
  if (d.literal_divisor)
    sink.line("plain d_x power of the same order: " + print_canonical(*d.literal_divisor) +
              (d.literal_verified ? " (also a divisor)" : " (not a divisor)"));
  if (!d.note.empty()) sink.note(d.note);
  if (!d.verified) {
    sink.err_message = "divisor construction failed verification";
    return kObstruction;
  }
  return kOk;
}

int run_overideal(const LaplaceArgs& in, int max_order, Sink& sink) {
  sink.command = "laplace overideal";
  const HyperbolicOp q = resolve_hyperbolic(in, sink);
  sink.input["max_order"] = max_order;
  const auto res = maximal_overideal(q, max_order, in.max_steps);
  if (const auto* diag = std::get_if<DivisorDiagnosis>(&res)) return report_divisor_diagnosis(*diag, sink);
  const auto& o = std::get<OveridealResult>(res);
  sink.result = json_of(o);
  sink.line("operator: " + print_canonical(o.q.to_diffop()));
  sink.line("divisor of order " + std::to_string(o.divisor.n) + ": " +
            print_canonical(o.divisor.divisor));
  sink.line(o.annotation);
  return kOk;
}

int run_newton(const std::string& op_text, const std::string& divisor_text, Sink& sink) {
  sink.command = "newton";
  sink.input["operator"] = op_text;
  const DiffOp p = parse_operator(op_text);
  if (divisor_text.empty()) {
    const NewtonPolygon np = newton_polygon(p);
    sink.result = json_of(np);
    sink.line("support:");
    for (const auto& [e, c] : np.points)
      sink.line("  (" + std::to_string(e.x) + ", " + std::to_string(e.y) + "): " + to_string(c));
    sink.line("leading edges:");
    for (const Edge& e : np.edges) {
      std::string l = "  (" + std::to_string(e.from.x) + ", " + std::to_string(e.from.y) +
                      ") -> (" + std::to_string(e.to.x) + ", " + std::to_string(e.to.y) +
                      "), slope " + to_string(e.slope) + ", characteristic " +
                      to_string_in_z(e.charpoly);
      if (e.vertical) l += " [terminal vertical]";
      sink.line(l);
    }
    return kOk;
  }
  sink.input["divisor"] = divisor_text;
  const FirstStep fs = first_step(p, parse_form(divisor_text));
  sink.result = json_of(fs);
  if (!fs.obstruction.empty()) {
    sink.line("obstruction: " + fs.obstruction);
    sink.diagnostics.push_back(fs.obstruction);
    sink.err_message = fs.obstruction;
    return kObstruction;
  }
  sink.line("direction: " + print_canonical(fs.direction));
  sink.line("first integral f1 = " + to_string(*fs.f1));
  sink.line("constraint: " + fs.constraint);
  return kOk;
}

int run_classify(const std::string& op_text, const std::vector<int>& degrees, Sink& sink) {
  sink.command = "classify";
  sink.input["operator"] = op_text;
  if (!degrees.empty()) sink.input["attached_degrees"] = degrees;
  const ClassificationReport rep = classify(parse_operator(op_text), degrees);
  sink.result = json_of(rep);
  for (const EvidenceItem& e : rep.evidence)
    sink.evidence.push_back(Json{{"citation", e.citation}, {"data", e.data}});
  std::vector<std::string> seen;
  for (const EvidenceItem& e : rep.evidence)
    if (std::find(seen.begin(), seen.end(), e.citation) == seen.end()) {
      seen.push_back(e.citation);
      sink.citations.push_back(e.citation);
    }
  sink.line("order: " + std::to_string(rep.order));
  sink.line("symbol: " + to_string(rep.symbol));
  sink.line(std::string("case: ") + case_tag_name(rep.case_tag));
  sink.line(std::string("verdict: ") + verdict_name(rep.verdict));
  if (rep.bound) sink.line("bound: " + std::to_string(*rep.bound));
  sink.line(std::string("intersection claim: ") + (rep.intersection_claim ? "yes" : "no"));
  if (rep.normalized) sink.line("normalized operator: " + print_canonical(rep.normalized->op));
  sink.line("evidence:");
  for (const EvidenceItem& e : rep.evidence) {
    sink.line("  - " + e.data);
    sink.line("    [" + e.citation + "]");
  }
  return kOk;
}

int run_verify_identity(const std::string& lhs_text, const std::string& rhs_text, Sink& sink) {
  sink.command = "verify identity";
  sink.input = Json{{"lhs", lhs_text}, {"rhs", rhs_text}};
  const DiffOp lhs = parse_operator(lhs_text);
  const DiffOp rhs = parse_operator(rhs_text);
  const bool equal = lhs == rhs;
  sink.result =
      Json{{"equal", equal}, {"lhs", print_canonical(lhs)}, {"rhs", print_canonical(rhs)}};
  if (equal) {
    sink.line("equal: " + print_canonical(lhs));
    return kOk;
  }
  sink.line("not equal");
  sink.line("lhs: " + print_canonical(lhs));
  sink.line("rhs: " + print_canonical(rhs));
  sink.err_message = "operators are not identical";
  return kObstruction;
}

int run_selftest(unsigned long long seed, Sink& sink) {
  sink.command = "selftest";
  sink.input["seed"] = seed;
  std::mt19937_64 rng(seed);
  const Poly X = Poly::variable(Var::x), Y = Poly::variable(Var::y);
  const std::vector<RatFunc> pool = {RatFunc(0),     RatFunc(1),     RatFunc(-2),
                                     RatFunc(X),     RatFunc(Y),     RatFunc(X * Y),
                                     RatFunc(X + Y), RatFunc::of(Poly(1), X + Y)};
  auto coeff = [&] { return pool[rng() % pool.size()]; };
  auto rand_op = [&](int max_order) {
    DiffOp p;
    for (int i = 0; i <= max_order; ++i)
      for (int j = 0; i + j <= max_order; ++j)
        if (rng() % 3 == 0) p += DiffOp::monomial(Exp2{i, j}, coeff());
    if (p.is_zero()) p = DiffOp::dx();
    return p;
  };
  std::vector<std::string> checks;
  auto check = [&](bool ok, const std::string& name) {
    if (!ok) throw MathError("selftest failed: " + name);
    checks.push_back(name);
    sink.line("ok: " + name);
  };

  bool assoc = true, dist = true, symb = true, acts = true, roundtrip = true;
  for (int t = 0; t < 10; ++t) {
    const DiffOp a = rand_op(2), b = rand_op(2), c = rand_op(2);
    assoc = assoc && (a * b) * c == a * (b * c);
    dist = dist && a * (b + c) == a * b + a * c;
    symb = symb && op_symbol(a * b) == op_symbol(a) * op_symbol(b);
    const RatFunc f = coeff();
    acts = acts && (a * b).apply(f) == a.apply(b.apply(f));
    roundtrip = roundtrip && parse_operator(print_canonical(a)) == a;
  }
  check(assoc, "product associativity (10 random triples)");
  check(dist, "left distributivity (10 random triples)");
  check(symb, "symbol multiplicativity (10 random pairs)");
  check(acts, "composition acts as iterated application (10 random pairs)");
  check(roundtrip, "printer-parser round trip (10 random operators)");

  const HyperbolicOp liouville{RatFunc(0), RatFunc(0), RatFunc::of(Poly(-2), (X + Y) * (X + Y))};
  const LaplaceChain ch = laplace_chain(liouville, 5);
  check(ch.m && *ch.m == 1 && ch.steps.size() == 2 && ch.steps[1].b == RatFunc::of(Poly(2), X + Y),
        "transformation chain of the Liouville-type operator terminates at step 1");
  const auto wc = overideal_witness_check(DiffOp::dy() * DiffOp::dy(), RatFunc::of(Poly(1), Y));
  check(wc.holds, "Riccati witness for d_y^2 with g = 1/y");
  sink.result = Json{{"passed", true}, {"checks", checks}};
  return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact arithmetic and structure analysis for linear partial differential operators"};
  app.name("lpdo");
  app.require_subcommand(1);

  Sink sink;
  std::string out_file;
  unsigned long long seed = 20260822ULL;
  app.add_flag("--json", sink.json, "emit a JSON report envelope");
  app.add_option("--out", out_file, "write the report to FILE instead of stdout");
  app.add_option("--seed", seed, "random seed for selftest");

  std::vector<std::string> mul_texts;
  CLI::App* mul = app.add_subcommand("mul", "multiply operators left to right");
  mul->add_option("factors", mul_texts, "operator expressions")->required()->expected(2, 64);

  std::string apply_op, apply_fn;
  CLI::App* apply = app.add_subcommand("apply", "apply an operator to a function");
  apply->add_option("operator", apply_op, "operator expression")->required();
  apply->add_option("function", apply_fn, "rational function of x and y")->required();

  std::string div_op, div_ell;
  CLI::App* divide = app.add_subcommand("divide", "right-divide by a monic first-order operator");
  divide->add_option("operator", div_op, "dividend expression")->required();
  divide->add_option("divisor", div_ell, "monic Dx + b or Dy + b")->required();

  std::string sym_op;
  CLI::App* symbol = app.add_subcommand("symbol", "principal symbol and its factor structure");
  symbol->add_option("operator", sym_op, "operator expression")->required();

  CLI::App* laplace =
      app.add_subcommand("laplace", "transformation chains for hyperbolic operators");
  laplace->require_subcommand(1);
  LaplaceArgs chain_in, div_in, over_in;
  CLI::App* chain =
      laplace->add_subcommand("chain", "iterate the transformation and report the K invariants");
  add_laplace_options(chain, chain_in);
  int divisor_order = 0;
  CLI::App* ldiv =
      laplace->add_subcommand("divisor", "construct a verified divisor of given order");
  ldiv->add_option("order", divisor_order, "target divisor order")
      ->required()
      ->check(CLI::PositiveNumber);
  add_laplace_options(ldiv, div_in);
  int max_order = 6;
  CLI::App* over = laplace->add_subcommand(
      "overideal", "smallest verified divisor and the attached maximal overideal");
  over->add_option("--max-order", max_order, "largest divisor order to try (default 6)")
      ->check(CLI::PositiveNumber);
  add_laplace_options(over, over_in);

  std::string newton_op, newton_div;
  CLI::App* newton =
      app.add_subcommand("newton", "support polygon, leading edges, characteristic equations");
  newton->add_option("operator", newton_op, "operator expression")->required();
  newton->add_option("--divisor", newton_div,
                     "linear form in v, w: report the first construction step instead");

  std::string classify_op;
  std::vector<int> degrees;
  CLI::App* cls = app.add_subcommand("classify", "count maximal non-holonomic overideals");
  cls->add_option("operator", classify_op, "operator expression")->required();
  cls->add_option("--attached-degrees", degrees,
                  "degrees of attached polynomials of known overideals");

  CLI::App* verify = app.add_subcommand("verify", "check asserted identities");
  verify->require_subcommand(1);
  std::string id_lhs, id_rhs;
  CLI::App* identity = verify->add_subcommand("identity", "compare two operator expressions");
  identity->add_option("lhs", id_lhs, "left expression")->required();
  identity->add_option("rhs", id_rhs, "right expression")->required();

  CLI::App* selftest = app.add_subcommand("selftest", "quick randomized smoke checks");

  for (CLI::App* s : {mul, apply, divide, symbol, laplace, chain, ldiv, over, newton, cls, verify,
                      identity, selftest})
    s->fallthrough();

  int code = kOk;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    if (mul->parsed()) {
      code = run_mul(mul_texts, sink);
    } else if (apply->parsed()) {
      code = run_apply(apply_op, apply_fn, sink);
    } else if (divide->parsed()) {
      code = run_divide(div_op, div_ell, sink);
    } else if (symbol->parsed()) {
      code = run_symbol(sym_op, sink);
    } else if (chain->parsed()) {
      code = run_chain(chain_in, sink);
    } else if (ldiv->parsed()) {
      code = run_divisor(div_in, divisor_order, sink);
    } else if (over->parsed()) {
      code = run_overideal(over_in, max_order, sink);
    } else if (newton->parsed()) {
      code = run_newton(newton_op, newton_div, sink);
    } else if (cls->parsed()) {
      code = run_classify(classify_op, degrees, sink);
    } else if (identity->parsed()) {
      code = run_verify_identity(id_lhs, id_rhs, sink);
    } else if (selftest->parsed()) {
      code = run_selftest(seed, sink);
    }
  } catch (const CLI::ParseError& e) {
    const int cli_code = app.exit(e, out, err);
    return cli_code == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const MathError& e) {
    err << "math error: " << e.what() << '\n';
    return kMath;
  }

  const std::string payload = sink.payload();
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) {
      err << "cannot open " << out_file << " for writing\n";
      return kUsage;
    }
    f << payload;
  } else {
    out << payload;
  }
  if (!sink.err_message.empty()) err << sink.err_message << '\n';
  return code;
}

}  // namespace lpdo
