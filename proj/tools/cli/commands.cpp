#include "cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <random>

#include <CLI11.hpp>

#include "cli/io.hpp"
#include "cli/report.hpp"
#include "mrb/cohomology.hpp"
#include "mrb/deformations.hpp"
#include "mrb/error.hpp"
#include "mrb/linfinity.hpp"

namespace mrb::cli {

using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string file;
  std::string format = "text";
  std::optional<std::string> weight, op, diag, direction, X, values;
  std::string shape = "diag";
  std::string variant;
  long budget = 100000;
  unsigned seed = 1;
  int max_degree = 3;
  int max_slots = 1;
  int random = 0;
  std::optional<long> field;
  bool literal = false;
};

struct Ctx {
  const Options& o;
  AlgebraFile file;
};

using Handler = std::function<Report(const Ctx&)>;

ThreeLieAlgebra algebra(const Ctx& c) { return to_three_lie(c.file); }

Scalar weight(const Ctx& c) {
  if (c.o.weight) return parse_vector_arg(*c.o.weight).at(0);
  return c.file.weight.value_or(Scalar(1));
}

Matrix operator_matrix(const Ctx& c, int rows, int cols) {
  Matrix m;
  if (c.o.op) m = parse_matrix_arg(*c.o.op);
  else if (c.o.diag) m = Matrix::diagonal(parse_vector_arg(*c.o.diag));
  else if (c.file.op) m = *c.file.op;
  else throw InputError("no operator: pass --operator, --diag or an 'operator' member");
  if (m.rows() != rows || m.cols() != cols)
    throw InputError("operator must be " + std::to_string(rows) + "x" + std::to_string(cols));
  return m;
}

WeightedOperator absolute(const Ctx& c) {
  ThreeLieAlgebra A = algebra(c);
  Matrix R = operator_matrix(c, A.dim(), A.dim());
  return WeightedOperator(std::move(A), std::move(R), weight(c));
}

RelativeMRBDatum relative(const Ctx& c) {
  if (c.file.kind != "relative") return fold_absolute(absolute(c));
  RelativeMRBDatum d = to_relative(c.file);
  if (c.o.weight) d.lambda = weight(c);
  if (c.o.op || c.o.diag) d.T = operator_matrix(c, d.g.dim(), d.h.dim());
  return d;
}

Matrix direction(const Ctx& c, int n) {
  if (!c.o.direction) throw InputError("--direction is required");
  Matrix m = parse_matrix_arg(*c.o.direction);
  if (m.rows() != n || m.cols() != n) throw InputError("direction must be " + std::to_string(n) + "x" + std::to_string(n));
  return m;
}

Vec wedge_vector(const Ctx& c, int n) {
  if (!c.o.X) throw InputError("--X is required");
  Vec X = parse_vector_arg(*c.o.X);
  if (static_cast<int>(X.size()) != n * (n - 1) / 2)
    throw InputError("--X needs " + std::to_string(n * (n - 1) / 2) + " wedge coordinates");
  return X;
}

std::vector<Scalar> values(const Ctx& c) { return parse_values_arg(c.o.values.value_or("-1,0,1")); }

json algebra_json(const ThreeLieAlgebra& A) { return json::parse(serialize(from_three_lie(A))); }

//! ----- check -----

Report check_fi(const Ctx& c) {
  Report r("check fi", c.file.basis);
  r.check("fundamental identity", check_fundamental_identity(algebra(c)));
  return r;
}

Report check_rep(const Ctx& c) {
  Report r("check rep", c.file.basis);
  if (c.file.kind == "relative") {
    const RelativeMRBDatum d = relative(c);
    r.check("rho representation", check_representation(d.rho));
    r.check("zeta representation", check_representation(d.zeta));
  } else {
    r.check("adjoint representation", check_representation(adjoint(algebra(c))));
  }
  return r;
}

Report check_action_cmd(const Ctx& c) {
  if (c.file.kind != "relative") throw InputError("check action needs a relative file");
  const RelativeMRBDatum d = relative(c);
  Report r("check action");
  r.check("rho action", check_action({d.g, d.h, d.rho}));
  r.check("zeta action", check_action({d.h, d.g, d.zeta}));
  return r;
}

Report check_rb_cmd(const Ctx& c) {
  Report r("check rb", c.file.basis);
  r.check("Rota-Baxter", check_rb(absolute(c)));
  return r;
}

Report check_mrb_cmd(const Ctx& c) {
  if (c.file.kind == "relative") {
    const RelativeMRBDatum d = relative(c);
    Report r("check mrb");
    r.check("actions", check_relative_actions(d));
    r.check("relative modified Rota-Baxter", check_mrb_relative(d));
    return r;
  }
  Report r("check mrb", c.file.basis);
  r.check("modified Rota-Baxter", check_mrb_absolute(absolute(c)));
  return r;
}

Report check_nijenhuis_cmd(const Ctx& c) {
  Report r("check nijenhuis-op", c.file.basis);
  const ThreeLieAlgebra A = algebra(c);
  r.check("Nijenhuis operator", check_nijenhuis_operator(A, operator_matrix(c, A.dim(), A.dim())));
  return r;
}

Report check_product_cmd(const Ctx& c) {
  Report r("check product", c.file.basis);
  const ThreeLieAlgebra A = algebra(c);
  const ProductStructureReport p = check_product_structure(A, operator_matrix(c, A.dim(), A.dim()));
  r.check("product structure", p.verdict);
  json plus = json::array(), minus = json::array();
  for (const auto& v : p.plus) plus.push_back(to_json(v));
  for (const auto& v : p.minus) minus.push_back(to_json(v));
  r.data()["involutive"] = p.involutive;
  r.data()["plus"] = plus;
  r.data()["minus"] = minus;
  r.data()["plus_subalgebra"] = p.plus_subalgebra;
  r.data()["minus_subalgebra"] = p.minus_subalgebra;
  return r;
}

//! ----- induce, search -----

Report induce_cmd(const Ctx& c) {
  const WeightedOperator w = absolute(c);
  const ThreeLieAlgebra B = induced_bracket(w);
  Report r("induce", c.file.basis);
  r.check("fundamental identity (induced)", check_fundamental_identity(B));
  r.check("rho_R representation", check_representation(rho_R(w)));
  r.data()["algebra"] = algebra_json(B);
  return r;
}

Report search_cmd(const Ctx& c) {
  const ThreeLieAlgebra A = algebra(c);
  const Scalar lambda = weight(c);
  SearchShape shape;
  if (c.o.shape == "full") shape = SearchShape::full;
  else if (c.o.shape == "diag") shape = SearchShape::diagonal;
  else shape = SearchShape::upper_triangular;
  const auto sols = search_mrb(A, lambda, values(c), shape, c.o.budget);

  const auto conds = mrb_polynomial_conditions(A, lambda);
  bool all_satisfy = true;
  json out = json::array();
  for (const auto& R : sols) {
    const Vec a = matrix_assignment(R);
    for (const auto& pc : conds) all_satisfy = all_satisfy && pc.poly.evaluate(a).is_zero();
    out.push_back(to_json(R));
  }
  Report r("search", c.file.basis);
  r.check("solutions satisfy the polynomial conditions", all_satisfy);
  r.data()["count"] = sols.size();
  r.data()["solutions"] = out;
  return r;
}

//! ----- construct -----

void construct_checks(Report& r, const Ctx& c, ThreeLieAlgebra B, const std::function<Verdict(const Matrix&, const Scalar&)>& input_mrb,
                      const std::function<Verdict(const Matrix&, const Scalar&, ResidualForm)>& compat) {
  B.set_basis_names(c.file.basis);
  r.check("fundamental identity", check_fundamental_identity(B));
  if (c.o.op || c.o.diag || c.file.op) {
    const Matrix R = operator_matrix(c, B.dim(), B.dim());
    const Scalar lambda = weight(c);
    const ResidualForm form = c.o.literal ? ResidualForm::literal : ResidualForm::corrected;
    r.check("modified Rota-Baxter (input)", input_mrb(R, lambda));
    r.check("compatibility", compat(R, lambda, form));
    r.check("modified Rota-Baxter (3-Lie)", check_mrb_absolute(B, R, lambda));
  }
  r.data()["algebra"] = algebra_json(B);
}

TraceFunctional functional(const Ctx& c) {
  if (!c.file.functional) throw InputError("/functional: required");
  return {*c.file.functional};
}

Report construct_lie3(const Ctx& c) {
  const LieAlgebra L = to_lie(c.file);
  const TraceFunctional f = functional(c);
  Report r("construct lie3", c.file.basis);
  r.check("Jacobi identity", check_jacobi(L));
  construct_checks(
      r, c, lie_to_3lie(L, f), [&](const Matrix& R, const Scalar& l) { return check_mrb_on_lie(L, R, l); },
      [&](const Matrix& R, const Scalar& l, ResidualForm form) { return lie_compatibility_residual(L, f, R, l, form); });
  return r;
}

Report construct_prelie(const Ctx& c) {
  const PreLieAlgebra P = to_prelie(c.file);
  const TraceFunctional f = functional(c);
  Report r("construct prelie", c.file.basis);
  r.check("left symmetry", check_left_symmetry(P));
  construct_checks(
      r, c, lie_to_3lie(prelie_to_lie(P), f),
      [&](const Matrix& R, const Scalar& l) { return check_mrb_on_prelie(P, R, l); },
      [&](const Matrix& R, const Scalar& l, ResidualForm form) { return prelie_compatibility_residual(P, f, R, l, form); });
  return r;
}

Report construct_deriv3(const Ctx& c) {
  const CommAssocWithDerivation C = to_commassoc(c.file);
  Report r("construct deriv3", c.file.basis);
  r.check("commutative associative with derivation", check_commassoc_derivation(C));
  construct_checks(
      r, c, commassoc_deriv_to_3lie(C), [&](const Matrix& R, const Scalar& l) { return check_mrb_on_commassoc(C, R, l); },
      [&](const Matrix& R, const Scalar& l, ResidualForm form) { return derivation_compatibility_residual(C, R, l, form); });
  return r;
}

//! ----- cohomology -----

Report cohomology_cmd(const Ctx& c) {
  const WeightedOperator w = absolute(c);
  Report r("cohomology", c.file.basis);
  const OperatorComplex C(w, c.o.budget);
  for (int n = 1; n < c.o.max_degree; ++n)
    r.check("D_R o D_R = 0 (degree " + std::to_string(n) + ")", (C.differential(n + 1) * C.differential(n)).is_zero());
  json table = json::array();
  for (const auto& row : cohomology_dims(w, c.o.max_degree, c.o.budget))
    table.push_back({{"n", row.n}, {"C", row.dim_c}, {"Z", row.dim_z}, {"B", row.dim_b}, {"H", row.dim_h}});
  r.data()["table"] = table;
  return r;
}

//! ----- deform -----

Report deform_check(const Ctx& c) {
  const WeightedOperator w = absolute(c);
  const LinearDeformation d{w, direction(c, w.algebra.dim())};
  const Verdict coef = check_linear_deformation(d);
  const Verdict sampled = check_linear_deformation_by_specialization(d);
  Report r("deform check", c.file.basis);
  r.check("deformation (coefficients)", coef);
  r.check("deformation (specialization)", sampled);
  r.check("oracles agree", coef.ok == sampled.ok);
  if (coef.ok) r.data()["cocycle"] = deformation_is_cocycle(d);
  return r;
}

Report deform_nijenhuis(const Ctx& c) {
  const WeightedOperator w = absolute(c);
  Report r("deform nijenhuis", c.file.basis);
  if (c.o.X) {
    r.check("Nijenhuis element", check_nijenhuis_element(w, wedge_vector(c, w.algebra.dim())));
    return r;
  }
  const auto found = nijenhuis_sweep(w, values(c), c.o.budget);
  json out = json::array();
  for (const auto& X : found) out.push_back(to_json(X));
  r.data()["count"] = found.size();
  r.data()["elements"] = out;
  return r;
}

Report deform_trivialize(const Ctx& c) {
  const WeightedOperator w = absolute(c);
  const Vec X = wedge_vector(c, w.algebra.dim());
  const NijenhuisElement e(w, X);
  const LinearDeformation d = trivial_deformation_from_nijenhuis(e);
  const LinearDeformation zero{w, Matrix(w.algebra.dim(), w.algebra.dim())};
  Report r("deform trivialize", c.file.basis);
  r.check("deformation", check_linear_deformation(d));
  r.check("cocycle", deformation_is_cocycle(d));
  r.check("equivalent to the zero deformation", check_equivalence(d, zero, X));
  r.check("ad_X Nijenhuis on the induced algebra", check_adX_nijenhuis_on_induced(e));
  r.data()["direction"] = to_json(d.direction);
  return r;
}

Report deform_omega(const Ctx& c) {
  const WeightedOperator w = absolute(c);
  const LinearDeformation d{w, direction(c, w.algebra.dim())};
  const OmegaReport o = omega_from_direction(d);
  Report r("deform omega", c.file.basis);
  r.check("quadratic term vanishes", o.matches_expansion);
  r.check("fundamental identity", o.fundamental_identity);
  json entries = json::array();
  const int n = o.omega.n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec v(o.omega.m);
        for (int q = 0; q < o.omega.m; ++q) v[q] = o.omega.at(i, j, k, q);
        if (!is_zero(v)) entries.push_back({{"indices", {i + 1, j + 1, k + 1}}, {"value", to_json(v)}});
      }
  r.data()["omega"] = entries;
  return r;
}

//! ----- linf -----

Report linf_mc(const Ctx& c) {
  MCReport m;
  Verdict direct;
  if (c.o.variant == "absolute") {
    const WeightedOperator w = absolute(c);
    m = mc_check_absolute(w);
    direct = check_mrb_absolute(w);
  } else {
    RelativeMRBDatum d = relative(c);
    if (c.o.variant == "relative-modified") {
      m = mc_check_relative_modified(d);
    } else {
      m = mc_check_relative_rb(d);
      d.zeta = zero_representation(d.h, d.g.dim());
    }
    direct = check_mrb_relative(d);
  }
  Report r("linf mc-check " + c.o.variant);
  r.check("Maurer-Cartan", m.ok);
  r.check("direct check", direct);
  r.check("closed forms", m.closed_forms_agree);
  json nonzero = json::array();
  for (size_t k = 0; k < m.terms.size(); ++k)
    if (!m.terms[k].is_zero()) nonzero.push_back(k + 1);
  r.data()["nonzero_arities"] = nonzero;
  return r;
}

Report linf_twist(const Ctx& c) {
  const WeightedOperator w = absolute(c);
  const int n = w.algebra.dim();
  const TwistedLinf tw(DerivedLinf(SumSpace{n, n}), absolute_mc_element(w));
  const OperatorComplex C(w, c.o.budget);
  Report r("linf twist", c.file.basis);
  std::vector<Matrix> M;
  json cmp = json::array();
  for (int s = 0; s <= c.o.max_slots; ++s) {
    M.push_back(tw.differential_matrix(s));
    const Matrix D = C.differential(s + 2);
    const char* rel = M.back() == D ? "equal" : M.back() == -D ? "negated" : "different";
    cmp.push_back({{"degree", s + 2}, {"relation", rel}});
  }
  for (int s = 0; s < c.o.max_slots; ++s)
    r.check("l1 o l1 = 0 (degree " + std::to_string(s + 2) + ")", (M[s + 1] * M[s]).is_zero());
  r.data()["comparison_with_D_R"] = cmp;
  return r;
}

Cochain random_cochain(std::mt19937& g, int d, int slots) {
  Cochain c(d, d, slots);
  std::uniform_int_distribution<int> u(-2, 2);
  for (auto& x : c.flat()) x = Scalar(u(g));
  return c;
}

Report linf_bracket(const Ctx& c) {
  const ThreeLieAlgebra A = algebra(c);
  const Cochain mu = bracket_cochain(A);
  const bool vanishes = graded_bracket(mu, mu).is_zero();
  const Verdict fi = check_fundamental_identity(A);
  Report r("linf bracket", c.file.basis);
  r.check("[mu,mu] = 0", vanishes);
  r.check("fundamental identity", fi);
  r.check("[mu,mu] = 0 iff fundamental identity", vanishes == fi.ok);
  if (c.o.random > 0) {
    std::mt19937 g(c.o.seed);
    std::uniform_int_distribution<int> arity(0, 1);
    bool jacobi = true;
    for (int t = 0; t < c.o.random; ++t) {
      const int p = arity(g), q = arity(g), s = arity(g);
      const Cochain P = random_cochain(g, 2, p), Q = random_cochain(g, 2, q), S = random_cochain(g, 2, s);
      const Scalar e_pq = (p * q) % 2 ? Scalar(-1) : Scalar(1);
      const Cochain lhs = graded_bracket(P, graded_bracket(Q, S));
      const Cochain rhs = graded_bracket(graded_bracket(P, Q), S) + e_pq * graded_bracket(Q, graded_bracket(P, S));
      jacobi = jacobi && lhs == rhs;
    }
    r.check("graded Jacobi (" + std::to_string(c.o.random) + " random triples)", jacobi);
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Modified Rota-Baxter operators on 3-Lie algebras", "mrb3"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--field", o.field, "Work over Q(sqrt d)");

  Handler chosen;
  std::string name;
  auto leaf = [&](CLI::App* parent, const std::string& sub, const std::string& help, Handler h) {
    CLI::App* s = parent->add_subcommand(sub, help);
    s->fallthrough();
    s->add_option("file", o.file, "Algebra file")->required();
    const std::string full = parent == &app ? sub : parent->get_name() + " " + sub;
    s->callback([&chosen, &name, h, full] {
      chosen = h;
      name = full;
    });
    return s;
  };
  auto with_operator = [&](CLI::App* s) {
    s->add_option("--weight", o.weight, "Weight p/q");
    s->add_option("--operator", o.op, "Operator rows, e.g. '1,0;0,-1'");
    s->add_option("--diag", o.diag, "Diagonal operator, e.g. '1,1,-1'");
    return s;
  };

  CLI::App* check = app.add_subcommand("check", "Verify identities");
  check->require_subcommand(1);
  check->fallthrough();
  leaf(check, "fi", "Fundamental identity", check_fi);
  leaf(check, "rep", "Representation axioms", check_rep);
  leaf(check, "action", "Action axioms of a relative datum", check_action_cmd);
  with_operator(leaf(check, "rb", "Rota-Baxter identity", check_rb_cmd));
  with_operator(leaf(check, "mrb", "Modified Rota-Baxter identity", check_mrb_cmd));
  with_operator(leaf(check, "nijenhuis-op", "Nijenhuis operator", check_nijenhuis_cmd));
  with_operator(leaf(check, "product", "Product structure", check_product_cmd));

  with_operator(leaf(&app, "induce", "Induced 3-Lie algebra", induce_cmd));
  CLI::App* search = with_operator(leaf(&app, "search", "Search modified Rota-Baxter operators", search_cmd));
  search->add_option("--values", o.values, "Candidate entries, e.g. '-1,0,1'");
  search->add_option("--shape", o.shape, "Matrix shape")->check(CLI::IsMember({"full", "diag", "tri"}));
  search->add_option("--budget", o.budget, "Candidate budget");

  CLI::App* construct = app.add_subcommand("construct", "Build 3-Lie algebras");
  construct->require_subcommand(1);
  construct->fallthrough();
  for (auto [sub, h] : {std::pair<const char*, Handler>{"lie3", construct_lie3}, {"prelie", construct_prelie},
                        {"deriv3", construct_deriv3}}) {
    CLI::App* s = with_operator(leaf(construct, sub, "Construction from a binary algebra", h));
    s->add_flag("--literal", o.literal, "Use the literal compatibility residual");
  }

  CLI::App* coh = with_operator(leaf(&app, "cohomology", "Cohomology dimensions", cohomology_cmd));
  coh->add_option("--max-degree", o.max_degree, "Highest degree")->check(CLI::Range(1, 6));
  coh->add_option("--budget", o.budget, "Largest cochain space");

  CLI::App* deform = app.add_subcommand("deform", "Linear deformations");
  deform->require_subcommand(1);
  deform->fallthrough();
  with_operator(leaf(deform, "check", "Check R + tR^", deform_check))->add_option("--direction", o.direction, "R^");
  CLI::App* nij = with_operator(leaf(deform, "nijenhuis", "Nijenhuis elements", deform_nijenhuis));
  nij->add_option("--X", o.X, "Wedge coordinates");
  nij->add_option("--values", o.values, "Sweep coefficients");
  nij->add_option("--budget", o.budget, "Candidate budget");
  with_operator(leaf(deform, "trivialize", "Trivial deformation", deform_trivialize))->add_option("--X", o.X, "Wedge coordinates");
  with_operator(leaf(deform, "omega", "Deformed bracket", deform_omega))->add_option("--direction", o.direction, "R^");

  CLI::App* linf = app.add_subcommand("linf", "L-infinity computations");
  linf->require_subcommand(1);
  linf->fallthrough();
  with_operator(leaf(linf, "mc-check", "Maurer-Cartan check", linf_mc))
      ->add_option("--variant", o.variant, "Variant")
      ->required()
      ->check(CLI::IsMember({"relative-modified", "absolute", "relative-rb"}));
  CLI::App* tw = with_operator(leaf(linf, "twist", "Twisted differential", linf_twist));
  tw->add_option("--max-slots", o.max_slots, "Highest slot count")->check(CLI::Range(0, 3));
  tw->add_option("--budget", o.budget, "Largest cochain space");
  CLI::App* br = leaf(linf, "bracket", "Graded bracket of the structure", linf_bracket);
  br->add_option("--random", o.random, "Random graded Jacobi samples");
  br->add_option("--seed", o.seed, "Seed");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? pass : input_error;
  }

  const Format fmt = o.format == "json" ? Format::json : Format::text;
  auto fail = [&](const std::string& msg, const std::string& invariant) {
    (fmt == Format::json ? out : err) << render_error(name, msg, fmt, invariant);
    return input_error;
  };
  try {
    const std::string text = read_text(o.file);
    const std::optional<long> field = o.field ? o.field : peek_field(text);
    std::unique_ptr<QuadraticSession> session;
    if (field) session = std::make_unique<QuadraticSession>(*field);
    Ctx ctx{o, {}};
    try {
      ctx.file = parse_algebra(text);
    } catch (const InputError& e) {
      throw InputError(o.file + ": " + e.what());
    }
    const Report r = chosen(ctx);
    out << r.render(fmt);
    return r.exit_code();
  } catch (const PreconditionError& e) {
    return fail(e.what(), e.invariant());
  } catch (const BudgetError& e) {
    return fail(e.what(), "budget");
  } catch (const InputError& e) {
    return fail(e.what(), "");
  }
}

}  // namespace mrb::cli
