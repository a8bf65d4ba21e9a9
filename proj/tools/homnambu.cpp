#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homnambu/algebra_file.hpp"
#include "homnambu/axioms.hpp"
#include "homnambu/catalog.hpp"
#include "homnambu/derivations.hpp"
#include "homnambu/errors.hpp"
#include "homnambu/iterated.hpp"
#include "homnambu/linalg.hpp"
#include "homnambu/prelie3.hpp"
#include "homnambu/rotabaxter.hpp"
#include "report_format.hpp"

namespace {

using namespace homnambu;
using cli::CommandReport;
using cli::Style;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Common {
  std::string params;
  std::string report = "text";
  std::size_t max_counterexamples = 16;

  CheckOptions options() const { return CheckOptions{max_counterexamples}; }
  Style style() const { return report == "structured" ? Style::structured : Style::text; }
};

AlgebraDocument load_source(const std::string& source, const std::string& extra_params) {
  const ParamMap extra = parse_params(extra_params);
  if (is_catalog_ref(source)) {
    CatalogRef ref = parse_catalog_ref(source);
    for (const auto& [k, v] : extra) {
      auto [it, inserted] = ref.params.emplace(k, v);
      if (!inserted && !(it->second == v)) throw InputError("parameter " + k + " given twice with different values");
    }
    return catalog_build(ref.name, ref.params);
  }
  if (!extra.empty()) throw InputError("--params only applies to catalog sources");
  return load_algebra_file(source);
}

bool invertible(const GradedLinearMap& f) { return rank(f.matrix()) == f.dim(); }

const SuperCochain& pick_cochain(const AlgebraDocument& doc, std::size_t index) {
  if (index >= doc.cochains.size())
    throw InputError("source has " + std::to_string(doc.cochains.size()) + " cochains; index " +
                     std::to_string(index) + " requested");
  return doc.cochains[index];
}

std::vector<const NamedOperator*> pick_operators(const AlgebraDocument& doc, const std::string& name) {
  std::vector<const NamedOperator*> ops;
  if (!name.empty()) {
    ops.push_back(&doc.find_operator(name));
  } else {
    for (const auto& op : doc.operators) {
      if (op.kind == OperatorKind::rota_baxter) ops.push_back(&op);
    }
  }
  if (ops.empty()) throw InputError("source declares no Rota-Baxter operators; pass --operator");
  return ops;
}

Verification renamed(Verification v, const std::string& prefix) {
  v.name = prefix + ": " + v.name;
  return v;
}

int emit(const CommandReport& report, const Common& common) {
  std::cout << report.render(common.style());
  return report.passed() ? kPass : kFail;
}

std::string comment_block(const std::string& text) {
  std::istringstream in(text);
  std::string out;
  for (std::string line; std::getline(in, line);) out += "// " + line + "\n";
  return out;
}

int run_check(const std::string& source, const std::vector<std::string>& identities, const std::string& twist,
              const Common& common) {
  AlgebraDocument doc = load_source(source, common.params);
  HomSuperAlgebra alg = doc.algebra;
  if (twist == "identity") {
    alg = alg.with_twists(std::vector<GradedLinearMap>(alg.arity() - 1, GradedLinearMap::identity(alg.space())));
  }
  CommandReport report("check", doc.name);
  if (twist == "identity") report.add_note("twists replaced by the identity map");
  report.add(check_identities(alg, identities.empty() ? std::vector<std::string>{"all"} : identities,
                              common.options()));
  return emit(report, common);
}

int run_induce(const std::string& source, const std::string& method, std::size_t n, std::size_t cochain,
               const Common& common) {
  const AlgebraDocument doc = load_source(source, common.params);
  CommandReport report("induce", doc.name);
  std::optional<HomSuperAlgebra> induced;
  if (method == "phi") {
    const SuperCochain& phi = pick_cochain(doc, cochain);
    const Verification conditions = check_induction_conditions(phi, doc.algebra, common.options());
    if (!conditions.passed()) {
      report.add(conditions);
      std::string failing;
      for (const auto& c : conditions.checks) {
        if (!c.passed()) failing += (failing.empty() ? "" : ", ") + c.identity();
      }
      std::cerr << "error: cannot build the cochain-induced bracket: " << failing << " fails\n";
      return emit(report, common);
    }
    report.add(conditions);
    induced = phi_induced_bracket(phi, doc.algebra, n);
  } else {
    induced = iterated_bracket(doc.algebra, n);
    report.add_note(kIteratedTwistNote);
  }
  // The iterated construction promises a Hom-Nambu bracket, not a super-skew one.
  const std::vector<std::string> expected = method == "phi"
                                                ? std::vector<std::string>{"grading", "super_skew", "nambu", "multiplicative"}
                                                : std::vector<std::string>{"grading", "nambu", "multiplicative"};
  report.add(check_identities(*induced, expected, common.options()));

  AlgebraDocument out{doc.name + " " + method + " n=" + std::to_string(n), *induced, {}, doc.operators};
  std::cout << emit_algebra_document(out);
  std::cout << comment_block(report.render(Style::text));
  return report.passed() ? kPass : kFail;
}

int run_derive(const std::string& source, unsigned k, int parity, const Common& common) {
  const AlgebraDocument doc = load_source(source, common.params);
  CommandReport report("derive", doc.name);
  const auto basis = solve_derivation_space(doc.algebra, k, Parity(parity));
  report.add_info("dimension", basis.size(), std::to_string(basis.size()));
  bool all_ok = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    report.add_map("basis[" + std::to_string(i) + "]", basis[i]);
    all_ok = all_ok && check_derivation(DerivationCandidate{basis[i], k}, doc.algebra, CheckOptions{1}).passed();
  }
  report.add_verdict("solutions_are_derivations", all_ok, "");
  return emit(report, common);
}

int run_rb_verify(const std::string& source, const std::string& op_name, const std::string& lift, std::size_t n,
                  std::size_t cochain, const Common& common) {
  const AlgebraDocument doc = load_source(source, common.params);
  CommandReport report("rb-verify", doc.name);
  for (const auto* op : pick_operators(doc, op_name)) {
    const RotaBaxterOperator r(op->map, op->weight);
    report.add(renamed(check_rb_nary(r, doc.algebra, common.options()), op->name));
    if (op->weight.is_zero() && invertible(op->map)) {
      const auto eq = check_inverse_derivation_equiv(op->map, doc.algebra, common.options());
      report.add(renamed(eq.derivation, op->name + " inverse"));
      report.add_verdict(op->name + ": rota_baxter_iff_inverse_derivation", eq.agree(), "");
    }
    if (lift == "iterate") {
      const auto lifted = iterated_bracket(doc.algebra, n);
      report.add(renamed(check_rb_nary(r, lifted, common.options()), op->name + " on iterated n=" + std::to_string(n)));
    } else if (lift == "phi") {
      const auto kc = check_phi_rb_kernel_condition(op->map, pick_cochain(doc, cochain), doc.algebra, n,
                                                    common.options());
      report.add(kc.kernel_condition);
      report.add(renamed(kc.nary_rota_baxter, op->name + " on cochain-induced n=" + std::to_string(n)));
      report.add_verdict(op->name + ": kernel_condition_agrees", kc.agree(), "");
      for (const auto& note : kc.notes) report.add_note(op->name + ": " + note);
    }
  }
  return emit(report, common);
}

int run_prelie(const std::string& source, const std::string& op_name, const std::string& lift, std::size_t cochain,
               const Common& common) {
  const AlgebraDocument doc = load_source(source, common.params);
  const NamedOperator& op = doc.find_operator(op_name);
  HomSuperAlgebra alg3 = doc.algebra;
  CommandReport report("prelie", doc.name);
  if (alg3.arity() == 2) {
    alg3 = lift == "phi" ? phi_induced_bracket(pick_cochain(doc, cochain), doc.algebra, 3)
                         : iterated_bracket(doc.algebra, 3);
    report.add_note("ternary algebra obtained by the " + lift + " construction");
  } else if (alg3.arity() != 3) {
    throw InputError("prelie needs a binary or ternary source");
  }
  const RotaBaxterOperator r(op.map, op.weight);
  const TriProduct t = rb_induced_prelie(alg3, r);
  report.add(check_3_pre_lie(t, common.options()));
  report.add(sub_adjacent(t, common.options()).verification);
  report.add(check_corollary_identities(t, common.options()));
  report.add(check_rb_morphism(t, op.map, alg3, common.options()));
  if (invertible(op.map)) {
    const TriProduct image = rb_image_prelie(alg3, r);
    report.add(renamed(check_3_pre_lie(image, common.options()), "image product"));
    report.add(check_compatibility(image, alg3, common.options()));
  }
  return emit(report, common);
}

int run_catalog_list(const Common& common) {
  if (common.style() == Style::structured) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& e : catalog_list()) {
      nlohmann::ordered_json params = nlohmann::ordered_json::array();
      for (const auto& p : e.parameters) params.push_back({{"name", p.name}, {"constraint", p.constraint}});
      out.push_back({{"name", e.name}, {"parameters", params}, {"profile", e.profile}, {"description", e.description}});
    }
    std::cout << out.dump(2) << "\n";
    return kPass;
  }
  for (const auto& e : catalog_list()) {
    std::string params;
    for (const auto& p : e.parameters) params += (params.empty() ? "" : ", ") + p.name + " (" + p.constraint + ")";
    std::cout << e.name << "\n  parameters: " << params << "\n  " << e.description << "\n";
  }
  return kPass;
}

int run_catalog_show(const std::string& name, const Common& common) {
  const std::string bare = is_catalog_ref(name) ? parse_catalog_ref(name).name : name;
  const std::string ref = is_catalog_ref(name) ? name : "catalog:" + name;
  if (common.params.empty() && ref.find('?') == std::string::npos) {
    const auto& e = catalog_entry(bare);
    std::cout << e.name << "\n" << e.description << "\nparameters:";
    for (const auto& p : e.parameters) std::cout << " " << p.name << " (" << p.constraint << ")";
    std::cout << "\nprofile:";
    for (const auto& p : e.profile) std::cout << " " << p;
    std::cout << "\n";
    return kPass;
  }
  std::cout << emit_algebra_document(load_source(ref, common.params));
  return kPass;
}

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--params", common.params, "catalog parameters, k=v,...");
  cmd->add_option("--report", common.report, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  cmd->add_option("--max-counterexamples", common.max_counterexamples, "counterexamples kept per identity")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checker for graded n-ary Hom-algebras"};
  app.require_subcommand(1);
  Common common;

  std::string source;
  std::vector<std::string> identities;
  std::string twist;
  auto* check = app.add_subcommand("check", "verify defining identities");
  check->add_option("source", source, "algebra file or catalog:NAME?k=v,...")->required();
  check->add_option("--identity", identities, "identities to check (default all)")->delimiter(',');
  check->add_option("--twist", twist, "replace the twists")->check(CLI::IsMember({"identity"}));
  add_common(check, common);

  std::string method;
  std::size_t n = 3;
  std::size_t cochain = 0;
  auto* induce = app.add_subcommand("induce", "build an n-ary algebra from a binary one");
  induce->add_option("source", source)->required();
  induce->add_option("--method", method)->required()->check(CLI::IsMember({"phi", "iterate"}));
  induce->add_option("--n", n)->required()->check(CLI::Range(2, 12));
  induce->add_option("--cochain", cochain, "index of the cochain in the source");
  add_common(induce, common);

  unsigned k = 0;
  int parity = 0;
  auto* derive = app.add_subcommand("derive", "solve for alpha^k-derivations");
  derive->add_option("source", source)->required();
  derive->add_option("--k", k);
  derive->add_option("--parity", parity)->check(CLI::Range(0, 1));
  add_common(derive, common);

  std::string op_name;
  std::string lift = "none";
  auto* rb = app.add_subcommand("rb-verify", "verify Rota-Baxter operators");
  rb->add_option("source", source)->required();
  rb->add_option("--operator", op_name);
  rb->add_option("--lift", lift)->check(CLI::IsMember({"none", "iterate", "phi"}));
  rb->add_option("--n", n)->check(CLI::Range(2, 12));
  rb->add_option("--cochain", cochain);
  add_common(rb, common);

  std::string prelie_lift = "iterate";
  auto* prelie = app.add_subcommand("prelie", "3-Hom-pre-Lie structure from a Rota-Baxter operator");
  prelie->add_option("source", source)->required();
  prelie->add_option("--operator", op_name)->required();
  prelie->add_option("--lift", prelie_lift)->check(CLI::IsMember({"iterate", "phi"}));
  prelie->add_option("--cochain", cochain);
  add_common(prelie, common);

  std::string show_name;
  auto* catalog = app.add_subcommand("catalog", "built-in example algebras");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list entries");
  add_common(list, common);
  auto* show = catalog->add_subcommand("show", "describe an entry, or emit it when parameters are given");
  show->add_option("name", show_name)->required();
  add_common(show, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (check->parsed()) return run_check(source, identities, twist, common);
    if (induce->parsed()) return run_induce(source, method, n, cochain, common);
    if (derive->parsed()) return run_derive(source, k, parity, common);
    if (rb->parsed()) return run_rb_verify(source, op_name, lift, n, cochain, common);
    if (prelie->parsed()) return run_prelie(source, op_name, prelie_lift, cochain, common);
    if (list->parsed()) return run_catalog_list(common);
    if (show->parsed()) return run_catalog_show(show_name, common);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionFailed& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kFail;
  }
  return kInputError;
}
