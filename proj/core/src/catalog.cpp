#include "homnambu/catalog.hpp"

#include <algorithm>
#include <functional>

#include "homnambu/errors.hpp"

namespace homnambu {

namespace {

using Builder = std::function<AlgebraDocument(const ParamMap&)>;

struct Registered {
  CatalogEntry entry;
  Builder build;
};

const std::vector<std::string> kHomLieProfile{"grading", "super_skew", "hom_jacobi", "multiplicative"};
const std::vector<std::string> kBrokenJacobiProfile{"grading", "super_skew", "multiplicative"};

SuperSpace space_of(std::initializer_list<std::pair<const char*, int>> basis) {
  std::vector<SuperSpace::BasisVector> vs;
  for (const auto& [label, p] : basis) vs.push_back({label, Parity(p)});
  return SuperSpace(std::move(vs));
}

Element vec(const SuperSpace& s, std::initializer_list<std::pair<const char*, Scalar>> terms) {
  Element e(s.dim());
  for (const auto& [label, c] : terms) e[s.index_of(label)] += c;
  return e;
}

Tuple tup(const SuperSpace& s, std::initializer_list<const char*> labels) {
  Tuple t;
  for (const auto* l : labels) t.push_back(s.index_of(l));
  return t;
}

AlgebraDocument binary(std::string name, const SuperSpace& s, const std::vector<std::pair<Tuple, Element>>& gens,
                       const std::vector<Scalar>& alpha_diag) {
  return AlgebraDocument{std::move(name),
                         HomSuperAlgebra::with_alpha(NaryBracket::from_generators(s, 2, gens),
                                                     GradedLinearMap::diagonal(s, alpha_diag)),
                         {},
                         {}};
}

std::string instance_name(std::string_view base, const ParamMap& params) {
  std::string out(base);
  char sep = '?';
  for (const auto& [k, v] : params) {
    out += sep + k + "=" + v.str();
    sep = ',';
  }
  return out;
}

const std::vector<Registered>& registry() {
  static const std::vector<Registered> entries = [] {
    std::vector<Registered> r;

    r.push_back({{"g1_0_2", "two odd generators e1, e2; zero bracket; alpha = diag(1, a)", {{"a", "any"}},
                  kHomLieProfile},
                 [](const ParamMap& p) {
                   const auto s = space_of({{"e1", 1}, {"e2", 1}});
                   return binary("g1_0_2", s, {}, {1, p.at("a")});
                 }});

    r.push_back({{"g2_1_1", "even e0, odd e1; zero bracket; alpha = diag(1, a)", {{"a", "any"}}, kHomLieProfile},
                 [](const ParamMap& p) {
                   const auto s = space_of({{"e0", 0}, {"e1", 1}});
                   return binary("g2_1_1", s, {}, {1, p.at("a")});
                 }});

    r.push_back({{"g3_1_1", "even e0, odd e1; [e0,e1] = e1; alpha = diag(1, a)", {{"a", "any"}}, kHomLieProfile},
                 [](const ParamMap& p) {
                   const auto s = space_of({{"e0", 0}, {"e1", 1}});
                   auto doc = binary("g3_1_1", s, {{tup(s, {"e0", "e1"}), vec(s, {{"e1", 1}})}}, {1, p.at("a")});
                   doc.operators.push_back({"der_e1", OperatorKind::derivation,
                                            GradedLinearMap::diagonal(s, {0, 1}), 0, Scalar()});
                   return doc;
                 }});

    r.push_back({{"g4_1_1", "even e0, odd e1; [e0,e1] = e1; alpha = diag(a, 0)", {{"a", "not 0 or 1"}},
                  kHomLieProfile},
                 [](const ParamMap& p) {
                   const auto s = space_of({{"e0", 0}, {"e1", 1}});
                   return binary("g4_1_1", s, {{tup(s, {"e0", "e1"}), vec(s, {{"e1", 1}})}}, {p.at("a"), 0});
                 }});

    r.push_back({{"g5_1_1", "even e0, odd e1; [e1,e1] = e0; alpha = diag(a^2, a)", {{"a", "nonzero"}},
                  kHomLieProfile},
                 [](const ParamMap& p) {
                   const auto s = space_of({{"e0", 0}, {"e1", 1}});
                   const Scalar a = p.at("a");
                   auto doc = binary("g5_1_1", s, {{tup(s, {"e1", "e1"}), vec(s, {{"e0", 1}})}}, {a * a, a});
                   doc.operators.push_back({"der_diag", OperatorKind::derivation,
                                            GradedLinearMap::diagonal(s, {2, 1}), 0, Scalar()});
                   doc.operators.push_back({"rb_half", OperatorKind::rota_baxter,
                                            GradedLinearMap::diagonal(s, {Scalar(1, 2), 1}), 0, Scalar()});
                   return doc;
                 }});

    r.push_back({{"osp12",
                  "orthosymplectic X, Y, H even and F, G odd, with bracket alpha o [,] for "
                  "alpha = diag(lambda^2, lambda^-2, 1, lambda^-1, lambda)",
                  {{"lambda", "nonzero"}},
                  kHomLieProfile},
                 [](const ParamMap& p) {
                   const auto s = space_of({{"X", 0}, {"Y", 0}, {"H", 0}, {"F", 1}, {"G", 1}});
                   const Scalar l = p.at("lambda");
                   const Scalar l2 = l * l;
                   const Scalar il = l.inverse();
                   const Scalar il2 = il * il;
                   std::vector<std::pair<Tuple, Element>> g{
                       {tup(s, {"H", "X"}), vec(s, {{"X", 2 * l2}})},
                       {tup(s, {"H", "Y"}), vec(s, {{"Y", Scalar(-2) * il2}})},
                       {tup(s, {"X", "Y"}), vec(s, {{"H", 1}})},
                       {tup(s, {"Y", "G"}), vec(s, {{"F", il}})},
                       {tup(s, {"X", "F"}), vec(s, {{"G", l}})},
                       {tup(s, {"H", "F"}), vec(s, {{"F", -il}})},
                       {tup(s, {"H", "G"}), vec(s, {{"G", l}})},
                       {tup(s, {"G", "F"}), vec(s, {{"H", 1}})},
                       {tup(s, {"G", "G"}), vec(s, {{"X", Scalar(-2) * l2}})},
                       {tup(s, {"F", "F"}), vec(s, {{"Y", 2 * il2}})},
                   };
                   return binary("osp12", s, g, {l2, il2, 1, il, l});
                 }});

    r.push_back({{"L1",
                  "even e1, e2 and odd e3; [e2,e3] = e3, [e3,e3] = e1; alpha = diag(a^2, 1, a); "
                  "cochain phi(e2) = b; operator proj_e1. The "
                  "bracket is not Hom-Jacobi: the cycle on (e2,e3,e3) leaves -2a*e1",
                  {{"a", "nonzero"}, {"b", "any"}},
                  kBrokenJacobiProfile},
                 [](const ParamMap& p) {
                   const auto s = space_of({{"e1", 0}, {"e2", 0}, {"e3", 1}});
                   const Scalar a = p.at("a");
                   auto doc = binary("L1", s,
                                     {{tup(s, {"e2", "e3"}), vec(s, {{"e3", 1}})},
                                      {tup(s, {"e3", "e3"}), vec(s, {{"e1", 1}})}},
                                     {a * a, 1, a});
                   doc.cochains.push_back(SuperCochain::from_generators(s, 1, {{tup(s, {"e2"}), p.at("b")}}));
                   doc.operators.push_back({"proj_e1", OperatorKind::rota_baxter,
                                            GradedLinearMap::diagonal(s, {1, 0, 0}), 0, Scalar()});
                   return doc;
                 }});

    r.push_back({{"L2",
                  "even e1 and odd e2, e3; [e1,e3] = b*e2, [e2,e3] = c*e1; alpha = diag(a, a, 1). The "
                  "bracket is not Hom-Jacobi unless b*c = 0: the cycles on (e1,e3,e3) and (e2,e3,e3) leave "
                  "-2bc*e1 and 2bc*e2",
                  {{"a", "nonzero"}, {"b", "any"}, {"c", "any"}},
                  kBrokenJacobiProfile},
                 [](const ParamMap& p) {
                   const auto s = space_of({{"e1", 0}, {"e2", 1}, {"e3", 1}});
                   const Scalar a = p.at("a");
                   return binary("L2", s,
                                 {{tup(s, {"e1", "e3"}), vec(s, {{"e2", p.at("b")}})},
                                  {tup(s, {"e2", "e3"}), vec(s, {{"e1", p.at("c")}})}},
                                 {a, a, 1});
                 }});
    return r;
  }();
  return entries;
}

const Registered& find(std::string_view name) {
  for (const auto& r : registry()) {
    if (r.entry.name == name) return r;
  }
  throw InputError("unknown catalog entry '" + std::string(name) + "'");
}

std::string canonical_param(std::string_view key) {
  if (key == "\xCE\xBB") return "lambda";  // λ
  return std::string(key);
}

void check_constraint(const ParameterSpec& spec, const Scalar& v) {
  if (spec.constraint == "nonzero" && v.is_zero())
    throw InputError("parameter " + spec.name + " must be nonzero");
  if (spec.constraint == "not 0 or 1" && (v.is_zero() || v == Scalar(1)))
    throw InputError("parameter " + spec.name + " must differ from 0 and 1");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_list() {
  static const std::vector<CatalogEntry> list = [] {
    std::vector<CatalogEntry> out;
    for (const auto& r : registry()) out.push_back(r.entry);
    return out;
  }();
  return list;
}

const CatalogEntry& catalog_entry(std::string_view name) { return find(name).entry; }

AlgebraDocument catalog_build(std::string_view name, const ParamMap& params) {
  const auto& reg = find(name);
  ParamMap normalized;
  for (const auto& [k, v] : params) normalized[canonical_param(k)] = v;
  for (const auto& [k, v] : normalized) {
    const bool known = std::any_of(reg.entry.parameters.begin(), reg.entry.parameters.end(),
                                   [&](const ParameterSpec& s) { return s.name == k; });
    if (!known) throw InputError("catalog entry " + reg.entry.name + " has no parameter '" + k + "'");
  }
  for (const auto& spec : reg.entry.parameters) {
    auto it = normalized.find(spec.name);
    if (it == normalized.end()) throw InputError("catalog entry " + reg.entry.name + " needs parameter " + spec.name);
    check_constraint(spec, it->second);
  }
  AlgebraDocument doc = reg.build(normalized);
  doc.name = instance_name(reg.entry.name, normalized);
  return doc;
}

ParamMap parse_params(std::string_view text) {
  ParamMap out;
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InputError("parameter '" + std::string(item) + "' is not k=v");
    const std::string key = canonical_param(trim(item.substr(0, eq)));
    if (key.empty()) throw InputError("empty parameter name");
    if (!out.emplace(key, Scalar::parse(trim(item.substr(eq + 1)))).second)
      throw InputError("parameter " + key + " given twice");
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

bool is_catalog_ref(std::string_view text) { return text.starts_with("catalog:"); }

CatalogRef parse_catalog_ref(std::string_view text) {
  if (!is_catalog_ref(text)) throw InputError("not a catalog reference: " + std::string(text));
  text.remove_prefix(8);
  const auto q = text.find('?');
  CatalogRef ref{std::string(text.substr(0, q)), {}};
  if (q != std::string_view::npos) ref.params = parse_params(text.substr(q + 1));
  find(ref.name);
  return ref;
}

}  // namespace homnambu
