#include "homnambu/algebra_file.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "homnambu/axioms.hpp"
#include "homnambu/errors.hpp"
#include "homnambu/tuples.hpp"

namespace homnambu {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

Scalar scalar_from(const json& v, const char* what) {
  if (v.is_string()) return Scalar::parse(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<long>());
  throw InputError(std::string(what) + " must be a fraction string or an integer");
}

std::size_t count_from(const json& v, const char* what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
    throw InputError(std::string(what) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

Parity parity_from(const json& v) {
  const auto p = count_from(v, "parity");
  if (p > 1) throw InputError("parity must be 0 or 1");
  return Parity(static_cast<int>(p));
}

SuperSpace parse_basis(const json& basis) {
  if (!basis.is_array() || basis.empty()) throw InputError("basis must be a nonempty array");
  std::vector<SuperSpace::BasisVector> vs;
  for (const auto& b : basis) vs.push_back({field(b, "label").get<std::string>(), parity_from(field(b, "parity"))});
  return SuperSpace(std::move(vs));
}

Matrix parse_matrix(const json& m, std::size_t d) {
  if (!m.is_array() || m.size() != d) throw InputError("matrix must have " + std::to_string(d) + " rows");
  Matrix out(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    if (!m[r].is_array() || m[r].size() != d)
      throw InputError("matrix row " + std::to_string(r) + " must have " + std::to_string(d) + " entries");
    for (std::size_t c = 0; c < d; ++c) out(r, c) = scalar_from(m[r][c], "matrix entry");
  }
  return out;
}

Tuple parse_args(const json& args, const SuperSpace& space, std::size_t arity) {
  if (!args.is_array() || args.size() != arity)
    throw InputError("args must list exactly " + std::to_string(arity) + " labels");
  Tuple t;
  for (const auto& a : args) t.push_back(space.index_of(a.get<std::string>()));
  return t;
}

Element parse_value(const json& v, const SuperSpace& space) {
  if (!v.is_object()) throw InputError("bracket value must be an object of label: fraction");
  Element e(space.dim());
  for (auto it = v.begin(); it != v.end(); ++it) e[space.index_of(it.key())] += scalar_from(it.value(), "coefficient");
  return e;
}

std::string fraction(const Scalar& s) { return s.str(); }

ojson matrix_json(const GradedLinearMap& f) {
  ojson rows = ojson::array();
  for (std::size_t r = 0; r < f.dim(); ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < f.dim(); ++c) row.push_back(fraction(f.entry(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson args_json(const SuperSpace& space, std::span<const std::size_t> t) {
  ojson a = ojson::array();
  for (auto i : t) a.push_back(space.label(i));
  return a;
}

// Top-level keys one per line; array members one per line, each printed compactly.
std::string layout(const ojson& doc) {
  std::string s = "{\n";
  std::size_t k = 0;
  for (auto it = doc.begin(); it != doc.end(); ++it, ++k) {
    s += "  " + ojson(it.key()).dump() + ": ";
    const ojson& v = it.value();
    if (v.is_array() && !v.empty()) {
      s += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) s += "    " + v[i].dump() + (i + 1 < v.size() ? ",\n" : "\n");
      s += "  ]";
    } else {
      s += v.dump();
    }
    s += k + 1 < doc.size() ? ",\n" : "\n";
  }
  return s + "}\n";
}

}  // namespace

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::derivation: return "derivation";
    case OperatorKind::rota_baxter: return "rota_baxter";
    case OperatorKind::map: return "map";
  }
  return "map";
}

OperatorKind parse_operator_kind(std::string_view text) {
  if (text == "derivation") return OperatorKind::derivation;
  if (text == "rota_baxter") return OperatorKind::rota_baxter;
  if (text == "map") return OperatorKind::map;
  throw InputError("unknown operator kind '" + std::string(text) + "'");
}

const NamedOperator& AlgebraDocument::find_operator(std::string_view wanted) const {
  for (const auto& op : operators) {
    if (op.name == wanted) return op;
  }
  throw InputError("no operator named '" + std::string(wanted) + "'");
}

AlgebraDocument parse_algebra_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text, nullptr, true, true);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed algebra file: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw InputError("algebra file must hold an object");
    const std::string name = doc.value("name", std::string("unnamed"));
    const SuperSpace space = parse_basis(field(doc, "basis"));
    const std::size_t d = space.dim();
    const std::size_t arity = count_from(field(doc, "arity"), "arity");
    if (arity < 2) throw InputError("arity must be at least 2");

    const json& twists_j = field(doc, "twists");
    if (!twists_j.is_array() || twists_j.empty()) throw InputError("twists must be a nonempty array");
    const bool multiplicative = doc.value("multiplicative", false);
    std::vector<GradedLinearMap> twists;
    for (const auto& m : twists_j) twists.emplace_back(space, kEven, parse_matrix(m, d));
    if (twists.size() == 1 && arity > 2) {
      if (!multiplicative) throw InputError("a single twist for arity > 2 needs \"multiplicative\": true");
      twists.assign(arity - 1, twists.front());
    }
    if (twists.size() != arity - 1)
      throw InputError("expected " + std::to_string(arity - 1) + " twists, got " + std::to_string(twists.size()));
    if (multiplicative && std::any_of(twists.begin(), twists.end(), [&](const auto& t) { return !(t == twists[0]); }))
      throw InputError("\"multiplicative\": true needs all twists equal");

    const bool skew_complete = doc.value("skew_complete", true);
    std::vector<std::pair<Tuple, Element>> entries;
    std::set<Tuple> seen;
    for (const auto& e : field(doc, "bracket")) {
      Tuple t = parse_args(field(e, "args"), space, arity);
      if (!seen.insert(t).second) throw InputError("duplicate bracket entry " + space.format_tuple(t));
      entries.emplace_back(std::move(t), parse_value(field(e, "value"), space));
    }
    for (const auto& [t, v] : entries) {
      const auto p = v.parity(space);
      if (!p || (!v.is_zero() && *p != space.degree_of(t)))
        throw InputError("bracket value on " + space.format_tuple(t) + " breaks the grading");
    }
    NaryBracket bracket(space, arity);
    if (skew_complete) {
      bracket = NaryBracket::from_generators(space, arity, entries);
    } else {
      for (auto& [t, v] : entries) {
        if (!v.is_zero()) bracket.set(t, std::move(v));
      }
    }

    AlgebraDocument out{name, HomSuperAlgebra(std::move(bracket), std::move(twists)), {}, {}};

    if (auto it = doc.find("cochains"); it != doc.end()) {
      for (const auto& c : *it) {
        const std::size_t degree = count_from(field(c, "degree"), "degree");
        if (degree < 1) throw InputError("cochain degree must be at least 1");
        std::vector<std::pair<Tuple, Scalar>> gens;
        for (const auto& v : field(c, "values"))
          gens.emplace_back(parse_args(field(v, "args"), space, degree), scalar_from(field(v, "value"), "value"));
        out.cochains.push_back(SuperCochain::from_generators(space, degree, gens));
      }
    }
    if (auto it = doc.find("operators"); it != doc.end()) {
      std::set<std::string> names;
      for (const auto& o : *it) {
        NamedOperator op{o.value("name", "op" + std::to_string(out.operators.size())),
                         parse_operator_kind(field(o, "kind").get<std::string>()),
                         GradedLinearMap(space, o.contains("parity") ? parity_from(o["parity"]) : kEven,
                                         parse_matrix(field(o, "matrix"), d)),
                         0, Scalar()};
        if (o.contains("power")) op.power = static_cast<unsigned>(count_from(o["power"], "power"));
        if (o.contains("weight")) op.weight = scalar_from(o["weight"], "weight");
        if (!names.insert(op.name).second) throw InputError("duplicate operator name '" + op.name + "'");
        out.operators.push_back(std::move(op));
      }
    }
    return out;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed algebra file: ") + e.what());
  }
}

AlgebraDocument load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_document(buf.str());
}

std::string emit_algebra_document(const AlgebraDocument& doc) {
  const auto& alg = doc.algebra;
  const auto& space = alg.space();
  const std::size_t d = space.dim();
  ojson out;
  out["name"] = doc.name;
  ojson basis = ojson::array();
  for (const auto& b : space.basis()) basis.push_back(ojson{{"label", b.label}, {"parity", b.parity.value()}});
  out["basis"] = std::move(basis);
  out["arity"] = alg.arity();
  out["multiplicative"] = alg.multiplicative_flag();
  ojson twists = ojson::array();
  if (alg.multiplicative_flag()) {
    twists.push_back(matrix_json(alg.twist(0)));
  } else {
    for (const auto& t : alg.twists()) twists.push_back(matrix_json(t));
  }
  out["twists"] = std::move(twists);

  const bool skew = check_super_skew(alg, CheckOptions{1}).passed();
  out["skew_complete"] = skew;
  ojson bracket = ojson::array();
  for (auto flat : alg.bracket().support()) {
    const Tuple t = tuple_at(flat, d, alg.arity());
    if (skew && !std::is_sorted(t.begin(), t.end())) continue;
    ojson value = ojson::object();
    const Element& v = alg.bracket().at_flat(flat);
    for (auto i : v.support()) value[space.label(i)] = fraction(v[i]);
    bracket.push_back(ojson{{"args", args_json(space, t)}, {"value", std::move(value)}});
  }
  out["bracket"] = std::move(bracket);

  if (!doc.cochains.empty()) {
    ojson cochains = ojson::array();
    for (const auto& c : doc.cochains) {
      ojson values = ojson::array();
      for (auto flat : c.support()) {
        const Tuple t = tuple_at(flat, d, c.degree());
        if (!std::is_sorted(t.begin(), t.end())) continue;
        values.push_back(ojson{{"args", args_json(space, t)}, {"value", fraction(c.value_flat(flat))}});
      }
      cochains.push_back(ojson{{"degree", c.degree()}, {"values", std::move(values)}});
    }
    out["cochains"] = std::move(cochains);
  }
  if (!doc.operators.empty()) {
    ojson ops = ojson::array();
    for (const auto& op : doc.operators) {
      ojson o;
      o["name"] = op.name;
      o["kind"] = std::string(to_string(op.kind));
      o["power"] = op.power;
      o["weight"] = fraction(op.weight);
      o["parity"] = op.map.parity().value();
      o["matrix"] = matrix_json(op.map);
      ops.push_back(std::move(o));
    }
    out["operators"] = std::move(ops);
  }
  return layout(out);
}

}  // namespace homnambu
