#include "report_format.hpp"

namespace homnambu::cli {

namespace {

using ojson = nlohmann::ordered_json;

ojson tuple_json(const CheckReport& r, const Tuple& t) {
  ojson a = ojson::array();
  for (auto i : t) a.push_back(i < r.space().dim() ? r.space().label(i) : std::to_string(i));
  return a;
}

std::string tuple_text(const CheckReport& r, const Tuple& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) s += ",";
    s += t[k] < r.space().dim() ? r.space().label(t[k]) : std::to_string(t[k]);
  }
  return s + ")";
}

ojson check_json(const CheckReport& r) {
  ojson c;
  c["identity"] = r.identity();
  c["passed"] = r.passed();
  c["tuples_checked"] = r.tuples_checked();
  c["failures"] = r.failures();
  ojson ex = ojson::array();
  for (const auto& e : r.counterexamples())
    ex.push_back(ojson{{"tuple", tuple_json(r, e.tuple)}, {"lhs", r.format_value(e.lhs)}, {"rhs", r.format_value(e.rhs)}});
  c["counterexamples"] = std::move(ex);
  c["notes"] = r.notes();
  return c;
}

void check_text(const CheckReport& r, const std::string& indent, std::vector<std::string>& out) {
  std::string line = indent + (r.passed() ? "[PASS] " : "[FAIL] ") + r.identity() + "  checked " +
                     std::to_string(r.tuples_checked());
  if (!r.passed()) line += ", failures " + std::to_string(r.failures());
  out.push_back(std::move(line));
  for (const auto& e : r.counterexamples())
    out.push_back(indent + "    " + tuple_text(r, e.tuple) + ": lhs = " + r.format_value(e.lhs) +
                  ", rhs = " + r.format_value(e.rhs));
  if (r.failures() > r.counterexamples().size())
    out.push_back(indent + "    ... " + std::to_string(r.failures() - r.counterexamples().size()) + " more");
  for (const auto& n : r.notes()) out.push_back(indent + "    note: " + n);
}

}  // namespace

CommandReport::CommandReport(std::string command, std::string source)
    : command_(std::move(command)), source_(std::move(source)) {}

void CommandReport::add(const Verification& v) {
  passed_ = passed_ && v.passed();
  text_.push_back(std::string(v.passed() ? "[PASS] " : "[FAIL] ") + v.name);
  for (const auto& c : v.checks) check_text(c, "  ", text_);
  for (const auto& n : v.notes) text_.push_back("  note: " + n);
  ojson j;
  j["kind"] = "verification";
  j["name"] = v.name;
  j["passed"] = v.passed();
  ojson checks = ojson::array();
  for (const auto& c : v.checks) checks.push_back(check_json(c));
  j["checks"] = std::move(checks);
  j["notes"] = v.notes;
  items_.push_back(std::move(j));
}

void CommandReport::add(const CheckReport& r) {
  passed_ = passed_ && r.passed();
  check_text(r, "", text_);
  ojson j{{"kind", "check"}};
  j.update(check_json(r));
  items_.push_back(std::move(j));
}

void CommandReport::add_info(const std::string& key, nlohmann::ordered_json value, std::string text) {
  text_.push_back(key + ": " + text);
  items_.push_back(ojson{{"kind", "info"}, {"key", key}, {"value", std::move(value)}});
}

void CommandReport::add_map(const std::string& key, const GradedLinearMap& f) {
  add_info(key, ojson{{"parity", f.parity().value()}, {"matrix", matrix_json(f)}}, f.format());
}

void CommandReport::add_verdict(const std::string& name, bool ok, std::string detail) {
  passed_ = passed_ && ok;
  text_.push_back(std::string(ok ? "[PASS] " : "[FAIL] ") + name + (detail.empty() ? "" : "  " + detail));
  items_.push_back(ojson{{"kind", "verdict"}, {"name", name}, {"passed", ok}, {"detail", std::move(detail)}});
}

std::string CommandReport::render(Style style) const {
  if (style == Style::structured) {
    ojson j;
    j["command"] = command_;
    j["source"] = source_;
    j["passed"] = passed_;
    j["items"] = items_;
    j["notes"] = notes_;
    return j.dump(2) + "\n";
  }
  std::string s = command_ + " " + source_ + "\n";
  for (const auto& l : text_) s += l + "\n";
  for (const auto& n : notes_) s += "note: " + n + "\n";
  s += passed_ ? "result: pass\n" : "result: fail\n";
  return s;
}

nlohmann::ordered_json matrix_json(const GradedLinearMap& f) {
  ojson rows = ojson::array();
  for (std::size_t r = 0; r < f.dim(); ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < f.dim(); ++c) row.push_back(f.entry(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace homnambu::cli
