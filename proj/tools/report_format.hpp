#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "homnambu/linear_map.hpp"
#include "homnambu/report.hpp"

namespace homnambu::cli {

enum class Style { text, structured };

// Everything one command prints: named results in order, then free-form notes.
class CommandReport {
 public:
  CommandReport(std::string command, std::string source);

  void add(const Verification& v);
  void add(const CheckReport& r);
  void add_info(const std::string& key, nlohmann::ordered_json value, std::string text);
  void add_map(const std::string& key, const GradedLinearMap& f);
  void add_note(std::string note) { notes_.push_back(std::move(note)); }
  // A result that is not an identity check but still decides the exit code.
  void add_verdict(const std::string& name, bool ok, std::string detail);

  bool passed() const { return passed_; }
  std::string render(Style style) const;

 private:
  std::string command_;
  std::string source_;
  bool passed_ = true;
  std::vector<std::string> text_;
  nlohmann::ordered_json items_ = nlohmann::ordered_json::array();
  std::vector<std::string> notes_;
};

nlohmann::ordered_json matrix_json(const GradedLinearMap& f);

}  // namespace homnambu::cli
