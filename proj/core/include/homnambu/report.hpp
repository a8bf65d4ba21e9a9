#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homnambu/element.hpp"
#include "homnambu/space.hpp"

namespace homnambu {

struct CheckOptions {
  std::size_t max_counterexamples = 16;
};

struct Counterexample {
  Tuple tuple;
  Element lhs;
  Element rhs;
};

// Outcome of one exhaustively checked identity. Keeps the lexicographically smallest
// failing tuples up to the cap; the total failure count is always exact.
class CheckReport {
 public:
  CheckReport(std::string identity, SuperSpace space, CheckOptions options = {});
  // Values are scalars rather than vectors (cochain identities); stored as 1-dim elements.
  static CheckReport scalar_valued(std::string identity, SuperSpace space, CheckOptions options = {});

  void record_failure(const Tuple& tuple, const Element& lhs, const Element& rhs);
  void record_failure(const Tuple& tuple, const Scalar& lhs, const Scalar& rhs);
  void add_checked(std::size_t count = 1) { checked_ += count; }
  void add_note(std::string note) { notes_.push_back(std::move(note)); }
  // Folds another report of the same identity into this one (used when splitting work).
  void merge(const CheckReport& other);

  bool passed() const { return failures_ == 0; }
  const std::string& identity() const { return identity_; }
  const std::vector<Counterexample>& counterexamples() const { return examples_; }
  std::size_t failures() const { return failures_; }
  std::size_t tuples_checked() const { return checked_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const SuperSpace& space() const { return space_; }
  bool is_scalar_valued() const { return scalar_; }
  std::size_t cap() const { return options_.max_counterexamples; }

  std::string format_value(const Element& v) const;

 private:
  std::string identity_;
  SuperSpace space_;
  CheckOptions options_;
  bool scalar_ = false;
  std::vector<Counterexample> examples_;
  std::size_t failures_ = 0;
  std::size_t checked_ = 0;
  std::vector<std::string> notes_;
};

// A named group of identities that must all hold.
struct Verification {
  std::string name;
  std::vector<CheckReport> checks;
  std::vector<std::string> notes;

  bool passed() const;
  const CheckReport& check(const std::string& identity) const;  // throws std::out_of_range
};

}  // namespace homnambu
