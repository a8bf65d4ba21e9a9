#include "homnambu/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace homnambu {

CheckReport::CheckReport(std::string identity, SuperSpace space, CheckOptions options)
    : identity_(std::move(identity)), space_(std::move(space)), options_(options) {}

CheckReport CheckReport::scalar_valued(std::string identity, SuperSpace space, CheckOptions options) {
  CheckReport r(std::move(identity), std::move(space), options);
  r.scalar_ = true;
  return r;
}

void CheckReport::record_failure(const Tuple& tuple, const Element& lhs, const Element& rhs) {
  ++failures_;
  const auto cap = options_.max_counterexamples;
  if (cap == 0) return;
  if (examples_.size() == cap && !(tuple < examples_.back().tuple)) return;
  auto it = std::upper_bound(examples_.begin(), examples_.end(), tuple,
                             [](const Tuple& t, const Counterexample& c) { return t < c.tuple; });
  examples_.insert(it, Counterexample{tuple, lhs, rhs});
  if (examples_.size() > cap) examples_.pop_back();
}

void CheckReport::record_failure(const Tuple& tuple, const Scalar& lhs, const Scalar& rhs) {
  record_failure(tuple, Element(std::vector<Scalar>{lhs}), Element(std::vector<Scalar>{rhs}));
}

void CheckReport::merge(const CheckReport& other) {
  const auto before = failures_;
  for (const auto& c : other.examples_) record_failure(c.tuple, c.lhs, c.rhs);
  failures_ = before + other.failures_;
  checked_ += other.checked_;
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

std::string CheckReport::format_value(const Element& v) const {
  if (scalar_) return v.dim() == 1 ? v[0].str() : "?";
  return v.format(space_);
}

bool Verification::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed(); });
}

const CheckReport& Verification::check(const std::string& identity) const {
  for (const auto& c : checks) {
    if (c.identity() == identity) return c;
  }
  throw std::out_of_range("no check named '" + identity + "' in " + name);
}

}  // namespace homnambu
