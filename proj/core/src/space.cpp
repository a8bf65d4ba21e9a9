#include "homnambu/space.hpp"

#include <algorithm>
#include <set>

#include "homnambu/errors.hpp"

namespace homnambu {

SuperSpace::SuperSpace() : data_(std::make_shared<const Data>()) {}

SuperSpace::SuperSpace(std::vector<BasisVector> basis) {
  std::set<std::string_view> seen;
  Data d;
  for (const auto& b : basis) {
    if (b.label.empty()) throw InputError("empty basis label");
    if (!seen.insert(b.label).second) throw InputError("duplicate basis label '" + b.label + "'");
    d.parities.push_back(b.parity);
  }
  d.basis = std::move(basis);
  data_ = std::make_shared<const Data>(std::move(d));
}

std::size_t SuperSpace::dim0() const {
  return static_cast<std::size_t>(
      std::count(data_->parities.begin(), data_->parities.end(), kEven));
}

std::size_t SuperSpace::dim1() const { return dim() - dim0(); }

std::optional<std::size_t> SuperSpace::find(std::string_view label) const {
  for (std::size_t i = 0; i < data_->basis.size(); ++i) {
    if (data_->basis[i].label == label) return i;
  }
  return std::nullopt;
}

std::size_t SuperSpace::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw InputError("unknown basis label '" + std::string(label) + "'");
}

std::vector<Parity> SuperSpace::parities_of(std::span<const std::size_t> tuple) const {
  std::vector<Parity> out;
  out.reserve(tuple.size());
  for (auto i : tuple) out.push_back(parity(i));
  return out;
}

Parity SuperSpace::degree_of(std::span<const std::size_t> tuple) const {
  Parity p;
  for (auto i : tuple) p += parity(i);
  return p;
}

std::string SuperSpace::format_tuple(std::span<const std::size_t> tuple) const {
  std::string s = "(";
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (k) s += ",";
    s += label(tuple[k]);
  }
  return s + ")";
}

bool operator==(const SuperSpace& a, const SuperSpace& b) {
  if (a.data_ == b.data_) return true;
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.label(i) != b.label(i) || a.parity(i) != b.parity(i)) return false;
  }
  return true;
}

SuperSpace SuperSpace::ungraded() const {
  auto basis = data_->basis;
  for (auto& b : basis) b.parity = kEven;
  return SuperSpace(std::move(basis));
}

}  // namespace homnambu
