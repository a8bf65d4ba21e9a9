#include "homnambu/element.hpp"

#include "homnambu/errors.hpp"

namespace homnambu {

Element Element::basis(std::size_t dim, std::size_t i, const Scalar& coeff) {
  if (i >= dim) throw InputError("basis index out of range");
  Element e(dim);
  e.c_[i] = coeff;
  return e;
}

bool Element::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::vector<std::size_t> Element::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) s.push_back(i);
  }
  return s;
}

std::optional<Parity> Element::parity(const SuperSpace& space) const {
  std::optional<Parity> p;
  for (auto i : support()) {
    if (p && *p != space.parity(i)) return std::nullopt;
    p = space.parity(i);
  }
  return p.value_or(kEven);
}

void Element::add_scaled(const Element& other, const Scalar& c) {
  if (other.dim() != dim()) throw InputError("element dimension mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i].add_product(other.c_[i], c);
}

void Element::clear() {
  for (auto& c : c_) c = Scalar();
}

Element& Element::operator+=(const Element& o) {
  if (o.dim() != dim()) throw InputError("element dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (o.dim() != dim()) throw InputError("element dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Element Element::operator-() const {
  Element e = *this;
  for (auto& c : e.c_) c = -c;
  return e;
}

std::string Element::format(const SuperSpace& space) const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Scalar& c = c_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Scalar mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != Scalar(1)) out += mag.str() + "*";
    out += space.label(i);
  }
  return out.empty() ? "0" : out;
}

SparseVec sparse(const Element& e) {
  SparseVec v;
  for (std::size_t i = 0; i < e.dim(); ++i) {
    if (!e[i].is_zero()) v.push_back({i, e[i]});
  }
  return v;
}

}  // namespace homnambu
