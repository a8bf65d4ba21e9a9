#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace homnambu {

// Element of Z/2.
class Parity {
 public:
  constexpr Parity() = default;
  constexpr explicit Parity(int v) : v_(static_cast<std::uint8_t>(v & 1)) {}
  constexpr int value() const { return v_; }
  constexpr bool odd() const { return v_ == 1; }
  friend constexpr Parity operator+(Parity a, Parity b) { return Parity(a.v_ ^ b.v_); }
  friend constexpr Parity operator*(Parity a, Parity b) { return Parity(a.v_ & b.v_); }
  Parity& operator+=(Parity o) { v_ ^= o.v_; return *this; }
  friend constexpr bool operator==(Parity, Parity) = default;

 private:
  std::uint8_t v_ = 0;
};

inline constexpr Parity kEven{0};
inline constexpr Parity kOdd{1};

using Tuple = std::vector<std::size_t>;

// Finite ordered homogeneous basis. Cheap to copy: the data is shared and immutable.
class SuperSpace {
 public:
  struct BasisVector {
    std::string label;
    Parity parity;
  };

  SuperSpace();
  explicit SuperSpace(std::vector<BasisVector> basis);

  std::size_t dim() const { return data_->parities.size(); }
  std::size_t dim0() const;
  std::size_t dim1() const;
  const std::string& label(std::size_t i) const { return data_->basis.at(i).label; }
  Parity parity(std::size_t i) const { return data_->parities[i]; }
  std::span<const Parity> parities() const { return data_->parities; }
  const std::vector<BasisVector>& basis() const { return data_->basis; }

  std::optional<std::size_t> find(std::string_view label) const;
  std::size_t index_of(std::string_view label) const;  // throws InputError

  // Parities of the basis vectors named by a tuple of indices.
  std::vector<Parity> parities_of(std::span<const std::size_t> tuple) const;
  Parity degree_of(std::span<const std::size_t> tuple) const;
  std::string format_tuple(std::span<const std::size_t> tuple) const;

  // Same basis labels and parities, in the same order.
  friend bool operator==(const SuperSpace& a, const SuperSpace& b);

  // The same labels with every parity forced to even.
  SuperSpace ungraded() const;

 private:
  struct Data {
    std::vector<BasisVector> basis;
    std::vector<Parity> parities;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace homnambu
