#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "homnambu/bracket.hpp"
#include "homnambu/linear_map.hpp"

namespace homnambu {

// An n-ary bracket with its family of n−1 even twisting maps.
class HomSuperAlgebra {
 public:
  HomSuperAlgebra(NaryBracket bracket, std::vector<GradedLinearMap> twists);
  // All n−1 twists equal to alpha.
  static HomSuperAlgebra with_alpha(NaryBracket bracket, const GradedLinearMap& alpha);

  const SuperSpace& space() const { return bracket_.space(); }
  const NaryBracket& bracket() const { return bracket_; }
  std::size_t arity() const { return bracket_.arity(); }
  std::size_t dim() const { return bracket_.dim(); }
  const std::vector<GradedLinearMap>& twists() const { return twists_; }
  const GradedLinearMap& twist(std::size_t i) const { return twists_.at(i); }

  // True when the twists are one shared map.
  bool multiplicative_flag() const { return shared_twist_; }
  // The shared twist; throws PreconditionFailed when the twists differ.
  const GradedLinearMap& alpha() const;

  HomSuperAlgebra with_twists(std::vector<GradedLinearMap> twists) const;

 private:
  NaryBracket bracket_;
  std::vector<GradedLinearMap> twists_;
  bool shared_twist_;
};

Element eval_bracket(const HomSuperAlgebra& alg, std::span<const Element> args);

}  // namespace homnambu
