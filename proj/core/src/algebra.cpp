#include "homnambu/algebra.hpp"

#include <algorithm>

#include "homnambu/errors.hpp"

namespace homnambu {

HomSuperAlgebra::HomSuperAlgebra(NaryBracket bracket, std::vector<GradedLinearMap> twists)
    : bracket_(std::move(bracket)), twists_(std::move(twists)) {
  if (twists_.size() != bracket_.arity() - 1)
    throw InputError("an arity-" + std::to_string(bracket_.arity()) + " bracket needs " +
                     std::to_string(bracket_.arity() - 1) + " twists, got " +
                     std::to_string(twists_.size()));
  for (const auto& t : twists_) {
    if (t.parity() != kEven) throw InputError("twisting maps must be even");
    if (!(t.space() == bracket_.space())) throw InputError("twist acts on a different space");
  }
  shared_twist_ = std::all_of(twists_.begin(), twists_.end(),
                              [&](const GradedLinearMap& t) { return t == twists_.front(); });
}

HomSuperAlgebra HomSuperAlgebra::with_alpha(NaryBracket bracket, const GradedLinearMap& alpha) {
  const std::size_t n = bracket.arity();
  return HomSuperAlgebra(std::move(bracket), std::vector<GradedLinearMap>(n - 1, alpha));
}

const GradedLinearMap& HomSuperAlgebra::alpha() const {
  if (!shared_twist_) throw PreconditionFailed("algebra has distinct twisting maps; a single twist is required");
  return twists_.front();
}

HomSuperAlgebra HomSuperAlgebra::with_twists(std::vector<GradedLinearMap> twists) const {
  return HomSuperAlgebra(bracket_, std::move(twists));
}

Element eval_bracket(const HomSuperAlgebra& alg, std::span<const Element> args) {
  return alg.bracket().evaluate(args);
}

}  // namespace homnambu
