#pragma once

#include "homnambu/algebra.hpp"
#include "homnambu/report.hpp"
#include "homnambu/rotabaxter.hpp"

namespace homnambu {

// A ternary product {x,y,z} with its twist. Only the first two arguments are expected to
// be super-skew; the product is stored as a full table.
class TriProduct {
 public:
  TriProduct(NaryBracket product, GradedLinearMap twist);
  const SuperSpace& space() const { return product_.space(); }
  const NaryBracket& product() const { return product_; }
  const GradedLinearMap& twist() const { return twist_; }

 private:
  NaryBracket product_;
  GradedLinearMap twist_;
};

// Checks "d1" (first-pair super-skew), "d2" and "d3" over all basis triples and 5-tuples.
Verification check_3_pre_lie(const TriProduct& t, CheckOptions options = {});

// [x,y,z]_C = {x,y,z} + (−1)^{|x|(|y|+|z|)}{y,z,x} + (−1)^{|z|(|x|+|y|)}{z,x,y}, twists (α, α).
// Throws PreconditionFailed when the product is not super-skew in its first two arguments.
HomSuperAlgebra supercommutator3(const TriProduct& t);

struct SubAdjacent {
  HomSuperAlgebra algebra;
  Verification verification;  // super-skew and Nambu on the 3-supercommutator
};
// Throws PreconditionFailed unless t passes check_3_pre_lie.
SubAdjacent sub_adjacent(const TriProduct& t, CheckOptions options = {});

// The two five-argument identities that follow from the sub-adjacent algebra being 3-Hom-Lie.
Verification check_corollary_identities(const TriProduct& t, CheckOptions options = {});

// {x,y,z} = [R x, R y, z]. Throws PreconditionFailed unless alg3 is a 3-Hom-Lie superalgebra
// with one twist and R is a weight-0 Rota-Baxter operator on it.
TriProduct rb_induced_prelie(const HomSuperAlgebra& alg3, const RotaBaxterOperator& r);

// R([x,y,z]_C) = [R x, R y, R z] with the supercommutator taken from t.
CheckReport check_rb_morphism(const TriProduct& t, const GradedLinearMap& r, const HomSuperAlgebra& alg3,
                              CheckOptions options = {});

// {x,y,z} = R([x, y, R⁻¹ z]) for an invertible weight-0 operator. Throws SingularMap or
// PreconditionFailed.
TriProduct rb_image_prelie(const HomSuperAlgebra& alg3, const RotaBaxterOperator& r);

// The 3-supercommutator of t equals the bracket of alg3 on every basis triple.
CheckReport check_compatibility(const TriProduct& t, const HomSuperAlgebra& alg3, CheckOptions options = {});

}  // namespace homnambu
