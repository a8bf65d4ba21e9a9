#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "homnambu/algebra.hpp"
#include "homnambu/cochains.hpp"

namespace homnambu {

enum class OperatorKind { derivation, rota_baxter, map };

std::string_view to_string(OperatorKind kind);
OperatorKind parse_operator_kind(std::string_view text);  // throws InputError

struct NamedOperator {
  std::string name;
  OperatorKind kind = OperatorKind::map;
  GradedLinearMap map;
  unsigned power = 0;   // derivations
  Scalar weight;        // Rota-Baxter operators
};

struct AlgebraDocument {
  std::string name;
  HomSuperAlgebra algebra;
  std::vector<SuperCochain> cochains;
  std::vector<NamedOperator> operators;

  const NamedOperator& find_operator(std::string_view name) const;  // throws InputError
};

// Parses the JSON algebra format; `//` comments are allowed. Throws InputError (including
// OrbitConflict) on anything malformed, and on bracket entries that break the grading.
AlgebraDocument parse_algebra_document(std::string_view text);
AlgebraDocument load_algebra_file(const std::string& path);

// Canonical form: super-skew brackets as sorted orbit representatives with skew_complete,
// anything else as the full verbatim table; cochains as sorted representatives.
std::string emit_algebra_document(const AlgebraDocument& doc);

}  // namespace homnambu
