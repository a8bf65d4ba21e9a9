#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "homnambu/algebra_file.hpp"

namespace homnambu {

using ParamMap = std::map<std::string, Scalar>;

struct ParameterSpec {
  std::string name;
  std::string constraint;  // "any", "nonzero", "not 0 or 1"
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<ParameterSpec> parameters;
  // Identities every instantiation satisfies (names as in check_identities).
  std::vector<std::string> profile;
};

const std::vector<CatalogEntry>& catalog_list();
const CatalogEntry& catalog_entry(std::string_view name);  // throws InputError

// Every declared parameter is required; "λ" is accepted for "lambda". Throws InputError on
// unknown names, missing or extra parameters, and constraint violations.
AlgebraDocument catalog_build(std::string_view name, const ParamMap& params);

// "a=2,b=1/2" into a map. Throws InputError.
ParamMap parse_params(std::string_view text);

// "catalog:NAME?k=v,..." split into name and parameters; nullopt-free: throws InputError
// when the text does not start with "catalog:".
struct CatalogRef {
  std::string name;
  ParamMap params;
};
CatalogRef parse_catalog_ref(std::string_view text);
bool is_catalog_ref(std::string_view text);

}  // namespace homnambu
