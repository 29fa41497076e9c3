#pragma once

#include <map>
#include <string>
#include <vector>

#include "baric/algebra.hpp"

namespace baric {

using Params = std::map<std::string, std::string>;

struct CatalogEntry {
  std::string name;
  std::string params;  // "key=default ..."
  std::string summary;
};

std::vector<CatalogEntry> catalog_entries();

// Builds a catalog table. Unknown names or parameters are input errors.
TablePtr construct(const std::string& name, const Params& params);

// t K[t]/(t^m) with S = K t, through the associative construction.
TablePtr power_series_algebra(std::size_t m);

}  // namespace baric
