#pragma once

#include <vector>

#include "stieltjes/catalog.hpp"

namespace stieltjes::detail {

const std::vector<CatalogEntry>& registry();

}  // namespace stieltjes::detail
