#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anticode/codes.hpp"

namespace anticode {

// Built-in reference codes: the 22 published parameter sets plus the four
// explicitly described codes of moderate length.  Entries without a known
// generator carry parameters and the published bound only; the two entries
// with published weight distributions store them, and the quasi-cyclic
// [40,5,28] code and its shortening store full generators.
struct CodeCatalogEntry {
  std::string name;  // "[n,k,d]"
  std::size_t n = 0, k = 0;
  int d = 0;
  std::uint64_t codeword_count = 0;  // 4^k
  double published_bound = 0.0;      // published upper bound on the average error
  std::string source;
  std::optional<WeightDistribution> weights;
  std::optional<LinearCode> code;
  std::optional<double> published_weight_bound;  // bound from the weight distribution
};

const std::vector<CodeCatalogEntry>& catalog();

// Entry by "[n,k,d]" name (surrounding brackets optional); nullptr if absent.
const CodeCatalogEntry* catalog_find(std::string_view name);

// First row of the [40,5,28] quasi-cyclic generator, as 8 blocks of 5 digits.
inline constexpr std::string_view kQuasiCyclicFirstRow =
    "10000 10120 11020 11230 12220 13130 13210 11312";

}  // namespace anticode
