#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace sashiko::kogin::detail {

// (name, chart text) for each bundled motif, in listing order.
const std::vector<std::pair<std::string_view, std::string_view>>& bundled_motifs();

}  // namespace sashiko::kogin::detail
