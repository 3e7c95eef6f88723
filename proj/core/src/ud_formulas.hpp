#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace d6::detail {

const std::vector<std::pair<std::string, std::string>>& definitions();

// updates()[k][i] is the text of coordinate i of e_k^c(x).
const std::array<std::array<std::string_view, 15>, 7>& updates();

}  // namespace d6::detail
