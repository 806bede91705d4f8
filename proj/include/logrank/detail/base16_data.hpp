#pragma once

// Reference m = 6, n = 16, t + 1 = 13 dot-product representation, verbatim
// (signed entries; canonicalize mod 6 on load).

#include <array>

namespace logrank::detail {

inline constexpr std::array<std::array<int, 13>, 16> kBase16B = {{
    {{ 1,  0,  1,  1,  4,  1,  4,  4,  3,  1,  4,  4,  4}},
    {{ 1,  1,  0,  4,  1,  4,  1,  3,  4,  4,  1,  3,  3}},
    {{ 1,  1,  4,  0,  1,  4,  3,  1,  4,  4,  3,  1,  3}},
    {{ 1,  4,  1,  1,  0,  3,  4,  4,  1,  3,  4,  4,  4}},
    {{ 1,  1,  4,  4,  3,  0,  1,  1,  4,  4,  3,  3,  1}},
    {{ 1,  4,  1,  3,  4,  1,  0,  4,  1,  3,  4,  4,  4}},
    {{ 1,  4,  3,  1,  4,  1,  4,  0,  1,  3,  4,  4,  4}},
    {{ 1,  3,  4,  4,  1,  4,  1,  1,  0,  4,  3,  3,  3}},
    {{ 1,  1,  4,  4,  3,  4,  3,  3,  4,  0,  1,  1,  1}},
    {{ 1,  4,  1,  3,  4,  3,  4,  4,  3,  1,  0,  4,  4}},
    {{ 1,  4,  3,  1,  4,  3,  4,  4,  3,  1,  4,  0,  4}},
    {{ 1,  3,  4,  4,  1,  4,  3,  3,  4,  4,  1,  1,  3}},
    {{ 1,  4,  3,  3,  4,  1,  4,  4,  3,  1,  4,  4,  0}},
    {{ 1,  3,  4,  4,  3,  4,  1,  3,  4,  4,  1,  3,  1}},
    {{ 1,  3,  4,  4,  3,  4,  3,  1,  4,  4,  3,  1,  1}},
    {{ 1,  4,  3,  3,  4,  3,  4,  4,  1,  3,  4,  4,  4}},
}};

inline constexpr std::array<std::array<int, 16>, 13> kBase16C = {{
    {{ 1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1}},
    {{-1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1}},
    {{ 0, -1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0}},
    {{ 0,  0, -1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0}},
    {{ 0,  0,  0, -1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  1}},
    {{ 0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0}},
    {{ 0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  1,  0,  0,  1,  1}},
    {{ 0,  0,  0,  0,  0,  0, -1,  0,  0,  0,  0,  1,  0,  1,  0,  1}},
    {{ 0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  0, -1,  0, -1, -1, -2}},
    {{ 0,  0,  0,  0,  0,  0,  0,  0, -1,  0,  0,  1,  0,  1,  1,  2}},
    {{ 0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  0, -1,  0, -1,  0, -1}},
    {{ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1, -1,  0,  0, -1, -1}},
    {{ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1, -1, -1, -1}},
}};

// Reference product A = B * C.
inline constexpr std::array<std::array<int, 16>, 16> kBase16A = {{
    {{ 1,  0,  0, -3,  0, -3, -3, -2,  0, -3, -3, -2, -3, -2, -2, -3}},
    {{ 0,  1, -3,  0, -3,  0, -2, -3, -3,  0, -2, -3, -2, -3, -3, -2}},
    {{ 0, -3,  1,  0, -3, -2,  0, -3, -3, -2,  0, -3, -2, -3, -3, -2}},
    {{-3,  0,  0,  1, -2, -3, -3,  0, -2, -3, -3,  0, -3, -2, -2, -3}},
    {{ 0, -3, -3, -2,  1,  0,  0, -3, -3, -2, -2, -3,  0, -3, -3, -2}},
    {{-3,  0, -2, -3,  0,  1, -3,  0, -2, -3, -3, -2, -3,  0, -2, -3}},
    {{-3, -2,  0, -3,  0, -3,  1,  0, -2, -3, -3, -2, -3, -2,  0, -3}},
    {{-2, -3, -3,  0, -3,  0,  0,  1, -3, -2, -2, -3, -2, -3, -3,  0}},
    {{ 0, -3, -3, -2, -3, -2, -2, -3,  1,  0,  0, -3,  0, -3, -3, -2}},
    {{-3,  0, -2, -3, -2, -3, -3, -2,  0,  1, -3,  0, -3,  0, -2, -3}},
    {{-3, -2,  0, -3, -2, -3, -3, -2,  0, -3,  1,  0, -3, -2,  0, -3}},
    {{-2, -3, -3,  0, -3, -2, -2, -3, -3,  0,  0,  1, -2, -3, -3,  0}},
    {{-3, -2, -2, -3,  0, -3, -3, -2,  0, -3, -3, -2,  1,  0,  0, -3}},
    {{-2, -3, -3, -2, -3,  0, -2, -3, -3,  0, -2, -3,  0,  1, -3,  0}},
    {{-2, -3, -3, -2, -3, -2,  0, -3, -3, -2,  0, -3,  0, -3,  1,  0}},
    {{-3, -2, -2, -3, -2, -3, -3,  0, -2, -3, -3,  0, -3,  0,  0,  1}},
}};

}  // namespace logrank::detail
