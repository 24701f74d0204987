#pragma once

#include <string_view>

namespace cycsf::detail {
// Non-uniform square-free morphisms whose images decode into stem blocks,
// for the lengths 20, 21, 22 where no uniform cyclic shift morphism exists.

inline constexpr std::string_view kMuller20[3] = {
    "01210201021012102120210120212012101201021202101210212021020121012021201210120102",
    "012102010210121021202101202120121012010212021012102120210201021201020120212012102010212021020102101210201210120102012021",
    "01210201021012102120102012101201020120212010212021020102101210201210120102012021",
};

inline constexpr std::string_view kMuller21[3] = {
    "012021020102120102012102120121012021012102120102101210201210120210201202120102120210201210212021012021201210201202120102120210120102101210201210120102120121012021012102",
    "012021020102120102012021012010201210201021201210212021012021201210201202120102120210120102101210201210120210201202120102120210201210212021012021201021012010201210201021",
    "012021020102120102012021012010201210201021201210212021012021201021012010201210201021012021020102120102012102120121012021012102120102101210201210120102120121012021012102",
};

inline constexpr std::string_view kMuller22[3] = {
    "012021020102120210201210212012101202120121021201021012102010210120210201202120102012021020121021202101210212010210120102012101201021",
    "012021020102120210201210212012101202120121021201021012102010210120210201202120102012021012010210121020102101201021201210120212012102",
    "012021020102120210201210212012101202120121021201021012102010210120102120121012021201210201202102010212021020120210120102012101201021",
};

inline constexpr std::string_view kMullerStem20 = "01210201021012102120";

}  // namespace cycsf::detail
