#pragma once

#include <string_view>
#include <utility>

namespace cycsf::detail {
// Seeds f(0) of n-uniform square-free cyclic shift morphisms, 13 <= n <= 122.
inline constexpr std::pair<int, std::string_view> kAppendixSeeds[] = {
    {13, "2101201021012"},
    {17, "21020102120102012"},
    {18, "210201021202102012"},
    {19, "2102010210120102012"},
    {23, "21012010201210201021012"},
    {24, "210120102012021201021012"},
    {25, "2101201020120210201021012"},
    {26, "21012010201202101201021012"},
    {27, "210120102012102010212021012"},
    {28, "2102010212012101202120102012"},
    {29, "21020102101210201202120102012"},
    {30, "210201021012021201210120102012"},
    {31, "2102010210120102120210120102012"},
    {32, "21020102101201021201210120102012"},
    {33, "210201021012010212012102120102012"},
    {34, "2102010210120102012101202120102012"},
    {35, "21020102101201020121020102120102012"},
    {36, "210201021012010212012101202120102012"},
    {37, "2102010210120102012021020102120102012"},
    {38, "21020102101201020120210201210120102012"},
    {39, "210201021012010212012102120210120102012"},
    {40, "2102010210120102120121020120210120102012"},
    {41, "21020102101201020120210121020102120102012"},
    {42, "210201021012010201202101210201202120102012"},
    {43, "2102010210120102012021020102101202120102012"},
    {44, "21020102101201020120210120102101202120102012"},
    {45, "210201021012010201202101201021012102120102012"},
    {46, "2102010210120102012021012010212012102120102012"},
    {47, "21020102101201020120210121020102101202120102012"},
    {48, "210201021012010201202101201021202101202120102012"},
    {49, "2102010210120102012021012010210121020102120102012"},
    {50, "21020102101201020120210120102101210201202120102012"},
    {51, "210201021012010201202101201021012021020102120102012"},
    {52, "2102010210120102012021012010210120210201202120102012"},
    {53, "21020102101201020120210120102101202102010210120102012"},
    {54, "210201021012010201202101201021012021020120210120102012"},
    {55, "2102010210120102012021012010210121020102101202120102012"},
    {56, "21020102101201020120210120102101202102012101202120102012"},
    {57, "210201021012010201202101201021012021020102101202120102012"},
    {58, "2102010210120102012021012010210120210201021012102120102012"},
    {59, "21020102101201020120210120102101202102010212012102120102012"},
    {60, "210201021012010201202101201021012021020120212010210120102012"},
    {61, "2102010210120102012021012010210120210201021202101202120102012"},
    {62, "21020102101201020120210120102101202102010210121020102120102012"},
    {63, "210201021012010201202101201021012021020102101210201202120102012"},
    {64, "2102010210120102012021012010210120210201021012021201210120102012"},
    {65, "21020102101201020120210120102101202102010210120102120210120102012"},
    {66, "210201021012010201202101201021012021020102101201021201210120102012"},
    {67, "2102010210120102012021012010210120210201021012010212012102120102012"},
    {68, "21020102101201020120210120102101202102010210120102012101202120102012"},
    {69, "210201021012010201202101201021012021020102101201020121020102120102012"},
    {70, "2102010210120102012021012010210120210201021012010212012101202120102012"},
    {71, "21020102101201020120210120102101202102010210120102012021020102120102012"},
    {72, "210201021012010201202101201021012021020102101201020120210201210120102012"},
    {73, "2102010210120102012021012010210120210201021012010212012102010210120102012"},
    {74, "21020102101201020120210120102101202102010210120102120121020120210120102012"},
    {75, "210201021012010201202101201021012021020102101201020120210121020102120102012"},
    {76, "2102010210120102012021012010210120210201021012010201202101210201202120102012"},
    {77, "21020102101201020120210120102101202102010210120102012021020102101202120102012"},
    {78, "210201021012010201202101201021012021020102101201020120210201021012102120102012"},
    {79, "2102010210120102120121020120210120102012021012102012021201210212010210120102012"},
    {80, "21020102101201021201210201202101201020120210121020102120210120212010210120102012"},
    {81, "210201021012010212012102012021020121021201021012102010212021012021201210120102012"},
    {82, "2102010210120102120121020120210201210212010210120212010212021012021201210120102012"},
    {83, "21020102101201021201210201202102012102120102101202102010212021012021201210120102012"},
    {84, "210201021012010212012102012021020121021201021012010201210201021012021201210120102012"},
    {85, "2102010210120102120121020120210201210212010210120102012021201021012021201210120102012"},
    {86, "21020102101201021201210201202102012102120102101201020120210201021012021201210120102012"},
    {87, "210201021012010212012102012021020121021201021012010201202101201021012021201210120102012"},
    {88, "2102010210120102120121020120210201210212010210120102012102010212021012021201210120102012"},
    {89, "21020102101201021201210201202102012102120102101201020120212010212021012021201210120102012"},
    {90, "210201021012010212012102012021020121021201021012010201202101210201021012021201210120102012"},
    {91, "2102010210120102120121020120210201210212010210120102012021012010212021012021201210120102012"},
    {92, "21020102101201021201210201202102012102120102101201020120210121021201021012021201210120102012"},
    {93, "210201021012010212012102012021020121021201021012010201202102012101201021012021201210120102012"},
    {94, "2102010210120102120121020120210201210212010210120102012021012102010212021012021201210120102012"},
    {95, "21020102101201021201210201202102012102120102101201020120212010201210201021012021201210120102012"},
    {96, "210201021012010212012102012021020121021201021012010201202120102012101201021012021201210120102012"},
    {97, "2102010210120102120121020120210201210212010210120102012021012102012021201021012021201210120102012"},
    {98, "21020102101201021201210201202102012102120102101201020120210120102101210201021012021201210120102012"},
    {99, "210201021012010212012102012021020121021201021012010201202101201021201210201021012021201210120102012"},
    {100, "2102010210120102120121012010201202101201020121012010210120210201021012010201210201021201210120102012"},
    {101, "21020102101201021201210120102012021012010201210120102101202102010210120102012101201021201210120102012"},
    {102, "210201021012010212012101201020120210120102012101201021012021020102101201020120210201021201210120102012"},
    {103, "2102010210120102120121012010201202101201020121012010210120210201021012010201202101201021201210120102012"},
    {104, "21020102101201021201210120102012021012010201210120102101202102010210120102012021020121021201210120102012"},
    {105, "210201021012010212012101201020120210120102012101201021012021020102101201021202101210201021201210120102012"},
    {106, "2102010210120102120121012010201202101201020121012010210120210201021012010201202101210201021201210120102012"},
    {107, "21020102101201021201210120102012021012010201210120102101202102010210120102012021012102012021201210120102012"},
    {108, "210201021012010212012101201020120210120102012101201021012021020102101201020120210201021012021201210120102012"},
    {109, "2102010210120102120121012010201202101201020121012010210120210201021012010201202101201021012021201210120102012"},
    {110, "21020102101201021201210120102012021012010201210120102101202102010210120102012021012010210121021201210120102012"},
    {111, "210201021012010212012101201020120210120102012101201021012021020102101201020120210121020121012021201210120102012"},
    {112, "2102010210120102120121012010201202101201020121012010210120210201021012010201202101210201021012021201210120102012"},
    {113, "21020102101201021201210120102012021012010201210120102101202102010210120102012021012010212021012021201210120102012"},
    {114, "210201021012010212012101201020120210120102012101201021012021020102101201020120210120102101210201021201210120102012"},
    {115, "2102010210120102120121012010201202101201020121012010210120210201021012010201202101201021012102012021201210120102012"},
    {116, "21020102101201021201210120102012021012010201210120102101202102010210120102012021012010210120210201021201210120102012"},
    {117, "210201021012010212012101201020120210120102012101201021012021020102101201020120210120102101202102012021201210120102012"},
    {118, "2102010210120102120121012010201202101201020121012010210120210201021012010201202101201021012021020121021201210120102012"},
    {119, "21020102101201021201210120102012021012010201210120102101202102010210120102012021012010210121020121012021201210120102012"},
    {120, "210201021012010212012101201020120210120102012101201021012021020102101201020120210120102101202120102012021201210120102012"},
    {121, "2102010210120102120121012010201202101201020121012010210120210201021012010201202101201021012021020121012021201210120102012"},
    {122, "21020102101201021201210120102012021012010201210120102101202102010210120102012021012010210120210201021012021201210120102012"},
};

}  // namespace cycsf::detail
