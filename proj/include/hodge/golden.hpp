#pragma once

// Published reference values for the tables reproduced by the toolkit.

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hodge::golden {

inline const std::vector<int> kTableNs{4, 6, 8, 10, 12};

// m = n/2 - 2
inline const std::map<int, int> kTable1DimS{{4, 2}, {6, 8}, {8, 19}, {10, 36}, {12, 60}};
inline const std::map<int, int> kTable1Codim{{4, 1}, {6, 6}, {8, 16}, {10, 32}, {12, 55}};
/// verdict[n][N]: true for a check mark, false for X (X applies to r != -rr only).
inline const std::map<int, std::map<int, bool>> kTable1Verdict{
    {4, {{2, true}, {3, true}, {4, true}}},   {6, {{2, true}, {3, true}, {4, false}}},
    {8, {{2, true}, {3, false}, {4, false}}}, {10, {{2, true}, {3, false}, {4, false}}},
    {12, {{2, true}, {3, false}, {4, false}}}};
/// Orders through which P - P-check stays smooth (only the printed entries).
inline const std::map<int, int> kTable1Difference{{10, 4}, {12, 3}};

// m = n/2 - 3
inline const std::map<int, int> kTable2DimS{{4, 2}, {6, 8}, {8, 20}, {10, 39}, {12, 66}};
inline const std::map<int, int> kTable2Codim{{4, 1}, {6, 7}, {8, 19}, {10, 38}, {12, 65}};
inline const std::map<int, int> kTable2Smooth{{10, 4}, {12, 3}};

inline const std::map<int, std::vector<std::string>> kTable3Monomials{
    {4, {"x1x2x5", "x1x3x5"}},
    {6, {"x1x3x4", "x1x3x5", "x1x3x6", "x1x3x7", "x1x4x7", "x3x4x7", "x1x5x7", "x3x5x7"}},
    {8, {"x1x3x5", "x1x3x6", "x1x5x6", "x3x5x6", "x1x3x7", "x1x5x7", "x3x5x7", "x1x3x8", "x1x5x8", "x3x5x8",
         "x1x3x9", "x1x5x9", "x3x5x9", "x1x6x9", "x3x6x9", "x5x6x9", "x1x7x9", "x3x7x9", "x5x7x9"}},
    {10, {"x1x3x5",  "x1x3x7",  "x1x5x7",  "x3x5x7",  "x1x3x8",  "x1x5x8",  "x3x5x8",  "x1x7x8",  "x3x7x8",
          "x5x7x8",  "x1x3x9",  "x1x5x9",  "x3x5x9",  "x1x7x9",  "x3x7x9",  "x5x7x9",  "x1x3x10", "x1x5x10",
          "x3x5x10", "x1x7x10", "x3x7x10", "x5x7x10", "x1x3x11", "x1x5x11", "x3x5x11", "x1x7x11", "x3x7x11",
          "x5x7x11", "x1x8x11", "x3x8x11", "x5x8x11", "x7x8x11", "x1x9x11", "x3x9x11", "x5x9x11", "x7x9x11"}}};

inline const std::map<int, std::vector<std::string>> kTable4Monomials{
    {4, {"x0x3x5", "x1x3x5"}},
    {6, {"x1x2x5", "x1x3x5", "x1x2x7", "x1x3x7", "x1x4x7", "x1x5x7", "x2x5x7", "x3x5x7"}},
    {8, {"x1x3x4", "x1x3x5", "x1x3x6", "x1x3x7", "x1x4x7", "x3x4x7", "x1x5x7", "x3x5x7", "x1x3x8", "x1x3x9",
         "x1x4x9", "x3x4x9", "x1x5x9", "x3x5x9", "x1x6x9", "x3x6x9", "x1x7x9", "x3x7x9", "x4x7x9", "x5x7x9"}},
    {10, {"x1x3x5",  "x1x3x6",  "x1x5x6",  "x3x5x6",  "x1x3x7",  "x1x5x7",  "x3x5x7",  "x1x3x8",
          "x1x5x8",  "x3x5x8",  "x1x3x9",  "x1x5x9",  "x3x5x9",  "x1x6x9",  "x3x6x9",  "x5x6x9",
          "x1x7x9",  "x3x7x9",  "x5x7x9",  "x1x3x10", "x1x5x10", "x3x5x10", "x1x3x11", "x1x5x11",
          "x3x5x11", "x1x6x11", "x3x6x11", "x5x6x11", "x1x7x11", "x3x7x11", "x5x7x11", "x1x8x11",
          "x3x8x11", "x5x8x11", "x1x9x11", "x3x9x11", "x5x9x11", "x6x9x11", "x7x9x11"}}};

struct SpecialLociRow {
  int linear, cubic_ruled, mysterious, quartic_scroll, veronese;
};
inline const std::map<int, SpecialLociRow> kTable5{
    {4, {1, 1, 1, 1, 1}}, {6, {4, 6, 7, 8, 10}}, {8, {10, 16, 19, 23, 25}}, {10, {20, 32, 38, 45, 47}},
    {12, {35, 55, 65, 75, 77}}};

inline const std::map<int, std::vector<int>> kHodgeNumbers{
    {4, {0, 1, 21, 1, 0}},
    {6, {0, 0, 8, 71, 8, 0, 0}},
    {8, {0, 0, 0, 45, 253, 45, 0, 0, 0}},
    {10, {0, 0, 0, 1, 220, 925, 220, 1, 0, 0, 0}},
    {12, {0, 0, 0, 0, 14, 1001, 3432, 1001, 14, 0, 0, 0, 0}}};

/// Printed entries that omit the class of the hyperplane power: (n, position) -> corrected value.
inline const std::map<std::pair<int, int>, int> kHodgeNumberErrata{{{12, 6}, 3433}};

/// Which table a (n, m) configuration belongs to: 1, 2 or none.
inline std::optional<int> table_of(int n, int m) {
  if (m == n / 2 - 2) return 1;
  if (m == n / 2 - 3) return 2;
  return std::nullopt;
}

}  // namespace hodge::golden
