#include "qm/reference_data.hpp"

#include <string>

#include "qm/errors.hpp"

namespace qm {

const ReferenceTable& reference_table() {
  // rows m = 1..60; columns are the levels 5, 7, 8, 9, 10, 12
  static const ReferenceTable table = {
      {5, 7, 8, 9, 10, 12},
      60,
      {
          10,       4,      3,     2,    2,   1,    // m = 1
          5,        3,      2,     2,    1,   1,    // m = 2
          -15,      0,      1,     1,    1,   1,    // m = 3
          -24,      -5,     -2,    -1,   0,   0,    // m = 4
          15,       -7,     -4,    -2,   -1,  0,    // m = 5
          70,       -2,     -4,    -3,   -2,  -1,   // m = 6
          30,       8,      0,     -2,   -2,  -1,   // m = 7
          -125,     16,     6,     1,    -1,  -1,   // m = 8
          -175,     12,     9,     4,    1,   -1,   // m = 9
          95,       -7,     8,     6,    3,   0,    // m = 10
          420,      -29,    -1,    5,    4,   1,    // m = 11
          180,      -35,    -12,   1,    4,   2,    // m = 12
          -615,     -10,    -20,   -5,   1,   2,    // m = 13
          -826,     37,     -16,   -11,  -2,  2,    // m = 14
          410,      70,     1,     -12,  -6,  1,    // m = 15
          1760,     53,     22,    -7,   -8,  0,    // m = 16
          705,      -21,    38,    3,    -7,  -2,   // m = 17
          -2415,    -106,   30,    15,   -3,  -3,   // m = 18
          -3100,    -126,   1,     22,   4,   -4,   // m = 19
          1530,     -38,    -40,   19,   10,  -4,   // m = 20
          6270,     119,    -64,   5,    14,  -2,   // m = 21
          2460,     226,    -52,   -15,  12,  0,    // m = 22
          -8090,    164,    -2,    -32,  6,   3,    // m = 23
          -10174,   -70,    68,    -36,  -6,  5,    // m = 24
          4840,     -326,   107,   -22,  -16, 7,    // m = 25
          19570,    -378,   88,    8,    -22, 6,    // m = 26
          7500,     -106,   -2,    40,   -20, 4,    // m = 27
          -24360,   353,    -112,  58,   -8,  0,    // m = 28
          -30024,   652,    -180,  50,   8,   -4,   // m = 29
          14130,    469,    -144,  12,   26,  -8,   // m = 30
          55970,    -189,   3,     -41,  34,  -10,  // m = 31
          21155,    -885,   182,   -84,  31,  -9,   // m = 32
          -67380,   -1015,  292,   -93,  12,  -6,   // m = 33
          -81926,   -290,   228,   -54,  -14, 0,    // m = 34
          37895,    910,    4,     22,   -41, 6,    // m = 35
          148410,   1664,   -286,  103,  -54, 12,   // m = 36
          55305,    1179,   -452,  148,  -47, 14,   // m = 37
          -174500,  -483,   -356,  124,  -20, 14,   // m = 38
          -209577,  -2205,  -4,    32,   23,  8,    // m = 39
          96025,    -2492,  440,   -96,  61,  0,    // m = 40
          371620,   -692,   686,   -200, 84,  -10,  // m = 41
          137160,   2212,   544,   -219, 72,  -18,  // m = 42
          -427665,  3998,   -5,    -128, 31,  -22,  // m = 43
          -508800,  2809,   -668,  46,   -32, -20,  // m = 44
          230670,   -1120,  -1044, 231,  -90, -12,  // m = 45
          885070,   -5119,  -816,  330,  -122, 0,   // m = 46
          323605,   -5754,  5,     275,  -107, 15,  // m = 47
          -1001340, -1598,  996,   67,   -44, 26,   // m = 48
          -1181123, 4992,   1563,  -216, 45,  33,   // m = 49
          531545,   8968,   1210,  -439, 133, 29,   // m = 50
          2022670,  6251,   6,     -477, 174, 19,   // m = 51
          734130,   -2506,  -1464, -275, 154, 0,    // m = 52
          -2253515, -11285, -2276, 107,  61,  -20,  // m = 53
          -2639348, -12579, -1768, 501,  -68, -37,  // m = 54
          1178880,  -3455,  -8,    708,  -192, -45, // m = 55
          4456650,  10812,  2128,  590,  -254, -42, // m = 56
          1606500,  19278,  3284,  146,  -220, -26, // m = 57
          -4901250, 13362,  2552,  -447, -90, 0,    // m = 58
          -5703676, -5278,  -9,    -911, 100, 27,   // m = 59
          2532720,  -23765, -3056, -987, 272, 52,   // m = 60
      }};
  return table;
}

long reference_column(long level) {
  const ReferenceTable& t = reference_table();
  for (size_t i = 0; i < t.levels.size(); ++i)
    if (t.levels[i] == level) return static_cast<long>(i);
  throw Error("level " + std::to_string(level) + " is not in the reference table");
}

long long reference_coefficient(long level, long m) {
  const ReferenceTable& t = reference_table();
  if (m < 1 || m > t.max_m)
    throw Error("reference table covers 1 <= m <= " + std::to_string(t.max_m));
  return t.values[static_cast<size_t>(m - 1) * t.levels.size() +
                  static_cast<size_t>(reference_column(level))];
}

}  // namespace qm
