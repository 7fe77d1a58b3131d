#pragma once

#include "attract/explorer.hpp"

namespace attract::published {

struct PublishedRow {
  PointId id;
  std::uint64_t execs, success, failure, exception;
  std::uint64_t percent;
};

// Per-point breakdown of the integer quicksort campaign as published.
inline constexpr PublishedRow kQuicksortRows[] = {
    {0, 1751, 1202, 543, 6, 68},
    {1, 1751, 1641, 0, 110, 93},
    {2, 1751, 1751, 0, 0, 100},
    {3, 1751, 1751, 0, 0, 100},
    {4, 1751, 1751, 0, 0, 100},
    {5, 1751, 1751, 0, 0, 100},
    {6, 1751, 1751, 0, 0, 100},
    {7, 1751, 1751, 0, 0, 100},
    {8, 1751, 1751, 0, 0, 100},
    {9, 1751, 1739, 0, 12, 99},
    {10, 5938, 5938, 0, 0, 100},
    {11, 5938, 5938, 0, 0, 100},
    {12, 8459, 5946, 2496, 17, 70},
    {13, 8459, 8459, 0, 0, 100},
    {14, 8459, 8442, 0, 17, 99},
    {15, 4272, 4272, 0, 0, 100},
    {16, 9495, 6676, 2691, 128, 70},
    {17, 9495, 9477, 0, 18, 99},
    {18, 9495, 9495, 0, 0, 100},
    {19, 5308, 5308, 0, 0, 100},
    {20, 4187, 4187, 0, 0, 100},
    {21, 4187, 3616, 571, 0, 86},
    {22, 3616, 105, 3506, 5, 2},
    {23, 3616, 0, 3564, 52, 0},
    {24, 3616, 3616, 0, 0, 100},
    {25, 3616, 3616, 0, 0, 100},
    {26, 1751, 1633, 118, 0, 93},
    {27, 1751, 1751, 0, 0, 100},
    {28, 840, 275, 565, 0, 32},
    {29, 840, 840, 0, 0, 100},
    {30, 1751, 1751, 0, 0, 100},
    {31, 1751, 1632, 119, 0, 93},
    {32, 891, 321, 570, 0, 36},
    {33, 891, 801, 0, 90, 89},
    {34, 3616, 2361, 1250, 5, 65},
    {35, 3616, 0, 3616, 0, 0},
    {36, 3616, 1515, 2101, 0, 41},
    {37, 3616, 742, 2822, 52, 20},
    {38, 3616, 553, 3058, 5, 15},
    {39, 3616, 1420, 2149, 47, 39},
    {40, 3616, 0, 3616, 0, 0},
};

inline PointTally tally_of(const PublishedRow& r) {
  PointTally t;
  t.point = r.id;
  t.execs = r.execs;
  t.success = r.success;
  t.oracle_broken = r.failure;
  t.exception = r.exception;
  return t;
}

}  // namespace attract::published
