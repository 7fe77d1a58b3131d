#pragma once

#include <string_view>

namespace attract::corpus::data {

/// Contents of data/sudoku_puzzles.txt, embedded at build time.
extern const std::string_view kSudokuPuzzles;
/// Contents of data/lcs_pairs.txt, embedded at build time.
extern const std::string_view kLcsPairs;

}  // namespace attract::corpus::data
