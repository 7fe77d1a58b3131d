#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "attract/engine.hpp"
#include "attract/jvm.hpp"

namespace attract::corpus {

/// Backtracking 9x9 solver keeping row, column and box occupancy tables.
/// Cells are row-major; 0 marks an empty cell.
struct Sudoku {
  static constexpr std::string_view name = "sudoku";
  static constexpr std::string_view description = "solve a 9x9 sudoku by backtracking";

  using Grid = std::array<jvm::Int, 81>;
  using Input = Grid;
  using Output = Grid;

  static std::span<const PerturbationPoint> points();
  static Output run(const Input& puzzle, Controller& c);
  /// Every row, column and box holds 1..9 once, and the givens are unchanged.
  static bool accepts(const Input& puzzle, const Output& reference, const Output& out);
  /// Bundled puzzles, starting at a seed-dependent offset and wrapping.
  static std::vector<Input> generate(std::uint64_t seed, std::size_t count);
  static std::string show(const Input& puzzle);

  /// Puzzles in the bundled data file.
  static const std::vector<Grid>& bundled();
  /// One 81-character line per grid, '0' for empty, '#' starts a comment.
  /// Throws std::invalid_argument on a malformed line.
  static std::vector<Grid> parse(std::string_view text);

  /// First dimension of the box occupancy table allocation.
  static constexpr PointId kBoxSubsetSizePoint = 7;
};

}  // namespace attract::corpus
