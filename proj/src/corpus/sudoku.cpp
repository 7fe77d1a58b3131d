#include "attract/subjects/sudoku.hpp"

#include <cmath>
#include <stdexcept>

#include "attract/subjects/bundled_data.hpp"
#include "attract/subjects/input_rng.hpp"

namespace attract::corpus {

namespace {

using jvm::Array;
using jvm::Int;

constexpr PerturbationPoint kPoints[] = {
    {0, PointKind::Int, "mBoardSize = mBoard.length"},
    {1, PointKind::Int, "mBoardSize in Math.sqrt(mBoardSize)"},
    {2, PointKind::Int, "mBoxSize = (int) Math.sqrt(...)"},
    {3, PointKind::Int, "rows of mRowSubset = new boolean[mBoardSize][mBoardSize]"},
    {4, PointKind::Int, "columns of mRowSubset allocation"},
    {5, PointKind::Int, "rows of mColSubset = new boolean[mBoardSize][mBoardSize]"},
    {6, PointKind::Int, "columns of mColSubset allocation"},
    {7, PointKind::Int, "rows of mBoxSubset = new boolean[mBoardSize][mBoardSize]"},
    {8, PointKind::Int, "columns of mBoxSubset allocation"},
    {9, PointKind::Int, "initSubsets: i = 0"},
    {10, PointKind::Int, "initSubsets: i in i < mBoard.length"},
    {11, PointKind::Int, "initSubsets: mBoard.length in i loop"},
    {12, PointKind::Int, "initSubsets: i++"},
    {13, PointKind::Int, "initSubsets: j = 0"},
    {14, PointKind::Int, "initSubsets: j in j < mBoard.length"},
    {15, PointKind::Int, "initSubsets: mBoard.length in j loop"},
    {16, PointKind::Int, "initSubsets: j++"},
    {17, PointKind::Int, "initSubsets: i in mBoard[i][j]"},
    {18, PointKind::Int, "initSubsets: j in mBoard[i][j]"},
    {19, PointKind::Int, "initSubsets: value = mBoard[i][j]"},
    {20, PointKind::Int, "initSubsets: value in value != 0"},
    {21, PointKind::Int, "setSubsetValue: i in mRowSubset[i]"},
    {22, PointKind::Int, "setSubsetValue: value - 1 in mRowSubset"},
    {23, PointKind::Int, "setSubsetValue: j in mColSubset[j]"},
    {24, PointKind::Int, "setSubsetValue: value - 1 in mColSubset"},
    {25, PointKind::Int, "setSubsetValue: computeBoxNo(i, j)"},
    {26, PointKind::Int, "setSubsetValue: value - 1 in mBoxSubset"},
    {27, PointKind::Int, "solve: i in i == mBoardSize"},
    {28, PointKind::Int, "solve: mBoardSize in i == mBoardSize"},
    {29, PointKind::Int, "solve: i = 0"},
    {30, PointKind::Int, "solve: ++j"},
    {31, PointKind::Int, "solve: mBoardSize in ++j == mBoardSize"},
    {32, PointKind::Int, "solve: mBoard[i][j] in mBoard[i][j] != 0"},
    {33, PointKind::Int, "solve: i + 1 in solve(i + 1, j) for a given"},
    {34, PointKind::Int, "solve: j in solve(i + 1, j) for a given"},
    {35, PointKind::Int, "solve: value = 1"},
    {36, PointKind::Int, "solve: value in value <= mBoardSize"},
    {37, PointKind::Int, "solve: mBoardSize in value <= mBoardSize"},
    {38, PointKind::Int, "solve: value++"},
    {39, PointKind::Int, "solve: value argument of isValid"},
    {40, PointKind::Int, "solve: value in mBoard[i][j] = value"},
    {41, PointKind::Int, "solve: i + 1 in recursive solve"},
    {42, PointKind::Int, "solve: j in recursive solve"},
    {43, PointKind::Int, "solve: 0 in mBoard[i][j] = 0"},
    {44, PointKind::Int, "isValid: val--"},
    {45, PointKind::Int, "isValid: val in mRowSubset[i][val]"},
    {46, PointKind::Int, "isValid: val in mColSubset[j][val]"},
    {47, PointKind::Int, "isValid: computeBoxNo(i, j)"},
    {48, PointKind::Int, "isValid: val in mBoxSubset[...][val]"},
    {49, PointKind::Int, "computeBoxNo: boxRow = i / mBoxSize"},
    {50, PointKind::Int, "computeBoxNo: boxCol = j / mBoxSize"},
    {51, PointKind::Int, "computeBoxNo: boxRow * mBoxSize + boxCol"},
    {52, PointKind::Bool, "initSubsets: i < mBoard.length"},
    {53, PointKind::Bool, "initSubsets: j < mBoard.length"},
    {54, PointKind::Bool, "initSubsets: value != 0"},
    {55, PointKind::Bool, "initSubsets: setSubsetValue(i, j, value, true)"},
    {56, PointKind::Bool, "solve: i == mBoardSize"},
    {57, PointKind::Bool, "solve: ++j == mBoardSize"},
    {58, PointKind::Bool, "solve: mBoard[i][j] != 0"},
    {59, PointKind::Bool, "solve: value <= mBoardSize"},
    {60, PointKind::Bool, "solve: isValid(i, j, value)"},
    {61, PointKind::Bool, "solve: setSubsetValue(i, j, value, true)"},
    {62, PointKind::Bool, "solve: result of recursive solve"},
    {63, PointKind::Bool, "solve: setSubsetValue(i, j, value, false)"},
    {64, PointKind::Bool, "isValid: mRowSubset[i][val]"},
    {65, PointKind::Bool, "isValid: mColSubset[j][val]"},
    {66, PointKind::Bool, "isValid: mBoxSubset[...][val]"},
    {67, PointKind::Bool, "isValid: !isPresent"},
};

constexpr PointId kFirstBool = 52;

// Java boolean[]; std::vector<bool> cannot hand out references.
using Flags = Array<Array<std::uint8_t>>;

class Solver {
 public:
  Solver(Controller& c, Array<Array<Int>> board) : c_(c), board_(std::move(board)) {
    size_ = I(0, board_.length());
    box_ = I(2, static_cast<Int>(std::sqrt(static_cast<double>(I(1, size_)))));
    init_subsets();
  }

  bool solve() { return solve(0, 0); }

  const Array<Array<Int>>& board() const { return board_; }

 private:
  void init_subsets() {
    rows_ = jvm::new_matrix<std::uint8_t>(I(3, size_), I(4, size_));
    cols_ = jvm::new_matrix<std::uint8_t>(I(5, size_), I(6, size_));
    boxes_ = jvm::new_matrix<std::uint8_t>(I(7, size_), I(8, size_));
    for (Int i = I(9, 0); B(0, I(10, i) < I(11, board_.length())); I(12, i++)) {
      for (Int j = I(13, 0); B(1, I(14, j) < I(15, board_.length())); I(16, j++)) {
        const Int value = I(19, board_[I(17, i)][I(18, j)]);
        if (B(2, I(20, value) != 0)) set_subset_value(i, j, value, B(3, true));
      }
    }
  }

  void set_subset_value(Int i, Int j, Int value, bool present) {
    rows_[I(21, i)][I(22, jvm::sub(value, 1))] = present;
    cols_[I(23, j)][I(24, jvm::sub(value, 1))] = present;
    boxes_[I(25, compute_box_no(i, j))][I(26, jvm::sub(value, 1))] = present;
  }

  bool solve(Int i, Int j) {
    Controller::Frame frame(c_);
    if (B(4, I(27, i) == I(28, size_))) {
      i = I(29, 0);
      if (B(5, I(30, ++j) == I(31, size_))) return true;
    }
    if (B(6, I(32, board_[i][j]) != 0)) return solve(I(33, jvm::add(i, 1)), I(34, j));
    for (Int value = I(35, 1); B(7, I(36, value) <= I(37, size_)); I(38, value++)) {
      if (B(8, is_valid(i, j, I(39, value)))) {
        board_[i][j] = I(40, value);
        set_subset_value(i, j, value, B(9, true));
        if (B(10, solve(I(41, jvm::add(i, 1)), I(42, j)))) return true;
        set_subset_value(i, j, value, B(11, false));
      }
    }
    board_[i][j] = I(43, 0);
    return false;
  }

  bool is_valid(Int i, Int j, Int val) {
    val = I(44, jvm::sub(val, 1));
    const bool present = B(12, rows_[i][I(45, val)] != 0) ||
                         B(13, cols_[j][I(46, val)] != 0) ||
                         B(14, boxes_[I(47, compute_box_no(i, j))][I(48, val)] != 0);
    return B(15, !present);
  }

  Int compute_box_no(Int i, Int j) {
    const Int box_row = I(49, jvm::div(i, box_));
    const Int box_col = I(50, jvm::div(j, box_));
    return I(51, jvm::add(jvm::mul(box_row, box_), box_col));
  }

  Int I(PointId id, Int v) { return c_.hook_int(id, v); }
  bool B(PointId id, bool v) { return c_.hook_bool(kFirstBool + id, v); }

  Controller& c_;
  Array<Array<Int>> board_;
  Int size_ = 0;
  Int box_ = 0;
  Flags rows_;
  Flags cols_;
  Flags boxes_;
};

bool valid_group(const Sudoku::Grid& g, int r0, int c0, int dr, int dc, int rows, int cols) {
  bool seen[10] = {};
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const Int v = g[static_cast<std::size_t>((r0 + r * dr) * 9 + c0 + c * dc)];
      if (v < 1 || v > 9 || seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

}  // namespace

std::span<const PerturbationPoint> Sudoku::points() { return kPoints; }

Sudoku::Output Sudoku::run(const Input& puzzle, Controller& c) {
  auto board = jvm::new_matrix<Int>(9, 9);
  for (Int r = 0; r < 9; ++r) {
    for (Int col = 0; col < 9; ++col) board[r][col] = puzzle[static_cast<std::size_t>(r * 9 + col)];
  }
  Solver solver(c, std::move(board));
  solver.solve();
  Output out{};
  for (Int r = 0; r < 9; ++r) {
    for (Int col = 0; col < 9; ++col) {
      out[static_cast<std::size_t>(r * 9 + col)] = solver.board()[r][col];
    }
  }
  return out;
}

bool Sudoku::accepts(const Input& puzzle, const Output&, const Output& out) {
  for (std::size_t k = 0; k < 81; ++k) {
    if (puzzle[k] != 0 && puzzle[k] != out[k]) return false;
  }
  for (int n = 0; n < 9; ++n) {
    if (!valid_group(out, n, 0, 0, 1, 1, 9)) return false;
    if (!valid_group(out, 0, n, 1, 0, 9, 1)) return false;
    if (!valid_group(out, n / 3 * 3, n % 3 * 3, 1, 1, 3, 3)) return false;
  }
  return true;
}

std::vector<Sudoku::Grid> Sudoku::parse(std::string_view text) {
  std::vector<Grid> grids;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    if (line.empty()) continue;
    if (line.size() != 81) {
      throw std::invalid_argument("sudoku line " + std::to_string(line_no) + ": expected 81 cells");
    }
    Grid g{};
    for (std::size_t k = 0; k < 81; ++k) {
      if (line[k] < '0' || line[k] > '9') {
        throw std::invalid_argument("sudoku line " + std::to_string(line_no) + ": bad cell");
      }
      g[k] = line[k] - '0';
    }
    grids.push_back(g);
  }
  return grids;
}

const std::vector<Sudoku::Grid>& Sudoku::bundled() {
  static const std::vector<Grid> grids = parse(data::kSudokuPuzzles);
  return grids;
}

std::vector<Sudoku::Input> Sudoku::generate(std::uint64_t seed, std::size_t count) {
  const auto& grids = bundled();
  const std::size_t start = InputRng(seed, 0).below(grids.size());
  std::vector<Input> inputs;
  inputs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) inputs.push_back(grids[(start + i) % grids.size()]);
  return inputs;
}

std::string Sudoku::show(const Input& puzzle) {
  std::string s(81, '0');
  for (std::size_t k = 0; k < 81; ++k) s[k] = static_cast<char>('0' + puzzle[k]);
  return s;
}

}  // namespace attract::corpus
