#include "attract/subjects/quicksort.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "attract/subjects/input_rng.hpp"

namespace attract::corpus {

namespace {

using jvm::Array;
using jvm::Int;

constexpr PerturbationPoint kPoints[] = {
    {0, PointKind::Int, "beg in left = beg"},
    {1, PointKind::Int, "end in right = end"},
    {2, PointKind::Int, "beg in pivot index"},
    {3, PointKind::Int, "end in end - beg"},
    {4, PointKind::Int, "beg in end - beg"},
    {5, PointKind::Int, "end - beg"},
    {6, PointKind::Int, "literal 2 in (end - beg) / 2"},
    {7, PointKind::Int, "(end - beg) / 2"},
    {8, PointKind::Int, "pivot index beg + ((end - beg) / 2)"},
    {9, PointKind::Int, "pivot = array[...]"},
    {10, PointKind::Int, "left in while (left <= right)"},
    {11, PointKind::Int, "right in while (left <= right)"},
    {12, PointKind::Int, "left in array[left] < pivot"},
    {13, PointKind::Int, "array[left] in array[left] < pivot"},
    {14, PointKind::Int, "pivot in array[left] < pivot"},
    {15, PointKind::Int, "left++ in left scan"},
    {16, PointKind::Int, "right in array[right] > pivot"},
    {17, PointKind::Int, "array[right] in array[right] > pivot"},
    {18, PointKind::Int, "pivot in array[right] > pivot"},
    {19, PointKind::Int, "right-- in right scan"},
    {20, PointKind::Int, "left in if (left <= right)"},
    {21, PointKind::Int, "right in if (left <= right)"},
    {22, PointKind::Int, "left argument of swap"},
    {23, PointKind::Int, "right argument of swap"},
    {24, PointKind::Int, "left++ after swap"},
    {25, PointKind::Int, "right-- after swap"},
    {26, PointKind::Int, "beg in if (beg < right)"},
    {27, PointKind::Int, "right in if (beg < right)"},
    {28, PointKind::Int, "beg argument of left recursion"},
    {29, PointKind::Int, "right argument of left recursion"},
    {30, PointKind::Int, "left in if (left < end)"},
    {31, PointKind::Int, "end in if (left < end)"},
    {32, PointKind::Int, "left argument of right recursion"},
    {33, PointKind::Int, "end argument of right recursion"},
    {34, PointKind::Int, "swap: i in tmp = array[i]"},
    {35, PointKind::Int, "swap: array[i] in tmp = array[i]"},
    {36, PointKind::Int, "swap: i in array[i] = array[j]"},
    {37, PointKind::Int, "swap: j in array[i] = array[j]"},
    {38, PointKind::Int, "swap: array[j] in array[i] = array[j]"},
    {39, PointKind::Int, "swap: j in array[j] = tmp"},
    {40, PointKind::Int, "swap: tmp in array[j] = tmp"},
    {41, PointKind::Bool, "while (left <= right)"},
    {42, PointKind::Bool, "array[left] < pivot"},
    {43, PointKind::Bool, "array[right] > pivot"},
    {44, PointKind::Bool, "if (left <= right)"},
    {45, PointKind::Bool, "if (beg < right)"},
    {46, PointKind::Bool, "if (left < end)"},
};

class Sorter {
 public:
  explicit Sorter(Controller& c) : c_(c) {}

  void quicksort(Array<Int>& array, Int beg, Int end) {
    Controller::Frame frame(c_);
    Int left = I(0, beg);
    Int right = I(1, end);
    const Int offset = I(7, jvm::div(I(5, jvm::sub(I(3, end), I(4, beg))), I(6, 2)));
    const Int pivot = I(9, array[I(8, jvm::add(I(2, beg), offset))]);
    while (B(0, I(10, left) <= I(11, right))) {
      while (B(1, I(13, array[I(12, left)]) < I(14, pivot))) {
        I(15, left++);
      }
      while (B(2, I(17, array[I(16, right)]) > I(18, pivot))) {
        I(19, right--);
      }
      if (B(3, I(20, left) <= I(21, right))) {
        swap(array, I(22, left), I(23, right));
        I(24, left++);
        I(25, right--);
      }
    }
    if (B(4, I(26, beg) < I(27, right))) quicksort(array, I(28, beg), I(29, right));
    if (B(5, I(30, left) < I(31, end))) quicksort(array, I(32, left), I(33, end));
  }

 private:
  void swap(Array<Int>& array, Int i, Int j) {
    const Int tmp = I(35, array[I(34, i)]);
    const Int moved = I(38, array[I(37, j)]);
    array[I(36, i)] = moved;
    array[I(39, j)] = I(40, tmp);
  }

  Int I(PointId id, Int v) { return c_.hook_int(id, v); }
  bool B(PointId id, bool v) { return c_.hook_bool(41 + id, v); }

  Controller& c_;
};

}  // namespace

std::span<const PerturbationPoint> QuickSort::points() { return kPoints; }

QuickSort::Output QuickSort::run(const Input& input, Controller& c) {
  if (input.empty()) throw std::invalid_argument("quicksort input must be non-empty");
  Array<Int> array(input);
  Sorter(c).quicksort(array, 0, array.length() - 1);
  return std::move(array.values());
}

bool QuickSort::accepts(const Input& input, const Output&, const Output& out) {
  if (out.size() != input.size()) return false;
  if (!std::is_sorted(out.begin(), out.end())) return false;
  Input sorted = input;
  std::sort(sorted.begin(), sorted.end());
  return sorted == out;
}

std::vector<QuickSort::Input> QuickSort::generate(std::uint64_t seed, std::size_t count) {
  std::vector<Input> inputs(count);
  for (std::size_t i = 0; i < count; ++i) {
    InputRng rng(seed, i);
    inputs[i].resize(kInputLength);
    for (auto& v : inputs[i]) {
      v = static_cast<Int>(rng.between(std::int64_t{std::numeric_limits<Int>::min()},
                                       std::int64_t{std::numeric_limits<Int>::max()}));
    }
  }
  return inputs;
}

std::string QuickSort::show(const Input& array) {
  std::string s = "[";
  for (std::size_t i = 0; i < array.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(array[i]);
  }
  return s + "]";
}

}  // namespace attract::corpus
