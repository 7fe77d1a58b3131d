#include "attract/subjects/lcs.hpp"

#include <algorithm>
#include <stdexcept>

#include "attract/subjects/bundled_data.hpp"
#include "attract/subjects/input_rng.hpp"

namespace attract::corpus {

namespace {

using jvm::Int;

constexpr PerturbationPoint kPoints[] = {
    {0, PointKind::Int, "a.length() in new int[a.length() + 1][...]"},
    {1, PointKind::Int, "1 in new int[a.length() + 1][...]"},
    {2, PointKind::Int, "a.length() + 1 rows"},
    {3, PointKind::Int, "b.length() in new int[...][b.length() + 1]"},
    {4, PointKind::Int, "1 in new int[...][b.length() + 1]"},
    {5, PointKind::Int, "b.length() + 1 columns"},
    {6, PointKind::Int, "fill: i = 0"},
    {7, PointKind::Int, "fill: i in i < a.length()"},
    {8, PointKind::Int, "fill: a.length()"},
    {9, PointKind::Int, "fill: j = 0"},
    {10, PointKind::Int, "fill: j in j < b.length()"},
    {11, PointKind::Int, "fill: b.length()"},
    {12, PointKind::Int, "fill: i in a.charAt(i)"},
    {13, PointKind::Int, "fill: j in b.charAt(j)"},
    {14, PointKind::Int, "fill: i + 1 target row"},
    {15, PointKind::Int, "fill: j + 1 target column"},
    {16, PointKind::Int, "fill: lengths[i][j] + 1"},
    {17, PointKind::Int, "fill: i + 1 in lengths[i + 1][j]"},
    {18, PointKind::Int, "fill: lengths[i + 1][j]"},
    {19, PointKind::Int, "fill: j + 1 in lengths[i][j + 1]"},
    {20, PointKind::Int, "fill: lengths[i][j + 1]"},
    {21, PointKind::Int, "fill: Math.max(...)"},
    {22, PointKind::Int, "fill: j++"},
    {23, PointKind::Int, "fill: i++"},
    {24, PointKind::Int, "traceback: x = a.length()"},
    {25, PointKind::Int, "traceback: y = b.length()"},
    {26, PointKind::Int, "traceback: x in x != 0"},
    {27, PointKind::Int, "traceback: y in y != 0"},
    {28, PointKind::Int, "traceback: lengths[x][y] vs up"},
    {29, PointKind::Int, "traceback: x - 1 in lengths[x - 1][y]"},
    {30, PointKind::Int, "traceback: lengths[x - 1][y]"},
    {31, PointKind::Int, "traceback: x--"},
    {32, PointKind::Int, "traceback: lengths[x][y] vs left"},
    {33, PointKind::Int, "traceback: y - 1 in lengths[x][y - 1]"},
    {34, PointKind::Int, "traceback: lengths[x][y - 1]"},
    {35, PointKind::Int, "traceback: y--"},
    {36, PointKind::Int, "traceback: x - 1 in a.charAt(x - 1)"},
    {37, PointKind::Int, "traceback: x-- after append"},
    {38, PointKind::Int, "traceback: y-- after append"},
    {39, PointKind::Bool, "fill: i < a.length()"},
    {40, PointKind::Bool, "fill: j < b.length()"},
    {41, PointKind::Bool, "fill: a.charAt(i) == b.charAt(j)"},
    {42, PointKind::Bool, "traceback: x != 0"},
    {43, PointKind::Bool, "traceback: y != 0"},
    {44, PointKind::Bool, "traceback: lengths[x][y] == lengths[x - 1][y]"},
    {45, PointKind::Bool, "traceback: lengths[x][y] == lengths[x][y - 1]"},
};

constexpr PointId kFirstBool = 39;

class Solver {
 public:
  explicit Solver(Controller& c) : c_(c) {}

  std::string lcs(const std::string& a, const std::string& b) {
    using namespace jvm;
    const Int alen = static_cast<Int>(a.size());
    const Int blen = static_cast<Int>(b.size());
    auto lengths = new_matrix<Int>(I(2, add(I(0, alen), I(1, 1))), I(5, add(I(3, blen), I(4, 1))));
    for (Int i = I(6, 0); B(0, I(7, i) < I(8, alen)); I(23, i++)) {
      for (Int j = I(9, 0); B(1, I(10, j) < I(11, blen)); I(22, j++)) {
        if (B(2, char_at(a, I(12, i)) == char_at(b, I(13, j)))) {
          lengths[I(14, add(i, 1))][I(15, add(j, 1))] = I(16, add(lengths[i][j], 1));
        } else {
          lengths[add(i, 1)][add(j, 1)] = I(21, std::max(I(18, lengths[I(17, add(i, 1))][j]),
                                                       I(20, lengths[i][I(19, add(j, 1))])));
        }
      }
    }
    std::string sb;
    for (Int x = I(24, alen), y = I(25, blen); B(3, I(26, x) != 0) && B(4, I(27, y) != 0);) {
      if (B(5, I(28, lengths[x][y]) == I(30, lengths[I(29, sub(x, 1))][y]))) {
        x = I(31, sub(x, 1));
      } else if (B(6, I(32, lengths[x][y]) == I(34, lengths[x][I(33, sub(y, 1))]))) {
        y = I(35, sub(y, 1));
      } else {
        sb += char_at(a, I(36, sub(x, 1)));
        x = I(37, sub(x, 1));
        y = I(38, sub(y, 1));
      }
    }
    std::reverse(sb.begin(), sb.end());
    return sb;
  }

 private:
  Int I(PointId id, Int v) { return c_.hook_int(id, v); }
  bool B(PointId id, bool v) { return c_.hook_bool(kFirstBool + id, v); }

  Controller& c_;
};

std::string_view strip(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t')) {
    line.remove_suffix(1);
  }
  return line;
}

}  // namespace

std::span<const PerturbationPoint> Lcs::points() { return kPoints; }

Lcs::Output Lcs::run(const Input& input, Controller& c) { return Solver(c).lcs(input.a, input.b); }

bool Lcs::is_subsequence(std::string_view sub, std::string_view of) {
  std::size_t k = 0;
  for (char ch : of) {
    if (k < sub.size() && sub[k] == ch) ++k;
  }
  return k == sub.size();
}

bool Lcs::accepts(const Input& input, const Output& reference, const Output& out) {
  return out.size() == reference.size() && is_subsequence(out, input.a) &&
         is_subsequence(out, input.b);
}

std::vector<Lcs::Input> Lcs::parse(std::string_view text) {
  std::vector<std::string> lines;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = strip(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty()) lines.emplace_back(line);
  }
  if (lines.size() % 2 != 0) throw std::invalid_argument("lcs data: odd number of sequences");
  std::vector<Input> pairs;
  for (std::size_t k = 0; k < lines.size(); k += 2) pairs.push_back({lines[k], lines[k + 1]});
  return pairs;
}

const std::vector<Lcs::Input>& Lcs::bundled() {
  static const std::vector<Input> pairs = parse(data::kLcsPairs);
  return pairs;
}

std::vector<Lcs::Input> Lcs::generate(std::uint64_t seed, std::size_t count) {
  const auto& pairs = bundled();
  const std::size_t start = InputRng(seed, 0).below(pairs.size());
  std::vector<Input> inputs;
  inputs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) inputs.push_back(pairs[(start + i) % pairs.size()]);
  return inputs;
}

}  // namespace attract::corpus
