#include <gtest/gtest.h>
#include <openssl/evp.h>

#include <Eigen/Dense>
#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "attract/corpus.hpp"
#include "attract/explorer.hpp"
#include "attract/subjects/demo.hpp"
#include "attract/subjects/laguerre.hpp"
#include "attract/subjects/lcs.hpp"
#include "attract/subjects/linreg.hpp"
#include "attract/subjects/md5.hpp"
#include "attract/subjects/quicksort.hpp"
#include "attract/subjects/rc4.hpp"
#include "attract/subjects/sudoku.hpp"
#include "attract/subjects/zip.hpp"

namespace {

using namespace attract;
using namespace attract::corpus;

template <class S>
typename S::Output plain_run(const typename S::Input& in) {
  Controller c(S::points(), PerturbationPlan::counting());
  return S::run(in, c);
}

template <class S>
typename S::Output perturbed(const typename S::Input& in, PointId p, std::uint64_t j, Model m) {
  Controller c(S::points(), PerturbationPlan::perturbing(p, j, m));
  return S::run(in, c);
}

// `count` seeded inputs all run cleanly and satisfy the oracle.
template <class S>
void expect_reference_accepted(std::size_t count) {
  const auto inputs = S::generate(42, count);
  ASSERT_EQ(inputs.size(), count);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    EXPECT_NO_THROW(reference_run<S>(inputs[i], i)) << S::name << " input " << i;
  }
}

template <class S>
void expect_points_well_formed() {
  const auto points = S::points();
  ASSERT_FALSE(points.empty());
  std::set<std::string_view> labels;
  for (std::size_t i = 0; i < points.size(); ++i) {
    EXPECT_EQ(points[i].id, i);
    EXPECT_FALSE(points[i].label.empty());
    labels.insert(points[i].label);
  }
  EXPECT_EQ(labels.size(), points.size()) << S::name << " has duplicate labels";
  // Ints first, then bools.
  EXPECT_TRUE(std::is_partitioned(points.begin(), points.end(),
                                  [](const PerturbationPoint& p) { return p.kind == PointKind::Int; }));
}

template <class S>
void expect_every_point_reached(std::size_t count) {
  const auto inputs = S::generate(42, count);
  std::vector<std::uint64_t> total(S::points().size());
  for (const auto& in : inputs) {
    const auto ref = reference_run<S>(in);
    for (std::size_t p = 0; p < total.size(); ++p) total[p] += ref.counts[p];
  }
  for (std::size_t p = 0; p < total.size(); ++p) {
    EXPECT_GT(total[p], 0u) << S::name << " point " << p << " (" << S::points()[p].label << ")";
  }
}

TEST(Registry, ListsAllSubjectsInOrder) {
  const std::vector<std::string_view> expected = {"demo", "quicksort", "zip", "sudoku", "md5",
                                                  "rc4", "lcs", "laguerre", "linreg"};
  std::vector<std::string_view> names;
  for (const auto& s : subject_registry()) names.push_back(s.name);
  EXPECT_EQ(names, expected);
  EXPECT_EQ(find_subject("zip")->points.size(), Zip::points().size());
  EXPECT_EQ(find_subject("demo")->default_inputs, 100u);
  EXPECT_EQ(find_subject("nope"), nullptr);
  EXPECT_EQ(find_subject("quicksort")->count(PointKind::Int), 41u);
  EXPECT_EQ(find_subject("quicksort")->count(PointKind::Bool), 6u);
}

TEST(Registry, ShownInputsMatchGeneratedOnes) {
  const auto* s = find_subject("rc4");
  const auto shown = s->show_inputs(9, 5);
  const auto inputs = Rc4::generate(9, 5);
  ASSERT_EQ(shown.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(shown[i], Rc4::show(inputs[i]));
}

// demo

TEST(Demo, Traces) {
  EXPECT_EQ(plain_run<Demo>(8), 3);
  for (std::uint64_t j : {0u, 1u, 2u}) EXPECT_EQ(perturbed<Demo>(8, 1, j, Model::Pone), 3);
  EXPECT_EQ(plain_run<Demo>(3), 0);
  EXPECT_EQ(perturbed<Demo>(3, 1, 0, Model::Pone), 1);
}

TEST(Demo, OracleAgainstDirectLoop) {
  for (jvm::Int b = 0; b < 300; ++b) {
    jvm::Int acc = 0;
    for (jvm::Int i = b; i > 0; --i) acc |= i >> 2;
    EXPECT_EQ(Demo::expected(b), acc);
    EXPECT_EQ(plain_run<Demo>(b), acc);
    EXPECT_FALSE(Demo::accepts(b, acc, acc + 1));
  }
  EXPECT_THROW(plain_run<Demo>(-1), std::invalid_argument);
}

TEST(Demo, FailingBoundsArePowersOfTwoMinusOne) {
  for (jvm::Int b = 1; b < 100; ++b) {
    const bool fails = !Demo::accepts(b, 0, perturbed<Demo>(b, 1, 0, Model::Pone));
    const bool mersenne = ((b + 1) & b) == 0 && b >= 3;
    EXPECT_EQ(fails, mersenne) << "bound " << b;
    for (jvm::Int j = 1; j < b; ++j) {
      EXPECT_TRUE(Demo::accepts(b, 0, perturbed<Demo>(b, 1, static_cast<std::uint64_t>(j), Model::Pone)));
    }
  }
}

// quicksort

TEST(QuickSort, SortsLikeTheStandardLibrary) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> len(1, 200);
  std::uniform_int_distribution<jvm::Int> value(std::numeric_limits<jvm::Int>::min(),
                                                std::numeric_limits<jvm::Int>::max());
  std::uniform_int_distribution<jvm::Int> small(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    QuickSort::Input in(static_cast<std::size_t>(len(rng)));
    for (auto& v : in) v = trial % 3 ? value(rng) : small(rng);
    auto expected = in;
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(plain_run<QuickSort>(in), expected);
  }
}

TEST(QuickSort, OracleRejectsMutations) {
  const auto in = QuickSort::generate(42, 1).front();
  const auto out = plain_run<QuickSort>(in);
  ASSERT_TRUE(QuickSort::accepts(in, out, out));
  auto changed = out;
  changed[50] = changed[49];  // still sorted, wrong multiset
  EXPECT_FALSE(QuickSort::accepts(in, out, changed));
  auto swapped = out;
  std::swap(swapped[0], swapped[99]);
  EXPECT_FALSE(QuickSort::accepts(in, out, swapped));
  auto shorter = out;
  shorter.pop_back();
  EXPECT_FALSE(QuickSort::accepts(in, out, shorter));
}

TEST(QuickSort, Inputs) {
  expect_points_well_formed<QuickSort>();
  expect_reference_accepted<QuickSort>(100);
  expect_every_point_reached<QuickSort>(20);
  const auto a = QuickSort::generate(42, 20);
  EXPECT_EQ(a, QuickSort::generate(42, 20));
  EXPECT_NE(a, QuickSort::generate(43, 20));
  for (const auto& in : a) EXPECT_EQ(in.size(), QuickSort::kInputLength);
}

// zip

TEST(Zip, ClassicLzwCodes) {
  const std::vector<jvm::Int> expected = {84, 79, 66, 69, 79, 82, 78, 79, 84, 256, 258, 260,
                                          265, 259, 261, 263};
  EXPECT_EQ(Zip::compress("TOBEORNOTTOBEORTOBEORNOT"), expected);
  EXPECT_EQ(Zip::decompress(expected), u"TOBEORNOTTOBEORTOBEORNOT");
}

TEST(Zip, RoundTripsArbitraryBytes) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> len(1, 300), byte(0, 255), narrow(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    std::string s(static_cast<std::size_t>(len(rng)), '\0');
    for (auto& ch : s) ch = static_cast<char>(trial % 2 ? byte(rng) : 'a' + narrow(rng));
    std::u16string widened(s.size(), u'\0');
    std::transform(s.begin(), s.end(), widened.begin(),
                   [](char ch) { return static_cast<char16_t>(static_cast<unsigned char>(ch)); });
    EXPECT_EQ(Zip::decompress(Zip::compress(s)), widened);
    EXPECT_EQ(plain_run<Zip>(s), widened);
  }
}

TEST(Zip, OracleRejectsMutations) {
  const auto in = Zip::generate(42, 1).front();
  const auto out = plain_run<Zip>(in);
  ASSERT_TRUE(Zip::accepts(in, out, out));
  auto changed = out;
  changed[2] = changed[2] == u'A' ? u'B' : u'A';
  EXPECT_FALSE(Zip::accepts(in, out, changed));
}

TEST(Zip, Inputs) {
  expect_points_well_formed<Zip>();
  expect_reference_accepted<Zip>(100);
  expect_every_point_reached<Zip>(20);
  std::size_t with_255 = 0;
  for (const auto& in : Zip::generate(42, 300)) {
    EXPECT_GE(in.size(), 20u);
    EXPECT_LE(in.size(), 40u);
    const auto pos = in.find('\xFF');
    if (pos != std::string::npos) {
      ++with_255;
      EXPECT_GE(pos, 3u);
    }
  }
  EXPECT_GT(with_255, 50u);
  EXPECT_LT(with_255, 150u);
}

TEST(Zip, DictSizeOffByOneDependsOnByte255) {
  for (const auto& in : Zip::generate(42, 10)) {
    const bool has_255 = in.find('\xFF') != std::string::npos;
    const auto out = plain_run<Zip>(in);
    const auto pone = run_guarded<Zip>(in, *std::make_unique<Controller>(
        Zip::points(), PerturbationPlan::perturbing(Zip::kDictSizePoint, 0, Model::Pone)));
    ASSERT_EQ(pone.index(), 0u);
    EXPECT_TRUE(Zip::accepts(in, out, std::get<0>(pone)));
    Controller mone(Zip::points(), PerturbationPlan::perturbing(Zip::kDictSizePoint, 0, Model::Mone));
    const auto r = run_guarded<Zip>(in, mone);
    const bool ok = r.index() == 0 && Zip::accepts(in, out, std::get<0>(r));
    EXPECT_EQ(ok, !has_255) << Zip::show(in);
  }
}

// sudoku

bool valid_solution(const Sudoku::Grid& puzzle, const Sudoku::Grid& g) {
  for (int k = 0; k < 81; ++k) {
    if (g[k] < 1 || g[k] > 9) return false;
    if (puzzle[k] != 0 && puzzle[k] != g[k]) return false;
  }
  for (int u = 0; u < 9; ++u) {
    std::set<int> row, col, box;
    for (int v = 0; v < 9; ++v) {
      row.insert(g[u * 9 + v]);
      col.insert(g[v * 9 + u]);
      box.insert(g[(u / 3 * 3 + v / 3) * 9 + u % 3 * 3 + v % 3]);
    }
    if (row.size() != 9 || col.size() != 9 || box.size() != 9) return false;
  }
  return true;
}

TEST(Sudoku, BundledPuzzlesSolve) {
  const auto& puzzles = Sudoku::bundled();
  ASSERT_EQ(puzzles.size(), 24u);
  for (const auto& p : puzzles) {
    EXPECT_EQ(std::count(p.begin(), p.end(), 0), 24);
    const auto out = plain_run<Sudoku>(p);
    EXPECT_TRUE(valid_solution(p, out)) << Sudoku::show(p);
    EXPECT_TRUE(Sudoku::accepts(p, out, out));
  }
}

TEST(Sudoku, OracleRejectsMutations) {
  const auto& p = Sudoku::bundled().front();
  const auto out = plain_run<Sudoku>(p);
  for (int k : {0, 40, 80}) {
    auto changed = out;
    changed[k] = changed[k] % 9 + 1;
    EXPECT_FALSE(valid_solution(p, changed));
    EXPECT_FALSE(Sudoku::accepts(p, out, changed));
  }
  // A full valid grid that contradicts a given.
  auto relabelled = out;
  for (auto& v : relabelled) v = v % 9 + 1;
  EXPECT_FALSE(Sudoku::accepts(p, out, relabelled));
}

TEST(Sudoku, Parse) {
  const std::string line(81, '0');
  EXPECT_EQ(Sudoku::parse("# c\n" + line + "\n\n").size(), 1u);
  EXPECT_THROW(Sudoku::parse(line.substr(1)), std::invalid_argument);
  EXPECT_THROW(Sudoku::parse(std::string(80, '0') + "x"), std::invalid_argument);
}

TEST(Sudoku, Inputs) {
  expect_points_well_formed<Sudoku>();
  expect_reference_accepted<Sudoku>(100);
  const auto a = Sudoku::generate(42, 30);
  for (std::size_t i = 1; i < a.size(); ++i) {
    const auto& all = Sudoku::bundled();
    const auto at = [&](const Sudoku::Grid& g) { return std::find(all.begin(), all.end(), g) - all.begin(); };
    EXPECT_EQ(at(a[i]), (at(a[i - 1]) + 1) % 24);
  }
}

// md5

Md5::Output openssl_md5(std::string_view s) {
  Md5::Output out{};
  unsigned int len = 0;
  EVP_Digest(s.data(), s.size(), out.data(), &len, EVP_md5(), nullptr);
  return out;
}

TEST(Md5, KnownVectors) {
  const std::map<std::string, std::string> vectors = {
      {"", "d41d8cd98f00b204e9800998ecf8427e"},
      {"a", "0cc175b9c0f1b6a831c399e269772661"},
      {"abc", "900150983cd24fb0d6963f7d28e17f72"},
      {"message digest", "f96b697d7cb7938d525a2f31aaf161d0"},
      {"abcdefghijklmnopqrstuvwxyz", "c3fcd3d76192e4007dfb496cca67e13b"},
      {"12345678901234567890123456789012345678901234567890123456789012345678901234567890",
       "57edf4a22be3c955ac49da2e2107b67a"},
  };
  for (const auto& [msg, hex] : vectors) {
    EXPECT_EQ(Md5::hex(Md5::digest(msg)), hex) << msg;
    EXPECT_EQ(Md5::hex(plain_run<Md5>(msg)), hex) << msg;
  }
}

TEST(Md5, MatchesOpenSsl) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> len(0, 200), byte(0, 255);
  for (int trial = 0; trial < 300; ++trial) {
    std::string s(static_cast<std::size_t>(len(rng)), '\0');
    for (auto& ch : s) ch = static_cast<char>(byte(rng));
    EXPECT_EQ(plain_run<Md5>(s), openssl_md5(s));
  }
  for (const auto& s : Md5::generate(42, 100)) EXPECT_EQ(Md5::digest(s), openssl_md5(s));
}

TEST(Md5, OracleRejectsMutations) {
  const auto in = Md5::generate(42, 1).front();
  const auto out = plain_run<Md5>(in);
  for (std::size_t k = 0; k < out.size(); ++k) {
    auto changed = out;
    changed[k] ^= 1;
    EXPECT_FALSE(Md5::accepts(in, out, changed));
  }
}

TEST(Md5, Inputs) {
  expect_points_well_formed<Md5>();
  expect_reference_accepted<Md5>(100);
  expect_every_point_reached<Md5>(20);
}

// rc4

std::string rc4_oracle(std::string_view key, std::string_view data) {
  unsigned char s[256];
  for (int i = 0; i < 256; ++i) s[i] = static_cast<unsigned char>(i);
  for (int i = 0, j = 0; i < 256; ++i) {
    j = (j + s[i] + static_cast<unsigned char>(key[i % key.size()])) & 255;
    std::swap(s[i], s[j]);
  }
  std::string out(data);
  for (std::size_t n = 0, i = 0, j = 0; n < out.size(); ++n) {
    i = (i + 1) & 255;
    j = (j + s[i]) & 255;
    std::swap(s[i], s[j]);
    out[n] = static_cast<char>(out[n] ^ s[(s[i] + s[j]) & 255]);
  }
  return out;
}

std::string hex_of(std::string_view s) {
  static const char* digits = "0123456789ABCDEF";
  std::string h;
  for (unsigned char ch : s) {
    h += digits[ch >> 4];
    h += digits[ch & 15];
  }
  return h;
}

TEST(Rc4, KnownVectors) {
  EXPECT_EQ(hex_of(Rc4::encrypt("Key", "Plaintext")), "BBF316E8D940AF0AD3");
  EXPECT_EQ(hex_of(Rc4::encrypt("Wiki", "pedia")), "1021BF0420");
  EXPECT_EQ(hex_of(Rc4::encrypt("Secret", "Attack at dawn")), "45A01F645FC35B383552544B9BF5");
}

TEST(Rc4, MatchesIndependentCipher) {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<int> klen(1, 40), dlen(0, 100), byte(0, 255);
  for (int trial = 0; trial < 300; ++trial) {
    std::string key(static_cast<std::size_t>(klen(rng)), '\0'), data(static_cast<std::size_t>(dlen(rng)), '\0');
    for (auto& ch : key) ch = static_cast<char>(byte(rng));
    for (auto& ch : data) ch = static_cast<char>(byte(rng));
    EXPECT_EQ(Rc4::encrypt(key, data), rc4_oracle(key, data));
    EXPECT_EQ(plain_run<Rc4>({key, data}), data);
  }
}

TEST(Rc4, OracleRejectsMutations) {
  const auto in = Rc4::generate(42, 1).front();
  const auto out = plain_run<Rc4>(in);
  ASSERT_TRUE(Rc4::accepts(in, out, out));
  auto changed = out;
  changed[0] = static_cast<char>(changed[0] ^ 0x20);
  EXPECT_FALSE(Rc4::accepts(in, out, changed));
}

TEST(Rc4, Inputs) {
  expect_points_well_formed<Rc4>();
  expect_reference_accepted<Rc4>(100);
  for (const auto& in : Rc4::generate(42, 100)) {
    EXPECT_GE(in.key.size(), 5u);
    EXPECT_LE(in.key.size(), 16u);
    EXPECT_GE(in.plaintext.size(), 4u);
    EXPECT_LE(in.plaintext.size(), 16u);
  }
}

// PONE on `i` in `i < 256` only matters at i = 255, where it ends the key
// schedule one swap early. That leaves two state slots wrong, and a short
// message usually never reads them, so nearly all runs still decrypt.
TEST(Rc4, InitLoopIndexIsNearlyAntifragile) {
  const auto inputs = Rc4::generate(42, 20);
  const auto ex = explore<Rc4>(inputs, {Model::Pone, std::nullopt, {}, 1});
  const auto& t = *std::find_if(ex.tallies.begin(), ex.tallies.end(),
                                [](const PointTally& x) { return x.point == Rc4::kInitLoopIndexPoint; });
  EXPECT_GE(static_cast<double>(t.success) / static_cast<double>(t.execs), 0.99);
  EXPECT_LT(t.success, t.execs);
}

// lcs

std::size_t lcs_length(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = a[i - 1] == b[j - 1] ? d[i - 1][j - 1] + 1 : std::max(d[i - 1][j], d[i][j - 1]);
    }
  }
  return d[a.size()][b.size()];
}

// Exhaustive over subsequences of a, for strings short enough.
std::size_t brute_lcs_length(const std::string& a, const std::string& b) {
  std::size_t best = 0;
  for (unsigned mask = 0; mask < (1u << a.size()); ++mask) {
    std::string sub;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mask >> i & 1) sub += a[i];
    }
    if (sub.size() > best && Lcs::is_subsequence(sub, b)) best = sub.size();
  }
  return best;
}

TEST(Lcs, MatchesBruteForce) {
  std::mt19937_64 rng(25);
  std::uniform_int_distribution<int> len(0, 10), base(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    std::string a(static_cast<std::size_t>(len(rng)), 'A'), b(static_cast<std::size_t>(len(rng)), 'A');
    for (auto& ch : a) ch = "ACGU"[base(rng)];
    for (auto& ch : b) ch = "ACGU"[base(rng)];
    const auto out = plain_run<Lcs>({a, b});
    EXPECT_EQ(out.size(), brute_lcs_length(a, b)) << a << " " << b;
    EXPECT_TRUE(Lcs::is_subsequence(out, a));
    EXPECT_TRUE(Lcs::is_subsequence(out, b));
  }
}

TEST(Lcs, BundledPairs) {
  const auto& pairs = Lcs::bundled();
  ASSERT_EQ(pairs.size(), 24u);
  for (const auto& p : pairs) {
    const auto out = plain_run<Lcs>(p);
    EXPECT_EQ(out.size(), lcs_length(p.a, p.b));
    EXPECT_GE(p.a.size(), 20u);
  }
}

TEST(Lcs, OracleRejectsMutations) {
  const auto in = Lcs::bundled().front();
  const auto out = plain_run<Lcs>(in);
  ASSERT_TRUE(Lcs::accepts(in, out, out));
  auto changed = out;
  changed[0] = 'X';
  EXPECT_FALSE(Lcs::accepts(in, out, changed));
  EXPECT_FALSE(Lcs::accepts(in, out, out.substr(1)));
  EXPECT_TRUE(Lcs::is_subsequence("", "abc"));
  EXPECT_FALSE(Lcs::is_subsequence("ca", "abc"));
}

TEST(Lcs, Inputs) {
  expect_points_well_formed<Lcs>();
  expect_reference_accepted<Lcs>(100);
  EXPECT_THROW(Lcs::parse("ACGU\n"), std::invalid_argument);
}

// laguerre

// Roots as eigenvalues of the companion matrix.
std::vector<std::complex<double>> companion_roots(const std::vector<double>& c) {
  const auto n = static_cast<Eigen::Index>(c.size() - 1);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) m(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  std::vector<std::complex<double>> r(es.eigenvalues().begin(), es.eigenvalues().end());
  return r;
}

bool same_roots(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b, double tol) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](auto p, auto q) { return std::abs(p - x) < std::abs(q - x); });
    if (std::abs(*it - x) > tol) return false;
    b.erase(it);
  }
  return true;
}

TEST(Laguerre, SimpleQuadratics) {
  using C = std::complex<double>;
  EXPECT_TRUE(same_roots(plain_run<Laguerre>({{-1, 0, 1}}), {C(1, 0), C(-1, 0)}, 1e-9));
  EXPECT_TRUE(same_roots(plain_run<Laguerre>({{1, 0, 1}}), {C(0, 1), C(0, -1)}, 1e-9));
  EXPECT_TRUE(same_roots(plain_run<Laguerre>({{-6, 11, -6, 1}}), {C(1, 0), C(2, 0), C(3, 0)}, 1e-9));
}

TEST(Laguerre, AgreesWithCompanionEigenvalues) {
  for (const auto& in : Laguerre::generate(42, 200)) {
    const auto out = plain_run<Laguerre>(in);
    EXPECT_TRUE(same_roots(out, companion_roots(in.coefficients), 1e-5)) << Laguerre::show(in);
    EXPECT_TRUE(Laguerre::accepts(in, out, out));
  }
}

TEST(Laguerre, OracleRejectsMutations) {
  const auto in = Laguerre::generate(42, 1).front();
  const auto out = plain_run<Laguerre>(in);
  for (std::size_t k = 0; k < out.size(); ++k) {
    auto changed = out;
    changed[k] += 1.0;
    EXPECT_FALSE(Laguerre::accepts(in, out, changed));
  }
  auto missing = out;
  missing.pop_back();
  EXPECT_FALSE(Laguerre::accepts(in, out, missing));
}

TEST(Laguerre, Inputs) {
  expect_points_well_formed<Laguerre>();
  expect_reference_accepted<Laguerre>(100);
  for (const auto& in : Laguerre::generate(42, 100)) {
    EXPECT_GE(in.coefficients.size(), 4u);
    EXPECT_LE(in.coefficients.size(), 6u);
    EXPECT_GE(std::abs(in.coefficients.back()), 0.5);
  }
}

// linreg

std::vector<double> eigen_ridge(const LinReg::Input& in) {
  const auto n = static_cast<Eigen::Index>(in.y.size());
  const auto f = static_cast<Eigen::Index>(in.features);
  Eigen::MatrixXd a(n, f + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < f; ++j) a(i, j) = in.x[static_cast<std::size_t>(i * f + j)];
    a(i, f) = 1.0;
  }
  const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(in.y.data(), n);
  const Eigen::MatrixXd lhs = a.transpose() * a + in.ridge * Eigen::MatrixXd::Identity(f + 1, f + 1);
  const Eigen::VectorXd w = lhs.colPivHouseholderQr().solve(a.transpose() * y);
  return {w.data(), w.data() + w.size()};
}

TEST(LinReg, ExactLine) {
  LinReg::Input in;
  in.features = 1;
  for (int i = 0; i < 8; ++i) {
    in.x.push_back(i);
    in.y.push_back(2.0 * i + 1.0);
  }
  const auto w = plain_run<LinReg>(in);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_NEAR(w[0], 2.0, 1e-7);
  EXPECT_NEAR(w[1], 1.0, 1e-7);
}

TEST(LinReg, AgreesWithEigen) {
  for (const auto& in : LinReg::generate(42, 200)) {
    const auto w = plain_run<LinReg>(in);
    const auto expected = eigen_ridge(in);
    ASSERT_EQ(w.size(), expected.size());
    for (std::size_t k = 0; k < w.size(); ++k) EXPECT_NEAR(w[k], expected[k], 1e-8);
  }
}

TEST(LinReg, OracleRejectsMutations) {
  const auto in = LinReg::generate(42, 1).front();
  const auto out = plain_run<LinReg>(in);
  ASSERT_TRUE(LinReg::accepts(in, out, out));
  for (std::size_t k = 0; k < out.size(); ++k) {
    auto changed = out;
    changed[k] += 1e-3;
    EXPECT_FALSE(LinReg::accepts(in, out, changed));
  }
  auto longer = out;
  longer.push_back(0.0);
  EXPECT_FALSE(LinReg::accepts(in, out, longer));
}

TEST(LinReg, Inputs) {
  expect_points_well_formed<LinReg>();
  expect_reference_accepted<LinReg>(100);
}

}  // namespace
