#include "attract/subjects/md5.hpp"

#include <cmath>

#include "attract/subjects/input_rng.hpp"

namespace attract::corpus {

namespace {

using jvm::Array;
using jvm::Byte;
using jvm::Int;

constexpr PerturbationPoint kPoints[] = {
    {0, PointKind::Int, "messageLenBytes = message.length"},
    {1, PointKind::Int, "messageLenBytes + 8"},
    {2, PointKind::Int, "(messageLenBytes + 8) >>> 6"},
    {3, PointKind::Int, "numBlocks = ... + 1"},
    {4, PointKind::Int, "totalLen = numBlocks << 6"},
    {5, PointKind::Int, "totalLen - messageLenBytes"},
    {6, PointKind::Int, "0 in paddingBytes[0] = (byte) 0x80"},
    {7, PointKind::Int, "padding: i = 0"},
    {8, PointKind::Int, "padding: i in i < 8"},
    {9, PointKind::Int, "padding: paddingBytes.length - 8 + i"},
    {10, PointKind::Int, "padding: i++"},
    {11, PointKind::Int, "a = INIT_A"},
    {12, PointKind::Int, "b = INIT_B"},
    {13, PointKind::Int, "c = INIT_C"},
    {14, PointKind::Int, "d = INIT_D"},
    {15, PointKind::Int, "16 in new int[16]"},
    {16, PointKind::Int, "block: i = 0"},
    {17, PointKind::Int, "block: i in i < numBlocks"},
    {18, PointKind::Int, "block: numBlocks in i < numBlocks"},
    {19, PointKind::Int, "index = i << 6"},
    {20, PointKind::Int, "fill: j = 0"},
    {21, PointKind::Int, "fill: j in j < 64"},
    {22, PointKind::Int, "fill: j >>> 2 target"},
    {23, PointKind::Int, "fill: index in index < messageLenBytes"},
    {24, PointKind::Int, "fill: message[index]"},
    {25, PointKind::Int, "fill: index - messageLenBytes"},
    {26, PointKind::Int, "fill: paddingBytes[...]"},
    {27, PointKind::Int, "fill: buffer[j >>> 2] >>> 8"},
    {28, PointKind::Int, "fill: (... << 24) | (...)"},
    {29, PointKind::Int, "fill: j++"},
    {30, PointKind::Int, "fill: index++"},
    {31, PointKind::Int, "originalA = a"},
    {32, PointKind::Int, "originalB = b"},
    {33, PointKind::Int, "originalC = c"},
    {34, PointKind::Int, "originalD = d"},
    {35, PointKind::Int, "round: j = 0"},
    {36, PointKind::Int, "round: j in j < 64"},
    {37, PointKind::Int, "div16 = j >>> 4"},
    {38, PointKind::Int, "f = 0"},
    {39, PointKind::Int, "bufferIndex = j"},
    {40, PointKind::Int, "div16 in switch"},
    {41, PointKind::Int, "case 0: f = (b & c) | (~b & d)"},
    {42, PointKind::Int, "case 1: f = (b & d) | (c & ~d)"},
    {43, PointKind::Int, "case 1: bufferIndex = (bufferIndex * 5 + 1) & 0x0F"},
    {44, PointKind::Int, "case 2: f = b ^ c ^ d"},
    {45, PointKind::Int, "case 2: bufferIndex = (bufferIndex * 3 + 5) & 0x0F"},
    {46, PointKind::Int, "case 3: f = c ^ (b | ~d)"},
    {47, PointKind::Int, "case 3: bufferIndex = (bufferIndex * 7) & 0x0F"},
    {48, PointKind::Int, "buffer[bufferIndex]"},
    {49, PointKind::Int, "TABLE_T[j]"},
    {50, PointKind::Int, "a + f + buffer[bufferIndex] + TABLE_T[j]"},
    {51, PointKind::Int, "(div16 << 2) | (j & 3)"},
    {52, PointKind::Int, "SHIFT_AMTS[...]"},
    {53, PointKind::Int, "temp = b + Integer.rotateLeft(...)"},
    {54, PointKind::Int, "a = d"},
    {55, PointKind::Int, "d = c"},
    {56, PointKind::Int, "c = b"},
    {57, PointKind::Int, "b = temp"},
    {58, PointKind::Int, "round: j++"},
    {59, PointKind::Int, "a += originalA"},
    {60, PointKind::Int, "b += originalB"},
    {61, PointKind::Int, "c += originalC"},
    {62, PointKind::Int, "d += originalD"},
    {63, PointKind::Int, "block: i++"},
    {64, PointKind::Int, "16 in new byte[16]"},
    {65, PointKind::Int, "count = 0"},
    {66, PointKind::Int, "output: i = 0"},
    {67, PointKind::Int, "output: i in i < 4"},
    {68, PointKind::Int, "n = a, b, c or d"},
    {69, PointKind::Int, "output: j = 0"},
    {70, PointKind::Int, "output: j in j < 4"},
    {71, PointKind::Int, "count++ in md5[count++]"},
    {72, PointKind::Int, "(byte) n"},
    {73, PointKind::Int, "n >>>= 8"},
    {74, PointKind::Int, "output: j++"},
    {75, PointKind::Int, "output: i++"},
    {76, PointKind::Bool, "padding: i < 8"},
    {77, PointKind::Bool, "block: i < numBlocks"},
    {78, PointKind::Bool, "fill: j < 64"},
    {79, PointKind::Bool, "fill: index < messageLenBytes"},
    {80, PointKind::Bool, "round: j < 64"},
    {81, PointKind::Bool, "output: i < 4"},
    {82, PointKind::Bool, "output: i == 0"},
    {83, PointKind::Bool, "output: i == 1"},
    {84, PointKind::Bool, "output: i == 2"},
    {85, PointKind::Bool, "output: j < 4"},
};

constexpr PointId kFirstBool = 76;

constexpr Int kInitA = 0x67452301;
constexpr Int kInitB = static_cast<Int>(0xEFCDAB89U);
constexpr Int kInitC = static_cast<Int>(0x98BADCFEU);
constexpr Int kInitD = 0x10325476;

constexpr Int kShiftAmounts[16] = {7, 12, 17, 22, 5, 9, 14, 20, 4, 11, 16, 23, 6, 10, 15, 21};

const std::array<Int, 64>& table_t() {
  static const std::array<Int, 64> table = [] {
    std::array<Int, 64> t{};
    for (int i = 0; i < 64; ++i) {
      const double v = 4294967296.0 * std::fabs(std::sin(static_cast<double>(i + 1)));
      t[static_cast<std::size_t>(i)] = static_cast<Int>(static_cast<std::uint32_t>(static_cast<std::int64_t>(v)));
    }
    return t;
  }();
  return table;
}

class Hasher {
 public:
  explicit Hasher(Controller& c) : c_(c) {}

  Md5::Output compute(const Array<Byte>& message) {
    using namespace jvm;
    const auto& kTableT = table_t();
    const Int messageLenBytes = I(0, message.length());
    const Int numBlocks = I(3, add(I(2, ushr(I(1, add(messageLenBytes, 8)), 6)), 1));
    const Int totalLen = I(4, shl(numBlocks, 6));
    Array<Byte> paddingBytes(I(5, sub(totalLen, messageLenBytes)));
    paddingBytes[I(6, 0)] = to_byte(0x80);

    std::int64_t messageLenBits = static_cast<std::int64_t>(messageLenBytes) << 3;
    for (Int i = I(7, 0); B(0, I(8, i) < 8); I(10, i++)) {
      paddingBytes[I(9, add(sub(paddingBytes.length(), 8), i))] =
          static_cast<Byte>(static_cast<std::uint8_t>(messageLenBits));
      messageLenBits = static_cast<std::int64_t>(static_cast<std::uint64_t>(messageLenBits) >> 8);
    }

    Int a = I(11, kInitA);
    Int b = I(12, kInitB);
    Int c = I(13, kInitC);
    Int d = I(14, kInitD);
    Array<Int> buffer(I(15, 16));
    for (Int i = I(16, 0); B(1, I(17, i) < I(18, numBlocks)); I(63, i++)) {
      Int index = I(19, shl(i, 6));
      for (Int j = I(20, 0); B(2, I(21, j) < 64); I(29, j++), I(30, index++)) {
        const Int slot = I(22, ushr(j, 2));
        const Int byte = B(3, I(23, index) < messageLenBytes)
                             ? I(24, message[index])
                             : I(26, paddingBytes[I(25, sub(index, messageLenBytes))]);
        buffer[slot] = I(28, shl(byte, 24) | I(27, ushr(buffer[slot], 8)));
      }
      const Int originalA = I(31, a);
      const Int originalB = I(32, b);
      const Int originalC = I(33, c);
      const Int originalD = I(34, d);
      for (Int j = I(35, 0); B(4, I(36, j) < 64); I(58, j++)) {
        const Int div16 = I(37, ushr(j, 4));
        Int f = I(38, 0);
        Int bufferIndex = I(39, j);
        switch (I(40, div16)) {
          case 0:
            f = I(41, (b & c) | (~b & d));
            break;
          case 1:
            f = I(42, (b & d) | (c & ~d));
            bufferIndex = I(43, add(mul(bufferIndex, 5), 1) & 0x0F);
            break;
          case 2:
            f = I(44, b ^ c ^ d);
            bufferIndex = I(45, add(mul(bufferIndex, 3), 5) & 0x0F);
            break;
          case 3:
            f = I(46, c ^ (b | ~d));
            bufferIndex = I(47, mul(bufferIndex, 7) & 0x0F);
            break;
          default:
            break;
        }
        const Int sum = I(50, add(add(add(a, f), I(48, buffer[bufferIndex])), I(49, table_at(kTableT, j))));
        const Int shift = I(52, shift_at(I(51, shl(div16, 2) | (j & 3))));
        const Int temp = I(53, add(b, rotl(sum, shift)));
        a = I(54, d);
        d = I(55, c);
        c = I(56, b);
        b = I(57, temp);
      }
      a = I(59, add(a, originalA));
      b = I(60, add(b, originalB));
      c = I(61, add(c, originalC));
      d = I(62, add(d, originalD));
    }

    Array<Byte> md5(I(64, 16));
    Int count = I(65, 0);
    for (Int i = I(66, 0); B(5, I(67, i) < 4); I(75, i++)) {
      Int n = I(68, B(6, i == 0) ? a : (B(7, i == 1) ? b : (B(8, i == 2) ? c : d)));
      for (Int j = I(69, 0); B(9, I(70, j) < 4); I(74, j++)) {
        md5[I(71, count++)] = to_byte(I(72, n));
        n = I(73, ushr(n, 8));
      }
    }
    Md5::Output out{};
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = static_cast<std::uint8_t>(md5[static_cast<Int>(k)]);
    }
    return out;
  }

 private:
  static Int table_at(const std::array<Int, 64>& table, Int j) {
    if (j < 0 || j >= 64) jvm::throw_index_out_of_bounds(j, 64);
    return table[static_cast<std::size_t>(j)];
  }
  static Int shift_at(Int k) {
    if (k < 0 || k >= 16) jvm::throw_index_out_of_bounds(k, 16);
    return kShiftAmounts[k];
  }

  Int I(PointId id, Int v) { return c_.hook_int(id, v); }
  bool B(PointId id, bool v) { return c_.hook_bool(kFirstBool + id, v); }

  Controller& c_;
};

}  // namespace

std::span<const PerturbationPoint> Md5::points() { return kPoints; }

Md5::Output Md5::run(const Input& message, Controller& c) {
  std::vector<jvm::Byte> bytes(message.begin(), message.end());
  return Hasher(c).compute(Array<Byte>(std::move(bytes)));
}

bool Md5::accepts(const Input& message, const Output&, const Output& out) {
  return out == digest(message);
}

// RFC 1321 structure: four explicit round groups over little-endian words.
Md5::Output Md5::digest(std::string_view message) {
  static constexpr std::uint32_t kS[64] = {
      7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22,
      5, 9,  14, 20, 5, 9,  14, 20, 5, 9,  14, 20, 5, 9,  14, 20,
      4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23,
      6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21};
  const auto& t = table_t();
  std::vector<std::uint8_t> data(message.begin(), message.end());
  const std::uint64_t bit_length = static_cast<std::uint64_t>(data.size()) * 8;
  data.push_back(0x80);
  while (data.size() % 64 != 56) data.push_back(0);
  for (int k = 0; k < 8; ++k) data.push_back(static_cast<std::uint8_t>(bit_length >> (8 * k)));

  std::uint32_t h[4] = {0x67452301U, 0xEFCDAB89U, 0x98BADCFEU, 0x10325476U};
  for (std::size_t off = 0; off < data.size(); off += 64) {
    std::uint32_t m[16];
    for (int w = 0; w < 16; ++w) {
      const std::uint8_t* p = &data[off + static_cast<std::size_t>(w) * 4];
      m[w] = p[0] | (p[1] << 8) | (p[2] << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
    }
    std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3];
    for (std::uint32_t r = 0; r < 64; ++r) {
      std::uint32_t f;
      std::uint32_t g;
      if (r < 16) {
        f = (b & c) | (~b & d);
        g = r;
      } else if (r < 32) {
        f = (d & b) | (~d & c);
        g = (5 * r + 1) % 16;
      } else if (r < 48) {
        f = b ^ c ^ d;
        g = (3 * r + 5) % 16;
      } else {
        f = c ^ (b | ~d);
        g = (7 * r) % 16;
      }
      const std::uint32_t x = a + f + static_cast<std::uint32_t>(t[r]) + m[g];
      a = d;
      d = c;
      c = b;
      b = b + ((x << kS[r]) | (x >> (32 - kS[r])));
    }
    h[0] += a;
    h[1] += b;
    h[2] += c;
    h[3] += d;
  }
  Output out{};
  for (int w = 0; w < 4; ++w) {
    for (int k = 0; k < 4; ++k) out[static_cast<std::size_t>(w * 4 + k)] = static_cast<std::uint8_t>(h[w] >> (8 * k));
  }
  return out;
}

std::string Md5::hex(const Output& digest) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string s;
  for (auto byte : digest) {
    s += kHex[byte >> 4];
    s += kHex[byte & 0xF];
  }
  return s;
}

std::vector<Md5::Input> Md5::generate(std::uint64_t seed, std::size_t count) {
  std::vector<Input> inputs(count);
  for (std::size_t i = 0; i < count; ++i) {
    InputRng rng(seed, i);
    inputs[i].resize(static_cast<std::size_t>(rng.between(1, 40)));
    for (auto& ch : inputs[i]) ch = static_cast<char>(rng.between(0x20, 0x7E));
  }
  return inputs;
}

}  // namespace attract::corpus
