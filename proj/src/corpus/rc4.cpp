#include "attract/subjects/rc4.hpp"

#include <optional>
#include <stdexcept>

#include "attract/subjects/input_rng.hpp"

namespace attract::corpus {

namespace {

using jvm::Array;
using jvm::Byte;
using jvm::Int;

constexpr PerturbationPoint kPoints[] = {
    {0, PointKind::Int, "setKey: x = 0"},
    {1, PointKind::Int, "setKey: y = 0"},
    {2, PointKind::Int, "STATE_LENGTH in new byte[STATE_LENGTH]"},
    {3, PointKind::Int, "setKey: i = 0 in state init"},
    {4, PointKind::Int, "setKey: i in i < STATE_LENGTH (state init)"},
    {5, PointKind::Int, "setKey: STATE_LENGTH (state init)"},
    {6, PointKind::Int, "setKey: i in engineState[i] = (byte) i"},
    {7, PointKind::Int, "setKey: (byte) i"},
    {8, PointKind::Int, "setKey: i++ in state init"},
    {9, PointKind::Int, "setKey: i1 = 0"},
    {10, PointKind::Int, "setKey: i2 = 0"},
    {11, PointKind::Int, "setKey: i = 0 in key schedule"},
    {12, PointKind::Int, "setKey: i in i < STATE_LENGTH (key schedule)"},
    {13, PointKind::Int, "setKey: STATE_LENGTH (key schedule)"},
    {14, PointKind::Int, "setKey: i1 in keyBytes[i1]"},
    {15, PointKind::Int, "setKey: keyBytes[i1] & 0xff"},
    {16, PointKind::Int, "setKey: engineState[i] in i2 update"},
    {17, PointKind::Int, "setKey: i2 in i2 update"},
    {18, PointKind::Int, "setKey: i2 = (...) & 0xff"},
    {19, PointKind::Int, "setKey: tmp = engineState[i]"},
    {20, PointKind::Int, "setKey: engineState[i] = engineState[i2]"},
    {21, PointKind::Int, "setKey: engineState[i2] = tmp"},
    {22, PointKind::Int, "setKey: keyBytes.length"},
    {23, PointKind::Int, "setKey: i1 = (i1 + 1) % keyBytes.length"},
    {24, PointKind::Int, "setKey: i++ in key schedule"},
    {25, PointKind::Int, "processBytes: inOff + len"},
    {26, PointKind::Int, "processBytes: in.length"},
    {27, PointKind::Int, "processBytes: outOff + len"},
    {28, PointKind::Int, "processBytes: out.length"},
    {29, PointKind::Int, "processBytes: i = 0"},
    {30, PointKind::Int, "processBytes: i in i < len"},
    {31, PointKind::Int, "processBytes: len in i < len"},
    {32, PointKind::Int, "processBytes: x = (x + 1) & 0xff"},
    {33, PointKind::Int, "processBytes: engineState[x] in y update"},
    {34, PointKind::Int, "processBytes: y = (...) & 0xff"},
    {35, PointKind::Int, "processBytes: tmp = engineState[x]"},
    {36, PointKind::Int, "processBytes: engineState[x] = engineState[y]"},
    {37, PointKind::Int, "processBytes: engineState[y] = tmp"},
    {38, PointKind::Int, "processBytes: i + outOff"},
    {39, PointKind::Int, "processBytes: i + inOff"},
    {40, PointKind::Int, "processBytes: in[i + inOff]"},
    {41, PointKind::Int, "processBytes: (engineState[x] + engineState[y]) & 0xff"},
    {42, PointKind::Int, "processBytes: engineState[...] keystream byte"},
    {43, PointKind::Int, "processBytes: in ^ keystream"},
    {44, PointKind::Int, "processBytes: i++"},
    {45, PointKind::Bool, "setKey: engineState == null"},
    {46, PointKind::Bool, "setKey: i < STATE_LENGTH (state init)"},
    {47, PointKind::Bool, "setKey: i < STATE_LENGTH (key schedule)"},
    {48, PointKind::Bool, "processBytes: (inOff + len) > in.length"},
    {49, PointKind::Bool, "processBytes: (outOff + len) > out.length"},
    {50, PointKind::Bool, "processBytes: i < len"},
};

constexpr PointId kFirstBool = 45;
constexpr Int kStateLength = 256;

class Engine {
 public:
  explicit Engine(Controller& c) : c_(c) {}

  void init(const Array<Byte>& key) { set_key(key); }

  void process_bytes(const Array<Byte>& in, Int in_off, Int len, Array<Byte>& out, Int out_off) {
    using namespace jvm;
    if (B(3, I(25, add(in_off, len)) > I(26, in.length()))) {
      throw jvm::Exception("DataLengthException: input buffer too short");
    }
    if (B(4, I(27, add(out_off, len)) > I(28, out.length()))) {
      throw jvm::Exception("OutputLengthException: output buffer too short");
    }
    Array<Byte>& s = state();
    for (Int i = I(29, 0); B(5, I(30, i) < I(31, len)); I(44, i++)) {
      x_ = I(32, add(x_, 1) & 0xff);
      y_ = I(34, add(I(33, s[x_]), y_) & 0xff);
      const Int tmp = I(35, s[x_]);
      s[x_] = to_byte(I(36, s[y_]));
      s[y_] = to_byte(I(37, tmp));
      const Int k = I(42, s[I(41, add(s[x_], s[y_]) & 0xff)]);
      out[I(38, add(i, out_off))] = to_byte(I(43, I(40, in[I(39, add(i, in_off))]) ^ k));
    }
  }

 private:
  void set_key(const Array<Byte>& key) {
    using namespace jvm;
    x_ = I(0, 0);
    y_ = I(1, 0);
    if (B(0, !state_.has_value())) state_.emplace(I(2, kStateLength));
    Array<Byte>& s = state();
    for (Int i = I(3, 0); B(1, I(4, i) < I(5, kStateLength)); I(8, i++)) {
      s[I(6, i)] = to_byte(I(7, i));
    }
    Int i1 = I(9, 0);
    Int i2 = I(10, 0);
    for (Int i = I(11, 0); B(2, I(12, i) < I(13, kStateLength)); I(24, i++)) {
      i2 = I(18, add(add(I(15, key[I(14, i1)] & 0xff), I(16, s[i])), I(17, i2)) & 0xff);
      const Int tmp = I(19, s[i]);
      s[i] = to_byte(I(20, s[i2]));
      s[i2] = to_byte(I(21, tmp));
      i1 = I(23, rem(add(i1, 1), I(22, key.length())));
    }
  }

  Array<Byte>& state() {
    if (!state_) throw jvm::Exception("NullPointerException: engineState");
    return *state_;
  }

  Int I(PointId id, Int v) { return c_.hook_int(id, v); }
  bool B(PointId id, bool v) { return c_.hook_bool(kFirstBool + id, v); }

  Controller& c_;
  std::optional<Array<Byte>> state_;
  Int x_ = 0;
  Int y_ = 0;
};

Array<Byte> to_bytes(std::string_view s) { return Array<Byte>(std::vector<Byte>(s.begin(), s.end())); }

}  // namespace

std::span<const PerturbationPoint> Rc4::points() { return kPoints; }

Rc4::Output Rc4::run(const Input& input, Controller& c) {
  if (input.key.empty()) throw std::invalid_argument("rc4 key must be non-empty");
  const Array<Byte> key = to_bytes(input.key);
  const Array<Byte> plain = to_bytes(input.plaintext);
  Engine engine(c);
  engine.init(key);
  Array<Byte> cipher(plain.length());
  engine.process_bytes(plain, 0, plain.length(), cipher, 0);
  engine.init(key);
  Array<Byte> decrypted(cipher.length());
  engine.process_bytes(cipher, 0, cipher.length(), decrypted, 0);
  return Output(decrypted.values().begin(), decrypted.values().end());
}

bool Rc4::accepts(const Input& input, const Output&, const Output& out) {
  return out == input.plaintext;
}

std::string Rc4::encrypt(std::string_view key, std::string_view plaintext) {
  Controller c({kPoints}, PerturbationPlan::counting());
  Engine engine(c);
  const Array<Byte> in = to_bytes(plaintext);
  Array<Byte> out(in.length());
  engine.init(to_bytes(key));
  engine.process_bytes(in, 0, in.length(), out, 0);
  return std::string(out.values().begin(), out.values().end());
}

std::vector<Rc4::Input> Rc4::generate(std::uint64_t seed, std::size_t count) {
  std::vector<Input> inputs(count);
  for (std::size_t i = 0; i < count; ++i) {
    InputRng rng(seed, i);
    inputs[i].key.resize(static_cast<std::size_t>(rng.between(5, 16)));
    for (auto& ch : inputs[i].key) ch = static_cast<char>(rng.below(256));
    inputs[i].plaintext.resize(static_cast<std::size_t>(rng.between(4, 16)));
    for (auto& ch : inputs[i].plaintext) ch = static_cast<char>(rng.between(0x20, 0x7E));
  }
  return inputs;
}

std::string Rc4::show(const Input& input) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string s = "key=";
  for (unsigned char ch : input.key) {
    s += kHex[ch >> 4];
    s += kHex[ch & 0xF];
  }
  return s + " plaintext=" + input.plaintext;
}

}  // namespace attract::corpus
