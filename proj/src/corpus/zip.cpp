#include "attract/subjects/zip.hpp"

#include <stdexcept>
#include <unordered_map>

#include "attract/subjects/input_rng.hpp"

namespace attract::corpus {

namespace {

using jvm::Int;

constexpr PerturbationPoint kPoints[] = {
    {0, PointKind::Int, "int dictSize = 256"},
    {1, PointKind::Int, "compress: i = 0 in dictionary init"},
    {2, PointKind::Int, "compress: i in i < 256"},
    {3, PointKind::Int, "compress: 256 in i < 256"},
    {4, PointKind::Int, "compress: i++ in dictionary init"},
    {5, PointKind::Int, "compress: (char) i key"},
    {6, PointKind::Int, "compress: i value"},
    {7, PointKind::Int, "compress: dictionary.get(w) in loop"},
    {8, PointKind::Int, "compress: dictSize++"},
    {9, PointKind::Int, "compress: dictionary.get(w) after loop"},
    {10, PointKind::Int, "decompress: i = 0 in dictionary init"},
    {11, PointKind::Int, "decompress: i in i < 256"},
    {12, PointKind::Int, "decompress: 256 in i < 256"},
    {13, PointKind::Int, "decompress: i++ in dictionary init"},
    {14, PointKind::Int, "decompress: i key"},
    {15, PointKind::Int, "decompress: (char) i value"},
    {16, PointKind::Int, "decompress: compressed.remove(0)"},
    {17, PointKind::Int, "decompress: k from compressed"},
    {18, PointKind::Int, "decompress: k in containsKey(k)"},
    {19, PointKind::Int, "decompress: k in dictionary.get(k)"},
    {20, PointKind::Int, "decompress: k in k == dictSize"},
    {21, PointKind::Int, "decompress: dictSize in k == dictSize"},
    {22, PointKind::Int, "decompress: 0 in w.charAt(0)"},
    {23, PointKind::Int, "decompress: dictSize++"},
    {24, PointKind::Int, "decompress: 0 in entry.charAt(0)"},
    {25, PointKind::Bool, "compress: i < 256"},
    {26, PointKind::Bool, "compress: dictionary.containsKey(wc)"},
    {27, PointKind::Bool, "compress: !w.equals(\"\")"},
    {28, PointKind::Bool, "decompress: i < 256"},
    {29, PointKind::Bool, "decompress: dictionary.containsKey(k)"},
    {30, PointKind::Bool, "decompress: k == dictSize"},
};

constexpr PointId kFirstBool = 25;

// (char) cast of a Java int.
char16_t to_char(Int v) { return static_cast<char16_t>(static_cast<std::uint32_t>(v)); }

[[noreturn]] void null_pointer() { throw jvm::Exception("NullPointerException"); }

class Lzw {
 public:
  explicit Lzw(Controller& c) : c_(c) {}

  std::vector<Int> compress(const std::u16string& text, Int initial) {
    Int dictSize = initial;
    std::unordered_map<std::u16string, Int> dictionary;
    for (Int i = I(1, 0); B(0, I(2, i) < I(3, 256)); I(4, i++)) {
      dictionary[std::u16string(1, to_char(I(5, i)))] = I(6, i);
    }
    std::u16string w;
    std::vector<Int> result;
    for (char16_t ch : text) {
      std::u16string wc = w + ch;
      if (B(1, dictionary.contains(wc))) {
        w = std::move(wc);
      } else {
        result.push_back(I(7, get(dictionary, w)));
        dictionary[wc] = I(8, dictSize++);
        w = std::u16string(1, ch);
      }
    }
    if (B(2, !w.empty())) result.push_back(I(9, get(dictionary, w)));
    return result;
  }

  std::u16string decompress(std::vector<Int> compressed, Int initial) {
    Int dictSize = initial;
    std::unordered_map<Int, std::u16string> dictionary;
    for (Int i = I(10, 0); B(3, I(11, i) < I(12, 256)); I(13, i++)) {
      dictionary[I(14, i)] = std::u16string(1, to_char(I(15, i)));
    }
    if (compressed.empty()) jvm::throw_index_out_of_bounds(0, 0);
    std::u16string w(1, to_char(I(16, compressed.front())));
    std::u16string result = w;
    for (std::size_t n = 1; n < compressed.size(); ++n) {
      const Int k = I(17, compressed[n]);
      std::u16string entry;
      if (B(4, dictionary.contains(I(18, k)))) {
        entry = dictionary.at(I(19, k));
      } else if (B(5, I(20, k) == I(21, dictSize))) {
        entry = w + jvm::char_at(w, I(22, 0));
      } else {
        jvm::throw_illegal_argument("Bad compressed k: " + std::to_string(k));
      }
      result += entry;
      // Java evaluates the key before the value expression.
      const Int key = I(23, dictSize++);
      dictionary[key] = w + jvm::char_at(entry, I(24, 0));
      w = std::move(entry);
    }
    return result;
  }

 private:
  static Int get(const std::unordered_map<std::u16string, Int>& dictionary,
                 const std::u16string& key) {
    const auto it = dictionary.find(key);
    if (it == dictionary.end()) null_pointer();
    return it->second;
  }

  Int I(PointId id, Int v) { return c_.hook_int(id, v); }
  bool B(PointId id, bool v) { return c_.hook_bool(kFirstBool + id, v); }

  Controller& c_;
};

std::u16string widen(const std::string& text) {
  std::u16string out;
  out.reserve(text.size());
  for (unsigned char ch : text) out.push_back(ch);
  return out;
}

}  // namespace

std::span<const PerturbationPoint> Zip::points() { return kPoints; }

Zip::Output Zip::run(const Input& text, Controller& c) {
  if (text.empty()) throw std::invalid_argument("zip input must be non-empty");
  Lzw lzw(c);
  const Int dictSize = c.hook_int(0, 256);
  return lzw.decompress(lzw.compress(widen(text), dictSize), dictSize);
}

bool Zip::accepts(const Input& text, const Output&, const Output& out) {
  return out == widen(text);
}

std::vector<jvm::Int> Zip::compress(const Input& text) {
  std::unordered_map<std::u16string, Int> dictionary;
  for (Int i = 0; i < 256; ++i) dictionary[std::u16string(1, to_char(i))] = i;
  Int next = 256;
  std::u16string w;
  std::vector<Int> codes;
  for (char16_t ch : widen(text)) {
    std::u16string wc = w + ch;
    if (dictionary.contains(wc)) {
      w = std::move(wc);
    } else {
      codes.push_back(dictionary.at(w));
      dictionary[wc] = next++;
      w = std::u16string(1, ch);
    }
  }
  if (!w.empty()) codes.push_back(dictionary.at(w));
  return codes;
}

Zip::Output Zip::decompress(const std::vector<jvm::Int>& codes) {
  if (codes.empty()) return {};
  std::vector<std::u16string> dictionary;
  for (Int i = 0; i < 256; ++i) dictionary.emplace_back(1, to_char(i));
  std::u16string w = dictionary.at(static_cast<std::size_t>(codes.front()));
  std::u16string result = w;
  for (std::size_t n = 1; n < codes.size(); ++n) {
    const auto k = static_cast<std::size_t>(codes[n]);
    std::u16string entry;
    if (k < dictionary.size()) {
      entry = dictionary[k];
    } else if (k == dictionary.size()) {
      entry = w + w.front();
    } else {
      throw std::invalid_argument("bad LZW code " + std::to_string(k));
    }
    result += entry;
    dictionary.push_back(w + entry.front());
    w = std::move(entry);
  }
  return result;
}

std::vector<Zip::Input> Zip::generate(std::uint64_t seed, std::size_t count) {
  static constexpr std::string_view kAlphabet = "TOBENRA -";
  std::vector<Input> inputs(count);
  for (std::size_t i = 0; i < count; ++i) {
    InputRng rng(seed, i);
    Input& text = inputs[i];
    text.resize(static_cast<std::size_t>(rng.between(20, 40)));
    for (auto& ch : text) ch = kAlphabet[rng.below(kAlphabet.size())];
    if (rng.below(3) == 0) {
      const auto marks = rng.between(1, 3);
      for (std::int64_t m = 0; m < marks; ++m) {
        text[static_cast<std::size_t>(rng.between(3, static_cast<std::int64_t>(text.size()) - 1))] =
            static_cast<char>(0xFF);
      }
    }
  }
  return inputs;
}

std::string Zip::show(const Input& text) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string s;
  for (unsigned char ch : text) {
    if (ch >= 0x20 && ch < 0x7F && ch != '\\') {
      s += static_cast<char>(ch);
    } else {
      s += "\\x";
      s += kHex[ch >> 4];
      s += kHex[ch & 0xF];
    }
  }
  return s;
}

}  // namespace attract::corpus
