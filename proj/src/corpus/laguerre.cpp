#include "attract/subjects/laguerre.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <stdexcept>

#include "attract/subjects/input_rng.hpp"

namespace attract::corpus {

namespace {

using jvm::Array;
using jvm::Int;
using Complex = std::complex<double>;
// Java reference to a Complex; empty means null.
using Ref = std::optional<Complex>;

constexpr PerturbationPoint kPoints[] = {
    {0, PointKind::Int, "coefficients.length in new Complex[...]"},
    {1, PointKind::Int, "convert: i = 0"},
    {2, PointKind::Int, "convert: i in i < coefficients.length"},
    {3, PointKind::Int, "convert: coefficients.length in loop"},
    {4, PointKind::Int, "convert: i in c[i] = new Complex(coefficients[i], 0)"},
    {5, PointKind::Int, "convert: i++"},
    {6, PointKind::Int, "solveAll: coefficients.length - 1"},
    {7, PointKind::Int, "solveAll: n + 1 in new Complex[n + 1]"},
    {8, PointKind::Int, "solveAll: copy i = 0"},
    {9, PointKind::Int, "solveAll: copy i in i <= n"},
    {10, PointKind::Int, "solveAll: copy i in c[i] = coefficients[i]"},
    {11, PointKind::Int, "solveAll: copy i++"},
    {12, PointKind::Int, "solveAll: n in new Complex[n]"},
    {13, PointKind::Int, "solveAll: i = 0"},
    {14, PointKind::Int, "solveAll: i in i < n"},
    {15, PointKind::Int, "solveAll: n - i + 1 in new Complex[n - i + 1]"},
    {16, PointKind::Int, "solveAll: subarray.length in System.arraycopy"},
    {17, PointKind::Int, "solveAll: i in root[i] = solve(...)"},
    {18, PointKind::Int, "solveAll: n - i in newc = c[n - i]"},
    {19, PointKind::Int, "solveAll: j = n - i - 1"},
    {20, PointKind::Int, "solveAll: j in j >= 0"},
    {21, PointKind::Int, "solveAll: j in newc = c[j]"},
    {22, PointKind::Int, "solveAll: j in c[j] = oldc"},
    {23, PointKind::Int, "solveAll: i in oldc.multiply(root[i])"},
    {24, PointKind::Int, "solveAll: j--"},
    {25, PointKind::Int, "solveAll: i++"},
    {26, PointKind::Int, "solve: n = coefficients.length - 1"},
    {27, PointKind::Int, "solve: n in new Complex(n, 0)"},
    {28, PointKind::Int, "solve: n - 1 in new Complex(n - 1, 0)"},
    {29, PointKind::Int, "solve: n in pv = coefficients[n]"},
    {30, PointKind::Int, "solve: j = n - 1"},
    {31, PointKind::Int, "solve: j in coefficients[j].add(z.multiply(pv))"},
    {32, PointKind::Int, "solve: j in j >= 0"},
    {33, PointKind::Int, "solve: j--"},
    {34, PointKind::Bool, "convert: i < coefficients.length"},
    {35, PointKind::Bool, "solveAll: n == 0"},
    {36, PointKind::Bool, "solveAll: copy i <= n"},
    {37, PointKind::Bool, "solveAll: i < n"},
    {38, PointKind::Bool, "solveAll: j >= 0"},
    {39, PointKind::Bool, "solve: n == 0"},
    {40, PointKind::Bool, "solve: j >= 0"},
    {41, PointKind::Bool, "solve: z.subtract(oldz).abs() <= tolerance"},
    {42, PointKind::Bool, "solve: pv.abs() <= functionValueAccuracy"},
    {43, PointKind::Bool, "solve: dplus.abs() > dminus.abs()"},
    {44, PointKind::Bool, "solve: denominator.equals(new Complex(0.0, 0.0))"},
};

constexpr PointId kFirstBool = 34;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Complex nan_complex() { return {kNaN, kNaN}; }
bool is_nan(Complex z) { return std::isnan(z.real()) || std::isnan(z.imag()); }

// Complex arithmetic with NaN propagation and division by zero giving NaN.
Complex mul(Complex a, Complex b) {
  if (is_nan(a) || is_nan(b)) return nan_complex();
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}
Complex add(Complex a, Complex b) {
  if (is_nan(a) || is_nan(b)) return nan_complex();
  return a + b;
}
Complex sub(Complex a, Complex b) {
  if (is_nan(a) || is_nan(b)) return nan_complex();
  return a - b;
}
Complex divide(Complex a, Complex b) {
  if (is_nan(a) || is_nan(b)) return nan_complex();
  const double c = b.real();
  const double d = b.imag();
  if (c == 0.0 && d == 0.0) return nan_complex();
  if (std::fabs(c) < std::fabs(d)) {
    const double q = c / d;
    const double den = c * q + d;
    return {(a.real() * q + a.imag()) / den, (a.imag() * q - a.real()) / den};
  }
  const double q = d / c;
  const double den = d * q + c;
  return {(a.imag() * q + a.real()) / den, (a.imag() - a.real() * q) / den};
}
double abs(Complex z) {
  if (is_nan(z)) return kNaN;
  return std::hypot(z.real(), z.imag());
}
Complex sqrt(Complex z) {
  if (is_nan(z)) return nan_complex();
  const double a = z.real();
  const double b = z.imag();
  if (a == 0.0 && b == 0.0) return {0.0, 0.0};
  const double t = std::sqrt((std::fabs(a) + abs(z)) / 2.0);
  if (a >= 0.0) return {t, b / (2.0 * t)};
  return {std::fabs(b) / (2.0 * t), std::copysign(1.0, b) * t};
}
bool equals(Complex a, Complex b) {
  if (is_nan(a) && is_nan(b)) return true;
  return a.real() == b.real() && a.imag() == b.imag();
}

Complex deref(const Ref& r) {
  if (!r) throw jvm::Exception("NullPointerException");
  return *r;
}

class Solver {
 public:
  explicit Solver(Controller& c) : c_(c) {}

  Array<Ref> solve_all_complex(const std::vector<double>& coefficients, Complex initial) {
    const Int length = static_cast<Int>(coefficients.size());
    Array<Ref> c(I(0, length));
    for (Int i = I(1, 0); B(0, I(2, i) < I(3, length)); I(5, i++)) {
      const Int k = I(4, i);
      c[k] = Complex(coefficient(coefficients, k), 0.0);
    }
    return solve_all(c, initial);
  }

 private:
  static double coefficient(const std::vector<double>& coefficients, Int k) {
    if (k < 0 || static_cast<std::size_t>(k) >= coefficients.size()) {
      jvm::throw_index_out_of_bounds(k, coefficients.size());
    }
    return coefficients[static_cast<std::size_t>(k)];
  }

  Array<Ref> solve_all(const Array<Ref>& coefficients, Complex initial) {
    const Int n = I(6, jvm::sub(coefficients.length(), 1));
    if (B(1, n == 0)) throw jvm::Exception("NoDataException: polynomial degree must be positive");
    Array<Ref> c(I(7, jvm::add(n, 1)));
    for (Int i = I(8, 0); B(2, I(9, i) <= n); I(11, i++)) {
      const Int k = I(10, i);
      c[k] = coefficients[k];
    }
    Array<Ref> root(I(12, n));
    for (Int i = I(13, 0); B(3, I(14, i) < n); I(25, i++)) {
      Array<Ref> subarray(I(15, jvm::add(jvm::sub(n, i), 1)));
      array_copy(c, subarray, I(16, subarray.length()));
      root[I(17, i)] = solve(subarray, initial);
      Ref newc = c[I(18, jvm::sub(n, i))];
      Ref oldc;
      for (Int j = I(19, jvm::sub(jvm::sub(n, i), 1)); B(4, I(20, j) >= 0); I(24, j--)) {
        oldc = newc;
        newc = c[I(21, j)];
        c[I(22, j)] = oldc;
        newc = add(deref(newc), mul(deref(oldc), deref(root[I(23, i)])));
      }
    }
    return root;
  }

  // System.arraycopy(src, 0, dst, 0, length).
  static void array_copy(const Array<Ref>& src, Array<Ref>& dst, Int length) {
    if (length < 0 || length > src.length() || length > dst.length()) {
      throw jvm::Exception("ArrayIndexOutOfBoundsException: arraycopy: last source index " +
                           std::to_string(length) + " out of bounds");
    }
    for (Int k = 0; k < length; ++k) dst[k] = src[k];
  }

  Complex solve(const Array<Ref>& coefficients, Complex initial) {
    const Int n = I(26, jvm::sub(coefficients.length(), 1));
    if (B(5, n == 0)) throw jvm::Exception("NoDataException: polynomial degree must be positive");
    const Complex nC(I(27, n), 0.0);
    const Complex n1C(I(28, jvm::sub(n, 1)), 0.0);
    Complex z = initial;
    Complex oldz(kInf, kInf);
    while (true) {
      Complex pv = deref(coefficients[I(29, n)]);
      Complex dv(0.0, 0.0);
      Complex d2v(0.0, 0.0);
      for (Int j = I(30, jvm::sub(n, 1)); B(6, I(32, j) >= 0); I(33, j--)) {
        d2v = add(dv, mul(z, d2v));
        dv = add(pv, mul(z, dv));
        pv = add(deref(coefficients[I(31, j)]), mul(z, pv));
      }
      d2v = mul(d2v, Complex(2.0, 0.0));

      const double tolerance = std::max(Laguerre::kRelativeAccuracy * abs(z), Laguerre::kAbsoluteAccuracy);
      if (B(7, abs(sub(z, oldz)) <= tolerance)) return z;
      if (B(8, abs(pv) <= Laguerre::kFunctionValueAccuracy)) return z;

      const Complex g = divide(dv, pv);
      const Complex g2 = mul(g, g);
      const Complex h = sub(g2, divide(d2v, pv));
      const Complex delta = mul(n1C, sub(mul(nC, h), g2));
      const Complex delta_sqrt = sqrt(delta);
      const Complex dplus = add(g, delta_sqrt);
      const Complex dminus = sub(g, delta_sqrt);
      const Complex denominator = B(9, abs(dplus) > abs(dminus)) ? dplus : dminus;
      if (B(10, equals(denominator, Complex(0.0, 0.0)))) {
        z = add(z, Complex(Laguerre::kAbsoluteAccuracy, Laguerre::kAbsoluteAccuracy));
        oldz = Complex(kInf, kInf);
      } else {
        oldz = z;
        z = sub(z, divide(nC, denominator));
      }
    }
  }

  Int I(PointId id, Int v) { return c_.hook_int(id, v); }
  bool B(PointId id, bool v) { return c_.hook_bool(kFirstBool + id, v); }

  Controller& c_;
};

}  // namespace

std::span<const PerturbationPoint> Laguerre::points() { return kPoints; }

Laguerre::Output Laguerre::run(const Input& input, Controller& c) {
  if (input.coefficients.size() < 2 || input.coefficients.back() == 0.0) {
    throw std::invalid_argument("laguerre input needs degree >= 1 and a nonzero leading coefficient");
  }
  const Array<Ref> roots = Solver(c).solve_all_complex(input.coefficients, Complex(0.0, 0.0));
  Output out;
  out.reserve(roots.values().size());
  for (const Ref& r : roots.values()) out.push_back(r.value_or(nan_complex()));
  return out;
}

std::complex<double> Laguerre::evaluate(std::span<const double> coefficients, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * z + *it;
  return acc;
}

bool Laguerre::accepts(const Input& input, const Output&, const Output& out) {
  if (out.size() + 1 != input.coefficients.size()) return false;
  for (const auto& r : out) {
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) return false;
    if (std::abs(evaluate(input.coefficients, r)) >= kResidualTolerance) return false;
  }
  return true;
}

std::vector<Laguerre::Input> Laguerre::generate(std::uint64_t seed, std::size_t count) {
  std::vector<Input> inputs(count);
  for (std::size_t i = 0; i < count; ++i) {
    InputRng rng(seed, i);
    auto& coefficients = inputs[i].coefficients;
    coefficients.resize(static_cast<std::size_t>(rng.between(3, 5)) + 1);
    for (auto& a : coefficients) a = rng.uniform(-5.0, 5.0);
    double& lead = coefficients.back();
    if (std::fabs(lead) < 0.5) lead = std::copysign(0.5 + std::fabs(lead), lead);
  }
  return inputs;
}

std::string Laguerre::show(const Input& input) {
  std::string s = "[";
  char buf[32];
  for (std::size_t k = 0; k < input.coefficients.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", input.coefficients[k]);
    if (k) s += ',';
    s += buf;
  }
  return s + "]";
}

}  // namespace attract::corpus
