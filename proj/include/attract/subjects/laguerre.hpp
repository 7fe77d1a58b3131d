#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "attract/engine.hpp"
#include "attract/jvm.hpp"

namespace attract::corpus {

/// All complex roots of a real polynomial: Laguerre iteration from a fixed
/// start point, then deflation by synthetic division, root after root.
/// Only integer indices and boolean conditions are hooked.
struct Laguerre {
  static constexpr std::string_view name = "laguerre";
  static constexpr std::string_view description = "complex roots of a polynomial by Laguerre's method";

  struct Input {
    /// Ascending powers: coefficients[k] multiplies x^k.
    std::vector<double> coefficients;
    friend bool operator==(const Input&, const Input&) = default;
  };
  using Output = std::vector<std::complex<double>>;

  static constexpr double kAbsoluteAccuracy = 1e-6;
  static constexpr double kRelativeAccuracy = 1e-14;
  static constexpr double kFunctionValueAccuracy = 1e-15;
  static constexpr double kResidualTolerance = 1e-6;

  static std::span<const PerturbationPoint> points();
  static Output run(const Input& input, Controller& c);
  /// Exactly one finite root per degree, each with |p(root)| < 1e-6.
  static bool accepts(const Input& input, const Output& reference, const Output& out);
  /// Real polynomials of degree 3 to 5 with coefficients in [-5, 5] and a
  /// leading coefficient at least 0.5 in magnitude.
  static std::vector<Input> generate(std::uint64_t seed, std::size_t count);
  static std::string show(const Input& input);

  static std::complex<double> evaluate(std::span<const double> coefficients, std::complex<double> z);

  /// `j` in `coefficients[j].add(z.multiply(pv))` of the evaluation loop.
  static constexpr PointId kEvaluationCoefficientPoint = 31;
};

}  // namespace attract::corpus
