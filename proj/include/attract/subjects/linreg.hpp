#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "attract/engine.hpp"
#include "attract/jvm.hpp"

namespace attract::corpus {

/// Ridge (Tikhonov) regression: solve (A^T A + ridge I) w = A^T y, growing
/// the ridge tenfold while the solve fails. The design matrix carries a
/// trailing column of ones, so the last coefficient is the intercept.
struct LinReg {
  static constexpr std::string_view name = "linreg";
  static constexpr std::string_view description = "ridge linear regression coefficients";

  struct Input {
    /// Row-major samples, `features` values each.
    std::vector<double> x;
    std::vector<double> y;
    std::size_t features = 0;
    double ridge = 1e-8;
    friend bool operator==(const Input&, const Input&) = default;
  };
  using Output = std::vector<double>;

  static constexpr double kTolerance = 1e-6;

  static std::span<const PerturbationPoint> points();
  static Output run(const Input& input, Controller& c);
  /// Same length as the reference and each coefficient within 1e-6 of it.
  static bool accepts(const Input& input, const Output& reference, const Output& out);
  /// Twelve samples of two features from a random plane plus small noise.
  static std::vector<Input> generate(std::uint64_t seed, std::size_t count);
  static std::string show(const Input& input);

  /// `a.getColumnDimension()` in `new Matrix(a.getColumnDimension(), 1)`.
  static constexpr PointId kAllocationPoint = 33;
  /// The literal in `success = true` after a successful solve.
  static constexpr PointId kSuccessFlagPoint = 51;
};

}  // namespace attract::corpus
