#include "attract/subjects/linreg.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "attract/subjects/input_rng.hpp"

namespace attract::corpus {

namespace {

using jvm::Array;
using jvm::Int;

constexpr PerturbationPoint kPoints[] = {
    {0, PointKind::Int, "y.getColumnDimension()"},
    {1, PointKind::Int, "1 in y.getColumnDimension() > 1"},
    {2, PointKind::Int, "nc = a.getColumnDimension()"},
    {3, PointKind::Int, "nc in new double[nc]"},
    {4, PointKind::Int, "ridge: i = 0"},
    {5, PointKind::Int, "ridge: i in i < nc"},
    {6, PointKind::Int, "ridge: nc in i < nc"},
    {7, PointKind::Int, "ridge: row i in setElement"},
    {8, PointKind::Int, "ridge: column i in setElement"},
    {9, PointKind::Int, "ridge: row i in getElement"},
    {10, PointKind::Int, "ridge: column i in getElement"},
    {11, PointKind::Int, "ridge: i++"},
    {12, PointKind::Int, "copy: i = 0"},
    {13, PointKind::Int, "copy: i in i < nc"},
    {14, PointKind::Int, "copy: nc in i < nc"},
    {15, PointKind::Int, "copy: i in m_Coefficients[i]"},
    {16, PointKind::Int, "copy: row i in solution.get(i, 0)"},
    {17, PointKind::Int, "copy: column 0 in solution.get(i, 0)"},
    {18, PointKind::Int, "copy: i++"},
    {19, PointKind::Int, "aTa: coeffs = a.getColumnDimension()"},
    {20, PointKind::Int, "aTa: rows in new Matrix(coeffs, coeffs)"},
    {21, PointKind::Int, "aTa: columns in new Matrix(coeffs, coeffs)"},
    {22, PointKind::Int, "aTa: i = 0"},
    {23, PointKind::Int, "aTa: i in i < coeffs"},
    {24, PointKind::Int, "aTa: j = 0"},
    {25, PointKind::Int, "aTa: j in j < coeffs"},
    {26, PointKind::Int, "aTa: k = 0"},
    {27, PointKind::Int, "aTa: k in k < a.getRowDimension()"},
    {28, PointKind::Int, "aTa: a.getRowDimension()"},
    {29, PointKind::Int, "aTa: k, i in a.get(k, i)"},
    {30, PointKind::Int, "aTa: k, j in a.get(k, j)"},
    {31, PointKind::Int, "aTa: k++"},
    {32, PointKind::Int, "aTa: i, j in aTa.set(i, j, sum)"},
    {33, PointKind::Int, "aTy: a.getColumnDimension() in new Matrix(..., 1)"},
    {34, PointKind::Int, "aTy: 1 in new Matrix(..., 1)"},
    {35, PointKind::Int, "aTy: i = 0"},
    {36, PointKind::Int, "aTy: i in i < a.getColumnDimension()"},
    {37, PointKind::Int, "aTy: a.getColumnDimension() in loop"},
    {38, PointKind::Int, "aTy: k = 0"},
    {39, PointKind::Int, "aTy: k in k < a.getRowDimension()"},
    {40, PointKind::Int, "aTy: a.getRowDimension()"},
    {41, PointKind::Int, "aTy: k, i in a.get(k, i)"},
    {42, PointKind::Int, "aTy: k in y.get(k, 0)"},
    {43, PointKind::Int, "aTy: 0 in y.get(k, 0)"},
    {44, PointKind::Int, "aTy: k++"},
    {45, PointKind::Int, "aTy: i in x.set(i, 0, sum)"},
    {46, PointKind::Int, "aTy: 0 in x.set(i, 0, sum)"},
    {47, PointKind::Int, "aTy: i++"},
    {48, PointKind::Bool, "y.getColumnDimension() > 1"},
    {49, PointKind::Bool, "boolean success = true"},
    {50, PointKind::Bool, "ridge: i < nc"},
    {51, PointKind::Bool, "success = true after solve"},
    {52, PointKind::Bool, "copy: i < nc"},
    {53, PointKind::Bool, "success = false in catch"},
    {54, PointKind::Bool, "while (!success)"},
    {55, PointKind::Bool, "aTa: i < coeffs"},
    {56, PointKind::Bool, "aTa: j < coeffs"},
    {57, PointKind::Bool, "aTa: k < a.getRowDimension()"},
    {58, PointKind::Bool, "aTy: i < a.getColumnDimension()"},
    {59, PointKind::Bool, "aTy: k < a.getRowDimension()"},
};

constexpr PointId kFirstBool = 48;

// Dense matrix with Java array semantics; the library side is not hooked.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Int rows, Int cols) : a_(jvm::new_matrix<double>(rows, cols)), rows_(rows), cols_(cols) {}

  Int rows() const noexcept { return rows_; }
  Int cols() const noexcept { return cols_; }
  double get(Int i, Int j) const { return a_[i][j]; }
  void set(Int i, Int j, double v) { a_[i][j] = v; }

  // LU with partial pivoting, left-looking dot products. The right-hand
  // side is read row by row through the pivot vector; rows past the
  // system size are ignored.
  Matrix solve(const Matrix& b) const {
    if (rows_ != cols_) jvm::throw_illegal_argument("Matrix is not square.");
    const Int m = rows_;
    const Int n = cols_;
    Array<Array<double>> lu = a_;
    Array<Int> piv(m);
    for (Int i = 0; i < m; ++i) piv[i] = i;
    Array<double> col(m);
    for (Int j = 0; j < n; ++j) {
      for (Int i = 0; i < m; ++i) col[i] = lu[i][j];
      for (Int i = 0; i < m; ++i) {
        const Int kmax = std::min(i, j);
        double s = 0.0;
        for (Int k = 0; k < kmax; ++k) s += lu[i][k] * col[k];
        lu[i][j] = col[i] -= s;
      }
      Int p = j;
      for (Int i = j + 1; i < m; ++i) {
        if (std::fabs(col[i]) > std::fabs(col[p])) p = i;
      }
      if (p != j) {
        std::swap(lu[p], lu[j]);
        std::swap(piv[p], piv[j]);
      }
      if (j < m && lu[j][j] != 0.0) {
        for (Int i = j + 1; i < m; ++i) lu[i][j] /= lu[j][j];
      }
    }
    for (Int j = 0; j < n; ++j) {
      if (lu[j][j] == 0.0) throw jvm::Exception("RuntimeException: Matrix is singular.");
    }
    const Int nx = b.cols();
    Matrix x(m, nx);
    for (Int i = 0; i < m; ++i) {
      for (Int j = 0; j < nx; ++j) x.a_[i][j] = b.get(piv[i], j);
    }
    for (Int k = 0; k < n; ++k) {
      for (Int i = k + 1; i < n; ++i) {
        for (Int j = 0; j < nx; ++j) x.a_[i][j] -= x.a_[k][j] * lu[i][k];
      }
    }
    for (Int k = n - 1; k >= 0; --k) {
      for (Int j = 0; j < nx; ++j) x.a_[k][j] /= lu[k][k];
      for (Int i = 0; i < k; ++i) {
        for (Int j = 0; j < nx; ++j) x.a_[i][j] -= x.a_[k][j] * lu[i][k];
      }
    }
    return x;
  }

 private:
  Array<Array<double>> a_;
  Int rows_ = 0;
  Int cols_ = 0;
};

class Regression {
 public:
  explicit Regression(Controller& c) : c_(c) {}

  Array<double> calculate(const Matrix& a, const Matrix& y, double ridge) {
    if (B(0, I(0, y.cols()) > I(1, 1))) {
      jvm::throw_illegal_argument("Only one dependent variable allowed");
    }
    const Int nc = I(2, a.cols());
    Array<double> coefficients(I(3, nc));
    const Matrix ss = a_t_a(a);
    const Matrix bb = a_t_y(a, y);
    bool success = B(1, true);
    do {
      Matrix with_ridge = ss;
      for (Int i = I(4, 0); B(2, I(5, i) < I(6, nc)); I(11, i++)) {
        with_ridge.set(I(7, i), I(8, i), with_ridge.get(I(9, i), I(10, i)) + ridge);
      }
      try {
        const Matrix solution = with_ridge.solve(bb);
        for (Int i = I(12, 0); B(4, I(13, i) < I(14, nc)); I(18, i++)) {
          coefficients[I(15, i)] = solution.get(I(16, i), I(17, 0));
        }
        success = B(3, true);
      } catch (const jvm::Exception&) {
        ridge *= 10;
        success = B(5, false);
      }
    } while (B(6, !success));
    return coefficients;
  }

 private:
  Matrix a_t_a(const Matrix& a) {
    const Int coeffs = I(19, a.cols());
    Matrix out(I(20, coeffs), I(21, coeffs));
    for (Int i = I(22, 0); B(7, I(23, i) < coeffs); i++) {
      for (Int j = I(24, 0); B(8, I(25, j) < coeffs); j++) {
        double sum = 0;
        for (Int k = I(26, 0); B(9, I(27, k) < I(28, a.rows())); I(31, k++)) {
          const Int ki = I(29, k);
          const Int kj = I(30, k);
          sum += a.get(ki, i) * a.get(kj, j);
        }
        out.set(I(32, i), j, sum);
      }
    }
    return out;
  }

  Matrix a_t_y(const Matrix& a, const Matrix& y) {
    Matrix x(I(33, a.cols()), I(34, 1));
    for (Int i = I(35, 0); B(10, I(36, i) < I(37, a.cols())); I(47, i++)) {
      double sum = 0;
      for (Int k = I(38, 0); B(11, I(39, k) < I(40, a.rows())); I(44, k++)) {
        sum += a.get(I(41, k), i) * y.get(I(42, k), I(43, 0));
      }
      x.set(I(45, i), I(46, 0), sum);
    }
    return x;
  }

  Int I(PointId id, Int v) { return c_.hook_int(id, v); }
  bool B(PointId id, bool v) { return c_.hook_bool(kFirstBool + id, v); }

  Controller& c_;
};

}  // namespace

std::span<const PerturbationPoint> LinReg::points() { return kPoints; }

LinReg::Output LinReg::run(const Input& input, Controller& c) {
  const std::size_t d = input.features;
  if (d == 0 || input.x.size() != input.y.size() * d) {
    throw std::invalid_argument("linreg input: x must hold features values per sample");
  }
  const Int n = static_cast<Int>(input.y.size());
  const Int cols = static_cast<Int>(d) + 1;
  Matrix a(n, cols);
  Matrix y(n, 1);
  for (Int k = 0; k < n; ++k) {
    for (Int j = 0; j < cols - 1; ++j) {
      a.set(k, j, input.x[static_cast<std::size_t>(k) * d + static_cast<std::size_t>(j)]);
    }
    a.set(k, cols - 1, 1.0);
    y.set(k, 0, input.y[static_cast<std::size_t>(k)]);
  }
  return Regression(c).calculate(a, y, input.ridge).values();
}

bool LinReg::accepts(const Input&, const Output& reference, const Output& out) {
  if (out.size() != reference.size()) return false;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!(std::fabs(out[k] - reference[k]) <= kTolerance)) return false;
  }
  return true;
}

std::vector<LinReg::Input> LinReg::generate(std::uint64_t seed, std::size_t count) {
  constexpr std::size_t kSamples = 12;
  constexpr std::size_t kFeatures = 2;
  std::vector<Input> inputs(count);
  for (std::size_t i = 0; i < count; ++i) {
    InputRng rng(seed, i);
    Input& in = inputs[i];
    in.features = kFeatures;
    double w[kFeatures + 1];
    for (double& v : w) v = rng.uniform(-10.0, 10.0);
    for (std::size_t k = 0; k < kSamples; ++k) {
      double target = w[kFeatures];
      for (std::size_t j = 0; j < kFeatures; ++j) {
        const double v = rng.uniform(-5.0, 5.0);
        in.x.push_back(v);
        target += w[j] * v;
      }
      in.y.push_back(target + rng.uniform(-0.1, 0.1));
    }
  }
  return inputs;
}

std::string LinReg::show(const Input& input) {
  std::string s = "x=[";
  char buf[32];
  for (std::size_t k = 0; k < input.x.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", input.x[k]);
    if (k) s += ',';
    s += buf;
  }
  s += "] y=[";
  for (std::size_t k = 0; k < input.y.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", input.y[k]);
    if (k) s += ',';
    s += buf;
  }
  std::snprintf(buf, sizeof buf, "%.17g", input.ridge);
  return s + "] ridge=" + buf;
}

}  // namespace attract::corpus
