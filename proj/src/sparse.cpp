// ============================================================================
// sparse.cpp - CSR containers, triplet assembly, direct LU solve
// ============================================================================

#include "smectic/sparse.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace smectic {

CooBuilder::CooBuilder(int n_rows, int n_cols) : n_rows_(n_rows), n_cols_(n_cols) {
  if (n_rows < 0 || n_cols < 0) throw std::invalid_argument("CooBuilder: negative dimension");
}

void CooBuilder::add(int row, int col, double value) {
  if (row < 0 || row >= n_rows_ || col < 0 || col >= n_cols_)
    throw std::out_of_range("CooBuilder::add: index out of range");
  triplets_.push_back({row, col, value});
}

CsrMatrix CooBuilder::finalize() const {
  // Stable sort keeps duplicate accumulation in insertion order, so the
  // element-loop build is bit-reproducible.
  std::vector<Triplet> sorted = triplets_;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  CsrMatrix m;
  m.n_rows = n_rows_;
  m.n_cols = n_cols_;
  m.row_offsets.assign(n_rows_ + 1, 0);
  m.col_indices.reserve(sorted.size());
  m.values.reserve(sorted.size());

  std::size_t i = 0;
  for (int row = 0; row < n_rows_; ++row) {
    while (i < sorted.size() && sorted[i].row == row) {
      const int col = sorted[i].col;
      double sum = 0.0;
      while (i < sorted.size() && sorted[i].row == row && sorted[i].col == col) {
        sum += sorted[i].value;
        ++i;
      }
      m.col_indices.push_back(col);
      m.values.push_back(sum);
    }
    m.row_offsets[row + 1] = static_cast<int>(m.col_indices.size());
  }
  return m;
}

std::vector<double> spmv(const CsrMatrix& a, std::span<const double> x) {
  if (static_cast<int>(x.size()) != a.n_cols)
    throw std::invalid_argument("spmv: dimension mismatch");
  std::vector<double> y(a.n_rows, 0.0);
  for (int row = 0; row < a.n_rows; ++row) {
    double sum = 0.0;
    for (int k = a.row_offsets[row]; k < a.row_offsets[row + 1]; ++k)
      sum += a.values[k] * x[a.col_indices[k]];
    y[row] = sum;
  }
  return y;
}

namespace {

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

int trailing_index(const std::string& msg) {
  // Eigen's diagnostics end with the offending column when one is known.
  auto it = std::find_if(msg.rbegin(), msg.rend(), [](unsigned char c) { return std::isdigit(c); });
  if (it == msg.rend()) return -1;
  auto end = it.base();
  auto begin = end;
  while (begin != msg.begin() && std::isdigit(static_cast<unsigned char>(*(begin - 1)))) --begin;
  return std::stoi(std::string(begin, end));
}

}  // namespace

struct SparseLu::Impl {
  Eigen::SparseMatrix<double, Eigen::ColMajor, int> mat;
  Eigen::SparseLU<Eigen::SparseMatrix<double, Eigen::ColMajor, int>, Eigen::COLAMDOrdering<int>>
      solver;
  std::vector<int> pattern_offsets;
  std::vector<int> pattern_cols;
  bool analyzed = false;
  bool factored = false;
};

SparseLu::SparseLu() : impl_(std::make_unique<Impl>()) {}
SparseLu::~SparseLu() = default;
SparseLu::SparseLu(SparseLu&&) noexcept = default;
SparseLu& SparseLu::operator=(SparseLu&&) noexcept = default;

void SparseLu::factorize(const CsrMatrix& a) {
  if (a.n_rows != a.n_cols) throw std::invalid_argument("SparseLu: matrix must be square");

  Eigen::Map<const Eigen::SparseMatrix<double, Eigen::RowMajor, int>> map(
      a.n_rows, a.n_cols, a.nnz(), a.row_offsets.data(), a.col_indices.data(), a.values.data());
  impl_->mat = map;  // transpose-copy into column storage

  const bool same_pattern = impl_->analyzed && impl_->pattern_offsets == a.row_offsets &&
                            impl_->pattern_cols == a.col_indices;
  if (!same_pattern) {
    impl_->solver.analyzePattern(impl_->mat);
    impl_->pattern_offsets = a.row_offsets;
    impl_->pattern_cols = a.col_indices;
    impl_->analyzed = true;
  }
  impl_->solver.factorize(impl_->mat);
  impl_->factored = impl_->solver.info() == Eigen::Success;
  if (!impl_->factored) {
    const std::string detail = impl_->solver.lastErrorMessage();
    throw SolveError("sparse LU factorization failed: " + detail, trailing_index(detail));
  }
}

std::vector<double> SparseLu::solve(std::span<const double> b) const {
  if (!impl_->factored) throw std::logic_error("SparseLu::solve before factorize");
  if (static_cast<int>(b.size()) != impl_->mat.rows())
    throw std::invalid_argument("SparseLu::solve: rhs dimension mismatch");
  Eigen::Map<const Eigen::VectorXd> bv(b.data(), static_cast<Eigen::Index>(b.size()));
  Eigen::VectorXd x = impl_->solver.solve(bv);
  return std::vector<double>(x.data(), x.data() + x.size());
}

SolveResult solve_direct(const CsrMatrix& a, std::span<const double> b) {
  if (a.n_rows != static_cast<int>(b.size()))
    throw std::invalid_argument("solve_direct: rhs dimension mismatch");
  SparseLu lu;
  lu.factorize(a);
  SolveResult r;
  r.x = lu.solve(b);

  std::vector<double> ax = spmv(a, r.x);
  double diff = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i) diff += (ax[i] - b[i]) * (ax[i] - b[i]);
  const double scale = std::max(norm2(b), 1e-300);
  r.residual_rel = std::sqrt(diff) / scale;
  if (!(r.residual_rel <= kDirectSolveTol))
    throw SolveError("solve_direct: relative residual " + std::to_string(r.residual_rel) +
                         " exceeds tolerance",
                     -1);
  return r;
}

}  // namespace smectic
