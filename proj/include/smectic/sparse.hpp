#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace smectic {

// Compressed sparse row matrix. Immutable after construction; column indices
// are strictly increasing within each row and duplicates are pre-summed.
struct CsrMatrix {
  int n_rows = 0;
  int n_cols = 0;
  std::vector<int> row_offsets;  // size n_rows + 1, nondecreasing
  std::vector<int> col_indices;
  std::vector<double> values;

  int nnz() const { return static_cast<int>(col_indices.size()); }
};

// Triplet accumulator for scattered assembly. finalize() sorts triplets by
// (row, col) with a stable sort, so duplicates sum in insertion order and the
// default element-loop build is fully deterministic.
class CooBuilder {
 public:
  CooBuilder(int n_rows, int n_cols);

  void add(int row, int col, double value);
  void reserve(std::size_t n) { triplets_.reserve(n); }
  CsrMatrix finalize() const;

 private:
  struct Triplet {
    int row;
    int col;
    double value;
  };
  int n_rows_;
  int n_cols_;
  std::vector<Triplet> triplets_;
};

// y = A x. Throws std::invalid_argument on dimension mismatch.
std::vector<double> spmv(const CsrMatrix& a, std::span<const double> x);

// Raised when a factorization hits a pivot that is singular to working
// precision, or the computed solution fails the residual contract.
struct SolveError : std::runtime_error {
  SolveError(const std::string& msg, int pivot) : std::runtime_error(msg), pivot_index(pivot) {}
  int pivot_index = -1;  // row/column of the offending pivot, -1 if unknown
};

struct SolveResult {
  std::vector<double> x;
  double residual_rel = 0.0;  // ||Ax - b||_2 / max(||b||_2, tiny)
};

// Direct sparse LU solver. The sparsity pattern may be analyzed once and the
// numeric factorization repeated for matrices with the same pattern.
class SparseLu {
 public:
  SparseLu();
  ~SparseLu();
  SparseLu(SparseLu&&) noexcept;
  SparseLu& operator=(SparseLu&&) noexcept;

  void factorize(const CsrMatrix& a);          // throws SolveError
  std::vector<double> solve(std::span<const double> b) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// One-shot factor + solve + residual check. Throws SolveError if the relative
// residual exceeds 1e-10.
SolveResult solve_direct(const CsrMatrix& a, std::span<const double> b);

inline constexpr double kDirectSolveTol = 1e-10;

}  // namespace smectic
