#pragma once

#include <optional>
#include <vector>

#include "seshadri/rational.hpp"

namespace seshadri {

/// Dense exact-rational matrix, row-major.
class RatMat {
  public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    void swap_rows(int i, int j);
    void append_row(const std::vector<Rat>& row);
    std::vector<Rat> row(int i) const;

    static RatMat from_rows(const std::vector<std::vector<Rat>>& rows);

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

/// In-place reduced row echelon form. Pivot policy: first nonzero column;
/// within it the entry clear of denominators with the largest numerator wins,
/// ties to the lowest row. RREF itself is unique, so the policy only shapes
/// intermediate growth.
/// Returns the pivot column indices in row order.
std::vector<int> rref_in_place(RatMat& m);

int rank(RatMat m);

/// Canonical nullspace basis: one vector per free column in column order,
/// with a 1 in the free slot and pivot entries read off the RREF.
std::vector<std::vector<Rat>> nullspace(const RatMat& m);

/// Solves m x = b repeatedly against a fixed m. Particular solutions are
/// canonical: free variables are set to zero.
class RatSolver {
  public:
    explicit RatSolver(const RatMat& m);

    int rank() const { return static_cast<int>(pivot_cols_.size()); }
    /// Empty optional when the system is inconsistent.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    RatMat reduced_;  // [R | T] with R = rref(m), T the row transform
    std::vector<int> pivot_cols_;
};

}  // namespace seshadri
