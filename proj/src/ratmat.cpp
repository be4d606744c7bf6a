#include "seshadri/ratmat.hpp"

#include <stdexcept>
#include <utility>

namespace seshadri {

void RatMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void RatMat::append_row(const std::vector<Rat>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols_)
        throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<Rat> RatMat::row(int i) const {
    return std::vector<Rat>(a_.begin() + static_cast<size_t>(i) * cols_,
                            a_.begin() + static_cast<size_t>(i + 1) * cols_);
}

RatMat RatMat::from_rows(const std::vector<std::vector<Rat>>& rows) {
    RatMat m;
    for (const auto& r : rows) m.append_row(r);
    return m;
}

namespace {

// Prefer denominator-free entries with large numerators as pivots.
bool better_pivot(const Rat& cand, const Rat& best) {
    const bool cand_int = cand.get_den() == 1;
    const bool best_int = best.get_den() == 1;
    if (cand_int != best_int) return cand_int;
    return cmp(abs(cand.get_num()), abs(best.get_num())) > 0;
}

}  // namespace

std::vector<int> rref_in_place(RatMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (m.at(i, c) == 0) continue;
            if (pivot < 0 || better_pivot(m.at(i, c), m.at(pivot, c))) pivot = i;
        }
        if (pivot < 0) continue;
        m.swap_rows(r, pivot);
        const Rat inv = 1 / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Rat f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(RatMat m) { return static_cast<int>(rref_in_place(m).size()); }

std::vector<std::vector<Rat>> nullspace(const RatMat& m) {
    RatMat r = m;
    const std::vector<int> pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(m.cols(), Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

RatSolver::RatSolver(const RatMat& m) : rows_(m.rows()), cols_(m.cols()) {
    // Row-reduce [m | I]; the right block records the transform applied.
    reduced_ = RatMat(rows_, cols_ + rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) reduced_.at(i, j) = m.at(i, j);
        reduced_.at(i, cols_ + i) = 1;
    }
    // Restrict pivoting to the left block.
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i) {
            if (reduced_.at(i, c) == 0) continue;
            if (pivot < 0 || better_pivot(reduced_.at(i, c), reduced_.at(pivot, c))) pivot = i;
        }
        if (pivot < 0) continue;
        reduced_.swap_rows(r, pivot);
        const Rat inv = 1 / reduced_.at(r, c);
        for (int j = 0; j < reduced_.cols(); ++j) reduced_.at(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || reduced_.at(i, c) == 0) continue;
            const Rat f = reduced_.at(i, c);
            for (int j = 0; j < reduced_.cols(); ++j) reduced_.at(i, j) -= f * reduced_.at(r, j);
        }
        pivot_cols_.push_back(c);
        ++r;
    }
}

std::optional<std::vector<Rat>> RatSolver::solve(const std::vector<Rat>& b) const {
    if (static_cast<int>(b.size()) != rows_)
        throw std::invalid_argument("rhs length mismatch");
    // y = T b, consistent iff zero rows of R meet zero entries of y.
    std::vector<Rat> y(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rows_; ++j)
            if (reduced_.at(i, cols_ + j) != 0 && b[j] != 0)
                y[i] += reduced_.at(i, cols_ + j) * b[j];
    for (int i = rank(); i < rows_; ++i)
        if (y[i] != 0) return std::nullopt;
    std::vector<Rat> x(cols_, Rat(0));
    for (size_t i = 0; i < pivot_cols_.size(); ++i) x[pivot_cols_[i]] = y[i];
    return x;
}

}  // namespace seshadri
