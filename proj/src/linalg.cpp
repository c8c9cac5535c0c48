#include "disc/linalg.hpp"

namespace disc {

namespace {

// In-place rref; returns pivot columns.  If transform != nullptr it starts as
// the identity and accumulates the row operations.
std::vector<int> rref(ScalarMat& m, ScalarMat* transform) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    std::vector<int> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pr = row;
        while (pr < rows && m[pr][col].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(m[row], m[pr]);
        if (transform) std::swap((*transform)[row], (*transform)[pr]);
        Scalar inv = m[row][col].inv();
        for (size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv;
        if (transform)
            for (auto& x : (*transform)[row]) x = x * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Scalar f = m[r][col];
            for (size_t j = col; j < cols; ++j) m[r][j] = m[r][j] - f * m[row][j];
            if (transform)
                for (size_t j = 0; j < (*transform)[r].size(); ++j)
                    (*transform)[r][j] = (*transform)[r][j] - f * (*transform)[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

}  // namespace

LinearSolver::LinearSolver(ScalarMat m) {
    rows_ = m.size();
    cols_ = rows_ ? m[0].size() : 0;
    t_.assign(rows_, ScalarVec(rows_, Scalar::zero()));
    for (size_t i = 0; i < rows_; ++i) t_[i][i] = Scalar::one();
    r_ = std::move(m);
    pivot_col_ = rref(r_, &t_);
    rank_ = pivot_col_.size();
}

LinearSolver::Outcome LinearSolver::solve(const ScalarVec& rhs, ScalarVec& out) const {
    // Transformed rhs: t_ * rhs.
    ScalarVec b(rows_, Scalar::zero());
    for (size_t i = 0; i < rows_; ++i) {
        Scalar acc = Scalar::zero();
        for (size_t j = 0; j < rows_; ++j)
            if (!t_[i][j].is_zero() && !rhs[j].is_zero()) acc += t_[i][j] * rhs[j];
        b[i] = acc;
    }
    for (size_t i = rank_; i < rows_; ++i)
        if (!b[i].is_zero()) return Outcome::NoSolution;
    if (rank_ < cols_) return Outcome::NonUnique;
    out.assign(cols_, Scalar::zero());
    for (size_t i = 0; i < rank_; ++i) out[pivot_col_[i]] = b[i];
    return Outcome::Unique;
}

std::optional<ScalarVec> LinearSolver::particular_solution(const ScalarVec& rhs) const {
    ScalarVec b(rows_, Scalar::zero());
    for (size_t i = 0; i < rows_; ++i) {
        Scalar acc = Scalar::zero();
        for (size_t j = 0; j < rows_; ++j)
            if (!t_[i][j].is_zero() && !rhs[j].is_zero()) acc += t_[i][j] * rhs[j];
        b[i] = acc;
    }
    for (size_t i = rank_; i < rows_; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    ScalarVec out(cols_, Scalar::zero());
    for (size_t i = 0; i < rank_; ++i) out[pivot_col_[i]] = b[i];
    return out;
}

size_t matrix_rank(ScalarMat m) { return rref(m, nullptr).size(); }

bool IncrementalSpan::insert(ScalarVec v) {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Scalar c = v[pivot_[i]];
        if (c.is_zero()) continue;
        for (size_t j = 0; j < v.size(); ++j)
            if (!rows_[i][j].is_zero()) v[j] = v[j] - c * rows_[i][j];
    }
    size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    Scalar inv = v[p].inv();
    for (auto& x : v) x = x * inv;
    // Keep stored rows mutually reduced so one pass suffices for the next insert.
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Scalar c = rows_[i][p];
        if (c.is_zero()) continue;
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) rows_[i][j] = rows_[i][j] - c * v[j];
    }
    rows_.push_back(std::move(v));
    pivot_.push_back(p);
    return true;
}

std::vector<ScalarVec> nullspace(ScalarMat m) {
    size_t cols = m.empty() ? 0 : m[0].size();
    auto pivots = rref(m, nullptr);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<ScalarVec> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        ScalarVec v(cols, Scalar::zero());
        v[free_col] = Scalar::one();
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace disc
