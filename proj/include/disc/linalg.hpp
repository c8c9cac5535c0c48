#ifndef DISC_LINALG_HPP
#define DISC_LINALG_HPP

#include <optional>
#include <vector>

#include "disc/scalar.hpp"

namespace disc {

using ScalarVec = std::vector<Scalar>;
using ScalarMat = std::vector<ScalarVec>;  // row major

// Row-reduces M once and answers repeated solve/rank queries.  Solutions are
// only reported when they are unique (full column rank); the callers in this
// project treat an underdetermined system as a distinct outcome.
class LinearSolver {
public:
    enum class Outcome { Unique, NoSolution, NonUnique };

    explicit LinearSolver(ScalarMat m);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t rank() const { return rank_; }
    bool full_column_rank() const { return rank_ == cols_; }

    Outcome solve(const ScalarVec& rhs, ScalarVec& out) const;
    // Any solution when the system is consistent (free variables set to zero).
    std::optional<ScalarVec> particular_solution(const ScalarVec& rhs) const;

private:
    size_t rows_, cols_, rank_;
    ScalarMat r_;          // rref of the input
    ScalarMat t_;          // accumulated row transform, t_ * input = r_
    std::vector<int> pivot_col_;  // pivot column per rref row
};

size_t matrix_rank(ScalarMat m);

// Maintains a row space under repeated insertion; used for greedy basis
// discovery.
class IncrementalSpan {
public:
    // Returns true when v was independent of the current span (and extends it).
    bool insert(ScalarVec v);
    size_t rank() const { return rows_.size(); }

private:
    std::vector<ScalarVec> rows_;     // reduced, each with a unit pivot
    std::vector<size_t> pivot_;
};

// Basis of the right nullspace of m.
std::vector<ScalarVec> nullspace(ScalarMat m);

}  // namespace disc

#endif
