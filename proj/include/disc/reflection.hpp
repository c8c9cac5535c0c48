#ifndef DISC_REFLECTION_HPP
#define DISC_REFLECTION_HPP

#include <memory>
#include <string>
#include <vector>

#include "disc/commpoly.hpp"
#include "disc/hopf.hpp"
#include "disc/linalg.hpp"

namespace disc {

class ReflectionError : public std::runtime_error {
public:
    explicit ReflectionError(const std::string& m) : std::runtime_error(m) {}
};

// Multiplicative closure of the generators, identity included.
std::vector<ScalarMat> group_closure(const std::vector<ScalarMat>& gens, size_t cap = 10000);

struct HyperplaneDatum {
    ScalarVec alpha;  // linear form, first nonzero coordinate = 1
    int order;        // e_U, order of the pointwise stabilizer
};

// Elements fixing a codimension-one subspace, grouped by hyperplane.
std::vector<HyperplaneDatum> reflections_and_hyperplanes(const std::vector<ScalarMat>& group);

// g acting on polynomials by substitution x_j -> sum_i g[i][j] x_i.
CommPoly matrix_apply(const ScalarMat& g, const CommPoly& f,
                      const std::vector<std::string>& vars);

CommPoly linear_form(const ScalarVec& alpha, const std::vector<std::string>& vars);

// Canonical det of the partial-derivative matrix of the invariants.
CommPoly jacobian_det(const std::vector<CommPoly>& invariants,
                      const std::vector<std::string>& vars);

// The three hyperplane products of the classical theorem, canonicalized.
CommPoly jacobian_from_arrangement(const std::vector<HyperplaneDatum>& hyperplanes,
                                   const std::vector<std::string>& vars);
CommPoly arrangement_poly(const std::vector<HyperplaneDatum>& hyperplanes,
                          const std::vector<std::string>& vars);
// Also verifies invariance under every group element.
CommPoly discriminant_poly(const std::vector<ScalarMat>& group,
                           const std::vector<std::string>& vars);

// Full data for S_n permuting the variables of k[x_1..x_n]: commutative
// presentation, power-sum central generators, staircase basis, group algebra
// with its permutation action, and the sign character.
struct SnInstance {
    int n;
    AlgebraPresentation pres;
    CentralSubalgebra central;
    FreeModuleBasis basis;
    HopfAlgebraSpec hopf;
    ActionSpec action;
    Character hdet;
    std::vector<ScalarMat> matrices;  // permutation matrices, hopf basis order

    SnInstance(int n_, AlgebraPresentation p) : n(n_), pres(std::move(p)) {}
    SnInstance(const SnInstance&) = delete;
    SnInstance& operator=(const SnInstance&) = delete;
};

std::unique_ptr<SnInstance> sn_instance(int n);

// Commutative polynomial ring as a presentation (x_j x_i -> x_i x_j).
AlgebraPresentation polynomial_presentation(const std::vector<std::string>& vars);

}  // namespace disc

#endif
