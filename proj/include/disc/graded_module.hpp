#ifndef DISC_GRADED_MODULE_HPP
#define DISC_GRADED_MODULE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "disc/commpoly.hpp"
#include "disc/linalg.hpp"
#include "disc/ncpoly.hpp"

namespace disc {

enum class Side { Left, Right };

struct CentralGenerator {
    std::string name;  // commutative variable bound to this element
    NCPoly definition;  // homogeneous element of A, normal form
    int degree;
};

struct CentralSubalgebra {
    std::vector<CentralGenerator> gens;
    // The subring need not actually be central (the non-central fixed-ring
    // case); verify_central reports, callers decide.
    bool central_claimed = true;
    // Coefficient side used by the trace.  The sides agree when R is central;
    // the skew polynomial family over a non-central subring needs Left.
    Side trace_side = Side::Right;

    std::vector<std::string> names() const;
    std::map<std::string, int> weights() const;
    RationalFunction hilbert() const;  // 1 / prod (1 - t^deg)
};

struct FreeModuleBasis {
    std::vector<NCPoly> elements;  // homogeneous, degrees weakly increasing
    std::vector<int> degrees;

    size_t rank() const { return elements.size(); }
    int top_degree() const { return degrees.empty() ? 0 : degrees.back(); }
};

enum class SolveStatus { Ok, NoSolution, NonUnique };

struct Decomposition {
    SolveStatus status = SolveStatus::Ok;
    std::vector<CommPoly> coeffs;  // one per basis element
};

struct FreeBasisReport {
    bool ok = true;
    int first_bad_degree = -1;
    std::vector<std::string> failures;
};

struct DiscriminantResult {
    bool degenerate = false;  // zero determinant
    CommPoly raw;             // det of the trace matrix
    CommPoly canonical;       // up-to-scalar normal form (when not degenerate)
};

struct FrobeniusData {
    size_t top_index = 0;
    CommPoly pairing_det;  // det [theta(b_i b_j)]
    bool theta_valid = false;
};

bool verify_central(const CentralSubalgebra& central, const AlgebraPresentation& pres);

// Computation context for a fixed (presentation, central subalgebra, basis)
// triple.  Caches central-monomial expansions and the per-degree linear
// solvers behind decompose.
class GradedModule {
public:
    GradedModule(const AlgebraPresentation& pres, CentralSubalgebra central,
                 FreeModuleBasis basis);

    const AlgebraPresentation& pres() const { return *pres_; }
    const CentralSubalgebra& central() const { return central_; }
    const FreeModuleBasis& basis() const { return basis_; }
    size_t rank() const { return basis_.rank(); }

    // All monomials in the central generators of the given weighted degree.
    std::vector<CommMonomial> central_monomials(int degree) const;
    // Expansion of central variables back into A (normal form).
    NCPoly expand(const CommPoly& p) const;
    NCPoly expand_monomial(const CommMonomial& m) const;

    Decomposition decompose(const NCPoly& a, Side side = Side::Right) const;

    FreeBasisReport verify_free_basis(int max_degree) const;

    CommPoly hs_trace(const NCPoly& a) const;  // throws DecomposeFailed
    CommMat trace_matrix() const;
    DiscriminantResult discriminant() const;

    FrobeniusData frobenius_theta() const;
    // theta = dual functional of the top basis element.
    CommPoly theta(const NCPoly& a) const;

    NCPoly different_omega() const;                    // tr = theta . omega
    CommPoly norm(const NCPoly& a) const;              // det of left multiplication
    std::map<int, NCPoly> nakayama_on_generators() const;

private:
    const AlgebraPresentation* pres_;
    CentralSubalgebra central_;
    FreeModuleBasis basis_;

    struct DegreeSolver {
        std::vector<Word> words;  // monomial basis of this degree
        std::map<Word, int> word_index;
        std::vector<std::pair<size_t, CommMonomial>> columns;  // (basis idx, monomial)
        std::unique_ptr<LinearSolver> solver;
    };
    mutable std::map<std::pair<int, int>, DegreeSolver> solvers_;  // (degree, side)
    mutable std::map<CommMonomial, NCPoly> expansion_cache_;

    const DegreeSolver& solver_for(int degree, Side side) const;
    ScalarVec coords(const NCPoly& a, const DegreeSolver& ds) const;
};

class DecomposeFailed : public std::runtime_error {
public:
    explicit DecomposeFailed(SolveStatus s)
        : std::runtime_error(s == SolveStatus::NoSolution
                                 ? "decompose: element not in the basis span"
                                 : "decompose: basis not free at this degree"),
          status(s) {}
    SolveStatus status;
};

struct FindBasisResult {
    bool ok = true;
    std::string error;
    FreeModuleBasis basis;
};

// Greedy degree-by-degree discovery of a free basis; requires the
// presentation to carry its Hilbert series.
FindBasisResult find_free_basis(const AlgebraPresentation& pres,
                                const CentralSubalgebra& central);

}  // namespace disc

#endif
