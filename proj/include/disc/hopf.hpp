#ifndef DISC_HOPF_HPP
#define DISC_HOPF_HPP

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "disc/commpoly.hpp"
#include "disc/graded_module.hpp"
#include "disc/linalg.hpp"
#include "disc/ncpoly.hpp"

namespace disc {

// A finite-dimensional Hopf algebra given by structure constants on a fixed
// basis.  Functionals (the counit, characters, the dual integral) are stored
// as value vectors on that basis.
struct HopfAlgebraSpec {
    std::vector<std::string> labels;
    size_t unit = 0;  // basis index of 1
    // mult[i][j] = coefficient vector of e_i * e_j.
    std::vector<std::vector<ScalarVec>> mult;
    // comult[i] = terms (j, k, c) of Delta(e_i) = sum c * e_j (x) e_k.
    std::vector<std::vector<std::tuple<size_t, size_t, Scalar>>> comult;
    ScalarVec counit;
    // antipode[i] = coefficient vector of S(e_i).
    std::vector<ScalarVec> antipode;
    ScalarVec integral_t;         // right integral t
    ScalarVec dual_integral;      // alpha, a left integral of the dual

    size_t dim() const { return labels.size(); }

    ScalarVec multiply(const ScalarVec& a, const ScalarVec& b) const;
    ScalarVec apply_antipode(const ScalarVec& a) const;
    Scalar counit_of(const ScalarVec& a) const;
    ScalarVec basis_vec(size_t i) const;
    // <alpha, t> with the stored integrals.
    Scalar integral_pairing() const;
    // Scales dual_integral so that alpha <- t = epsilon; throws when the
    // stored pair is not proportional to a valid one.
    void normalize_dual_integral();

    // Empty list = all Hopf axioms and integral conditions hold.
    std::vector<std::string> verify(bool check_s_squared = true) const;
};

// Group algebra kG from a multiplication table: table[i][j] = index of g_i g_j.
HopfAlgebraSpec group_algebra(const std::vector<std::string>& labels,
                              const std::vector<std::vector<int>>& table);

// Degree-preserving action by structure: matrices[h][i][j] is the coefficient
// of generator i in h applied to generator j.
struct ActionSpec {
    const HopfAlgebraSpec* hopf = nullptr;
    const AlgebraPresentation* pres = nullptr;
    std::vector<ScalarMat> matrices;  // one per Hopf basis element

    // Checks the action respects every rewriting rule (well-definedness of
    // the module-algebra extension).
    std::vector<std::string> verify() const;

    NCPoly act_basis(size_t h, const NCPoly& a) const;   // e_h acting
    NCPoly act(const ScalarVec& h, const NCPoly& a) const;
    NCPoly act_integral(const NCPoly& a) const;          // t acting

    // Matrix of e_h on the normal-word basis of the given degree, memoized.
    const ScalarMat& degree_matrix(size_t h, int degree) const;
    const std::vector<Word>& degree_words(int degree) const;

private:
    struct DegreeData {
        std::vector<Word> words;
        std::map<Word, int> index;
        std::vector<ScalarMat> op;  // per Hopf basis element
    };
    mutable std::map<int, DegreeData> cache_;
    const DegreeData& degree_data(int degree) const;
};

struct Character {
    ScalarVec values;  // on the Hopf basis

    Scalar of(size_t i) const { return values[i]; }
    std::vector<std::string> verify(const HopfAlgebraSpec& H) const;
    // chi o S, the convolution inverse for characters.
    Character compose_antipode(const HopfAlgebraSpec& H) const;
};

// The H_{2n^2} family acting on a quantum plane.  Held by pointer because the
// action spec points back into the instance.
struct H2n2Instance {
    HopfAlgebraSpec hopf;
    AlgebraPresentation pres;  // k<u,v> / (vu - c uv)
    ActionSpec action;
    Character hdet;
    Scalar relation_scalar;  // c with vu = c uv
    int n, i, j;

    H2n2Instance(HopfAlgebraSpec h, AlgebraPresentation p, Scalar c, int n_, int i_, int j_)
        : hopf(std::move(h)), pres(std::move(p)), relation_scalar(std::move(c)), n(n_), i(i_),
          j(j_) {}
    H2n2Instance(const H2n2Instance&) = delete;
    H2n2Instance& operator=(const H2n2Instance&) = delete;
};

std::unique_ptr<H2n2Instance> h2n2(int n, int i, int j);

NCPoly reynolds(const ActionSpec& action, const NCPoly& a);

// Basis of { a of degree d : h |> a = chi(h) a } as coordinate vectors turned
// into polynomials.
std::vector<NCPoly> relative_invariants(const ActionSpec& action, const Character& chi,
                                        int d);
std::vector<NCPoly> invariant_basis(const ActionSpec& action, int d);

class HopfError : public std::runtime_error {
public:
    explicit HopfError(const std::string& m) : std::runtime_error(m) {}
};

// Generator of A^{hdet^-1} at its expected degree; checks one-dimensionality
// and freeness (dim A^{hdet^-1}_d = dim R_{d - deg j}) up to the bound.
NCPoly jacobian(const ActionSpec& action, const Character& hdet,
                const CentralSubalgebra& central, int expected_degree, int freeness_bound);

// First one-dimensional free generator of A^{hdet} within the degree bound.
NCPoly arrangement(const ActionSpec& action, const Character& hdet,
                   const CentralSubalgebra& central, int degree_scan_bound);

// delta = canonical(a * j); verifies a j and j a agree up to scalar.
NCPoly discriminant_invariant(const NCPoly& jac, const NCPoly& arr,
                              const AlgebraPresentation& pres);

// Solves f = q*g (Left) or f = g*q (Right) for homogeneous f, g.
std::optional<NCPoly> homogeneous_divide(const NCPoly& f, const NCPoly& g, Side side,
                                         const AlgebraPresentation& pres);

NCPoly nc_canonical(const NCPoly& p, const AlgebraPresentation& pres);
bool nc_equal_up_to_scalar(const NCPoly& a, const NCPoly& b,
                           const AlgebraPresentation& pres);

// Reynolds-image dimension in each degree must match the subring the central
// generators span.
std::vector<std::string> validate_fixed_ring(const GradedModule& mod,
                                             const ActionSpec& action, int bound);

struct TheoremCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct MainTheoremReport {
    bool ok = true;
    std::vector<TheoremCheck> checks;
    NCPoly jac, arr, delta;
    DiscriminantResult disc;

    void add(const std::string& name, bool pass, const std::string& detail = "");
};

MainTheoremReport verify_main_theorem(const GradedModule& mod, const ActionSpec& action,
                                      const Character& hdet, int degree_bound);

}  // namespace disc

#endif
