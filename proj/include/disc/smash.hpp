#ifndef DISC_SMASH_HPP
#define DISC_SMASH_HPP

#include <string>
#include <vector>

#include "disc/graded_module.hpp"
#include "disc/hopf.hpp"

namespace disc {

// Element of A#H: one A-component per Hopf basis element.
struct SmashElement {
    std::vector<NCPoly> comps;

    explicit SmashElement(size_t hopf_dim = 0) : comps(hopf_dim) {}
    bool is_zero() const;
};

bool operator==(const SmashElement& a, const SmashElement& b);
SmashElement operator+(const SmashElement& a, const SmashElement& b);
SmashElement operator-(const SmashElement& a, const SmashElement& b);
SmashElement operator*(const Scalar& c, const SmashElement& a);

// Shared data for computations in B = A#H over the central subring R.
struct SmashContext {
    const GradedModule* module;  // A over R with its free basis
    const ActionSpec* action;    // includes hopf and pres

    const HopfAlgebraSpec& hopf() const { return *action->hopf; }
    const AlgebraPresentation& pres() const { return *action->pres; }

    SmashElement from_A(const NCPoly& a) const;
    SmashElement from_H(const ScalarVec& h) const;
    SmashElement one() const;
    std::string to_string(const SmashElement& s) const;
    int degree(const SmashElement& s) const;  // -1 for zero, throws if mixed
};

SmashElement smash_multiply(const SmashContext& ctx, const SmashElement& a,
                            const SmashElement& b);

// B tensor H, indexed by the H factor.
using SmashTensorH = std::vector<SmashElement>;

// beta(sum b' (x) b) = sum b' b0 (x) b1 with the canonical coaction.
SmashTensorH galois_beta(const SmashContext& ctx,
                         const std::vector<std::pair<SmashElement, SmashElement>>& pairs);

struct GaloisData {
    std::vector<std::pair<SmashElement, SmashElement>> pairs;  // (x_i, y_i)
    bool beta_verified = false;
};

// Candidate sum (1 # S(t1)) (x) (1 # t2); verified against beta = 1 (x) t.
GaloisData galois_dual_basis(const SmashContext& ctx);

// theta(b) = alpha |> b via the canonical coaction; always lands in A.
NCPoly smash_theta(const SmashContext& ctx, const SmashElement& b);

// Hattori-Stallings trace of B over A from the Frobenius system.
NCPoly smash_trace_over_A(const SmashContext& ctx, const GaloisData& g,
                          const SmashElement& b);

class SmashError : public std::runtime_error {
public:
    explicit SmashError(const std::string& m) : std::runtime_error(m) {}
};

// R-coefficients of b on the basis {b_k # e_h}; throws on failure.
std::vector<std::vector<CommPoly>> smash_decompose(const SmashContext& ctx,
                                                   const SmashElement& b);

CommPoly smash_hs_trace(const SmashContext& ctx, const SmashElement& b);

struct SmashDiscReport {
    DiscriminantResult disc;       // of B over R
    bool matches_power = false;    // d(B,R) = d(A,R)^m
    CommPoly a_disc_power;         // canonical d(A,R)^m
};

// nm x nm trace matrix of B over R and its determinant, compared against
// d(A,R)^m.
SmashDiscReport smash_trace_and_discriminant(const SmashContext& ctx);

struct GaloisTraceReport {
    bool ok = true;
    std::vector<std::string> failures;
    bool frobenius_ok = true;   // sum x_i theta(y_i b) = b = sum theta(b x_i) y_i
    bool pairing_one = false;   // <alpha, t> = 1
};

// Mod-commutator trace identity for all homogeneous b of degree <= bound.
GaloisTraceReport galois_trace_check(const SmashContext& ctx, int degree_bound);

// Membership of an element of B in the span of commutators of its degree.
bool in_commutator_span(const SmashContext& ctx, const SmashElement& b);

}  // namespace disc

#endif
