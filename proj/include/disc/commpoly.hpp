#ifndef DISC_COMMPOLY_HPP
#define DISC_COMMPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "disc/ncpoly.hpp"
#include "disc/scalar.hpp"

namespace disc {

// variable name -> positive exponent
using CommMonomial = std::map<std::string, int>;

// Graded-lex: total degree first, then lexicographic on exponent vectors with
// variables in name order.  Returns a < b.
bool comm_monomial_less(const CommMonomial& a, const CommMonomial& b);

struct CommPoly {
    std::map<CommMonomial, Scalar> terms;  // no zero coefficients

    static CommPoly zero() { return {}; }
    static CommPoly one() { return constant(Scalar::one()); }
    static CommPoly constant(const Scalar& c);
    static CommPoly variable(const std::string& name, int exp = 1);

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    void add_term(const CommMonomial& m, const Scalar& c);

    // Leading term under graded-lex.
    std::pair<CommMonomial, Scalar> leading() const;

    int total_degree() const;
    int weighted_degree(const std::map<std::string, int>& weights) const;
};

CommPoly operator+(const CommPoly& a, const CommPoly& b);
CommPoly operator-(const CommPoly& a, const CommPoly& b);
CommPoly operator-(const CommPoly& a);
CommPoly operator*(const CommPoly& a, const CommPoly& b);
CommPoly operator*(const Scalar& c, const CommPoly& p);
bool operator==(const CommPoly& a, const CommPoly& b);
inline bool operator!=(const CommPoly& a, const CommPoly& b) { return !(a == b); }

CommPoly comm_pow(const CommPoly& a, int e);

// Quotient q with f = q*g, or nullopt when g does not divide f.
std::optional<CommPoly> exact_divide(const CommPoly& f, const CommPoly& g);

using CommMat = std::vector<std::vector<CommPoly>>;

// Exact determinant: cofactor expansion for n <= 4, fraction-free Bareiss
// elimination with exact division above.
CommPoly determinant(const CommMat& m);

CommPoly partial_derivative(const CommPoly& f, const std::string& var);

// Divides by the leading coefficient; the single normalization behind every
// equality-up-to-nonzero-scalar comparison in the project.
CommPoly canonical_up_to_scalar(const CommPoly& f);

bool equal_up_to_scalar(const CommPoly& a, const CommPoly& b);

std::string comm_to_string(const CommPoly& p);

// Parses an expression in the given commutative variables (the NCPoly grammar
// with all variables commuting).
CommPoly parse_comm(const std::string& text, const std::vector<std::string>& vars);

}  // namespace disc

#endif
