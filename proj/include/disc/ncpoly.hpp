#ifndef DISC_NCPOLY_HPP
#define DISC_NCPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "disc/scalar.hpp"

namespace disc {

// A word in the free monoid on the presentation's generators.
using Word = std::vector<int>;

// Rational function in one variable t; holds expected Hilbert series.
struct RationalFunction {
    QPoly num{Rat(0)};
    QPoly den{Rat(1)};

    static RationalFunction parse(const std::string& text);
    static RationalFunction from_poly(QPoly p) { return {std::move(p), {Rat(1)}}; }

    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;

    // Power-series coefficient of t^d; requires den(0) != 0.
    Rat series_coeff(int d) const;
    // Exact polynomial value, if the denominator divides the numerator.
    std::optional<QPoly> as_polynomial() const;
};

struct NCPoly {
    // word -> coefficient; no zero coefficients stored.
    std::map<Word, Scalar> terms;

    static NCPoly zero() { return {}; }
    static NCPoly one() { return from_word({}); }
    static NCPoly from_word(Word w, Scalar c = Scalar::one());

    bool is_zero() const { return terms.empty(); }
    void add_term(const Word& w, const Scalar& c);
};

NCPoly operator+(const NCPoly& a, const NCPoly& b);
NCPoly operator-(const NCPoly& a, const NCPoly& b);
NCPoly operator*(const Scalar& c, const NCPoly& p);
bool operator==(const NCPoly& a, const NCPoly& b);

struct RewriteRule {
    Word lhs;     // length >= 2
    NCPoly rhs;   // homogeneous of the same degree, strictly smaller words
};

struct CriticalPairFailure {
    Word overlap_word;
    NCPoly difference;  // nonzero normal-form difference of the two reductions
};

class AlgebraPresentation {
public:
    AlgebraPresentation(std::vector<std::string> names, std::vector<RewriteRule> rules,
                        std::vector<int> degrees = {},
                        std::optional<RationalFunction> hilbert = std::nullopt);

    size_t gen_count() const { return names_.size(); }
    const std::vector<std::string>& gen_names() const { return names_; }
    const std::vector<int>& gen_degrees() const { return degrees_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const std::optional<RationalFunction>& hilbert() const { return hilbert_; }

    int gen_index(const std::string& name) const;  // -1 when absent
    int word_degree(const Word& w) const;
    // Monomial order: weighted degree first, then lexicographic left to right.
    bool word_less(const Word& a, const Word& b) const;

    // True when every rule has the shape x_j x_i -> c * x_i x_j (quantum
    // affine space); enables the closed-form product path.
    bool is_quantum() const { return !quantum_.empty(); }
    void set_fast_path(bool on) { fast_path_ = on; }
    bool fast_path() const { return fast_path_ && is_quantum(); }
    // p with x_j x_i = p * x_i x_j for j > i (index [j][i]).
    const std::vector<std::vector<Scalar>>& quantum_scalars() const { return quantum_; }

    // Degree of a homogeneous polynomial; throws if mixed or zero.
    int degree_of(const NCPoly& p) const;

private:
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::vector<RewriteRule> rules_;
    std::optional<RationalFunction> hilbert_;
    std::vector<std::vector<Scalar>> quantum_;
    bool fast_path_ = true;

    void validate_() const;
    void detect_quantum_();
};

class RewriteBudgetExceeded : public std::runtime_error {
public:
    explicit RewriteBudgetExceeded(const std::string& word)
        : std::runtime_error("rewrite step budget exceeded on word " + word) {}
};

NCPoly normal_form(const NCPoly& p, const AlgebraPresentation& pres);
NCPoly normal_form_word(const Word& w, const Scalar& c, const AlgebraPresentation& pres);

NCPoly nc_mul(const NCPoly& a, const NCPoly& b, const AlgebraPresentation& pres);
NCPoly nc_pow(const NCPoly& a, int e, const AlgebraPresentation& pres);

// Overlap analysis of all rule pairs up to combined degree D; empty result
// means locally confluent on that range.
std::vector<CriticalPairFailure> check_local_confluence(const AlgebraPresentation& pres,
                                                        int degree_bound);

// All normal-form words of weighted degree d, sorted in the monomial order.
std::vector<Word> monomial_basis(const AlgebraPresentation& pres, int d);

struct HilbertReport {
    bool ok = true;
    int first_mismatch_degree = -1;
    std::vector<long> computed;  // dim A_d for d = 0..D
    std::vector<long> expected;
};

HilbertReport hilbert_check(const AlgebraPresentation& pres, int max_degree);

std::string word_to_string(const Word& w, const AlgebraPresentation& pres);
std::string nc_to_string(const NCPoly& p, const AlgebraPresentation& pres);

class ParseError : public std::runtime_error {
public:
    ParseError(size_t position, const std::string& msg)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + msg),
          position(position) {}
    size_t position;
};

// Grammar: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := base ('^' nat)?; base := scalar | ident | '(' expr ')'.
// Scalars: integers, fractions a/b, zeta(m,k).  A leading '-' is accepted.
// The result is returned in normal form.
NCPoly parse_expr(const std::string& text, const AlgebraPresentation& pres);

// Parses a single word (product of generators, '^' allowed); used for rule
// left-hand sides in bundle files.
Word parse_word(const std::string& text, const AlgebraPresentation& pres);

}  // namespace disc

#endif
