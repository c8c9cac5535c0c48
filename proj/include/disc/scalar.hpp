#ifndef DISC_SCALAR_HPP
#define DISC_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace disc {

// Exact rational, canonicalized (gcd 1, positive denominator).
using Rat = mpq_class;

std::string rat_to_string(const Rat& r);

// Dense univariate polynomial over Q, lowest degree first.  Used internally
// for arithmetic mod the cyclotomic polynomial and for Hilbert series.
using QPoly = std::vector<Rat>;

QPoly qpoly_trim(QPoly p);
QPoly qpoly_add(const QPoly& a, const QPoly& b);
QPoly qpoly_sub(const QPoly& a, const QPoly& b);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
// Exact division; throws if the remainder is nonzero.
QPoly qpoly_divexact(const QPoly& a, const QPoly& b);
// Euclidean division: returns {quotient, remainder}.
std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b);

// The m-th cyclotomic polynomial, computed by dividing X^m - 1 by the product
// of Phi_d over proper divisors d of m.  Cached across calls.
const QPoly& cyclotomic_polynomial(int m);

int euler_phi(int m);

// An element of the cyclotomic field Q(zeta_m), stored as the reduced residue
// mod Phi_m.  Elements of different orders embed into Q(zeta_lcm) on demand;
// all arithmetic is exact.
class Scalar {
public:
    Scalar() : order_(1), c_(1, Rat(0)) {}
    Scalar(long n) : order_(1), c_(1, Rat(n)) {}
    Scalar(const Rat& r) : order_(1), c_(1, r) {}
    Scalar(int order, QPoly coeffs);

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    // zeta_m^k reduced mod Phi_m.
    static Scalar root_of_unity(int m, long k);

    int order() const { return order_; }
    const QPoly& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Throws unless is_rational().
    Rat rational_value() const;

    // Re-expresses the element in Q(zeta_t) for m | t.
    Scalar embedded(int t) const;
    // Smallest-order representative (divisor search); used for rendering.
    Scalar canonical() const;

    Scalar operator-() const;
    Scalar inv() const;  // throws on zero
    Scalar pow(long e) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    // Literal syntax: integers, fractions a/b, zeta(m,k) combinations.
    std::string to_string() const;

private:
    int order_;
    QPoly c_;  // length euler_phi(order_), reduced mod Phi_order
    void reduce_();
};

class DivisionByZero : public std::runtime_error {
public:
    DivisionByZero() : std::runtime_error("division by zero") {}
};

}  // namespace disc

#endif
