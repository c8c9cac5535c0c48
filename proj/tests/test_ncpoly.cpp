#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "disc/ncpoly.hpp"

using namespace disc;

namespace {

// Quantum plane k<x,y>/(yx - c xy).
AlgebraPresentation quantum_plane(const Scalar& c) {
    RewriteRule r;
    r.lhs = {1, 0};
    r.rhs = NCPoly::from_word({0, 1}, c);
    return AlgebraPresentation({"x", "y"}, {r});
}

// Cubic algebra k<x,y>/(y^2x - xy^2, yx^2 + x^2y).
AlgebraPresentation cubic_algebra() {
    RewriteRule r1;
    r1.lhs = {1, 1, 0};
    r1.rhs = NCPoly::from_word({0, 1, 1});
    RewriteRule r2;
    r2.lhs = {1, 0, 0};
    r2.rhs = NCPoly::from_word({0, 0, 1}, Scalar(-1));
    return AlgebraPresentation(
        {"x", "y"}, {r1, r2}, {1, 1},
        RationalFunction::parse("1/((1-t)^2*(1-t^2))"));
}

NCPoly random_poly(std::mt19937& rng, const AlgebraPresentation& pres, int deg) {
    std::uniform_int_distribution<int> gen(0, static_cast<int>(pres.gen_count()) - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    NCPoly p;
    for (int t = 0; t < 3; ++t) {
        Word w;
        for (int k = 0; k < deg; ++k) w.push_back(gen(rng));
        p.add_term(w, Scalar(coeff(rng)));
    }
    return normal_form(p, pres);
}

}  // namespace

TEST_CASE("parsing") {
    const auto qp = quantum_plane(Scalar::root_of_unity(4, 1));
    // y*x rewrites to i*x*y at q = i.
    const NCPoly p = parse_expr("y*x", qp);
    CHECK(p == NCPoly::from_word({0, 1}, Scalar::root_of_unity(4, 1)));
    CHECK(nc_to_string(p, qp) == "zeta(4,1)*x*y");
    CHECK(parse_expr("x^0", qp) == NCPoly::one());
    CHECK(parse_expr("2 + 3", qp) == NCPoly::from_word({}, Scalar(5)));
    CHECK(parse_expr("x - x", qp).is_zero());
    CHECK_THROWS_AS(parse_expr("x +", qp), ParseError);
    CHECK_THROWS_AS(parse_expr("w", qp), ParseError);

    // (x+y)^2 in the commutative plane has the middle term 2xy.
    const auto comm = quantum_plane(Scalar(1));
    NCPoly sq = nc_pow(parse_expr("x + y", comm), 2, comm);
    NCPoly expected = parse_expr("x^2 + 2*x*y + y^2", comm);
    CHECK(sq == expected);
}

TEST_CASE("normal forms") {
    const auto qm = quantum_plane(Scalar(-1));
    CHECK(normal_form(NCPoly::from_word({1, 0}), qm) ==
          NCPoly::from_word({0, 1}, Scalar(-1)));

    const auto cu = cubic_algebra();
    CHECK(normal_form(NCPoly::from_word({1, 1, 0}), cu) == NCPoly::from_word({0, 1, 1}));
    CHECK(normal_form(NCPoly::from_word({1, 0, 0}), cu) ==
          NCPoly::from_word({0, 0, 1}, Scalar(-1)));
    // Normal form is a fixpoint.
    const NCPoly nf = normal_form(parse_expr("y*x*y*x", cu), cu);
    CHECK(normal_form(nf, cu) == nf);

    // Rule soundness: each lhs reduces to its rhs.
    for (const auto& pres : {qm, cu}) {
        for (const auto& rule : pres.rules()) {
            CHECK(normal_form(NCPoly::from_word(rule.lhs), pres) ==
                  normal_form(rule.rhs, pres));
        }
    }
}

TEST_CASE("products and grading") {
    const auto qm = quantum_plane(Scalar(-1));
    // (xy)(xy) = -x^2y^2 at q = -1.
    const NCPoly xy = parse_expr("x*y", qm);
    CHECK(nc_mul(xy, xy, qm) == parse_expr("-x^2*y^2", qm));
    CHECK(nc_pow(xy, 4, qm) == parse_expr("x^4*y^4", qm));
    CHECK(qm.degree_of(nc_pow(xy, 3, qm)) == 6);
    CHECK_THROWS(qm.degree_of(parse_expr("x + x*y", qm)));
}

TEST_CASE("local confluence") {
    CHECK(check_local_confluence(quantum_plane(Scalar(-1)), 8).empty());
    CHECK(check_local_confluence(quantum_plane(Scalar::root_of_unity(4, 1)), 8).empty());
    CHECK(check_local_confluence(cubic_algebra(), 6).empty());

    // Deliberately inconsistent pair: yx -> xy and yx -> 2xy.
    RewriteRule a{{1, 0}, NCPoly::from_word({0, 1})};
    RewriteRule b{{1, 0}, NCPoly::from_word({0, 1}, Scalar(2))};
    AlgebraPresentation broken({"x", "y"}, {a, b});
    const auto failures = check_local_confluence(broken, 4);
    CHECK(failures.size() >= 1);
    CHECK_FALSE(failures.front().difference.is_zero());
}

TEST_CASE("monomial basis") {
    const auto qm = quantum_plane(Scalar(-1));
    const auto d2 = monomial_basis(qm, 2);
    REQUIRE(d2.size() == 3);
    CHECK(d2[0] == Word{0, 0});
    CHECK(d2[1] == Word{0, 1});
    CHECK(d2[2] == Word{1, 1});

    const auto cu = cubic_algebra();
    // Hilbert series 1/((1-t)^2 (1-t^2)) gives dim A_3 = 6.
    CHECK(monomial_basis(cu, 3).size() == 6);
    const auto d0 = monomial_basis(cu, 0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].empty());
}

TEST_CASE("hilbert series check") {
    const auto cu = cubic_algebra();
    const auto rep = hilbert_check(cu, 10);
    CHECK(rep.ok);
    REQUIRE(rep.computed.size() == 11);
    CHECK(rep.computed[0] == 1);
    CHECK(rep.computed[1] == 2);
    CHECK(rep.computed[2] == 4);
    CHECK(rep.computed[3] == 6);
    CHECK(rep.computed[10] == 36);

    // A wrong declared series is detected.
    AlgebraPresentation wrong(
        cu.gen_names(), cu.rules(), cu.gen_degrees(),
        RationalFunction::parse("1/((1-t)^2)"));
    const auto bad = hilbert_check(wrong, 6);
    CHECK_FALSE(bad.ok);
    CHECK(bad.first_mismatch_degree == 2);
}

TEST_CASE("associativity on random triples") {
    std::mt19937 rng(424242);
    const auto qm = quantum_plane(Scalar::root_of_unity(4, 1));
    const auto cu = cubic_algebra();
    for (const auto& pres : {qm, cu}) {
        for (int rep = 0; rep < 12; ++rep) {
            const NCPoly p = random_poly(rng, pres, 2);
            const NCPoly q = random_poly(rng, pres, 3);
            const NCPoly r = random_poly(rng, pres, 4);
            CHECK(nc_mul(nc_mul(p, q, pres), r, pres) ==
                  nc_mul(p, nc_mul(q, r, pres), pres));
        }
    }
}

TEST_CASE("quantum fast path agrees with letter-by-letter rewriting") {
    auto qm = quantum_plane(Scalar::root_of_unity(4, 1));
    REQUIRE(qm.is_quantum());
    CHECK_FALSE(cubic_algebra().is_quantum());

    for (int da = 0; da <= 3; ++da) {
        for (int db = 0; db + da <= 6; ++db) {
            for (const Word& wa : monomial_basis(qm, da)) {
                for (const Word& wb : monomial_basis(qm, db)) {
                    qm.set_fast_path(true);
                    const NCPoly fast =
                        nc_mul(NCPoly::from_word(wa), NCPoly::from_word(wb), qm);
                    qm.set_fast_path(false);
                    const NCPoly slow =
                        nc_mul(NCPoly::from_word(wa), NCPoly::from_word(wb), qm);
                    CHECK(fast == slow);
                }
            }
        }
    }
    qm.set_fast_path(true);
}
