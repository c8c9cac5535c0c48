#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "disc/reflection.hpp"

using namespace disc;

namespace {

ScalarMat diag2(const Scalar& a, const Scalar& b) {
    return {{a, Scalar(0)}, {Scalar(0), b}};
}

ScalarMat swap2() {
    return {{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
}

CommPoly P(const std::string& text, const std::vector<std::string>& vars) {
    return parse_comm(text, vars);
}

}  // namespace

TEST_CASE("group closure") {
    CHECK(group_closure({swap2()}).size() == 2);
    CHECK(group_closure({diag2(Scalar::root_of_unity(3, 1), Scalar(1))}).size() == 3);
    // S3 on three letters from two transpositions.
    ScalarMat t12(3, ScalarVec(3, Scalar(0)));
    t12[1][0] = t12[0][1] = t12[2][2] = Scalar(1);
    ScalarMat t23(3, ScalarVec(3, Scalar(0)));
    t23[0][0] = t23[2][1] = t23[1][2] = Scalar(1);
    CHECK(group_closure({t12, t23}).size() == 6);
    // The trivial group: closure of the identity alone.
    CHECK(group_closure({diag2(Scalar(1), Scalar(1))}).size() == 1);
}

TEST_CASE("reflections and hyperplanes") {
    const std::vector<std::string> xy{"x1", "x2"};

    // S2: one hyperplane x1 = x2 with stabilizer order 2.
    const auto s2_group = group_closure({swap2()});
    const auto s2_hyp = reflections_and_hyperplanes(s2_group);
    REQUIRE(s2_hyp.size() == 1);
    CHECK(s2_hyp[0].order == 2);
    CHECK(linear_form(s2_hyp[0].alpha, xy) == P("x1 - x2", xy));

    // Diagonal Z/3: one hyperplane x1 = 0 with order 3.
    const auto z3 = group_closure({diag2(Scalar::root_of_unity(3, 1), Scalar(1))});
    const auto z3_hyp = reflections_and_hyperplanes(z3);
    REQUIRE(z3_hyp.size() == 1);
    CHECK(z3_hyp[0].order == 3);
    CHECK(linear_form(z3_hyp[0].alpha, xy) == P("x1", xy));

    // Trivial group: no reflections.
    CHECK(reflections_and_hyperplanes({diag2(Scalar(1), Scalar(1))}).empty());

    // S3: three hyperplanes, all of order 2.
    const auto s3 = sn_instance(3);
    const auto s3_hyp = reflections_and_hyperplanes(group_closure(s3->matrices));
    REQUIRE(s3_hyp.size() == 3);
    for (const auto& h : s3_hyp) CHECK(h.order == 2);
}

TEST_CASE("matrix substitution action") {
    const std::vector<std::string> xy{"x1", "x2"};
    CHECK(matrix_apply(swap2(), P("x1^2*x2", xy), xy) == P("x1*x2^2", xy));
    const Scalar w = Scalar::root_of_unity(3, 1);
    CHECK(matrix_apply(diag2(w, Scalar(1)), P("x1^3 + x2", xy), xy) ==
          P("x1^3 + x2", xy));
}

TEST_CASE("jacobian determinant of invariants") {
    const std::vector<std::string> xy{"x1", "x2"};
    // Power sums for S2.
    const std::vector<CommPoly> ps{P("x1 + x2", xy), P("x1^2 + x2^2", xy)};
    CHECK(jacobian_det(ps, xy) == canonical_up_to_scalar(P("x1 - x2", xy)));
    // Elementary symmetric polynomials give the same Jacobian up to scalar.
    const std::vector<CommPoly> es{P("x1 + x2", xy), P("x1*x2", xy)};
    CHECK(jacobian_det(es, xy) == jacobian_det(ps, xy));
    // Invariants of the diagonal Z/3 action.
    const std::vector<CommPoly> z3inv{P("x1^3", xy), P("x2", xy)};
    CHECK(jacobian_det(z3inv, xy) == P("x1^2", xy));
}

TEST_CASE("hyperplane product formulas") {
    const std::vector<std::string> xy{"x1", "x2"};

    const auto s2_group = group_closure({swap2()});
    const auto s2_hyp = reflections_and_hyperplanes(s2_group);
    CHECK(jacobian_from_arrangement(s2_hyp, xy) ==
          canonical_up_to_scalar(P("x1 - x2", xy)));
    CHECK(arrangement_poly(s2_hyp, xy) == canonical_up_to_scalar(P("x1 - x2", xy)));
    CHECK(discriminant_poly(s2_group, xy) ==
          canonical_up_to_scalar(P("(x1 - x2)^2", xy)));

    const auto z3 = group_closure({diag2(Scalar::root_of_unity(3, 1), Scalar(1))});
    const auto z3_hyp = reflections_and_hyperplanes(z3);
    CHECK(jacobian_from_arrangement(z3_hyp, xy) == P("x1^2", xy));
    CHECK(arrangement_poly(z3_hyp, xy) == P("x1", xy));
    CHECK(discriminant_poly(z3, xy) == P("x1^3", xy));
}

TEST_CASE("jacobian formulas agree for the symmetric groups") {
    for (int n : {2, 3}) {
        const auto inst = sn_instance(n);
        const auto& vars = inst->pres.gen_names();
        std::vector<CommPoly> invariants;
        for (const auto& g : inst->central.gens) {
            CommPoly p;
            for (const auto& [w, c] : g.definition.terms) {
                CommMonomial m;
                for (int idx : w) ++m[vars[static_cast<size_t>(idx)]];
                p.add_term(m, c);
            }
            invariants.push_back(p);
        }
        const auto group = group_closure(inst->matrices);
        const auto hyp = reflections_and_hyperplanes(group);
        CHECK(jacobian_det(invariants, vars) == jacobian_from_arrangement(hyp, vars));
    }
}

TEST_CASE("symmetric group instances") {
    const auto s1 = sn_instance(1);
    CHECK(s1->basis.rank() == 1);
    CHECK(s1->hopf.dim() == 1);

    const auto s2 = sn_instance(2);
    CHECK(s2->basis.rank() == 2);
    CHECK(s2->hopf.dim() == 2);
    CHECK(s2->basis.degrees == std::vector<int>{0, 1});
    CHECK(s2->hopf.verify().empty());
    CHECK(s2->action.verify().empty());

    const auto s3 = sn_instance(3);
    CHECK(s3->basis.rank() == 6);
    CHECK(s3->hopf.dim() == 6);
    CHECK(s3->hopf.verify().empty());
    CHECK(s3->hdet.verify(s3->hopf).empty());
}

TEST_CASE("discriminant of the symmetric group fixed-ring extension") {
    for (int n : {2, 3}) {
        const auto inst = sn_instance(n);
        GradedModule mod(inst->pres, inst->central, inst->basis);
        REQUIRE(mod.verify_free_basis(2 * n).ok);
        const auto disc = mod.discriminant();
        REQUIRE_FALSE(disc.degenerate);

        // d = prod_{i>j} (x_i - x_j)^{n!} up to scalar, and d = j^{|G|}.
        const auto& vars = inst->pres.gen_names();
        CommPoly vandermonde = CommPoly::one();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                vandermonde = vandermonde *
                    P(vars[static_cast<size_t>(i)] + " - " + vars[static_cast<size_t>(j)],
                      vars);
        int factorial = 1;
        for (int k = 2; k <= n; ++k) factorial *= k;

        const NCPoly expanded = mod.expand(disc.raw);
        CommPoly comm_disc;
        for (const auto& [w, c] : expanded.terms) {
            CommMonomial m;
            for (int idx : w) ++m[vars[static_cast<size_t>(idx)]];
            comm_disc.add_term(m, c);
        }
        CHECK(canonical_up_to_scalar(comm_disc) ==
              canonical_up_to_scalar(comm_pow(vandermonde, factorial)));

        const auto group = group_closure(inst->matrices);
        const auto jac = jacobian_from_arrangement(reflections_and_hyperplanes(group), vars);
        CHECK(canonical_up_to_scalar(comm_disc) ==
              canonical_up_to_scalar(comm_pow(jac, static_cast<int>(group.size()))));
    }
}

TEST_CASE("polynomial presentation helper") {
    const auto pres = polynomial_presentation({"a", "b", "c"});
    CHECK(pres.gen_count() == 3);
    CHECK(check_local_confluence(pres, 6).empty());
    CHECK(normal_form(parse_expr("c*b*a", pres), pres) == parse_expr("a*b*c", pres));
}
