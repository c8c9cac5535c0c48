#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <memory>

#include "disc/bundle.hpp"
#include "disc/hopf.hpp"

using namespace disc;

namespace {

std::unique_ptr<InstanceBundle> bundle(const std::string& name) {
    return load_bundle(std::string(DISC_DATA_DIR) + "/" + name + ".bundle");
}

size_t label_index(const HopfAlgebraSpec& H, const std::string& label) {
    const auto it = std::find(H.labels.begin(), H.labels.end(), label);
    REQUIRE(it != H.labels.end());
    return static_cast<size_t>(it - H.labels.begin());
}

bool nc_in_span(const NCPoly& p, const NCPoly& q, const AlgebraPresentation& pres) {
    return nc_equal_up_to_scalar(p, q, pres);
}

}  // namespace

TEST_CASE("hopf axioms for shipped group algebras") {
    for (const char* name : {"quantum_plane_22", "quantum_plane_24", "s2", "s3",
                             "zdiag3"}) {
        const auto b = bundle(name);
        REQUIRE(b->has_hopf());
        CAPTURE(name);
        CHECK(b->hopf().verify().empty());
        CHECK(b->action().verify().empty());
        CHECK(b->hopf_is_group());
    }
}

TEST_CASE("hopf axioms for the bicrossed family") {
    for (int n : {2, 3}) {
        const auto inst = h2n2(n, n - 1, 0);
        CHECK(inst->hopf.dim() == static_cast<size_t>(2 * n * n));
        CHECK(inst->hopf.verify().empty());
        CHECK(inst->action.verify().empty());
        CHECK(inst->hdet.verify(inst->hopf).empty());
    }
}

TEST_CASE("structure of h2n2(3, 2, 0)") {
    const auto inst = h2n2(3, 2, 0);
    const auto& H = inst->hopf;
    CHECK(H.dim() == 18);
    // Relation vu = zeta_3^2 uv.
    CHECK(inst->relation_scalar == Scalar::root_of_unity(3, 2));

    const size_t z = label_index(H, "z");
    CHECK(H.counit[z] == Scalar(1));
    // S(z) = z.
    ScalarVec sz = H.apply_antipode(H.basis_vec(z));
    CHECK(sz == H.basis_vec(z));

    // z |> u = v, and the unit acts as the identity.
    const NCPoly u = parse_expr("u", inst->pres);
    const NCPoly v = parse_expr("v", inst->pres);
    CHECK(inst->action.act_basis(z, u) == v);
    CHECK(inst->action.act_basis(H.unit, parse_expr("u^2*v + v^3", inst->pres)) ==
          parse_expr("u^2*v + v^3", inst->pres));
    CHECK(H.integral_pairing() == Scalar(1));
}

TEST_CASE("group actions distribute multiplicatively") {
    const auto b = bundle("quantum_plane_24");
    const auto& H = b->hopf();
    const auto& act = b->action();
    const NCPoly p = parse_expr("x^2 + x*y", b->pres());
    const NCPoly q = parse_expr("y^2 - x*y", b->pres());
    for (size_t g = 0; g < H.dim(); ++g) {
        CHECK(act.act_basis(g, nc_mul(p, q, b->pres())) ==
              nc_mul(act.act_basis(g, p), act.act_basis(g, q), b->pres()));
    }
}

TEST_CASE("characters") {
    const auto b = bundle("quantum_plane_22");
    REQUIRE(b->hdet.has_value());
    CHECK(b->hdet->verify(b->hopf()).empty());
    // hdet(a) = det of the action of a = -1; hdet(ab) = 1.
    CHECK(b->hdet->of(label_index(b->hopf(), "a")) == Scalar(-1));
    CHECK(b->hdet->of(label_index(b->hopf(), "ab")) == Scalar(1));
    // The convolution inverse hdet o S is again a character; for an
    // involutory group algebra it coincides with hdet.
    const Character inv = b->hdet->compose_antipode(b->hopf());
    CHECK(inv.verify(b->hopf()).empty());
    CHECK(inv.values == b->hdet->values);
}

TEST_CASE("reynolds operator") {
    const auto inst = h2n2(3, 2, 0);
    const auto& pres = inst->pres;
    // reynolds(u^3) is a multiple of the invariant u^3 + v^3.
    const NCPoly r = reynolds(inst->action, parse_expr("u^3", pres));
    CHECK(nc_in_span(r, parse_expr("u^3 + v^3", pres), pres));
    // Idempotence on a few elements.
    for (const char* e : {"u^3", "u*v", "u^2*v^4", "u^3 + v^3"}) {
        const NCPoly once = reynolds(inst->action, parse_expr(e, pres));
        if (once.is_zero()) continue;
        CHECK(reynolds(inst->action, once) == once);
    }
    // Nothing of degree 1 or 2 is invariant for this action.
    CHECK(invariant_basis(inst->action, 1).empty());
    CHECK(invariant_basis(inst->action, 2).empty());
    CHECK(invariant_basis(inst->action, 3).size() == 1);
    CHECK(invariant_basis(inst->action, 6).size() == 2);  // u^3+v^3 squared, u^3v^3
}

TEST_CASE("relative invariants and the jacobian pipeline") {
    const auto inst = h2n2(3, 2, 0);
    const auto& pres = inst->pres;
    const Character hdet_inv = inst->hdet.compose_antipode(inst->hopf);
    // The hdet^{-1} eigenspace in degree 7 is one-dimensional, spanned by
    // u^2 v^2 (u^3 - v^3).
    const auto rel = relative_invariants(inst->action, hdet_inv, 7);
    REQUIRE(rel.size() == 1);
    CHECK(nc_in_span(rel[0], parse_expr("u^2*v^2*(u^3 - v^3)", pres), pres));

    CentralSubalgebra central;
    central.gens.push_back({"S", parse_expr("u^3 + v^3", pres), 3});
    central.gens.push_back({"T", parse_expr("u^3*v^3", pres), 6});

    const NCPoly jac = jacobian(inst->action, inst->hdet, central, 7, 12);
    CHECK(nc_in_span(jac, parse_expr("u^2*v^5 - u^5*v^2", pres), pres));

    const NCPoly arr = arrangement(inst->action, inst->hdet, central, 12);
    CHECK(nc_in_span(arr, parse_expr("u*v^4 - u^4*v", pres), pres));

    const NCPoly delta = discriminant_invariant(jac, arr, pres);
    CHECK(nc_in_span(delta, parse_expr("u^3*v^9 - 2*u^6*v^6 + u^9*v^3", pres), pres));
}

TEST_CASE("homogeneous division") {
    const auto b = bundle("quantum_plane_22");
    const auto& pres = b->pres();
    const NCPoly f = parse_expr("x^2*y", pres);
    const NCPoly g = parse_expr("x", pres);
    auto q = homogeneous_divide(f, g, Side::Left, pres);
    REQUIRE(q.has_value());
    CHECK(nc_mul(*q, g, pres) == f);
    auto qr = homogeneous_divide(f, g, Side::Right, pres);
    REQUIRE(qr.has_value());
    CHECK(nc_mul(g, *qr, pres) == f);
    CHECK_FALSE(
        homogeneous_divide(parse_expr("x^2 + y^2", pres), g, Side::Left, pres).has_value());
}

TEST_CASE("fixed-ring validation and the main theorem on the quantum plane") {
    const auto b = bundle("quantum_plane_22");
    Report rep;
    const GradedModule mod = build_module(*b, rep);
    REQUIRE(rep.ok());
    CHECK(validate_fixed_ring(mod, b->action(), 8).empty());

    const auto result = verify_main_theorem(mod, b->action(), *b->hdet, 8);
    CHECK(result.ok);
    for (const auto& c : result.checks) {
        CAPTURE(c.name);
        CHECK(c.ok);
    }
    CHECK(nc_in_span(result.jac, parse_expr("x*y", b->pres()), b->pres()));
    CHECK(result.disc.canonical ==
          comm_pow(CommPoly::variable("X"), 2) * comm_pow(CommPoly::variable("Y"), 2));
}

TEST_CASE("jacobian freeness dimensions") {
    // dim A^{hdet^{-1}}_d = dim R_{d - deg j} for the quantum plane instance.
    const auto b = bundle("quantum_plane_22");
    const Character hdet_inv = b->hdet->compose_antipode(b->hopf());
    const auto r_hilbert = b->central.hilbert();
    for (int d = 2; d <= 8; ++d) {
        const auto dim = relative_invariants(b->action(), hdet_inv, d).size();
        const Rat expect = r_hilbert.series_coeff(d - 2);
        CHECK(Rat(static_cast<long>(dim)) == expect);
    }
}
