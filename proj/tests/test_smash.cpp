#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>
#include <random>

#include "disc/bundle.hpp"
#include "disc/reflection.hpp"
#include "disc/smash.hpp"

using namespace disc;

namespace {

std::unique_ptr<InstanceBundle> bundle(const std::string& name) {
    return load_bundle(std::string(DISC_DATA_DIR) + "/" + name + ".bundle");
}

SmashElement random_element(std::mt19937& rng, const SmashContext& ctx, int deg) {
    std::uniform_int_distribution<int> pick_h(0, static_cast<int>(ctx.hopf().dim()) - 1);
    std::uniform_int_distribution<int> pick_g(0, static_cast<int>(ctx.pres().gen_count()) - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    SmashElement out(ctx.hopf().dim());
    for (int t = 0; t < 2; ++t) {
        Word w;
        for (int k = 0; k < deg; ++k) w.push_back(pick_g(rng));
        NCPoly p = normal_form(NCPoly::from_word(w, Scalar(coeff(rng))), ctx.pres());
        out.comps[static_cast<size_t>(pick_h(rng))] =
            out.comps[static_cast<size_t>(pick_h(rng))] + p;
    }
    return out;
}

}  // namespace

TEST_CASE("smash product multiplication rules") {
    const auto inst = sn_instance(2);
    GradedModule mod(inst->pres, inst->central, inst->basis);
    SmashContext ctx{&mod, &inst->action};
    const auto& H = inst->hopf;
    REQUIRE(H.dim() == 2);
    const size_t sigma = 1;  // the transposition

    const NCPoly x1 = parse_expr("x1", inst->pres);
    const NCPoly x2 = parse_expr("x2", inst->pres);

    // (a#1)(b#1) = ab#1.
    const auto a1 = ctx.from_A(x1);
    const auto prod_a = smash_multiply(ctx, a1, ctx.from_A(x2));
    CHECK(prod_a == ctx.from_A(nc_mul(x1, x2, inst->pres)));

    // (1#g)(b#1) = (g |> b)#g.
    const auto g = ctx.from_H(H.basis_vec(sigma));
    const auto prod_g = smash_multiply(ctx, g, ctx.from_A(x1));
    SmashElement expect(H.dim());
    expect.comps[sigma] = x2;
    CHECK(prod_g == expect);

    // (x1#sigma)(x1#sigma) = x1 x2 # 1.
    SmashElement xs(H.dim());
    xs.comps[sigma] = x1;
    CHECK(smash_multiply(ctx, xs, xs) == ctx.from_A(nc_mul(x1, x2, inst->pres)));

    // Unit.
    CHECK(smash_multiply(ctx, ctx.one(), xs) == xs);
    CHECK(smash_multiply(ctx, xs, ctx.one()) == xs);
    CHECK(ctx.degree(xs) == 1);
}

TEST_CASE("smash associativity on random triples") {
    std::mt19937 rng(112233);
    const auto qp = bundle("quantum_plane_22");
    Report rep;
    const GradedModule mod = build_module(*qp, rep);
    REQUIRE(rep.ok());
    SmashContext ctx{&mod, &qp->action()};
    for (int t = 0; t < 10; ++t) {
        const auto a = random_element(rng, ctx, 1);
        const auto b = random_element(rng, ctx, 2);
        const auto c = random_element(rng, ctx, 3);
        CHECK(smash_multiply(ctx, smash_multiply(ctx, a, b), c) ==
              smash_multiply(ctx, a, smash_multiply(ctx, b, c)));
    }
}

TEST_CASE("galois dual basis for group algebras") {
    const auto inst = sn_instance(2);
    GradedModule mod(inst->pres, inst->central, inst->basis);
    SmashContext ctx{&mod, &inst->action};
    const auto& H = inst->hopf;

    // beta applied to sum_g (1#g^{-1}) (x) (1#g) gives 1 (x) t.
    std::vector<std::pair<SmashElement, SmashElement>> pairs;
    for (size_t g = 0; g < H.dim(); ++g)
        pairs.emplace_back(ctx.from_H(H.apply_antipode(H.basis_vec(g))),
                           ctx.from_H(H.basis_vec(g)));
    const auto image = galois_beta(ctx, pairs);
    REQUIRE(image.size() == H.dim());
    for (size_t h = 0; h < H.dim(); ++h) {
        SmashElement expect(H.dim());
        if (!H.integral_t[h].is_zero())
            expect = H.integral_t[h] * ctx.one();
        CHECK(image[h] == expect);
    }

    const auto data = galois_dual_basis(ctx);
    CHECK(data.beta_verified);
}

TEST_CASE("galois dual basis for the bicrossed action") {
    const auto qp = bundle("quantum_plane_22");
    Report rep;
    const GradedModule mod = build_module(*qp, rep);
    REQUIRE(rep.ok());
    SmashContext ctx{&mod, &qp->action()};
    CHECK(galois_dual_basis(ctx).beta_verified);
}

TEST_CASE("theta lands in A and kills off-identity group components") {
    const auto inst = sn_instance(2);
    GradedModule mod(inst->pres, inst->central, inst->basis);
    SmashContext ctx{&mod, &inst->action};
    const auto& H = inst->hopf;

    CHECK(smash_theta(ctx, ctx.one()) == NCPoly::one());
    SmashElement off(H.dim());
    off.comps[1] = parse_expr("x1*x2", inst->pres);
    CHECK(smash_theta(ctx, off).is_zero());
    SmashElement on(H.dim());
    on.comps[0] = parse_expr("x1", inst->pres);
    CHECK(smash_theta(ctx, on) == parse_expr("x1", inst->pres));
}

TEST_CASE("trace of B over A") {
    const auto inst = sn_instance(2);
    GradedModule mod(inst->pres, inst->central, inst->basis);
    SmashContext ctx{&mod, &inst->action};
    const auto& H = inst->hopf;
    const auto data = galois_dual_basis(ctx);
    REQUIRE(data.beta_verified);

    // tr(1) = dim H.
    CHECK(smash_trace_over_A(ctx, data, ctx.one()) ==
          NCPoly::from_word({}, Scalar(static_cast<long>(H.dim()))));

    // For g != e the trace of a#g lies in the commutator span [B, B].
    SmashElement ag(H.dim());
    ag.comps[1] = parse_expr("x1*x2", inst->pres);
    const NCPoly tr = smash_trace_over_A(ctx, data, ag);
    CHECK(in_commutator_span(ctx, ctx.from_A(tr)));
    // The functional side vanishes outright: alpha kills the sigma component.
    CHECK(smash_theta(ctx, ag).is_zero());
}

TEST_CASE("smash discriminant matches the predicted power") {
    // k[x1,x2]#kS2 over the power sums: d(B,R) = d(A,R)^2 = ((x1-x2)^2)^2.
    {
        const auto inst = sn_instance(2);
        GradedModule mod(inst->pres, inst->central, inst->basis);
        SmashContext ctx{&mod, &inst->action};
        const auto report = smash_trace_and_discriminant(ctx);
        REQUIRE_FALSE(report.disc.degenerate);
        CHECK(report.matches_power);
        const NCPoly expect =
            nc_pow(parse_expr("x1 - x2", inst->pres), 4, inst->pres);
        CHECK(nc_equal_up_to_scalar(mod.expand(report.disc.raw), expect, inst->pres));
    }
    // k_{-1}[x,y]#k(Z/2)^2 over k[x^2,y^2]: d(B,R) = (xy)^16 = (X^2Y^2)^4.
    {
        const auto qp = bundle("quantum_plane_22");
        Report rep;
        const GradedModule mod = build_module(*qp, rep);
        REQUIRE(rep.ok());
        SmashContext ctx{&mod, &qp->action()};
        const auto report = smash_trace_and_discriminant(ctx);
        REQUIRE_FALSE(report.disc.degenerate);
        CHECK(report.matches_power);
        const CommPoly expect = comm_pow(
            comm_pow(CommPoly::variable("X"), 2) * comm_pow(CommPoly::variable("Y"), 2),
            4);
        CHECK(report.disc.canonical == expect);
        CHECK(report.a_disc_power == expect);
    }
}

TEST_CASE("trace identity mod commutators") {
    const auto inst = sn_instance(2);
    GradedModule mod(inst->pres, inst->central, inst->basis);
    SmashContext ctx{&mod, &inst->action};
    const auto report = galois_trace_check(ctx, 4);
    CHECK(report.ok);
    CHECK(report.frobenius_ok);
    CHECK(report.pairing_one);
    CHECK(report.failures.empty());
}

TEST_CASE("trace composition consistency") {
    // tr_{B_R} agrees with tr_{A_R} of the A-valued trace on sampled elements.
    const auto inst = sn_instance(2);
    GradedModule mod(inst->pres, inst->central, inst->basis);
    SmashContext ctx{&mod, &inst->action};
    const auto data = galois_dual_basis(ctx);
    REQUIRE(data.beta_verified);
    std::mt19937 rng(445566);
    for (int t = 0; t < 8; ++t) {
        const auto b = random_element(rng, ctx, 2);
        const CommPoly direct = smash_hs_trace(ctx, b);
        const CommPoly composed = mod.hs_trace(smash_trace_over_A(ctx, data, b));
        CHECK(direct == composed);
    }
}
