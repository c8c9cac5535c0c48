#include "disc/smash.hpp"

#include <algorithm>
#include <sstream>

namespace disc {

bool SmashElement::is_zero() const {
    for (const auto& p : comps)
        if (!p.is_zero()) return false;
    return true;
}

bool operator==(const SmashElement& a, const SmashElement& b) {
    if (a.comps.size() != b.comps.size()) return false;
    for (size_t i = 0; i < a.comps.size(); ++i)
        if (!(a.comps[i] == b.comps[i])) return false;
    return true;
}

SmashElement operator+(const SmashElement& a, const SmashElement& b) {
    SmashElement r = a;
    for (size_t i = 0; i < r.comps.size(); ++i) r.comps[i] = r.comps[i] + b.comps[i];
    return r;
}

SmashElement operator-(const SmashElement& a, const SmashElement& b) {
    SmashElement r = a;
    for (size_t i = 0; i < r.comps.size(); ++i) r.comps[i] = r.comps[i] - b.comps[i];
    return r;
}

SmashElement operator*(const Scalar& c, const SmashElement& a) {
    SmashElement r(a.comps.size());
    for (size_t i = 0; i < a.comps.size(); ++i) r.comps[i] = c * a.comps[i];
    return r;
}

SmashElement SmashContext::from_A(const NCPoly& a) const {
    SmashElement s(hopf().dim());
    s.comps[hopf().unit] = a;
    return s;
}

SmashElement SmashContext::from_H(const ScalarVec& h) const {
    SmashElement s(hopf().dim());
    for (size_t i = 0; i < h.size(); ++i)
        if (!h[i].is_zero()) s.comps[i] = h[i] * NCPoly::one();
    return s;
}

SmashElement SmashContext::one() const { return from_A(NCPoly::one()); }

std::string SmashContext::to_string(const SmashElement& s) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < s.comps.size(); ++i) {
        if (s.comps[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << nc_to_string(s.comps[i], pres()) << ")#" << hopf().labels[i];
    }
    return first ? "0" : os.str();
}

int SmashContext::degree(const SmashElement& s) const {
    int d = -1;
    for (const auto& p : s.comps) {
        if (p.is_zero()) continue;
        int pd = pres().degree_of(p);
        if (d >= 0 && pd != d) throw SmashError("degree: mixed-degree smash element");
        d = pd;
    }
    return d;
}

SmashElement smash_multiply(const SmashContext& ctx, const SmashElement& a,
                            const SmashElement& b) {
    const HopfAlgebraSpec& H = ctx.hopf();
    SmashElement r(H.dim());
    for (size_t g = 0; g < H.dim(); ++g) {
        if (a.comps[g].is_zero()) continue;
        for (size_t h = 0; h < H.dim(); ++h) {
            if (b.comps[h].is_zero()) continue;
            // (a # e_g)(b # e_h) = sum a (g1 |> b) # g2 e_h
            for (const auto& [g1, g2, c] : H.comult[g]) {
                NCPoly acted = ctx.action->act_basis(g1, b.comps[h]);
                if (acted.is_zero()) continue;
                NCPoly left = nc_mul(a.comps[g], acted, ctx.pres());
                if (left.is_zero()) continue;
                const ScalarVec& prod = H.mult[g2][h];
                for (size_t k = 0; k < H.dim(); ++k)
                    if (!prod[k].is_zero())
                        r.comps[k] = r.comps[k] + (c * prod[k]) * left;
            }
        }
    }
    return r;
}

SmashTensorH galois_beta(const SmashContext& ctx,
                         const std::vector<std::pair<SmashElement, SmashElement>>& pairs) {
    const HopfAlgebraSpec& H = ctx.hopf();
    SmashTensorH out(H.dim(), SmashElement(H.dim()));
    for (const auto& [bp, b] : pairs) {
        // Coaction on b = sum_h a_h # e_h: b0 (x) b1 = sum (a_h # e_{h1}) (x) e_{h2}.
        for (size_t h = 0; h < H.dim(); ++h) {
            if (b.comps[h].is_zero()) continue;
            for (const auto& [h1, h2, c] : H.comult[h]) {
                SmashElement b0 = ctx.from_A(b.comps[h]);
                b0.comps[h1] = b0.comps[H.unit];
                if (h1 != H.unit) b0.comps[H.unit] = NCPoly::zero();
                // b0 = a_h # e_{h1}; fold the coefficient in afterwards.
                out[h2] = out[h2] + c * smash_multiply(ctx, bp, b0);
            }
        }
    }
    return out;
}

GaloisData galois_dual_basis(const SmashContext& ctx) {
    const HopfAlgebraSpec& H = ctx.hopf();
    GaloisData g;
    for (size_t i = 0; i < H.dim(); ++i) {
        if (H.integral_t[i].is_zero()) continue;
        for (const auto& [t1, t2, c] : H.comult[i]) {
            SmashElement x = ctx.from_H(H.apply_antipode(H.basis_vec(t1)));
            SmashElement y = (H.integral_t[i] * c) * ctx.from_H(H.basis_vec(t2));
            g.pairs.emplace_back(std::move(x), std::move(y));
        }
    }
    SmashTensorH image = galois_beta(ctx, g.pairs);
    g.beta_verified = true;
    for (size_t k = 0; k < H.dim(); ++k) {
        SmashElement expect = H.integral_t[k] * ctx.one();
        if (!(image[k] == expect)) g.beta_verified = false;
    }
    if (!g.beta_verified) throw SmashError("galois_dual_basis: beta check failed");
    return g;
}

NCPoly smash_theta(const SmashContext& ctx, const SmashElement& b) {
    const HopfAlgebraSpec& H = ctx.hopf();
    SmashElement r(H.dim());
    for (size_t h = 0; h < H.dim(); ++h) {
        if (b.comps[h].is_zero()) continue;
        for (const auto& [h1, h2, c] : H.comult[h]) {
            Scalar w = c * H.dual_integral[h2];
            if (w.is_zero()) continue;
            r.comps[h1] = r.comps[h1] + w * b.comps[h];
        }
    }
    for (size_t h = 0; h < H.dim(); ++h)
        if (h != H.unit && !r.comps[h].is_zero())
            throw SmashError("smash_theta: image not in A");
    return r.comps[H.unit];
}

NCPoly smash_trace_over_A(const SmashContext& ctx, const GaloisData& g,
                          const SmashElement& b) {
    NCPoly out;
    for (const auto& [x, y] : g.pairs) {
        SmashElement prod = smash_multiply(ctx, smash_multiply(ctx, y, b), x);
        out = out + smash_theta(ctx, prod);
    }
    return out;
}

std::vector<std::vector<CommPoly>> smash_decompose(const SmashContext& ctx,
                                                   const SmashElement& b) {
    size_t n = ctx.module->rank();
    std::vector<std::vector<CommPoly>> out(n,
                                           std::vector<CommPoly>(ctx.hopf().dim()));
    for (size_t h = 0; h < ctx.hopf().dim(); ++h) {
        if (b.comps[h].is_zero()) continue;
        Decomposition dec = ctx.module->decompose(b.comps[h], Side::Right);
        if (dec.status != SolveStatus::Ok) throw DecomposeFailed(dec.status);
        for (size_t k = 0; k < n; ++k) out[k][h] = dec.coeffs[k];
    }
    return out;
}

CommPoly smash_hs_trace(const SmashContext& ctx, const SmashElement& b) {
    size_t n = ctx.module->rank();
    CommPoly tr;
    for (size_t k = 0; k < n; ++k)
        for (size_t h = 0; h < ctx.hopf().dim(); ++h) {
            SmashElement basis = ctx.from_A(ctx.module->basis().elements[k]);
            std::swap(basis.comps[ctx.hopf().unit], basis.comps[h]);
            auto coeffs = smash_decompose(ctx, smash_multiply(ctx, b, basis));
            tr = tr + coeffs[k][h];
        }
    return tr;
}

SmashDiscReport smash_trace_and_discriminant(const SmashContext& ctx) {
    const HopfAlgebraSpec& H = ctx.hopf();
    size_t n = ctx.module->rank();
    size_t m = H.dim();
    size_t N = n * m;
    std::vector<SmashElement> basis;
    basis.reserve(N);
    for (size_t k = 0; k < n; ++k)
        for (size_t h = 0; h < m; ++h) {
            SmashElement e = ctx.from_A(ctx.module->basis().elements[k]);
            std::swap(e.comps[H.unit], e.comps[h]);
            basis.push_back(std::move(e));
        }
    CommMat t(N, std::vector<CommPoly>(N));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = i; j < N; ++j) {
            CommPoly v = smash_hs_trace(ctx, smash_multiply(ctx, basis[i], basis[j]));
            t[i][j] = v;
            if (i != j) {
                CommPoly w = smash_hs_trace(ctx, smash_multiply(ctx, basis[j], basis[i]));
                if (!(w == v)) throw SmashError("smash trace matrix not symmetric");
                t[j][i] = std::move(w);
            }
        }
    SmashDiscReport rep;
    rep.disc.raw = determinant(t);
    if (rep.disc.raw.is_zero()) {
        rep.disc.degenerate = true;
        return rep;
    }
    rep.disc.canonical = canonical_up_to_scalar(rep.disc.raw);
    DiscriminantResult a_disc = ctx.module->discriminant();
    if (!a_disc.degenerate) {
        rep.a_disc_power = canonical_up_to_scalar(comm_pow(a_disc.canonical,
                                                           static_cast<int>(m)));
        rep.matches_power = rep.disc.canonical == rep.a_disc_power;
    }
    return rep;
}

namespace {

// Span of the degree-d commutators of B together with the coordinate map.
struct CommutatorSpan {
    std::vector<Word> words;
    std::map<Word, int> windex;
    size_t hopf_dim = 0;
    IncrementalSpan span;

    ScalarVec coords(const SmashElement& s) const {
        ScalarVec v(words.size() * hopf_dim, Scalar::zero());
        for (size_t h = 0; h < hopf_dim; ++h)
            for (const auto& [w, c] : s.comps[h].terms)
                v[windex.at(w) * hopf_dim + h] = c;
        return v;
    }

    bool contains(const SmashElement& s) const {
        if (s.is_zero()) return true;
        IncrementalSpan probe = span;
        return !probe.insert(coords(s));
    }
};

CommutatorSpan build_commutator_span(const SmashContext& ctx, int d) {
    const HopfAlgebraSpec& H = ctx.hopf();
    const AlgebraPresentation& P = ctx.pres();
    CommutatorSpan cs;
    cs.words = monomial_basis(P, d);
    cs.hopf_dim = H.dim();
    for (size_t i = 0; i < cs.words.size(); ++i)
        cs.windex.emplace(cs.words[i], static_cast<int>(i));
    for (int d1 = 0; d1 <= d; ++d1) {
        std::vector<Word> w1 = monomial_basis(P, d1);
        std::vector<Word> w2 = monomial_basis(P, d - d1);
        for (const Word& a : w1)
            for (size_t g = 0; g < H.dim(); ++g) {
                SmashElement sa = ctx.from_A(NCPoly::from_word(a));
                std::swap(sa.comps[H.unit], sa.comps[g]);
                for (const Word& c : w2)
                    for (size_t h = 0; h < H.dim(); ++h) {
                        SmashElement sc = ctx.from_A(NCPoly::from_word(c));
                        std::swap(sc.comps[H.unit], sc.comps[h]);
                        SmashElement comm = smash_multiply(ctx, sa, sc) -
                                            smash_multiply(ctx, sc, sa);
                        if (!comm.is_zero()) cs.span.insert(cs.coords(comm));
                    }
            }
    }
    return cs;
}

}  // namespace

bool in_commutator_span(const SmashContext& ctx, const SmashElement& b) {
    if (b.is_zero()) return true;
    return build_commutator_span(ctx, ctx.degree(b)).contains(b);
}

GaloisTraceReport galois_trace_check(const SmashContext& ctx, int degree_bound) {
    GaloisTraceReport rep;
    const HopfAlgebraSpec& H = ctx.hopf();
    GaloisData g = galois_dual_basis(ctx);
    rep.pairing_one = H.integral_pairing() == Scalar::one();
    if (!rep.pairing_one) {
        rep.ok = false;
        rep.failures.push_back("<alpha, t> != 1");
    }
    Scalar et = H.counit_of(H.integral_t);

    for (int d = 0; d <= degree_bound; ++d) {
        std::vector<Word> words = monomial_basis(ctx.pres(), d);
        CommutatorSpan cs = build_commutator_span(ctx, d);
        for (const Word& w : words)
            for (size_t h = 0; h < H.dim(); ++h) {
                SmashElement b = ctx.from_A(NCPoly::from_word(w));
                std::swap(b.comps[H.unit], b.comps[h]);
                // Frobenius system identities.
                SmashElement left(H.dim()), right(H.dim());
                for (const auto& [x, y] : g.pairs) {
                    left = left + smash_multiply(
                                      ctx, x,
                                      ctx.from_A(smash_theta(ctx, smash_multiply(ctx, y, b))));
                    right = right +
                            smash_multiply(
                                ctx, ctx.from_A(smash_theta(ctx, smash_multiply(ctx, b, x))),
                                y);
                }
                if (!(left == b) || !(right == b)) {
                    rep.frobenius_ok = false;
                    rep.ok = false;
                    rep.failures.push_back("Frobenius system fails on " + ctx.to_string(b));
                    continue;
                }
                // Mod-commutator trace identity.
                NCPoly lhs = smash_trace_over_A(ctx, g, b);
                NCPoly rhs = et * smash_theta(ctx, b);
                SmashElement diff = ctx.from_A(lhs - rhs);
                if (!cs.contains(diff)) {
                    rep.ok = false;
                    rep.failures.push_back("trace identity fails on " + ctx.to_string(b));
                }
            }
    }
    return rep;
}

}  // namespace disc
