#include "disc/hopf.hpp"

#include <algorithm>
#include <sstream>

namespace disc {

namespace {

ScalarVec zero_vec(size_t n) { return ScalarVec(n, Scalar::zero()); }

}  // namespace

ScalarVec HopfAlgebraSpec::basis_vec(size_t i) const {
    ScalarVec v = zero_vec(dim());
    v[i] = Scalar::one();
    return v;
}

ScalarVec HopfAlgebraSpec::multiply(const ScalarVec& a, const ScalarVec& b) const {
    ScalarVec r = zero_vec(dim());
    for (size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            for (size_t k = 0; k < dim(); ++k)
                if (!mult[i][j][k].is_zero()) r[k] += c * mult[i][j][k];
        }
    }
    return r;
}

ScalarVec HopfAlgebraSpec::apply_antipode(const ScalarVec& a) const {
    ScalarVec r = zero_vec(dim());
    for (size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t k = 0; k < dim(); ++k)
            if (!antipode[i][k].is_zero()) r[k] += a[i] * antipode[i][k];
    }
    return r;
}

Scalar HopfAlgebraSpec::counit_of(const ScalarVec& a) const {
    Scalar r = Scalar::zero();
    for (size_t i = 0; i < dim(); ++i) r += a[i] * counit[i];
    return r;
}

Scalar HopfAlgebraSpec::integral_pairing() const {
    Scalar r = Scalar::zero();
    for (size_t i = 0; i < dim(); ++i) r += dual_integral[i] * integral_t[i];
    return r;
}

void HopfAlgebraSpec::normalize_dual_integral() {
    // alpha <- t as a functional: k |-> <alpha, k S(t)>.
    ScalarVec st = apply_antipode(integral_t);
    ScalarVec f = zero_vec(dim());
    for (size_t k = 0; k < dim(); ++k) {
        ScalarVec prod = multiply(basis_vec(k), st);
        for (size_t i = 0; i < dim(); ++i) f[k] += dual_integral[i] * prod[i];
    }
    // Must be a nonzero multiple of the counit.
    Scalar c = Scalar::zero();
    for (size_t k = 0; k < dim(); ++k) {
        if (counit[k].is_zero()) {
            if (!f[k].is_zero()) throw HopfError("dual integral: alpha <- t not scalar * counit");
            continue;
        }
        Scalar ratio = f[k] / counit[k];
        if (c.is_zero())
            c = ratio;
        else if (!(c == ratio))
            throw HopfError("dual integral: alpha <- t not scalar * counit");
    }
    if (c.is_zero()) throw HopfError("dual integral: alpha <- t = 0");
    Scalar inv = c.inv();
    for (auto& x : dual_integral) x *= inv;
}

std::vector<std::string> HopfAlgebraSpec::verify(bool check_s_squared) const {
    std::vector<std::string> fails;
    size_t m = dim();
    auto fail = [&](const std::string& s) { fails.push_back(s); };

    for (size_t i = 0; i < m; ++i) {
        if (!(multiply(basis_vec(unit), basis_vec(i)) == basis_vec(i)) ||
            !(multiply(basis_vec(i), basis_vec(unit)) == basis_vec(i))) {
            fail("unit axiom fails at " + labels[i]);
        }
    }
    for (size_t i = 0; i < m && fails.size() < 8; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k) {
                ScalarVec l = multiply(multiply(basis_vec(i), basis_vec(j)), basis_vec(k));
                ScalarVec r = multiply(basis_vec(i), multiply(basis_vec(j), basis_vec(k)));
                if (!(l == r)) {
                    fail("associativity fails at (" + labels[i] + "," + labels[j] + "," +
                         labels[k] + ")");
                    goto assoc_done;
                }
            }
assoc_done:

    // Coassociativity, compared as maps into H^{x3}.
    for (size_t i = 0; i < m; ++i) {
        std::map<std::tuple<size_t, size_t, size_t>, Scalar> lhs, rhs;
        for (const auto& [a, b, c] : comult[i])
            for (const auto& [a1, a2, c2] : comult[a]) {
                auto key = std::make_tuple(a1, a2, b);
                lhs[key] += c * c2;
            }
        for (const auto& [a, b, c] : comult[i])
            for (const auto& [b1, b2, c2] : comult[b]) {
                auto key = std::make_tuple(a, b1, b2);
                rhs[key] += c * c2;
            }
        for (const auto& [k, v] : lhs)
            if (!(v == rhs[k])) {
                fail("coassociativity fails at " + labels[i]);
                break;
            }
        for (const auto& [k, v] : rhs)
            if (!(v == lhs[k])) {
                fail("coassociativity fails at " + labels[i]);
                break;
            }
    }

    // Counit axiom.
    for (size_t i = 0; i < m; ++i) {
        ScalarVec l = zero_vec(m), r = zero_vec(m);
        for (const auto& [a, b, c] : comult[i]) {
            l[b] += c * counit[a];
            r[a] += c * counit[b];
        }
        if (!(l == basis_vec(i)) || !(r == basis_vec(i)))
            fail("counit axiom fails at " + labels[i]);
    }

    // Delta and epsilon are algebra morphisms.
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            std::map<std::pair<size_t, size_t>, Scalar> lhs, rhs;
            ScalarVec prod = multiply(basis_vec(i), basis_vec(j));
            for (size_t k = 0; k < m; ++k) {
                if (prod[k].is_zero()) continue;
                for (const auto& [a, b, c] : comult[k]) lhs[{a, b}] += prod[k] * c;
            }
            for (const auto& [a1, b1, c1] : comult[i])
                for (const auto& [a2, b2, c2] : comult[j]) {
                    ScalarVec pa = multiply(basis_vec(a1), basis_vec(a2));
                    ScalarVec pb = multiply(basis_vec(b1), basis_vec(b2));
                    for (size_t a = 0; a < m; ++a) {
                        if (pa[a].is_zero()) continue;
                        for (size_t b = 0; b < m; ++b)
                            if (!pb[b].is_zero()) rhs[{a, b}] += c1 * c2 * pa[a] * pb[b];
                    }
                }
            bool bad = false;
            for (const auto& [k, v] : lhs)
                if (!(v == rhs[k])) bad = true;
            for (const auto& [k, v] : rhs)
                if (!(v == lhs[k])) bad = true;
            if (bad) {
                fail("Delta not multiplicative at (" + labels[i] + "," + labels[j] + ")");
                i = m;
                break;
            }
            Scalar pe = counit_of(prod);
            if (!(pe == counit[i] * counit[j]))
                fail("counit not multiplicative at (" + labels[i] + "," + labels[j] + ")");
        }
    if (!(counit[unit] == Scalar::one())) fail("counit(1) != 1");

    // Antipode convolution identities.
    for (size_t i = 0; i < m; ++i) {
        ScalarVec l = zero_vec(m), r = zero_vec(m);
        for (const auto& [a, b, c] : comult[i]) {
            ScalarVec sa = apply_antipode(basis_vec(a));
            ScalarVec lb = multiply(sa, basis_vec(b));
            ScalarVec sb = apply_antipode(basis_vec(b));
            ScalarVec rb = multiply(basis_vec(a), sb);
            for (size_t k = 0; k < m; ++k) {
                l[k] += c * lb[k];
                r[k] += c * rb[k];
            }
        }
        ScalarVec expect = zero_vec(m);
        expect[unit] = counit[i];
        if (!(l == expect) || !(r == expect)) fail("antipode axiom fails at " + labels[i]);
    }

    if (check_s_squared)
        for (size_t i = 0; i < m; ++i)
            if (!(apply_antipode(apply_antipode(basis_vec(i))) == basis_vec(i))) {
                fail("S^2 != id at " + labels[i]);
                break;
            }

    // t is a right integral.
    for (size_t i = 0; i < m; ++i) {
        ScalarVec th = multiply(integral_t, basis_vec(i));
        ScalarVec expect = integral_t;
        for (auto& x : expect) x *= counit[i];
        if (!(th == expect)) {
            fail("t is not a right integral (at " + labels[i] + ")");
            break;
        }
    }

    // alpha is a left integral of the dual: h1 <alpha,h2> = <alpha,h> 1.
    for (size_t i = 0; i < m; ++i) {
        ScalarVec l = zero_vec(m);
        for (const auto& [a, b, c] : comult[i]) l[a] += c * dual_integral[b];
        ScalarVec expect = zero_vec(m);
        expect[unit] = dual_integral[i];
        if (!(l == expect)) {
            fail("alpha is not a left integral of the dual (at " + labels[i] + ")");
            break;
        }
    }
    return fails;
}

HopfAlgebraSpec group_algebra(const std::vector<std::string>& labels,
                              const std::vector<std::vector<int>>& table) {
    size_t m = labels.size();
    if (table.size() != m) throw HopfError("group_algebra: table size mismatch");
    // Identity: the unique e with e*g = g for all g.
    int unit = -1;
    for (size_t e = 0; e < m; ++e) {
        bool ok = true;
        for (size_t g = 0; g < m; ++g)
            if (table[e][g] != static_cast<int>(g) || table[g][e] != static_cast<int>(g))
                ok = false;
        if (ok) unit = static_cast<int>(e);
    }
    if (unit < 0) throw HopfError("group_algebra: no identity element");
    std::vector<int> inverse(m, -1);
    for (size_t g = 0; g < m; ++g) {
        for (size_t h = 0; h < m; ++h)
            if (table[g][h] == unit && table[h][g] == unit) inverse[g] = static_cast<int>(h);
        if (inverse[g] < 0) throw HopfError("group_algebra: no inverse for " + labels[g]);
    }
    HopfAlgebraSpec H;
    H.labels = labels;
    H.unit = unit;
    H.mult.assign(m, std::vector<ScalarVec>(m, zero_vec(m)));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            if (table[i][j] < 0 || table[i][j] >= static_cast<int>(m))
                throw HopfError("group_algebra: table entry out of range");
            H.mult[i][j][table[i][j]] = Scalar::one();
        }
    H.comult.resize(m);
    for (size_t i = 0; i < m; ++i) H.comult[i].emplace_back(i, i, Scalar::one());
    H.counit.assign(m, Scalar::one());
    H.antipode.assign(m, zero_vec(m));
    for (size_t i = 0; i < m; ++i) H.antipode[i][inverse[i]] = Scalar::one();
    H.integral_t.assign(m, Scalar::one());
    H.dual_integral = zero_vec(m);
    H.dual_integral[unit] = Scalar::one();
    auto fails = H.verify();
    if (!fails.empty()) throw HopfError("group_algebra: " + fails.front());
    return H;
}

const ActionSpec::DegreeData& ActionSpec::degree_data(int degree) const {
    auto it = cache_.find(degree);
    if (it != cache_.end()) return it->second;
    for (int d : pres->gen_degrees())
        if (d != 1) throw HopfError("action: only degree-1 generators are supported");

    DegreeData data;
    data.words = monomial_basis(*pres, degree);
    for (size_t i = 0; i < data.words.size(); ++i)
        data.index.emplace(data.words[i], static_cast<int>(i));
    size_t m = hopf->dim();
    size_t dim_d = data.words.size();
    data.op.assign(m, ScalarMat(dim_d, zero_vec(dim_d)));

    if (degree == 0) {
        for (size_t h = 0; h < m; ++h) data.op[h][0][0] = hopf->counit[h];
        return cache_.emplace(degree, std::move(data)).first->second;
    }

    const DegreeData& prev = degree_data(degree - 1);
    size_t g_count = pres->gen_count();
    for (size_t c = 0; c < dim_d; ++c) {
        const Word& w = data.words[c];
        int g = w[0];
        // Coordinates of the (normalized) tail in the previous degree.
        NCPoly tail = normal_form(NCPoly::from_word(Word(w.begin() + 1, w.end())), *pres);
        ScalarVec tail_v = zero_vec(prev.words.size());
        for (const auto& [tw, tc] : tail.terms) tail_v[prev.index.at(tw)] = tc;

        for (size_t h = 0; h < m; ++h) {
            NCPoly acc;
            for (const auto& [j, k, cf] : hopf->comult[h]) {
                // e_k acting on the tail.
                NCPoly kt;
                for (size_t r = 0; r < prev.words.size(); ++r) {
                    Scalar s = Scalar::zero();
                    for (size_t cc = 0; cc < prev.words.size(); ++cc)
                        if (!prev.op[k][r][cc].is_zero() && !tail_v[cc].is_zero())
                            s += prev.op[k][r][cc] * tail_v[cc];
                    if (!s.is_zero()) kt.add_term(prev.words[r], s);
                }
                if (kt.is_zero()) continue;
                // e_j acting on the head generator.
                for (size_t i = 0; i < g_count; ++i) {
                    const Scalar& mc = matrices[j][i][g];
                    if (mc.is_zero()) continue;
                    NCPoly head = NCPoly::from_word({static_cast<int>(i)}, cf * mc);
                    acc = acc + nc_mul(head, kt, *pres);
                }
            }
            for (const auto& [aw, ac] : acc.terms) data.op[h][data.index.at(aw)][c] = ac;
        }
    }
    return cache_.emplace(degree, std::move(data)).first->second;
}

const ScalarMat& ActionSpec::degree_matrix(size_t h, int degree) const {
    return degree_data(degree).op[h];
}

const std::vector<Word>& ActionSpec::degree_words(int degree) const {
    return degree_data(degree).words;
}

NCPoly ActionSpec::act_basis(size_t h, const NCPoly& a) const {
    // Split by degree, apply the per-degree operator.
    std::map<int, NCPoly> by_degree;
    for (const auto& [w, c] : a.terms) {
        NCPoly t;
        t.add_term(w, c);
        by_degree[pres->word_degree(w)] = by_degree[pres->word_degree(w)] + t;
    }
    NCPoly out;
    for (const auto& [d, part] : by_degree) {
        const DegreeData& data = degree_data(d);
        ScalarVec v = zero_vec(data.words.size());
        for (const auto& [w, c] : part.terms) v[data.index.at(w)] = c;
        for (size_t r = 0; r < data.words.size(); ++r) {
            Scalar s = Scalar::zero();
            for (size_t c = 0; c < data.words.size(); ++c)
                if (!data.op[h][r][c].is_zero() && !v[c].is_zero()) s += data.op[h][r][c] * v[c];
            if (!s.is_zero()) out.add_term(data.words[r], s);
        }
    }
    return out;
}

NCPoly ActionSpec::act(const ScalarVec& h, const NCPoly& a) const {
    NCPoly out;
    for (size_t i = 0; i < h.size(); ++i)
        if (!h[i].is_zero()) out = out + h[i] * act_basis(i, a);
    return out;
}

NCPoly ActionSpec::act_integral(const NCPoly& a) const { return act(hopf->integral_t, a); }

namespace {

// Action on a free word by direct recursion through the coproduct; used to
// check well-definedness against the rewriting rules.
NCPoly act_free(const ActionSpec& act, size_t h, const Word& w) {
    if (w.empty()) return act.hopf->counit[h] * NCPoly::one();
    int g = w[0];
    Word rest(w.begin() + 1, w.end());
    NCPoly out;
    for (const auto& [j, k, cf] : act.hopf->comult[h]) {
        NCPoly tail = act_free(act, k, rest);
        if (tail.is_zero()) continue;
        for (size_t i = 0; i < act.pres->gen_count(); ++i) {
            const Scalar& mc = act.matrices[j][i][g];
            if (mc.is_zero()) continue;
            out = out + nc_mul(NCPoly::from_word({static_cast<int>(i)}, cf * mc), tail,
                               *act.pres);
        }
    }
    return out;
}

}  // namespace

std::vector<std::string> ActionSpec::verify() const {
    std::vector<std::string> fails;
    if (matrices.size() != hopf->dim()) {
        fails.push_back("action: one matrix per Hopf basis element required");
        return fails;
    }
    // Unit acts as identity.
    for (size_t i = 0; i < pres->gen_count(); ++i)
        for (size_t r = 0; r < pres->gen_count(); ++r) {
            Scalar expect = (i == r) ? Scalar::one() : Scalar::zero();
            if (!(matrices[hopf->unit][r][i] == expect))
                fails.push_back("action: 1 does not act as identity");
        }
    // Compatibility with the multiplication of H on generators.
    for (size_t a = 0; a < hopf->dim(); ++a)
        for (size_t b = 0; b < hopf->dim(); ++b) {
            ScalarVec prod = hopf->multiply(hopf->basis_vec(a), hopf->basis_vec(b));
            for (size_t g = 0; g < pres->gen_count(); ++g) {
                NCPoly via_prod;
                for (size_t k = 0; k < hopf->dim(); ++k)
                    if (!prod[k].is_zero())
                        via_prod = via_prod +
                                   prod[k] * act_basis(k, NCPoly::from_word({static_cast<int>(g)}));
                NCPoly seq = act_basis(a, act_basis(b, NCPoly::from_word({static_cast<int>(g)})));
                if (!(via_prod == seq)) {
                    fails.push_back("action: not an H-module on generator " +
                                    pres->gen_names()[g]);
                    a = b = hopf->dim();
                    break;
                }
            }
        }
    // The module-algebra extension must kill every relation.
    for (const auto& rule : pres->rules()) {
        for (size_t h = 0; h < hopf->dim(); ++h) {
            NCPoly lhs = act_free(*this, h, rule.lhs);
            NCPoly rhs;
            for (const auto& [w, c] : rule.rhs.terms) rhs = rhs + c * act_free(*this, h, w);
            if (!(lhs == rhs)) {
                fails.push_back("action: relation not respected by " + hopf->labels[h]);
                break;
            }
        }
    }
    return fails;
}

std::vector<std::string> Character::verify(const HopfAlgebraSpec& H) const {
    std::vector<std::string> fails;
    if (values.size() != H.dim()) {
        fails.push_back("character: wrong length");
        return fails;
    }
    if (!(values[H.unit] == Scalar::one())) fails.push_back("character: chi(1) != 1");
    for (size_t i = 0; i < H.dim(); ++i)
        for (size_t j = 0; j < H.dim(); ++j) {
            ScalarVec prod = H.multiply(H.basis_vec(i), H.basis_vec(j));
            Scalar v = Scalar::zero();
            for (size_t k = 0; k < H.dim(); ++k) v += prod[k] * values[k];
            if (!(v == values[i] * values[j])) {
                fails.push_back("character: chi not multiplicative at (" + H.labels[i] + "," +
                                H.labels[j] + ")");
                return fails;
            }
        }
    return fails;
}

Character Character::compose_antipode(const HopfAlgebraSpec& H) const {
    Character out;
    out.values = zero_vec(H.dim());
    for (size_t i = 0; i < H.dim(); ++i)
        for (size_t k = 0; k < H.dim(); ++k)
            if (!H.antipode[i][k].is_zero()) out.values[i] += H.antipode[i][k] * values[k];
    return out;
}

std::unique_ptr<H2n2Instance> h2n2(int n, int i, int j) {
    if (n < 2 || i < 0 || j < 0 || i >= n || j >= n) throw HopfError("h2n2: bad parameters");
    size_t m = 2 * static_cast<size_t>(n) * n;
    auto id = [n](int a, int b, int e) {
        return static_cast<size_t>(e) * n * n + static_cast<size_t>(a) * n + b;
    };
    auto q_pow = [n](long e) { return Scalar::root_of_unity(n, e); };
    Scalar p = Scalar::root_of_unity(2 * n, n + 1);  // -zeta_{2n}
    Rat inv_n = Rat(1) / n;

    HopfAlgebraSpec H;
    H.labels.resize(m);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int e = 0; e < 2; ++e) {
                std::ostringstream os;
                if (a == 0 && b == 0 && e == 0) os << "1";
                if (a > 0) os << "x" << (a > 1 ? "^" + std::to_string(a) : "");
                if (b > 0) os << (a > 0 ? "*" : "") << "y" << (b > 1 ? "^" + std::to_string(b) : "");
                if (e) os << (a > 0 || b > 0 ? "*z" : "z");
                H.labels[id(a, b, e)] = os.str();
            }
    H.unit = id(0, 0, 0);
    H.mult.assign(m, std::vector<ScalarVec>(m, zero_vec(m)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    for (int e = 0; e < 2; ++e) {
                        // group part times anything
                        H.mult[id(a, b, 0)][id(c, d, e)][id((a + c) % n, (b + d) % n, e)] =
                            Scalar::one();
                        // z-part times group part: z g = sigma(g) z
                        if (e == 0)
                            H.mult[id(a, b, 1)][id(c, d, 0)][id((a + d) % n, (b + c) % n, 1)] =
                                Scalar::one();
                        else {
                            // (x^a y^b z)(x^c y^d z) = x^{a+d} y^{b+c} z^2
                            for (int s = 0; s < n; ++s)
                                for (int t = 0; t < n; ++t)
                                    H.mult[id(a, b, 1)][id(c, d, 1)]
                                          [id((a + d + s) % n, (b + c + t) % n, 0)] =
                                        Scalar(inv_n) * q_pow(-static_cast<long>(s) * t);
                        }
                    }
        }
    H.comult.resize(m);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            H.comult[id(a, b, 0)].emplace_back(id(a, b, 0), id(a, b, 0), Scalar::one());
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t)
                    H.comult[id(a, b, 1)].emplace_back(
                        id((a + s) % n, b, 1), id(a, (b + t) % n, 1),
                        Scalar(inv_n) * q_pow(-static_cast<long>(s) * t));
        }
    H.counit.assign(m, Scalar::one());
    H.antipode.assign(m, zero_vec(m));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            H.antipode[id(a, b, 0)][id((n - a) % n, (n - b) % n, 0)] = Scalar::one();
            H.antipode[id(a, b, 1)][id((n - b) % n, (n - a) % n, 1)] = Scalar::one();
        }
    H.integral_t.assign(m, Scalar::one());
    H.dual_integral = zero_vec(m);
    H.dual_integral[H.unit] = Scalar::one();
    auto fails = H.verify();
    if (!fails.empty()) throw HopfError("h2n2: " + fails.front());

    Scalar c = p.pow(static_cast<long>(i) * i - static_cast<long>(j) * j);
    RewriteRule rule;
    rule.lhs = {1, 0};
    rule.rhs = NCPoly::from_word({0, 1}, c);
    RationalFunction hs{{Rat(1)}, qpoly_mul({Rat(1), Rat(-1)}, {Rat(1), Rat(-1)})};

    auto inst = std::make_unique<H2n2Instance>(
        std::move(H), AlgebraPresentation({"u", "v"}, {rule}, {1, 1}, hs), c, n, i, j);
    inst->action.hopf = &inst->hopf;
    inst->action.pres = &inst->pres;
    inst->action.matrices.assign(m, ScalarMat(2, zero_vec(2)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // x^a y^b: u -> q^{ai+bj} u, v -> q^{aj+bi} v
            inst->action.matrices[id(a, b, 0)][0][0] =
                q_pow(static_cast<long>(a) * i + static_cast<long>(b) * j);
            inst->action.matrices[id(a, b, 0)][1][1] =
                q_pow(static_cast<long>(a) * j + static_cast<long>(b) * i);
            // x^a y^b z: u -> q^{ij} q^{aj+bi} v, v -> q^{ai+bj} u
            inst->action.matrices[id(a, b, 1)][1][0] =
                q_pow(static_cast<long>(i) * j + static_cast<long>(a) * j +
                      static_cast<long>(b) * i);
            inst->action.matrices[id(a, b, 1)][0][1] =
                q_pow(static_cast<long>(a) * i + static_cast<long>(b) * j);
        }
    auto afails = inst->action.verify();
    if (!afails.empty()) throw HopfError("h2n2: " + afails.front());

    inst->hdet.values = zero_vec(m);
    Scalar hz = -p.pow(static_cast<long>(i + j) * (i + j));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Scalar base = q_pow(static_cast<long>(i + j) * (a + b));
            inst->hdet.values[id(a, b, 0)] = base;
            inst->hdet.values[id(a, b, 1)] = base * hz;
        }
    auto cfails = inst->hdet.verify(inst->hopf);
    if (!cfails.empty()) throw HopfError("h2n2: " + cfails.front());
    return inst;
}

NCPoly reynolds(const ActionSpec& action, const NCPoly& a) {
    Scalar et = action.hopf->counit_of(action.hopf->integral_t);
    if (et.is_zero()) throw HopfError("reynolds: counit of the integral vanishes");
    return et.inv() * action.act_integral(a);
}

std::vector<NCPoly> relative_invariants(const ActionSpec& action, const Character& chi,
                                        int d) {
    const auto& words = action.degree_words(d);
    size_t dim_d = words.size();
    ScalarMat stacked;
    for (size_t h = 0; h < action.hopf->dim(); ++h) {
        const ScalarMat& M = action.degree_matrix(h, d);
        for (size_t r = 0; r < dim_d; ++r) {
            ScalarVec row = M[r];
            row[r] -= chi.of(h);
            stacked.push_back(std::move(row));
        }
    }
    std::vector<NCPoly> out;
    for (const ScalarVec& v : nullspace(std::move(stacked))) {
        NCPoly p;
        for (size_t i = 0; i < dim_d; ++i)
            if (!v[i].is_zero()) p.add_term(words[i], v[i]);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<NCPoly> invariant_basis(const ActionSpec& action, int d) {
    Character eps;
    eps.values = action.hopf->counit;
    return relative_invariants(action, eps, d);
}

NCPoly nc_canonical(const NCPoly& p, const AlgebraPresentation& pres) {
    if (p.is_zero()) return p;
    const Word* lead = nullptr;
    for (const auto& [w, c] : p.terms)
        if (!lead || pres.word_less(*lead, w)) lead = &w;
    return p.terms.at(*lead).inv() * p;
}

bool nc_equal_up_to_scalar(const NCPoly& a, const NCPoly& b,
                           const AlgebraPresentation& pres) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return nc_canonical(a, pres) == nc_canonical(b, pres);
}

namespace {

long count_central_monomials(const CentralSubalgebra& central, int degree) {
    if (degree < 0) return 0;
    std::vector<long> dp(degree + 1, 0);
    dp[0] = 1;
    for (const auto& g : central.gens)
        for (int d = g.degree; d <= degree; ++d) dp[d] += dp[d - g.degree];
    return dp[degree];
}

}  // namespace

NCPoly jacobian(const ActionSpec& action, const Character& hdet,
                const CentralSubalgebra& central, int expected_degree, int freeness_bound) {
    Character inv = hdet.compose_antipode(*action.hopf);
    auto gens = relative_invariants(action, inv, expected_degree);
    if (gens.size() != 1)
        throw HopfError("jacobian: relative-invariant space at degree " +
                        std::to_string(expected_degree) + " has dimension " +
                        std::to_string(gens.size()));
    for (int d = 0; d <= freeness_bound; ++d) {
        long dim = static_cast<long>(relative_invariants(action, inv, d).size());
        long expect = count_central_monomials(central, d - expected_degree);
        if (dim != expect)
            throw HopfError("jacobian: freeness fails at degree " + std::to_string(d) + " (" +
                            std::to_string(dim) + " vs " + std::to_string(expect) + ")");
    }
    return nc_canonical(gens.front(), *action.pres);
}

NCPoly arrangement(const ActionSpec& action, const Character& hdet,
                   const CentralSubalgebra& central, int degree_scan_bound) {
    for (int d = 0; d <= degree_scan_bound; ++d) {
        auto gens = relative_invariants(action, hdet, d);
        if (gens.empty()) continue;
        if (gens.size() != 1)
            throw HopfError("arrangement: first nonzero degree " + std::to_string(d) +
                            " has dimension " + std::to_string(gens.size()));
        for (int e = d; e <= degree_scan_bound; ++e) {
            long dim = static_cast<long>(relative_invariants(action, hdet, e).size());
            long expect = count_central_monomials(central, e - d);
            if (dim != expect)
                throw HopfError("arrangement: freeness fails at degree " + std::to_string(e));
        }
        return nc_canonical(gens.front(), *action.pres);
    }
    throw HopfError("arrangement: no generator found within the degree bound");
}

NCPoly discriminant_invariant(const NCPoly& jac, const NCPoly& arr,
                              const AlgebraPresentation& pres) {
    NCPoly l = nc_mul(arr, jac, pres);
    NCPoly r = nc_mul(jac, arr, pres);
    if (!nc_equal_up_to_scalar(l, r, pres))
        throw HopfError("discriminant invariant: a*j and j*a differ beyond a scalar");
    return nc_canonical(l, pres);
}

std::optional<NCPoly> homogeneous_divide(const NCPoly& f, const NCPoly& g, Side side,
                                         const AlgebraPresentation& pres) {
    if (g.is_zero()) throw DivisionByZero();
    if (f.is_zero()) return NCPoly::zero();
    int df = pres.degree_of(f), dg = pres.degree_of(g);
    if (df < dg) return std::nullopt;
    std::vector<Word> candidates = monomial_basis(pres, df - dg);
    std::vector<Word> rows = monomial_basis(pres, df);
    std::map<Word, int> row_index;
    for (size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], static_cast<int>(i));
    ScalarMat mat(rows.size(), zero_vec(candidates.size()));
    for (size_t c = 0; c < candidates.size(); ++c) {
        NCPoly w = NCPoly::from_word(candidates[c]);
        NCPoly prod = side == Side::Left ? nc_mul(w, g, pres) : nc_mul(g, w, pres);
        for (const auto& [pw, pc] : prod.terms) mat[row_index.at(pw)][c] = pc;
    }
    ScalarVec rhs = zero_vec(rows.size());
    for (const auto& [w, c] : f.terms) rhs[row_index.at(w)] = c;
    LinearSolver solver(std::move(mat));
    auto sol = solver.particular_solution(rhs);
    if (!sol) return std::nullopt;
    NCPoly q;
    for (size_t c = 0; c < candidates.size(); ++c)
        if (!(*sol)[c].is_zero()) q.add_term(candidates[c], (*sol)[c]);
    return q;
}

std::vector<std::string> validate_fixed_ring(const GradedModule& mod,
                                             const ActionSpec& action, int bound) {
    std::vector<std::string> fails;
    const auto& H = *action.hopf;
    Scalar et = H.counit_of(H.integral_t);
    // Each central generator must be invariant.
    for (const auto& g : mod.central().gens) {
        NCPoly r = reynolds(action, g.definition);
        if (!(r == g.definition))
            fails.push_back("central generator " + g.name + " is not H-invariant");
    }
    for (int d = 0; d <= bound; ++d) {
        const auto& words = action.degree_words(d);
        size_t dim_d = words.size();
        ScalarMat R(dim_d, zero_vec(dim_d));
        for (size_t h = 0; h < H.dim(); ++h) {
            if (H.integral_t[h].is_zero()) continue;
            const ScalarMat& M = action.degree_matrix(h, d);
            for (size_t r = 0; r < dim_d; ++r)
                for (size_t c = 0; c < dim_d; ++c)
                    if (!M[r][c].is_zero()) R[r][c] += H.integral_t[h] * M[r][c];
        }
        Scalar inv = et.inv();
        for (auto& row : R)
            for (auto& x : row) x *= inv;
        long rank = static_cast<long>(matrix_rank(R));
        long expect = count_central_monomials(mod.central(), d);
        if (rank != expect)
            fails.push_back("fixed-ring dimension mismatch at degree " + std::to_string(d) +
                            ": Reynolds rank " + std::to_string(rank) + ", subring " +
                            std::to_string(expect));
    }
    return fails;
}

void MainTheoremReport::add(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({name, pass, detail});
    if (!pass) ok = false;
}

MainTheoremReport verify_main_theorem(const GradedModule& mod, const ActionSpec& action,
                                      const Character& hdet, int degree_bound) {
    MainTheoremReport rep;
    const AlgebraPresentation& pres = mod.pres();
    int l = mod.basis().top_degree();
    size_t n = mod.rank();

    rep.jac = jacobian(action, hdet, mod.central(), l, degree_bound);
    rep.arr = arrangement(action, hdet, mod.central(), degree_bound);
    rep.delta = discriminant_invariant(rep.jac, rep.arr, pres);
    rep.disc = mod.discriminant();

    // (i) d = j^n up to scalar, compared inside R.
    {
        bool pass = false;
        std::string detail;
        if (rep.disc.degenerate) {
            detail = "discriminant degenerate";
        } else {
            NCPoly jn = nc_pow(rep.jac, static_cast<int>(n), pres);
            Decomposition dec = mod.decompose(jn, Side::Right);
            if (dec.status != SolveStatus::Ok) {
                detail = "j^n does not lie in R";
            } else {
                bool in_R = true;
                CommPoly jn_R;
                for (size_t k = 0; k < n; ++k) {
                    if (mod.basis().degrees[k] == 0)
                        jn_R = jn_R + dec.coeffs[k];
                    else if (!dec.coeffs[k].is_zero())
                        in_R = false;
                }
                if (!in_R)
                    detail = "j^n not in R";
                else
                    pass = equal_up_to_scalar(rep.disc.raw, jn_R);
            }
        }
        rep.add("d = j^n (up to scalar)", pass, detail);
    }

    NCPoly d_A = mod.expand(rep.disc.canonical);
    // (ii) delta divides d in A, both sides.
    {
        auto ql = homogeneous_divide(d_A, rep.delta, Side::Left, pres);
        auto qr = homogeneous_divide(d_A, rep.delta, Side::Right, pres);
        rep.add("delta divides d in A", ql.has_value() && qr.has_value());
    }
    // (iii) d divides delta^n in A.
    {
        NCPoly dn = nc_pow(rep.delta, static_cast<int>(n), pres);
        auto ql = homogeneous_divide(dn, d_A, Side::Left, pres);
        auto qr = homogeneous_divide(dn, d_A, Side::Right, pres);
        rep.add("d divides delta^n in A", ql.has_value() && qr.has_value());
    }
    // (iv) tr = theta . j up to one global scalar, tested on the basis.
    {
        bool pass = true;
        Scalar ratio = Scalar::zero();
        for (size_t k = 0; k < n && pass; ++k) {
            CommPoly tr = mod.hs_trace(mod.basis().elements[k]);
            CommPoly tj = mod.theta(nc_mul(rep.jac, mod.basis().elements[k], pres));
            if (tj.is_zero()) {
                if (!tr.is_zero()) pass = false;
                continue;
            }
            if (ratio.is_zero()) {
                if (tr.is_zero()) {
                    pass = false;
                    continue;
                }
                ratio = tr.leading().second / tj.leading().second;
            }
            if (!(tr == ratio * tj)) pass = false;
        }
        pass = pass && !ratio.is_zero();
        rep.add("tr = theta . j (up to scalar)", pass);
    }
    // (v) h |> theta = hdet(h) theta on the Hopf basis, i.e.
    // theta(S(h) |> a) = hdet(h) theta(a) on the module basis.
    {
        bool pass = true;
        const auto& H = *action.hopf;
        for (size_t h = 0; h < H.dim() && pass; ++h) {
            ScalarVec sh = H.apply_antipode(H.basis_vec(h));
            for (size_t k = 0; k < n; ++k) {
                CommPoly lhs = mod.theta(action.act(sh, mod.basis().elements[k]));
                CommPoly rhs = hdet.of(h) * mod.theta(mod.basis().elements[k]);
                if (!(lhs == rhs)) {
                    pass = false;
                    break;
                }
            }
        }
        rep.add("h |> theta = hdet(h) theta", pass);
    }
    // (vi) tr is an H-module morphism: tr(h |> a) = eps(h) tr(a).
    {
        bool pass = true;
        const auto& H = *action.hopf;
        for (size_t h = 0; h < H.dim() && pass; ++h)
            for (size_t k = 0; k < n; ++k) {
                CommPoly lhs = mod.hs_trace(action.act_basis(h, mod.basis().elements[k]));
                CommPoly rhs = H.counit[h] * mod.hs_trace(mod.basis().elements[k]);
                if (!(lhs == rhs)) {
                    pass = false;
                    break;
                }
            }
        rep.add("tr is H-equivariant", pass);
    }
    return rep;
}

}  // namespace disc
