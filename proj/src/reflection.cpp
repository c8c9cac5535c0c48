#include "disc/reflection.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace disc {

namespace {

bool mat_equal(const ScalarMat& a, const ScalarMat& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (!(a[i][j] == b[i][j])) return false;
    return true;
}

ScalarMat mat_mul(const ScalarMat& a, const ScalarMat& b) {
    size_t n = a.size();
    ScalarMat r(n, ScalarVec(n, Scalar::zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

ScalarMat identity_mat(size_t n) {
    ScalarMat r(n, ScalarVec(n, Scalar::zero()));
    for (size_t i = 0; i < n; ++i) r[i][i] = Scalar::one();
    return r;
}

}  // namespace

std::vector<ScalarMat> group_closure(const std::vector<ScalarMat>& gens, size_t cap) {
    if (gens.empty()) throw ReflectionError("group_closure: no generators");
    size_t d = gens.front().size();
    for (const auto& g : gens)
        if (g.size() != d || g.front().size() != d)
            throw ReflectionError("group_closure: generator shape mismatch");
    std::vector<ScalarMat> elems{identity_mat(d)};
    auto find = [&](const ScalarMat& m) -> int {
        for (size_t i = 0; i < elems.size(); ++i)
            if (mat_equal(elems[i], m)) return static_cast<int>(i);
        return -1;
    };
    std::vector<size_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<size_t> next;
        for (size_t idx : frontier)
            for (const auto& g : gens) {
                ScalarMat prod = mat_mul(elems[idx], g);
                if (find(prod) < 0) {
                    if (elems.size() >= cap)
                        throw ReflectionError("group_closure: cap exceeded");
                    elems.push_back(std::move(prod));
                    next.push_back(elems.size() - 1);
                }
            }
        frontier = std::move(next);
    }
    return elems;
}

std::vector<HyperplaneDatum> reflections_and_hyperplanes(const std::vector<ScalarMat>& group) {
    if (group.empty()) return {};
    size_t d = group.front().size();
    std::vector<HyperplaneDatum> out;
    std::vector<int> counts;
    for (const auto& m : group) {
        ScalarMat diff = m;
        for (size_t i = 0; i < d; ++i) diff[i][i] -= Scalar::one();
        ScalarMat copy = diff;
        if (matrix_rank(std::move(copy)) != 1) continue;
        // The image of (M - I) spans the alpha direction.
        ScalarVec alpha(d, Scalar::zero());
        bool found = false;
        for (size_t j = 0; j < d && !found; ++j) {
            for (size_t i = 0; i < d; ++i) alpha[i] = diff[i][j];
            for (size_t i = 0; i < d; ++i)
                if (!alpha[i].is_zero()) found = true;
        }
        if (!found) continue;
        size_t p = 0;
        while (alpha[p].is_zero()) ++p;
        Scalar inv = alpha[p].inv();
        for (auto& x : alpha) x *= inv;
        bool merged = false;
        for (size_t k = 0; k < out.size(); ++k)
            if (out[k].alpha == alpha) {
                ++counts[k];
                merged = true;
            }
        if (!merged) {
            out.push_back({std::move(alpha), 0});
            counts.push_back(1);
        }
    }
    for (size_t k = 0; k < out.size(); ++k) out[k].order = counts[k] + 1;
    return out;
}

CommPoly matrix_apply(const ScalarMat& g, const CommPoly& f,
                      const std::vector<std::string>& vars) {
    size_t d = vars.size();
    std::vector<CommPoly> image(d);
    for (size_t j = 0; j < d; ++j)
        for (size_t i = 0; i < d; ++i)
            if (!g[i][j].is_zero())
                image[j] = image[j] + g[i][j] * CommPoly::variable(vars[i]);
    CommPoly out;
    for (const auto& [m, c] : f.terms) {
        CommPoly term = CommPoly::constant(c);
        for (const auto& [v, e] : m) {
            auto it = std::find(vars.begin(), vars.end(), v);
            if (it == vars.end()) throw ReflectionError("matrix_apply: unknown variable " + v);
            term = term * comm_pow(image[it - vars.begin()], e);
        }
        out = out + term;
    }
    return out;
}

CommPoly linear_form(const ScalarVec& alpha, const std::vector<std::string>& vars) {
    CommPoly f;
    for (size_t i = 0; i < vars.size(); ++i)
        if (!alpha[i].is_zero()) f = f + alpha[i] * CommPoly::variable(vars[i]);
    return f;
}

CommPoly jacobian_det(const std::vector<CommPoly>& invariants,
                      const std::vector<std::string>& vars) {
    size_t d = vars.size();
    if (invariants.size() != d)
        throw ReflectionError("jacobian_det: need as many invariants as variables");
    CommMat m(d, std::vector<CommPoly>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) m[i][j] = partial_derivative(invariants[i], vars[j]);
    CommPoly det = determinant(m);
    if (det.is_zero()) throw ReflectionError("jacobian_det: invariants are dependent");
    return canonical_up_to_scalar(det);
}

CommPoly jacobian_from_arrangement(const std::vector<HyperplaneDatum>& hyperplanes,
                                   const std::vector<std::string>& vars) {
    CommPoly p = CommPoly::one();
    for (const auto& h : hyperplanes)
        p = p * comm_pow(linear_form(h.alpha, vars), h.order - 1);
    return canonical_up_to_scalar(p);
}

CommPoly arrangement_poly(const std::vector<HyperplaneDatum>& hyperplanes,
                          const std::vector<std::string>& vars) {
    CommPoly p = CommPoly::one();
    for (const auto& h : hyperplanes) p = p * linear_form(h.alpha, vars);
    return canonical_up_to_scalar(p);
}

CommPoly discriminant_poly(const std::vector<ScalarMat>& group,
                           const std::vector<std::string>& vars) {
    CommPoly p = CommPoly::one();
    for (const auto& h : reflections_and_hyperplanes(group))
        p = p * comm_pow(linear_form(h.alpha, vars), h.order);
    p = canonical_up_to_scalar(p);
    for (const auto& g : group)
        if (!(matrix_apply(g, p, vars) == p))
            throw ReflectionError("discriminant_poly: not group invariant");
    return p;
}

AlgebraPresentation polynomial_presentation(const std::vector<std::string>& vars) {
    std::vector<RewriteRule> rules;
    for (size_t j = 1; j < vars.size(); ++j)
        for (size_t i = 0; i < j; ++i) {
            RewriteRule r;
            r.lhs = {static_cast<int>(j), static_cast<int>(i)};
            r.rhs = NCPoly::from_word({static_cast<int>(i), static_cast<int>(j)});
            rules.push_back(std::move(r));
        }
    QPoly den{Rat(1)};
    for (size_t i = 0; i < vars.size(); ++i) den = qpoly_mul(den, {Rat(1), Rat(-1)});
    return AlgebraPresentation(vars, std::move(rules), {},
                               RationalFunction{{Rat(1)}, den});
}

std::unique_ptr<SnInstance> sn_instance(int n) {
    if (n < 1 || n > 4) throw ReflectionError("sn_instance: n must be between 1 and 4");
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    auto inst = std::make_unique<SnInstance>(n, polynomial_presentation(vars));

    // All permutations in a fixed order; identity first.
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<std::string> labels;
    for (const auto& q : perms) {
        std::ostringstream os;
        for (int v : q) os << (v + 1);
        labels.push_back(os.str());
    }
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> table(perms.size(), std::vector<int>(perms.size()));
    for (size_t a = 0; a < perms.size(); ++a)
        for (size_t b = 0; b < perms.size(); ++b) {
            std::vector<int> comp(n);
            for (int j = 0; j < n; ++j) comp[j] = perms[a][perms[b][j]];
            table[a][b] = index_of(comp);
        }
    inst->hopf = group_algebra(labels, table);

    inst->matrices.clear();
    for (const auto& q : perms) {
        ScalarMat m(n, ScalarVec(n, Scalar::zero()));
        for (int j = 0; j < n; ++j) m[q[j]][j] = Scalar::one();
        inst->matrices.push_back(std::move(m));
    }
    inst->action.hopf = &inst->hopf;
    inst->action.pres = &inst->pres;
    inst->action.matrices = inst->matrices;
    auto afails = inst->action.verify();
    if (!afails.empty()) throw ReflectionError("sn_instance: " + afails.front());

    // Power sums p_1 .. p_n.
    for (int k = 1; k <= n; ++k) {
        NCPoly s;
        for (int i = 0; i < n; ++i) s = s + nc_pow(NCPoly::from_word({i}), k, inst->pres);
        inst->central.gens.push_back({"p" + std::to_string(k), normal_form(s, inst->pres), k});
    }

    // Staircase basis x^a with a_i <= n - i, sorted by degree.
    std::vector<std::pair<int, Word>> staged;
    std::vector<int> exps(n, 0);
    auto rec = [&](auto&& self, int var) -> void {
        if (var == n) {
            Word w;
            int deg = 0;
            for (int i = 0; i < n; ++i) {
                deg += exps[i];
                for (int e = 0; e < exps[i]; ++e) w.push_back(i);
            }
            staged.emplace_back(deg, std::move(w));
            return;
        }
        for (int e = 0; e <= n - 1 - var; ++e) {
            exps[var] = e;
            self(self, var + 1);
        }
        exps[var] = 0;
    };
    rec(rec, 0);
    std::stable_sort(staged.begin(), staged.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [deg, w] : staged) {
        inst->basis.elements.push_back(NCPoly::from_word(w));
        inst->basis.degrees.push_back(deg);
    }

    // Sign character = determinant of the permutation matrices.
    inst->hdet.values.assign(perms.size(), Scalar::zero());
    for (size_t a = 0; a < perms.size(); ++a) {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perms[a][i] > perms[a][j]) ++inversions;
        inst->hdet.values[a] = Scalar(inversions % 2 == 0 ? 1 : -1);
    }
    auto cfails = inst->hdet.verify(inst->hopf);
    if (!cfails.empty()) throw ReflectionError("sn_instance: " + cfails.front());
    return inst;
}

}  // namespace disc
