#include "disc/graded_module.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace disc {

std::vector<std::string> CentralSubalgebra::names() const {
    std::vector<std::string> n;
    n.reserve(gens.size());
    for (const auto& g : gens) n.push_back(g.name);
    return n;
}

std::map<std::string, int> CentralSubalgebra::weights() const {
    std::map<std::string, int> w;
    for (const auto& g : gens) w[g.name] = g.degree;
    return w;
}

RationalFunction CentralSubalgebra::hilbert() const {
    RationalFunction h{{Rat(1)}, {Rat(1)}};
    for (const auto& g : gens) {
        QPoly factor(g.degree + 1, Rat(0));
        factor[0] = 1;
        factor[g.degree] = -1;
        h.den = qpoly_mul(h.den, factor);
    }
    return h;
}

bool verify_central(const CentralSubalgebra& central, const AlgebraPresentation& pres) {
    for (const auto& g : central.gens) {
        for (size_t x = 0; x < pres.gen_count(); ++x) {
            NCPoly gen = NCPoly::from_word({static_cast<int>(x)});
            NCPoly comm = nc_mul(g.definition, gen, pres) - nc_mul(gen, g.definition, pres);
            if (!comm.is_zero()) return false;
        }
    }
    return true;
}

GradedModule::GradedModule(const AlgebraPresentation& pres, CentralSubalgebra central,
                           FreeModuleBasis basis)
    : pres_(&pres), central_(std::move(central)), basis_(std::move(basis)) {
    if (basis_.elements.size() != basis_.degrees.size())
        throw std::invalid_argument("GradedModule: basis degree list mismatch");
    for (size_t i = 0; i + 1 < basis_.degrees.size(); ++i)
        if (basis_.degrees[i] > basis_.degrees[i + 1])
            throw std::invalid_argument("GradedModule: basis degrees not weakly increasing");
    for (const auto& g : central_.gens) {
        if (pres_->gen_index(g.name) >= 0)
            throw std::invalid_argument("GradedModule: central name clashes with generator: " +
                                        g.name);
        if (pres_->degree_of(g.definition) != g.degree)
            throw std::invalid_argument("GradedModule: central generator degree mismatch: " +
                                        g.name);
    }
}

std::vector<CommMonomial> GradedModule::central_monomials(int degree) const {
    std::vector<CommMonomial> out;
    if (degree < 0) return out;
    CommMonomial cur;
    // Recursion over generators in order; exponents chosen to hit the degree.
    auto rec = [&](auto&& self, size_t idx, int remaining) -> void {
        if (idx == central_.gens.size()) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        const auto& g = central_.gens[idx];
        for (int e = 0; e * g.degree <= remaining; ++e) {
            if (e > 0) cur[g.name] = e;
            self(self, idx + 1, remaining - e * g.degree);
            if (e > 0) cur.erase(g.name);
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), comm_monomial_less);
    return out;
}

NCPoly GradedModule::expand_monomial(const CommMonomial& m) const {
    auto it = expansion_cache_.find(m);
    if (it != expansion_cache_.end()) return it->second;
    NCPoly r = NCPoly::one();
    for (const auto& [name, e] : m) {
        const CentralGenerator* gen = nullptr;
        for (const auto& g : central_.gens)
            if (g.name == name) gen = &g;
        if (!gen) throw std::invalid_argument("expand: unknown central variable " + name);
        r = nc_mul(r, nc_pow(gen->definition, e, *pres_), *pres_);
    }
    expansion_cache_.emplace(m, r);
    return r;
}

NCPoly GradedModule::expand(const CommPoly& p) const {
    NCPoly r;
    for (const auto& [m, c] : p.terms) r = r + c * expand_monomial(m);
    return r;
}

const GradedModule::DegreeSolver& GradedModule::solver_for(int degree, Side side) const {
    auto key = std::make_pair(degree, side == Side::Right ? 1 : 0);
    auto it = solvers_.find(key);
    if (it != solvers_.end()) return it->second;

    DegreeSolver ds;
    ds.words = monomial_basis(*pres_, degree);
    for (size_t i = 0; i < ds.words.size(); ++i)
        ds.word_index.emplace(ds.words[i], static_cast<int>(i));

    ScalarMat columns;  // built column-wise, transposed below
    for (size_t k = 0; k < basis_.rank(); ++k) {
        for (const auto& m : central_monomials(degree - basis_.degrees[k])) {
            NCPoly prod = side == Side::Right
                              ? nc_mul(basis_.elements[k], expand_monomial(m), *pres_)
                              : nc_mul(expand_monomial(m), basis_.elements[k], *pres_);
            ScalarVec col(ds.words.size(), Scalar::zero());
            for (const auto& [w, c] : prod.terms) {
                auto wi = ds.word_index.find(w);
                if (wi == ds.word_index.end())
                    throw std::runtime_error("decompose: product word not in normal basis");
                col[wi->second] = c;
            }
            ds.columns.emplace_back(k, m);
            columns.push_back(std::move(col));
        }
    }
    ScalarMat mat(ds.words.size(), ScalarVec(columns.size(), Scalar::zero()));
    for (size_t j = 0; j < columns.size(); ++j)
        for (size_t i = 0; i < ds.words.size(); ++i) mat[i][j] = columns[j][i];
    ds.solver = std::make_unique<LinearSolver>(std::move(mat));
    return solvers_.emplace(key, std::move(ds)).first->second;
}

ScalarVec GradedModule::coords(const NCPoly& a, const DegreeSolver& ds) const {
    ScalarVec v(ds.words.size(), Scalar::zero());
    for (const auto& [w, c] : a.terms) {
        auto it = ds.word_index.find(w);
        if (it == ds.word_index.end())
            throw std::runtime_error("decompose: word not in normal basis of its degree");
        v[it->second] = c;
    }
    return v;
}

Decomposition GradedModule::decompose(const NCPoly& a, Side side) const {
    Decomposition result;
    result.coeffs.assign(basis_.rank(), CommPoly::zero());
    if (a.is_zero()) return result;
    int d = pres_->degree_of(a);
    const DegreeSolver& ds = solver_for(d, side);
    ScalarVec sol;
    auto outcome = ds.solver->solve(coords(a, ds), sol);
    if (outcome == LinearSolver::Outcome::NoSolution) {
        result.status = SolveStatus::NoSolution;
        return result;
    }
    if (outcome == LinearSolver::Outcome::NonUnique) {
        result.status = SolveStatus::NonUnique;
        return result;
    }
    for (size_t j = 0; j < ds.columns.size(); ++j) {
        if (sol[j].is_zero()) continue;
        result.coeffs[ds.columns[j].first].add_term(ds.columns[j].second, sol[j]);
    }
    return result;
}

FreeBasisReport GradedModule::verify_free_basis(int max_degree) const {
    FreeBasisReport rep;
    auto note = [&](int d, const std::string& msg) {
        if (rep.ok) {
            rep.ok = false;
            rep.first_bad_degree = d;
        }
        rep.failures.push_back("degree " + std::to_string(d) + ": " + msg);
    };
    for (int d = 0; d <= max_degree; ++d) {
        const DegreeSolver& ds = solver_for(d, Side::Right);
        size_t dim = ds.words.size();
        size_t ncols = ds.columns.size();
        if (ncols != dim) {
            note(d, "central-multiple count " + std::to_string(ncols) +
                        " != dim A_d = " + std::to_string(dim));
            continue;
        }
        if (ds.solver->rank() != dim)
            note(d, "basis multiples dependent (rank " + std::to_string(ds.solver->rank()) +
                        " < " + std::to_string(dim) + ")");
    }
    return rep;
}

CommPoly GradedModule::hs_trace(const NCPoly& a) const {
    CommPoly tr;
    for (size_t k = 0; k < basis_.rank(); ++k) {
        NCPoly prod = nc_mul(a, basis_.elements[k], *pres_);
        Decomposition dec = decompose(prod, central_.trace_side);
        if (dec.status != SolveStatus::Ok) throw DecomposeFailed(dec.status);
        tr = tr + dec.coeffs[k];
    }
    return tr;
}

CommMat GradedModule::trace_matrix() const {
    size_t n = basis_.rank();
    CommMat m(n, std::vector<CommPoly>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            CommPoly t = hs_trace(nc_mul(basis_.elements[i], basis_.elements[j], *pres_));
            m[i][j] = t;
            if (i != j) m[j][i] = std::move(t);
        }
    }
    return m;
}

DiscriminantResult GradedModule::discriminant() const {
    DiscriminantResult r;
    r.raw = determinant(trace_matrix());
    if (r.raw.is_zero()) {
        r.degenerate = true;
        return r;
    }
    r.canonical = canonical_up_to_scalar(r.raw);
    return r;
}

FrobeniusData GradedModule::frobenius_theta() const {
    FrobeniusData f;
    int top = basis_.top_degree();
    size_t count = 0;
    for (size_t i = 0; i < basis_.rank(); ++i)
        if (basis_.degrees[i] == top) {
            f.top_index = i;
            ++count;
        }
    if (count != 1)
        throw std::runtime_error("frobenius_theta: top-degree basis element not unique");
    size_t n = basis_.rank();
    CommMat pairing(n, std::vector<CommPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            pairing[i][j] = theta(nc_mul(basis_.elements[i], basis_.elements[j], *pres_));
    f.pairing_det = determinant(pairing);
    f.theta_valid = !f.pairing_det.is_zero() && f.pairing_det.is_constant();
    return f;
}

CommPoly GradedModule::theta(const NCPoly& a) const {
    Decomposition dec = decompose(a, Side::Right);
    if (dec.status != SolveStatus::Ok) throw DecomposeFailed(dec.status);
    int top = basis_.top_degree();
    for (size_t i = 0; i < basis_.rank(); ++i)
        if (basis_.degrees[i] == top) return dec.coeffs[i];
    throw std::runtime_error("theta: empty basis");
}

namespace {

// Flattens CommPoly-valued linear equations over unknown scalars into a
// scalar system.  Columns are the unknowns, rows are (equation, monomial).
struct FlatSystem {
    size_t eq_count = 0;
    std::vector<std::vector<CommPoly>> eq_columns;
    std::vector<CommPoly> eq_rhs;

    void add_equation(std::vector<CommPoly> cols, CommPoly r) {
        eq_columns.push_back(std::move(cols));
        eq_rhs.push_back(std::move(r));
        ++eq_count;
    }

    // Returns the solver matrix and right-hand side.
    std::pair<ScalarMat, ScalarVec> flatten(size_t unknowns) const {
        ScalarMat mat;
        ScalarVec rhs_v;
        for (size_t e = 0; e < eq_count; ++e) {
            std::set<CommMonomial> monos;
            for (const auto& col : eq_columns[e])
                for (const auto& [m, c] : col.terms) monos.insert(m);
            for (const auto& [m, c] : eq_rhs[e].terms) monos.insert(m);
            for (const auto& m : monos) {
                ScalarVec row(unknowns, Scalar::zero());
                for (size_t u = 0; u < unknowns; ++u) {
                    auto it = eq_columns[e][u].terms.find(m);
                    if (it != eq_columns[e][u].terms.end()) row[u] = it->second;
                }
                auto rit = eq_rhs[e].terms.find(m);
                rhs_v.push_back(rit == eq_rhs[e].terms.end() ? Scalar::zero() : rit->second);
                mat.push_back(std::move(row));
            }
        }
        return {std::move(mat), std::move(rhs_v)};
    }
};

}  // namespace

NCPoly GradedModule::different_omega() const {
    int l = basis_.top_degree();
    std::vector<Word> candidates = monomial_basis(*pres_, l);
    size_t unknowns = candidates.size();

    FlatSystem sys;
    for (size_t j = 0; j < basis_.rank(); ++j) {
        std::vector<CommPoly> cols;
        cols.reserve(unknowns);
        for (const Word& w : candidates) {
            NCPoly wb = nc_mul(NCPoly::from_word(w), basis_.elements[j], *pres_);
            cols.push_back(theta(wb));
        }
        sys.add_equation(std::move(cols), hs_trace(basis_.elements[j]));
    }
    auto [mat, rhs] = sys.flatten(unknowns);
    LinearSolver solver(std::move(mat));
    ScalarVec sol;
    auto outcome = solver.solve(rhs, sol);
    if (outcome != LinearSolver::Outcome::Unique)
        throw DecomposeFailed(outcome == LinearSolver::Outcome::NoSolution
                                  ? SolveStatus::NoSolution
                                  : SolveStatus::NonUnique);
    NCPoly omega;
    for (size_t i = 0; i < unknowns; ++i) omega.add_term(candidates[i], sol[i]);
    return omega;
}

CommPoly GradedModule::norm(const NCPoly& a) const {
    size_t n = basis_.rank();
    CommMat m(n, std::vector<CommPoly>(n));
    for (size_t k = 0; k < n; ++k) {
        Decomposition dec = decompose(nc_mul(a, basis_.elements[k], *pres_), Side::Right);
        if (dec.status != SolveStatus::Ok) throw DecomposeFailed(dec.status);
        for (size_t j = 0; j < n; ++j) m[j][k] = dec.coeffs[j];
    }
    return determinant(m);
}

std::map<int, NCPoly> GradedModule::nakayama_on_generators() const {
    std::map<int, NCPoly> mu;
    for (size_t g = 0; g < pres_->gen_count(); ++g) {
        int d = pres_->gen_degrees()[g];
        std::vector<Word> candidates = monomial_basis(*pres_, d);
        size_t unknowns = candidates.size();
        NCPoly gen = NCPoly::from_word({static_cast<int>(g)});

        // theta(mu(g) * b_j) = theta(b_j * g) for all j.
        FlatSystem sys;
        for (size_t j = 0; j < basis_.rank(); ++j) {
            std::vector<CommPoly> cols;
            for (const Word& w : candidates)
                cols.push_back(theta(nc_mul(NCPoly::from_word(w), basis_.elements[j], *pres_)));
            sys.add_equation(std::move(cols), theta(nc_mul(basis_.elements[j], gen, *pres_)));
        }
        auto [mat, rhs] = sys.flatten(unknowns);
        LinearSolver solver(std::move(mat));
        ScalarVec sol;
        if (solver.solve(rhs, sol) != LinearSolver::Outcome::Unique)
            throw std::runtime_error("nakayama: no unique solution (theta invalid?)");
        NCPoly image;
        for (size_t i = 0; i < unknowns; ++i) image.add_term(candidates[i], sol[i]);
        mu.emplace(static_cast<int>(g), std::move(image));
    }
    // mu must respect every defining relation.
    auto apply_mu = [&](const NCPoly& p) {
        NCPoly out;
        for (const auto& [w, c] : p.terms) {
            NCPoly prod = c * NCPoly::one();
            for (int g : w) prod = nc_mul(prod, mu.at(g), *pres_);
            out = out + prod;
        }
        return out;
    };
    for (const auto& rule : pres_->rules()) {
        NCPoly rel = NCPoly::from_word(rule.lhs) - rule.rhs;
        if (!normal_form(apply_mu(rel), *pres_).is_zero())
            throw std::runtime_error("nakayama: candidate does not respect the relations");
    }
    return mu;
}

FindBasisResult find_free_basis(const AlgebraPresentation& pres,
                                const CentralSubalgebra& central) {
    FindBasisResult res;
    if (!pres.hilbert()) {
        res.ok = false;
        res.error = "presentation carries no Hilbert series";
        return res;
    }
    RationalFunction quotient = *pres.hilbert() / central.hilbert();
    auto g = quotient.as_polynomial();
    if (!g) {
        res.ok = false;
        res.error = "h_A / h_R is not a polynomial; A cannot be free over R";
        return res;
    }
    int top = static_cast<int>(g->size()) - 1;
    long expected_rank = 0;
    for (const Rat& c : *g) {
        if (c.get_den() != 1 || c < 0) {
            res.ok = false;
            res.error = "h_A / h_R has a non-natural coefficient";
            return res;
        }
        expected_rank += c.get_num().get_si();
    }

    // Working module with the partial basis; rebuilt per degree (solver caches
    // are keyed on the basis, which grows).
    for (int d = 0; d <= top; ++d) {
        std::vector<Word> words = monomial_basis(pres, d);
        std::map<Word, int> index;
        for (size_t i = 0; i < words.size(); ++i) index.emplace(words[i], static_cast<int>(i));
        IncrementalSpan span;
        GradedModule partial(pres, central, res.basis);
        for (size_t k = 0; k < res.basis.rank(); ++k) {
            for (const auto& m : partial.central_monomials(d - res.basis.degrees[k])) {
                NCPoly prod = nc_mul(res.basis.elements[k], partial.expand_monomial(m), pres);
                ScalarVec v(words.size(), Scalar::zero());
                for (const auto& [w, c] : prod.terms) v[index.at(w)] = c;
                span.insert(std::move(v));
            }
        }
        for (const Word& w : words) {
            if (span.rank() == words.size()) break;
            ScalarVec v(words.size(), Scalar::zero());
            v[index.at(w)] = Scalar::one();
            if (span.insert(std::move(v))) {
                res.basis.elements.push_back(NCPoly::from_word(w));
                res.basis.degrees.push_back(d);
                if (static_cast<long>(res.basis.rank()) > expected_rank) {
                    res.ok = false;
                    res.error = "rank exceeded without spanning: A not free over the "
                                "declared subalgebra";
                    return res;
                }
            }
        }
        if (span.rank() != words.size()) {
            res.ok = false;
            res.error = "degree " + std::to_string(d) + " not spanned";
            return res;
        }
    }
    if (static_cast<long>(res.basis.rank()) != expected_rank) {
        res.ok = false;
        res.error = "discovered rank " + std::to_string(res.basis.rank()) +
                    " != expected " + std::to_string(expected_rank);
    }
    return res;
}

}  // namespace disc
