#include "disc/commpoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace disc {

bool comm_monomial_less(const CommMonomial& a, const CommMonomial& b) {
    int da = 0, db = 0;
    for (const auto& [v, e] : a) da += e;
    for (const auto& [v, e] : b) db += e;
    if (da != db) return da < db;
    // Lex on the union of variables in name order; a larger exponent on an
    // earlier variable wins.
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first != ib->first) {
            // The side owning the earlier name has positive exponent there.
            return ia->first > ib->first;
        }
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return ia == a.end() && ib != b.end() ? false : false;
}

CommPoly CommPoly::constant(const Scalar& c) {
    CommPoly p;
    if (!c.is_zero()) p.terms.emplace(CommMonomial{}, c);
    return p;
}

CommPoly CommPoly::variable(const std::string& name, int exp) {
    CommPoly p;
    if (exp == 0) return one();
    p.terms.emplace(CommMonomial{{name, exp}}, Scalar::one());
    return p;
}

bool CommPoly::is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
}

void CommPoly::add_term(const CommMonomial& m, const Scalar& c) {
    auto it = terms.find(m);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

std::pair<CommMonomial, Scalar> CommPoly::leading() const {
    if (terms.empty()) throw std::invalid_argument("leading: zero polynomial");
    auto best = terms.begin();
    for (auto it = std::next(terms.begin()); it != terms.end(); ++it)
        if (comm_monomial_less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

int CommPoly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms) {
        int t = 0;
        for (const auto& [v, e] : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

int CommPoly::weighted_degree(const std::map<std::string, int>& weights) const {
    int d = 0;
    for (const auto& [m, c] : terms) {
        int t = 0;
        for (const auto& [v, e] : m) t += e * weights.at(v);
        d = std::max(d, t);
    }
    return d;
}

CommPoly operator+(const CommPoly& a, const CommPoly& b) {
    CommPoly r = a;
    for (const auto& [m, c] : b.terms) r.add_term(m, c);
    return r;
}

CommPoly operator-(const CommPoly& a, const CommPoly& b) {
    CommPoly r = a;
    for (const auto& [m, c] : b.terms) r.add_term(m, -c);
    return r;
}

CommPoly operator-(const CommPoly& a) {
    CommPoly r;
    for (const auto& [m, c] : a.terms) r.terms.emplace(m, -c);
    return r;
}

namespace {

CommMonomial mono_mul(const CommMonomial& a, const CommMonomial& b) {
    CommMonomial r = a;
    for (const auto& [v, e] : b) {
        r[v] += e;
        if (r[v] == 0) r.erase(v);
    }
    return r;
}

// a / b when b divides a exponent-wise.
std::optional<CommMonomial> mono_div(const CommMonomial& a, const CommMonomial& b) {
    CommMonomial r = a;
    for (const auto& [v, e] : b) {
        auto it = r.find(v);
        if (it == r.end() || it->second < e) return std::nullopt;
        it->second -= e;
        if (it->second == 0) r.erase(it);
    }
    return r;
}

}  // namespace

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    CommPoly r;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

CommPoly operator*(const Scalar& c, const CommPoly& p) {
    CommPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, x] : p.terms) r.terms.emplace(m, c * x);
    return r;
}

bool operator==(const CommPoly& a, const CommPoly& b) { return (a - b).is_zero(); }

CommPoly comm_pow(const CommPoly& a, int e) {
    if (e < 0) throw std::invalid_argument("comm_pow: negative exponent");
    CommPoly acc = CommPoly::one();
    CommPoly base = a;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

std::optional<CommPoly> exact_divide(const CommPoly& f, const CommPoly& g) {
    if (g.is_zero()) throw DivisionByZero();
    CommPoly rem = f;
    CommPoly quot;
    auto [gm, gc] = g.leading();
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading();
        auto qm = mono_div(rm, gm);
        if (!qm) return std::nullopt;
        Scalar qc = rc / gc;
        CommPoly qterm;
        qterm.terms.emplace(*qm, qc);
        quot = quot + qterm;
        rem = rem - qterm * g;
    }
    return quot;
}

namespace {

CommPoly cofactor_det(const CommMat& m, std::vector<int> cols, int row) {
    int n = static_cast<int>(m.size());
    if (row == n) return CommPoly::one();
    CommPoly acc;
    for (size_t k = 0; k < cols.size(); ++k) {
        const CommPoly& entry = m[row][cols[k]];
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        CommPoly sub = entry * cofactor_det(m, std::move(rest), row + 1);
        acc = (k % 2 == 0) ? acc + sub : acc - sub;
    }
    return acc;
}

}  // namespace

CommPoly determinant(const CommMat& m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
    if (n == 0) return CommPoly::one();
    if (n <= 4) {
        std::vector<int> cols(n);
        for (size_t i = 0; i < n; ++i) cols[i] = static_cast<int>(i);
        return cofactor_det(m, std::move(cols), 0);
    }
    // Fraction-free Bareiss elimination.
    CommMat a = m;
    CommPoly prev = CommPoly::one();
    int sign = 1;
    for (size_t r = 0; r + 1 < n; ++r) {
        if (a[r][r].is_zero()) {
            size_t swap_row = r + 1;
            while (swap_row < n && a[swap_row][r].is_zero()) ++swap_row;
            if (swap_row == n) return CommPoly::zero();
            std::swap(a[r], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = r + 1; i < n; ++i) {
            for (size_t j = r + 1; j < n; ++j) {
                CommPoly num = a[r][r] * a[i][j] - a[i][r] * a[r][j];
                auto q = exact_divide(num, prev);
                if (!q)
                    throw std::runtime_error(
                        "determinant: Bareiss exact division failed (internal bug)");
                a[i][j] = std::move(*q);
            }
            a[i][r] = CommPoly::zero();
        }
        prev = a[r][r];
        if (prev.is_zero()) return CommPoly::zero();
    }
    CommPoly det = a[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

CommPoly partial_derivative(const CommPoly& f, const std::string& var) {
    CommPoly r;
    for (const auto& [m, c] : f.terms) {
        auto it = m.find(var);
        if (it == m.end()) continue;
        CommMonomial dm = m;
        if (it->second == 1)
            dm.erase(var);
        else
            dm[var] = it->second - 1;
        r.add_term(dm, Scalar(it->second) * c);
    }
    return r;
}

CommPoly canonical_up_to_scalar(const CommPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("canonical_up_to_scalar: zero polynomial");
    Scalar lead = f.leading().second;
    return lead.inv() * f;
}

bool equal_up_to_scalar(const CommPoly& a, const CommPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return canonical_up_to_scalar(a) == canonical_up_to_scalar(b);
}

std::string comm_to_string(const CommPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<const CommMonomial*> monos;
    for (const auto& [m, c] : p.terms) monos.push_back(&m);
    std::sort(monos.begin(), monos.end(), [](const CommMonomial* a, const CommMonomial* b) {
        return comm_monomial_less(*b, *a);  // descending, leading first
    });
    std::ostringstream os;
    bool leading = true;
    for (const CommMonomial* m : monos) {
        Scalar c = p.terms.at(*m).canonical();
        std::string cs = c.to_string();
        bool composite = cs.find(' ') != std::string::npos;
        std::string sign, body;
        if (!composite && !cs.empty() && cs[0] == '-') {
            sign = leading ? "-" : " - ";
            body = cs.substr(1);
        } else {
            sign = leading ? "" : " + ";
            body = cs;
        }
        os << sign;
        if (m->empty()) {
            os << (composite ? "(" + cs + ")" : body);
        } else {
            if (composite)
                os << "(" << cs << ")*";
            else if (body != "1")
                os << body << "*";
            bool first = true;
            for (const auto& [v, e] : *m) {
                if (!first) os << "*";
                first = false;
                os << v;
                if (e > 1) os << "^" << e;
            }
        }
        leading = false;
    }
    return os.str();
}

CommPoly parse_comm(const std::string& text, const std::vector<std::string>& vars) {
    // Reuse the NC parser over a commutative presentation of the variables.
    std::vector<RewriteRule> rules;
    for (size_t j = 1; j < vars.size(); ++j) {
        for (size_t i = 0; i < j; ++i) {
            RewriteRule r;
            r.lhs = {static_cast<int>(j), static_cast<int>(i)};
            r.rhs = NCPoly::from_word({static_cast<int>(i), static_cast<int>(j)});
            rules.push_back(std::move(r));
        }
    }
    AlgebraPresentation pres(vars, std::move(rules));
    NCPoly p = parse_expr(text, pres);
    CommPoly out;
    for (const auto& [w, c] : p.terms) {
        CommMonomial m;
        for (int g : w) m[vars[g]] += 1;
        out.add_term(m, c);
    }
    return out;
}

}  // namespace disc
