#include "disc/ncpoly.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace disc {

namespace {
constexpr long kRewriteBudget = 1000000;
}

// ---------------------------------------------------------------- series

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return {qpoly_mul(num, o.num), qpoly_mul(den, o.den)};
}
RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (qpoly_trim(o.num).empty()) throw DivisionByZero();
    return {qpoly_mul(num, o.den), qpoly_mul(den, o.num)};
}
RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return {qpoly_add(qpoly_mul(num, o.den), qpoly_mul(o.num, den)), qpoly_mul(den, o.den)};
}
RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return {qpoly_sub(qpoly_mul(num, o.den), qpoly_mul(o.num, den)), qpoly_mul(den, o.den)};
}

Rat RationalFunction::series_coeff(int d) const {
    if (den.empty() || den[0] == 0)
        throw std::runtime_error("series_coeff: denominator vanishes at t = 0");
    std::vector<Rat> c(d + 1, Rat(0));
    for (int k = 0; k <= d; ++k) {
        Rat acc = (static_cast<size_t>(k) < num.size()) ? num[k] : Rat(0);
        for (int j = 1; j <= k && static_cast<size_t>(j) < den.size(); ++j)
            acc -= den[j] * c[k - j];
        c[k] = acc / den[0];
    }
    return c[d];
}

std::optional<QPoly> RationalFunction::as_polynomial() const {
    auto [q, r] = qpoly_divmod(num, den);
    if (!r.empty()) return std::nullopt;
    return q;
}

namespace {

// Minimal parser for series expressions: + - * / ^ ( ) integers and t.
struct SeriesParser {
    const std::string& s;
    size_t pos = 0;
    explicit SeriesParser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::runtime_error("series parse error at position " + std::to_string(pos) + ": " +
                                 msg);
    }

    RationalFunction expr() {
        bool neg = eat('-');
        RationalFunction r = term();
        if (neg) r = RationalFunction{{Rat(0)}, {Rat(1)}} - r;
        for (;;) {
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                return r;
        }
    }
    RationalFunction term() {
        RationalFunction r = factor();
        for (;;) {
            if (eat('*'))
                r = r * factor();
            else if (eat('/'))
                r = r / factor();
            else
                return r;
        }
    }
    RationalFunction factor() {
        RationalFunction b = base();
        if (eat('^')) {
            long e = integer();
            RationalFunction r{{Rat(1)}, {Rat(1)}};
            for (long i = 0; i < e; ++i) r = r * b;
            return r;
        }
        return b;
    }
    RationalFunction base() {
        skip();
        if (eat('(')) {
            RationalFunction r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (pos < s.size() && s[pos] == 't') {
            ++pos;
            return {{Rat(0), Rat(1)}, {Rat(1)}};
        }
        if (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos])))
            return {{Rat(integer())}, {Rat(1)}};
        fail("expected number, 't', or '('");
    }
    long integer() {
        skip();
        size_t start = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }
};

}  // namespace

RationalFunction RationalFunction::parse(const std::string& text) {
    SeriesParser p(text);
    RationalFunction r = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

// ---------------------------------------------------------------- NCPoly

NCPoly NCPoly::from_word(Word w, Scalar c) {
    NCPoly p;
    if (!c.is_zero()) p.terms.emplace(std::move(w), std::move(c));
    return p;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    auto it = terms.find(w);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
    NCPoly r = a;
    for (const auto& [w, c] : b.terms) r.add_term(w, c);
    return r;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) {
    NCPoly r = a;
    for (const auto& [w, c] : b.terms) r.add_term(w, -c);
    return r;
}

NCPoly operator*(const Scalar& c, const NCPoly& p) {
    NCPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, x] : p.terms) r.terms.emplace(w, c * x);
    return r;
}

bool operator==(const NCPoly& a, const NCPoly& b) { return (a - b).is_zero(); }

// ---------------------------------------------------------------- presentation

AlgebraPresentation::AlgebraPresentation(std::vector<std::string> names,
                                         std::vector<RewriteRule> rules,
                                         std::vector<int> degrees,
                                         std::optional<RationalFunction> hilbert)
    : names_(std::move(names)),
      degrees_(std::move(degrees)),
      rules_(std::move(rules)),
      hilbert_(std::move(hilbert)) {
    if (degrees_.empty()) degrees_.assign(names_.size(), 1);
    if (degrees_.size() != names_.size())
        throw std::invalid_argument("presentation: degree list length mismatch");
    validate_();
    detect_quantum_();
}

int AlgebraPresentation::gen_index(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

int AlgebraPresentation::word_degree(const Word& w) const {
    int d = 0;
    for (int g : w) d += degrees_.at(g);
    return d;
}

bool AlgebraPresentation::word_less(const Word& a, const Word& b) const {
    int da = word_degree(a), db = word_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

int AlgebraPresentation::degree_of(const NCPoly& p) const {
    if (p.is_zero()) throw std::invalid_argument("degree_of: zero polynomial");
    int d = word_degree(p.terms.begin()->first);
    for (const auto& [w, c] : p.terms)
        if (word_degree(w) != d)
            throw std::invalid_argument("degree_of: inhomogeneous polynomial");
    return d;
}

void AlgebraPresentation::validate_() const {
    std::set<std::string> seen;
    for (const auto& n : names_)
        if (!seen.insert(n).second)
            throw std::invalid_argument("presentation: duplicate generator " + n);
    for (const auto& rule : rules_) {
        if (rule.lhs.size() < 2)
            throw std::invalid_argument("presentation: rule lhs shorter than 2");
        for (int g : rule.lhs)
            if (g < 0 || static_cast<size_t>(g) >= names_.size())
                throw std::invalid_argument("presentation: rule letter out of range");
        int d = word_degree(rule.lhs);
        for (const auto& [w, c] : rule.rhs.terms) {
            if (word_degree(w) != d)
                throw std::invalid_argument("presentation: rule rhs not homogeneous with lhs");
            if (!word_less(w, rule.lhs))
                throw std::invalid_argument("presentation: rule not orientation-valid");
        }
    }
}

void AlgebraPresentation::detect_quantum_() {
    size_t n = names_.size();
    std::vector<std::vector<Scalar>> p(n, std::vector<Scalar>(n, Scalar::zero()));
    std::vector<std::vector<bool>> have(n, std::vector<bool>(n, false));
    for (const auto& rule : rules_) {
        if (rule.lhs.size() != 2) return;
        int j = rule.lhs[0], i = rule.lhs[1];
        if (j <= i) return;
        if (rule.rhs.terms.size() != 1) return;
        const auto& [w, c] = *rule.rhs.terms.begin();
        if (w != Word{i, j}) return;
        p[j][i] = c;
        have[j][i] = true;
    }
    // Every unordered pair must be covered.
    for (size_t j = 1; j < n; ++j)
        for (size_t i = 0; i < j; ++i)
            if (!have[j][i]) return;
    quantum_ = std::move(p);
}

// ---------------------------------------------------------------- rewriting

namespace {

// Leftmost position where some rule lhs occurs as a subword; returns
// (position, rule index) or (-1, -1).
std::pair<int, int> find_redex(const Word& w, const AlgebraPresentation& pres) {
    const auto& rules = pres.rules();
    for (size_t pos = 0; pos < w.size(); ++pos) {
        for (size_t r = 0; r < rules.size(); ++r) {
            const Word& lhs = rules[r].lhs;
            if (pos + lhs.size() > w.size()) continue;
            if (std::equal(lhs.begin(), lhs.end(), w.begin() + pos))
                return {static_cast<int>(pos), static_cast<int>(r)};
        }
    }
    return {-1, -1};
}

// Closed-form product for quantum affine presentations: sort the word by
// insertion, accumulating one p-scalar per transposition.
std::pair<Word, Scalar> quantum_sort(const Word& w, const AlgebraPresentation& pres) {
    const auto& p = pres.quantum_scalars();
    Word sorted;
    sorted.reserve(w.size());
    Scalar c = Scalar::one();
    for (int g : w) {
        size_t k = sorted.size();
        while (k > 0 && sorted[k - 1] > g) {
            c *= p[sorted[k - 1]][g];
            --k;
        }
        sorted.insert(sorted.begin() + k, g);
    }
    return {std::move(sorted), std::move(c)};
}

}  // namespace

NCPoly normal_form_word(const Word& w, const Scalar& c, const AlgebraPresentation& pres) {
    if (c.is_zero()) return NCPoly::zero();
    if (pres.fast_path()) {
        auto [sorted, scalar] = quantum_sort(w, pres);
        return NCPoly::from_word(std::move(sorted), c * scalar);
    }
    NCPoly result;
    std::deque<std::pair<Word, Scalar>> work;
    work.emplace_back(w, c);
    long steps = 0;
    while (!work.empty()) {
        auto [cur, coeff] = std::move(work.front());
        work.pop_front();
        if (++steps > kRewriteBudget) {
            std::ostringstream os;
            for (size_t i = 0; i < cur.size(); ++i) os << (i ? "." : "") << cur[i];
            throw RewriteBudgetExceeded(os.str());
        }
        auto [pos, r] = find_redex(cur, pres);
        if (pos < 0) {
            result.add_term(cur, coeff);
            continue;
        }
        const RewriteRule& rule = pres.rules()[r];
        for (const auto& [rw, rc] : rule.rhs.terms) {
            Word next;
            next.reserve(cur.size() - rule.lhs.size() + rw.size());
            next.insert(next.end(), cur.begin(), cur.begin() + pos);
            next.insert(next.end(), rw.begin(), rw.end());
            next.insert(next.end(), cur.begin() + pos + rule.lhs.size(), cur.end());
            work.emplace_back(std::move(next), coeff * rc);
        }
    }
    return result;
}

NCPoly normal_form(const NCPoly& p, const AlgebraPresentation& pres) {
    NCPoly result;
    for (const auto& [w, c] : p.terms) {
        NCPoly nf = normal_form_word(w, c, pres);
        for (const auto& [nw, nc] : nf.terms) result.add_term(nw, nc);
    }
    return result;
}

NCPoly nc_mul(const NCPoly& a, const NCPoly& b, const AlgebraPresentation& pres) {
    NCPoly result;
    for (const auto& [wa, ca] : a.terms) {
        for (const auto& [wb, cb] : b.terms) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            NCPoly nf = normal_form_word(w, ca * cb, pres);
            for (const auto& [nw, nc] : nf.terms) result.add_term(nw, nc);
        }
    }
    return result;
}

NCPoly nc_pow(const NCPoly& a, int e, const AlgebraPresentation& pres) {
    if (e < 0) throw std::invalid_argument("nc_pow: negative exponent");
    NCPoly acc = NCPoly::one();
    NCPoly base = a;
    while (e > 0) {
        if (e & 1) acc = nc_mul(acc, base, pres);
        if (e >>= 1) base = nc_mul(base, base, pres);
    }
    return acc;
}

// ---------------------------------------------------------------- confluence

std::vector<CriticalPairFailure> check_local_confluence(const AlgebraPresentation& pres,
                                                        int degree_bound) {
    std::vector<CriticalPairFailure> failures;
    const auto& rules = pres.rules();
    auto record = [&](const Word& w, const NCPoly& left, const NCPoly& right) {
        NCPoly diff = normal_form(left, pres) - normal_form(right, pres);
        if (!diff.is_zero()) failures.push_back({w, std::move(diff)});
    };
    for (size_t r1 = 0; r1 < rules.size(); ++r1) {
        for (size_t r2 = 0; r2 < rules.size(); ++r2) {
            const Word& l1 = rules[r1].lhs;
            const Word& l2 = rules[r2].lhs;
            // Proper overlap: a proper suffix of l1 equals a proper prefix of l2.
            for (size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
                size_t olap = k;
                if (!std::equal(l1.end() - olap, l1.end(), l2.begin())) continue;
                // Superposition word: l1 followed by the tail of l2.
                Word w = l1;
                w.insert(w.end(), l2.begin() + olap, l2.end());
                if (pres.word_degree(w) > degree_bound) continue;
                // Reduce via rule r1 at position 0 and via rule r2 at l1.size()-olap.
                NCPoly via1;
                for (const auto& [rw, rc] : rules[r1].rhs.terms) {
                    Word u = rw;
                    u.insert(u.end(), l2.begin() + olap, l2.end());
                    via1.add_term(u, rc);
                }
                NCPoly via2;
                for (const auto& [rw, rc] : rules[r2].rhs.terms) {
                    Word u(l1.begin(), l1.end() - olap);
                    u.insert(u.end(), rw.begin(), rw.end());
                    via2.add_term(u, rc);
                }
                record(w, via1, via2);
            }
            // Containment: l2 occurs inside l1 (including duplicate lhs words,
            // counted once via r1 < r2 when the sizes match).
            if (r1 != r2 && (l2.size() < l1.size() || (l2.size() == l1.size() && r1 < r2))) {
                for (size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
                    if (!std::equal(l2.begin(), l2.end(), l1.begin() + pos)) continue;
                    if (pres.word_degree(l1) > degree_bound) continue;
                    NCPoly via1 = rules[r1].rhs;
                    NCPoly via2;
                    for (const auto& [rw, rc] : rules[r2].rhs.terms) {
                        Word u(l1.begin(), l1.begin() + pos);
                        u.insert(u.end(), rw.begin(), rw.end());
                        u.insert(u.end(), l1.begin() + pos + l2.size(), l1.end());
                        via2.add_term(u, rc);
                    }
                    record(l1, via1, via2);
                }
            }
        }
    }
    return failures;
}

// ---------------------------------------------------------------- bases

namespace {

bool has_lhs_suffix(const Word& w, const AlgebraPresentation& pres) {
    for (const auto& rule : pres.rules()) {
        const Word& lhs = rule.lhs;
        if (lhs.size() > w.size()) continue;
        if (std::equal(lhs.begin(), lhs.end(), w.end() - lhs.size())) return true;
    }
    return false;
}

void enumerate_normal(const AlgebraPresentation& pres, Word& w, int deg, int target,
                      std::vector<Word>& out) {
    if (deg == target) {
        out.push_back(w);
        return;
    }
    for (size_t g = 0; g < pres.gen_count(); ++g) {
        int gd = pres.gen_degrees()[g];
        if (deg + gd > target) continue;
        w.push_back(static_cast<int>(g));
        if (!has_lhs_suffix(w, pres)) enumerate_normal(pres, w, deg + gd, target, out);
        w.pop_back();
    }
}

}  // namespace

std::vector<Word> monomial_basis(const AlgebraPresentation& pres, int d) {
    std::vector<Word> out;
    Word w;
    enumerate_normal(pres, w, 0, d, out);
    std::sort(out.begin(), out.end(),
              [&](const Word& a, const Word& b) { return pres.word_less(a, b); });
    return out;
}

HilbertReport hilbert_check(const AlgebraPresentation& pres, int max_degree) {
    if (!pres.hilbert())
        throw std::invalid_argument("hilbert_check: presentation has no expected series");
    HilbertReport rep;
    for (int d = 0; d <= max_degree; ++d) {
        long computed = static_cast<long>(monomial_basis(pres, d).size());
        Rat expected = pres.hilbert()->series_coeff(d);
        long exp_l = expected.get_den() == 1 ? static_cast<long>(expected.get_num().get_si())
                                             : -1;
        rep.computed.push_back(computed);
        rep.expected.push_back(exp_l);
        if (computed != exp_l && rep.ok) {
            rep.ok = false;
            rep.first_mismatch_degree = d;
        }
    }
    return rep;
}

// ---------------------------------------------------------------- rendering

std::string word_to_string(const Word& w, const AlgebraPresentation& pres) {
    if (w.empty()) return "1";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!first) os << "*";
        first = false;
        os << pres.gen_names()[w[i]];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

namespace {

// Shared by nc and comm rendering: prefix a term with its coefficient.
std::string scalar_prefix(const Scalar& c, bool leading, bool bare_word) {
    Scalar cc = c.canonical();
    std::string cs = cc.to_string();
    bool composite = cs.find(' ') != std::string::npos;
    std::string sign, body;
    if (!composite && cs.size() && cs[0] == '-') {
        sign = leading ? "-" : " - ";
        body = cs.substr(1);
    } else {
        sign = leading ? "" : " + ";
        body = cs;
    }
    if (composite) return sign + "(" + cs + ")" + (bare_word ? "" : "*");
    if (body == "1" && !bare_word) return sign;
    return sign + body + (bare_word ? "" : "*");
}

}  // namespace

std::string nc_to_string(const NCPoly& p, const AlgebraPresentation& pres) {
    if (p.is_zero()) return "0";
    std::vector<const Word*> words;
    for (const auto& [w, c] : p.terms) words.push_back(&w);
    // Descending graded-lex: leading term first.
    std::sort(words.begin(), words.end(),
              [&](const Word* a, const Word* b) { return pres.word_less(*b, *a); });
    std::ostringstream os;
    bool leading = true;
    for (const Word* w : words) {
        const Scalar& c = p.terms.at(*w);
        os << scalar_prefix(c, leading, w->empty());
        if (!w->empty()) os << word_to_string(*w, pres);
        leading = false;
    }
    return os.str();
}

}  // namespace disc
