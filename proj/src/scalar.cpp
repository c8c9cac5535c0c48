#include "disc/scalar.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace disc {

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

QPoly qpoly_trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

QPoly qpoly_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return qpoly_trim(std::move(r));
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return qpoly_trim(std::move(r));
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return qpoly_trim(std::move(r));
}

std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b) {
    QPoly rem = qpoly_trim(a);
    QPoly divisor = qpoly_trim(b);
    if (divisor.empty()) throw DivisionByZero();
    if (rem.size() < divisor.size()) return {{}, rem};
    QPoly quot(rem.size() - divisor.size() + 1, Rat(0));
    const Rat& lead = divisor.back();
    while (rem.size() >= divisor.size()) {
        size_t shift = rem.size() - divisor.size();
        Rat q = rem.back() / lead;
        quot[shift] = q;
        for (size_t j = 0; j < divisor.size(); ++j) rem[shift + j] -= q * divisor[j];
        rem = qpoly_trim(std::move(rem));
    }
    return {qpoly_trim(std::move(quot)), std::move(rem)};
}

QPoly qpoly_divexact(const QPoly& a, const QPoly& b) {
    auto [q, r] = qpoly_divmod(a, b);
    if (!r.empty()) throw std::runtime_error("qpoly_divexact: nonzero remainder");
    return q;
}

int euler_phi(int m) {
    int result = m, n = m;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const QPoly& cyclotomic_polynomial(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m >= 1 required");
    static std::map<int, QPoly> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // X^m - 1
    QPoly num(m + 1, Rat(0));
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) num = qpoly_divexact(num, cyclotomic_polynomial(d));
    return cache.emplace(m, std::move(num)).first->second;
}

Scalar::Scalar(int order, QPoly coeffs) : order_(order), c_(std::move(coeffs)) {
    if (order_ < 1) throw std::invalid_argument("Scalar: order >= 1 required");
    reduce_();
}

void Scalar::reduce_() {
    const QPoly& phi = cyclotomic_polynomial(order_);
    if (c_.size() >= phi.size()) c_ = qpoly_divmod(c_, phi).second;
    c_.resize(phi.size() - 1, Rat(0));
}

Scalar Scalar::root_of_unity(int m, long k) {
    if (m < 1) throw std::invalid_argument("root_of_unity: m >= 1 required");
    long e = ((k % m) + m) % m;
    QPoly p(e + 1, Rat(0));
    p[e] = 1;
    return Scalar(m, std::move(p));
}

bool Scalar::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    Scalar c = canonical();
    return c.order_ == 1;
}

Rat Scalar::rational_value() const {
    Scalar c = canonical();
    if (c.order_ != 1) throw std::runtime_error("Scalar: not rational: " + to_string());
    return c.c_[0];
}

Scalar Scalar::embedded(int t) const {
    if (t == order_) return *this;
    if (t % order_ != 0) throw std::invalid_argument("Scalar::embedded: order must divide target");
    int step = t / order_;
    QPoly p;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        size_t e = i * step;
        if (p.size() <= e) p.resize(e + 1, Rat(0));
        p[e] += c_[i];
    }
    return Scalar(t, std::move(p));
}

Scalar Scalar::canonical() const {
    // Try each divisor d of the order in increasing size; membership in
    // Q(zeta_d) is a linear condition on the coefficients.
    for (int d = 1; d <= order_; ++d) {
        if (order_ % d != 0) continue;
        if (d == order_) break;
        int phid = euler_phi(d);
        int phim = euler_phi(order_);
        // Basis images zeta_m^{i * (m/d)} reduced; solve for coefficients.
        std::vector<QPoly> basis;
        basis.reserve(phid);
        for (int i = 0; i < phid; ++i) {
            Scalar b = Scalar::root_of_unity(d, i).embedded(order_);
            basis.push_back(b.c_);
        }
        // Gaussian elimination on the phim x phid system basis * x = c_.
        std::vector<QPoly> M(phim, QPoly(phid + 1, Rat(0)));
        for (int i = 0; i < phid; ++i)
            for (int r = 0; r < phim; ++r) M[r][i] = basis[i][r];
        for (int r = 0; r < phim; ++r) M[r][phid] = c_[r];
        int row = 0;
        std::vector<int> pivot_col(phid, -1);
        for (int col = 0; col < phid && row < phim; ++col) {
            int pr = -1;
            for (int r = row; r < phim; ++r)
                if (M[r][col] != 0) { pr = r; break; }
            if (pr < 0) continue;
            std::swap(M[row], M[pr]);
            Rat inv = 1 / M[row][col];
            for (int j = col; j <= phid; ++j) M[row][j] *= inv;
            for (int r = 0; r < phim; ++r) {
                if (r == row || M[r][col] == 0) continue;
                Rat f = M[r][col];
                for (int j = col; j <= phid; ++j) M[r][j] -= f * M[row][j];
            }
            pivot_col[col] = row;
            ++row;
        }
        bool consistent = true;
        for (int r = row; r < phim; ++r)
            if (M[r][phid] != 0) { consistent = false; break; }
        if (!consistent) continue;
        QPoly sol(phid, Rat(0));
        bool unique = true;
        for (int col = 0; col < phid; ++col) {
            if (pivot_col[col] < 0) { unique = false; break; }
            sol[col] = M[pivot_col[col]][phid];
        }
        if (!unique) continue;
        return Scalar(d, std::move(sol));
    }
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    int t = std::lcm(a.order_, b.order_);
    Scalar ea = a.embedded(t), eb = b.embedded(t);
    return Scalar(t, qpoly_add(ea.c_, eb.c_));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    int t = std::lcm(a.order_, b.order_);
    Scalar ea = a.embedded(t), eb = b.embedded(t);
    return Scalar(t, qpoly_sub(ea.c_, eb.c_));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    int t = std::lcm(a.order_, b.order_);
    Scalar ea = a.embedded(t), eb = b.embedded(t);
    return Scalar(t, qpoly_mul(ea.c_, eb.c_));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero();
    // Extended Euclid for gcd(c_, Phi_m) = 1 in Q[X].
    const QPoly& phi = cyclotomic_polynomial(order_);
    QPoly r0 = phi, r1 = qpoly_trim(c_);
    QPoly s0 = {}, s1 = {Rat(1)};  // coefficients of c_ in the combination
    while (!r1.empty()) {
        auto [q, r2] = qpoly_divmod(r0, r1);
        QPoly s2 = qpoly_sub(s0, qpoly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant, since Phi_m is irreducible over Q)
    if (r0.size() != 1) throw std::runtime_error("Scalar::inv: gcd not constant");
    Rat scale = 1 / r0[0];
    for (Rat& x : s0) x *= scale;
    return Scalar(order_, std::move(s0));
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar base = *this, acc = Scalar::one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

std::string Scalar::to_string() const {
    Scalar c = canonical();
    if (c.order_ == 1) return rat_to_string(c.c_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.c_.size(); ++i) {
        const Rat& x = c.c_[i];
        if (x == 0) continue;
        Rat a = abs(x);
        if (first) {
            if (x < 0) os << "-";
        } else {
            os << (x < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            os << "zeta(" << c.order_ << "," << i << ")";
        }
    }
    if (first) return "0";
    return os.str();
}

}  // namespace disc
