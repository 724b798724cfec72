#include "curve3/poly.hpp"

#include <algorithm>

namespace curve3 {

Poly::Poly(const Field& F, std::vector<Fq> coeffs) : F_(&F), coeffs_(std::move(coeffs)) {
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && F_->is_zero(coeffs_.back())) coeffs_.pop_back();
}

Poly Poly::x(const Field& F) { return Poly(F, {F.zero(), F.one()}); }

Poly Poly::constant(const Field& F, Fq c) { return Poly(F, {c}); }

Poly Poly::from_ints(const Field& F, const std::vector<long long>& cs) {
    std::vector<Fq> v;
    v.reserve(cs.size());
    for (auto c : cs) v.push_back(F.from_int(c));
    return Poly(F, std::move(v));
}

Fq Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return F_->zero();
    return coeffs_[i];
}

Fq Poly::lead() const {
    if (coeffs_.empty()) throw error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Fq> v(std::max(coeffs_.size(), o.coeffs_.size()), F_->zero());
    for (size_t i = 0; i < v.size(); ++i) v[i] = F_->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return Poly(*F_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Fq> v(std::max(coeffs_.size(), o.coeffs_.size()), F_->zero());
    for (size_t i = 0; i < v.size(); ++i) v[i] = F_->sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return Poly(*F_, std::move(v));
}

Poly Poly::operator-() const {
    std::vector<Fq> v = coeffs_;
    for (auto& c : v) c = F_->neg(c);
    return Poly(*F_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(*F_);
    std::vector<Fq> v(coeffs_.size() + o.coeffs_.size() - 1, F_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (F_->is_zero(coeffs_[i])) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] = F_->add(v[i + j], F_->mul(coeffs_[i], o.coeffs_[j]));
    }
    return Poly(*F_, std::move(v));
}

Poly Poly::scaled(Fq c) const {
    std::vector<Fq> v = coeffs_;
    for (auto& a : v) a = F_->mul(a, c);
    return Poly(*F_, std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(F_->inv(lead()));
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly(*F_);
    std::vector<Fq> v(coeffs_.size() - 1, F_->zero());
    for (size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = F_->mul(F_->from_int(static_cast<long long>(i)), coeffs_[i]);
    return Poly(*F_, std::move(v));
}

Fq Poly::eval(Fq x) const {
    Fq r = F_->zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = F_->add(F_->mul(r, x), *it);
    return r;
}

Poly Poly::pow(int e) const {
    Poly r = Poly::constant(*F_, F_->one());
    Poly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Poly Poly::shifted(Fq a) const {
    // Horner: f(x+a)
    Poly r(*F_);
    Poly lin(*F_, {a, F_->one()});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * lin + Poly::constant(*F_, *it);
    return r;
}

Poly Poly::mapped(const FieldEmbedding& e) const {
    std::vector<Fq> v;
    v.reserve(coeffs_.size());
    for (auto c : coeffs_) v.push_back(e.map(c));
    return Poly(e.into(), std::move(v));
}

void Poly::divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw error("division by zero polynomial");
    const Field& F = *a.F_;
    std::vector<Fq> rem = a.coeffs_;
    int db = b.degree();
    Fq linv = F.inv(b.lead());
    std::vector<Fq> quot;
    int da = static_cast<int>(rem.size()) - 1;
    if (da >= db) quot.assign(da - db + 1, F.zero());
    for (int i = da; i >= db; --i) {
        Fq c = rem[i];
        if (F.is_zero(c)) continue;
        Fq f = F.mul(c, linv);
        quot[i - db] = f;
        for (int j = 0; j <= db; ++j)
            rem[i - db + j] = F.sub(rem[i - db + j], F.mul(f, b.coeffs_[j]));
    }
    q = Poly(F, std::move(quot));
    r = Poly(F, std::move(rem));
}

Poly Poly::gcd(Poly a, Poly b) {
    const Field& F = a.field();
    while (!b.is_zero()) {
        Poly q(F), r(F);
        divrem(a, b, q, r);
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    const Field& F = *F_;
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        Fq c = coeff(i);
        if (F.is_zero(c)) continue;
        if (!s.empty()) s += " + ";
        std::string cs = F.to_string(c);
        if (i == 0) {
            s += cs;
        } else {
            if (cs != "1") s += cs + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::vector<Fq> poly_roots(const Poly& f, const Field& within) {
    if (f.is_zero()) throw error("poly_roots: zero polynomial");
    if (within.q() > 4782969ull) // 3^14
        throw guard_error("root scan bound exceeded");
    Poly g(within);
    if (&f.field() == &within) {
        g = f;
    } else {
        g = f.mapped(within.embedding_from(f.field()));
    }
    std::vector<Fq> roots;
    for (uint64_t c = 0; c < within.q(); ++c) {
        Fq x = within.from_code(c);
        if (within.is_zero(g.eval(x))) roots.push_back(x);
    }
    return roots;
}

Poly min_poly(const Field& F, Fq a) {
    const Field& P = Field::get(F.p(), 1);
    // product of (x - a^{p^i}) over the Frobenius orbit
    std::vector<Fq> orbit;
    Fq t = a;
    do {
        orbit.push_back(t);
        t = F.frob(t);
    } while (t != a);
    Poly prod = Poly::constant(F, F.one());
    for (Fq r : orbit) prod = prod * Poly(F, {F.neg(r), F.one()});
    // coefficients must be prime-field values
    std::vector<Fq> cs;
    for (int i = 0; i <= prod.degree(); ++i) {
        Fq c = prod.coeff(i);
        for (int d = 1; d < F.k(); ++d)
            if (F.digit(c, d)) throw error("min_poly: coefficient escaped the prime field");
        cs.push_back(P.from_int(F.digit(c, 0)));
    }
    return Poly(P, std::move(cs));
}

namespace {

// x^(p^e) mod f over GF(p), by repeated p-th powering (coefficients are
// Frobenius-fixed, so g^p = g(x^p)).
std::vector<int> powmod_x_pe(int p, const std::vector<int>& f, int e) {
    int n = static_cast<int>(f.size()) - 1;
    auto mulmod = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
        }
        for (int i = static_cast<int>(c.size()) - 1; i >= n; --i) {
            int coef = c[i];
            if (!coef) continue;
            c[i] = 0;
            for (int j = 0; j < n; ++j) c[i - n + j] = (c[i - n + j] + coef * (p - f[j])) % p;
        }
        c.resize(n);
        return c;
    };
    auto compose = [&](const std::vector<int>& g, const std::vector<int>& h) {
        // g(h) mod f
        std::vector<int> r(n, 0);
        for (int i = static_cast<int>(g.size()) - 1; i >= 0; --i) {
            r = mulmod(r, h);
            r[0] = (r[0] + g[i]) % p;
        }
        return r;
    };
    // x^p mod f
    std::vector<int> xp(n, 0);
    if (p < n) {
        xp[p] = 1;
    } else {
        std::vector<int> acc(n, 0);
        acc[1] = 1;
        std::vector<int> r(n, 0);
        r[0] = 1;
        int e2 = p;
        while (e2) {
            if (e2 & 1) r = mulmod(r, acc);
            acc = mulmod(acc, acc);
            e2 >>= 1;
        }
        xp = r;
    }
    std::vector<int> cur(n, 0);
    cur[1] = 1; // x
    for (int i = 0; i < e; ++i) cur = compose(cur, xp);
    return cur;
}

std::vector<int> gcd_int(int p, std::vector<int> a, std::vector<int> b) {
    auto deg = [](const std::vector<int>& v) {
        int d = -1;
        for (int i = 0; i < static_cast<int>(v.size()); ++i)
            if (v[i]) d = i;
        return d;
    };
    while (deg(b) >= 0) {
        int da = deg(a), db = deg(b);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        int inv = 1;
        while ((inv * b[db]) % p != 1) ++inv;
        int f = (a[da] * inv) % p;
        for (int j = 0; j <= db; ++j) a[da - db + j] = (a[da - db + j] + (p - f) * b[j]) % p;
    }
    return a;
}

} // namespace

bool poly_is_irreducible_prime_field(int p, const std::vector<int>& coeffs) {
    int n = static_cast<int>(coeffs.size()) - 1;
    if (n <= 0) return false;
    if (n == 1) return true;
    if (coeffs[0] == 0) return false; // divisible by x
    // x^(p^n) == x mod f
    std::vector<int> xq = powmod_x_pe(p, coeffs, n);
    std::vector<int> xx(n, 0);
    xx[1] = 1;
    if (xq != xx) return false;
    // gcd(x^(p^(n/l)) - x, f) == 1 for each prime l | n
    for (int l = 2; l <= n; ++l) {
        if (n % l) continue;
        bool prime = true;
        for (int d = 2; d * d <= l; ++d)
            if (l % d == 0) prime = false;
        if (!prime) continue;
        std::vector<int> xe = powmod_x_pe(p, coeffs, n / l);
        xe[1] = (xe[1] + p - 1) % p;
        std::vector<int> g = gcd_int(p, coeffs, xe);
        int dg = -1;
        for (int i = 0; i < static_cast<int>(g.size()); ++i)
            if (g[i]) dg = i;
        if (dg != 0) return false;
    }
    return true;
}

// --- RatFn ------------------------------------------------------------------

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.field(), num_.field().one());
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        Poly q(num_.field()), r(num_.field());
        Poly::divrem(num_, g, q, r);
        num_ = q;
        Poly::divrem(den_, g, q, r);
        den_ = q;
    }
    Fq l = den_.lead();
    if (l != num_.field().one()) {
        den_ = den_.scaled(num_.field().inv(l));
        num_ = num_.scaled(num_.field().inv(l));
    }
}

RatFn RatFn::from_poly(Poly p) {
    const Field& F = p.field();
    return RatFn(std::move(p), Poly::constant(F, F.one()));
}

RatFn RatFn::operator+(const RatFn& o) const { return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
RatFn RatFn::operator-(const RatFn& o) const { return RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
RatFn RatFn::operator*(const RatFn& o) const { return RatFn(num_ * o.num_, den_ * o.den_); }

RatFn RatFn::operator/(const RatFn& o) const {
    if (o.is_zero()) throw error("division by zero rational function");
    return RatFn(num_ * o.den_, den_ * o.num_);
}

RatFn RatFn::operator-() const { return RatFn(-num_, den_); }

RatFn RatFn::mapped(const FieldEmbedding& e) const { return RatFn(num_.mapped(e), den_.mapped(e)); }

std::string RatFn::to_string(const std::string& var) const {
    if (is_poly()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace curve3
