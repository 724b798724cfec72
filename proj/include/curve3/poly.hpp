#ifndef CURVE3_POLY_HPP
#define CURVE3_POLY_HPP

#include <string>
#include <vector>

#include "curve3/gf.hpp"

namespace curve3 {

// Dense univariate polynomial over a fixed field, coefficients low to high,
// no trailing zeros. The zero polynomial has empty coefficients and the
// sentinel degree kZeroDeg.
class Poly {
public:
    static constexpr int kZeroDeg = -0x40000000;

    explicit Poly(const Field& F) : F_(&F) {}
    Poly(const Field& F, std::vector<Fq> coeffs);
    static Poly x(const Field& F);
    static Poly constant(const Field& F, Fq c);
    static Poly from_ints(const Field& F, const std::vector<long long>& cs);

    const Field& field() const { return *F_; }
    int degree() const { return coeffs_.empty() ? kZeroDeg : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Fq coeff(int i) const;
    Fq lead() const;
    const std::vector<Fq>& coeffs() const { return coeffs_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return F_ == o.F_ && coeffs_ == o.coeffs_; }

    Poly scaled(Fq c) const;
    Poly monic() const;
    Poly derivative() const;
    Fq eval(Fq x) const;
    Poly pow(int e) const;
    // x -> x + a
    Poly shifted(Fq a) const;
    Poly mapped(const FieldEmbedding& e) const; // into the bigger field

    static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r);
    static Poly gcd(Poly a, Poly b); // monic

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    const Field* F_;
    std::vector<Fq> coeffs_;
};

// Roots of f in `within` (a field containing f's coefficient field), found by
// exhaustive scan; multiplicities discarded. Guarded at |within| <= 3^14.
std::vector<Fq> poly_roots(const Poly& f, const Field& within);

// Minimal polynomial of a over GF(p), returned over the prime field.
Poly min_poly(const Field& F, Fq a);

// Irreducibility over GF(p) of a monic polynomial given by int coefficients,
// low to high (Rabin's test).
bool poly_is_irreducible_prime_field(int p, const std::vector<int>& coeffs);

// Rational function num/den over one variable: den monic, gcd(num, den) = 1.
class RatFn {
public:
    explicit RatFn(const Field& F) : num_(F), den_(Poly::constant(F, F.one())) {}
    RatFn(Poly num, Poly den);
    static RatFn from_poly(Poly p);
    static RatFn constant(const Field& F, Fq c) { return from_poly(Poly::constant(F, c)); }

    const Field& field() const { return num_.field(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }

    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    RatFn operator-() const;
    bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFn mapped(const FieldEmbedding& e) const;
    std::string to_string(const std::string& var = "x") const;

private:
    Poly num_, den_;
};

} // namespace curve3

#endif
