#ifndef CURVE3_GF_HPP
#define CURVE3_GF_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "curve3/errors.hpp"

namespace curve3 {

// Element of GF(p^k), stored as the base-p digit code of its coefficient
// vector modulo the field's modulus. Elements carry no field pointer; every
// operation goes through the owning Field.
struct Fq {
    uint32_t v = 0;
    friend bool operator==(Fq, Fq) = default;
    friend auto operator<=>(Fq, Fq) = default;
};

class FieldEmbedding;

// GF(p^k) with a fixed monic irreducible modulus over GF(p). Instances are
// interned and immutable: Field::get(p, k) always returns the same object,
// with the lexicographically smallest irreducible modulus, so element codes
// are reproducible across runs.
class Field {
public:
    static const Field& get(int p, int k);
    static const Field& get(int p, int k, const std::vector<int>& modulus_low_to_high);

    int p() const { return p_; }
    int k() const { return k_; }
    uint64_t q() const { return q_; }
    // Modulus coefficients, low to high, length k+1, monic. Empty for k = 1
    // (the prime field needs no modulus).
    const std::vector<uint8_t>& modulus() const { return modulus_; }

    Fq zero() const { return {0}; }
    Fq one() const { return {1}; }
    Fq from_int(long long n) const;
    // Residue class of x (k >= 2).
    Fq gen() const;
    Fq from_code(uint64_t c) const { return {static_cast<uint32_t>(c)}; }
    uint64_t code(Fq a) const { return a.v; }
    int digit(Fq a, int i) const;

    bool is_zero(Fq a) const { return a.v == 0; }
    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const;
    Fq neg(Fq a) const;
    Fq mul(Fq a, Fq b) const;
    Fq inv(Fq a) const;
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
    Fq pow(Fq a, int64_t e) const;
    Fq frob(Fq a) const { return pow(a, p_); }
    // Inverse of Frobenius: the unique p-th root.
    Fq pth_root(Fq a) const;

    // a + a^p + ... + a^{p^{k-1}}, returned as an integer in [0, p).
    int trace(Fq a) const;
    // All z in this field with z^p - z = a. Size 0 or p; sorted by code.
    std::vector<Fq> as_solve(Fq a) const;

    std::string to_string(Fq a) const;

    // Embedding of a subfield (same p, from.k | k) into this field, mapping
    // the subfield generator to the smallest root of its modulus here.
    const FieldEmbedding& embedding_from(const Field& subfield) const;

private:
    Field(int p, int k, std::vector<uint8_t> modulus);
    void build_tables();

    int p_, k_;
    uint64_t q_;
    std::vector<uint8_t> modulus_;
    // x^{k+i} mod modulus for i in [0, k-1), as digit rows of length k.
    std::vector<std::vector<uint8_t>> red_rows_;
    std::vector<uint8_t> trace_of_basis_;
    // Row-echelon data of the GF(p)-linear map z -> z^p - z.
    std::vector<std::vector<uint8_t>> as_mat_;
    std::vector<int> as_pivots_;

    friend class FieldEmbedding;
};

class FieldEmbedding {
public:
    const Field& from() const { return *from_; }
    const Field& into() const { return *into_; }
    Fq map(Fq a) const;

private:
    FieldEmbedding(const Field* from, const Field* into);
    const Field* from_;
    const Field* into_;
    std::vector<Fq> gen_pows_;
    friend class Field;
};

} // namespace curve3

#endif
