#include "curve3/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "curve3/poly.hpp"

namespace curve3 {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void decode(uint32_t v, int p, int k, uint8_t* out) {
    for (int i = 0; i < k; ++i) {
        out[i] = static_cast<uint8_t>(v % p);
        v /= static_cast<uint32_t>(p);
    }
}

uint32_t encode(const uint8_t* digits, int p, int k) {
    uint32_t v = 0;
    for (int i = k - 1; i >= 0; --i) v = v * static_cast<uint32_t>(p) + digits[i];
    return v;
}

} // namespace

Field::Field(int p, int k, std::vector<uint8_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    q_ = 1;
    for (int i = 0; i < k; ++i) {
        q_ *= static_cast<uint64_t>(p);
        if (q_ > (1ull << 31)) throw guard_error("field order exceeds the 2^31 code bound");
    }
    build_tables();
}

void Field::build_tables() {
    const int k = k_, p = p_;
    if (k > 1) {
        // red_rows_[i] = x^{k+i} mod modulus, digits over GF(p).
        red_rows_.assign(k - 1, std::vector<uint8_t>(k, 0));
        std::vector<int> cur(k);
        for (int j = 0; j < k; ++j) cur[j] = (p - modulus_[j]) % p; // x^k = -(low part)
        for (int i = 0; i < k - 1; ++i) {
            for (int j = 0; j < k; ++j) red_rows_[i][j] = static_cast<uint8_t>(cur[j]);
            // multiply by x
            int carry = cur[k - 1];
            for (int j = k - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            if (carry)
                for (int j = 0; j < k; ++j) cur[j] = (cur[j] + carry * ((p - modulus_[j]) % p)) % p;
        }
    }
    // trace of basis elements x^i
    trace_of_basis_.assign(k, 0);
    for (int i = 0; i < k; ++i) {
        uint8_t digits[32] = {0};
        digits[i] = 1;
        Fq e{encode(digits, p, k)};
        Fq s = e;
        Fq acc = e;
        for (int j = 1; j < k; ++j) {
            acc = frob(acc);
            s = add(s, acc);
        }
        // s lies in the prime field: digit 0 only
        uint8_t sd[32];
        decode(s.v, p, k, sd);
        for (int j = 1; j < k; ++j)
            if (sd[j]) throw error("trace of basis element escaped the prime field");
        trace_of_basis_[i] = sd[0];
    }
    // Row-echelon form of M = Frob - I acting on digit vectors, with the
    // right-hand side carried symbolically: as_mat_ rows are length 2k,
    // [matrix row | rhs coefficient row].
    std::vector<std::vector<uint8_t>> M(k, std::vector<uint8_t>(2 * k, 0));
    for (int i = 0; i < k; ++i) {
        uint8_t digits[32] = {0};
        digits[i] = 1;
        Fq e{encode(digits, p, k)};
        Fq img = sub(frob(e), e);
        uint8_t im[32];
        decode(img.v, p, k, im);
        for (int r = 0; r < k; ++r) M[r][i] = im[r];
        M[i][k + i] = 1;
    }
    // Gaussian elimination over GF(p)
    as_pivots_.assign(k, -1);
    int row = 0;
    for (int col = 0; col < k && row < k; ++col) {
        int pv = -1;
        for (int r = row; r < k; ++r)
            if (M[r][col]) { pv = r; break; }
        if (pv < 0) continue;
        std::swap(M[pv], M[row]);
        int inv = 1;
        while ((inv * M[row][col]) % p != 1) ++inv;
        for (int c = 0; c < 2 * k; ++c) M[row][c] = static_cast<uint8_t>(M[row][c] * inv % p);
        for (int r = 0; r < k; ++r) {
            if (r == row || !M[r][col]) continue;
            int f = M[r][col];
            for (int c = 0; c < 2 * k; ++c)
                M[r][c] = static_cast<uint8_t>((M[r][c] + (p - f) * M[row][c]) % p);
        }
        as_pivots_[col] = row;
        ++row;
    }
    as_mat_ = std::move(M);
}

Fq Field::from_int(long long n) const {
    long long r = n % p_;
    if (r < 0) r += p_;
    return {static_cast<uint32_t>(r)};
}

Fq Field::gen() const {
    if (k_ < 2) throw error("prime field has no extension generator");
    return {static_cast<uint32_t>(p_)};
}

int Field::digit(Fq a, int i) const {
    uint8_t d[32];
    decode(a.v, p_, k_, d);
    return d[i];
}

Fq Field::add(Fq a, Fq b) const {
    uint8_t x[32], y[32];
    decode(a.v, p_, k_, x);
    decode(b.v, p_, k_, y);
    for (int i = 0; i < k_; ++i) x[i] = static_cast<uint8_t>((x[i] + y[i]) % p_);
    return {encode(x, p_, k_)};
}

Fq Field::sub(Fq a, Fq b) const {
    uint8_t x[32], y[32];
    decode(a.v, p_, k_, x);
    decode(b.v, p_, k_, y);
    for (int i = 0; i < k_; ++i) x[i] = static_cast<uint8_t>((x[i] + p_ - y[i]) % p_);
    return {encode(x, p_, k_)};
}

Fq Field::neg(Fq a) const { return sub(zero(), a); }

Fq Field::mul(Fq a, Fq b) const {
    if (a.v == 0 || b.v == 0) return zero();
    const int k = k_, p = p_;
    uint8_t x[32], y[32];
    decode(a.v, p, k, x);
    decode(b.v, p, k, y);
    int prod[63] = {0};
    for (int i = 0; i < k; ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < k; ++j) prod[i + j] += x[i] * y[j];
    }
    uint8_t out[32];
    for (int i = 0; i < k; ++i) out[i] = static_cast<uint8_t>(prod[i] % p);
    for (int i = 0; i < k - 1; ++i) {
        int c = prod[k + i] % p;
        if (!c) continue;
        const auto& row = red_rows_[i];
        for (int j = 0; j < k; ++j) out[j] = static_cast<uint8_t>((out[j] + c * row[j]) % p);
    }
    return {encode(out, p, k)};
}

Fq Field::pow(Fq a, int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Fq r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Fq Field::inv(Fq a) const {
    if (a.v == 0) throw error("division by zero in GF(p^k)");
    return pow(a, static_cast<int64_t>(q_) - 2);
}

Fq Field::pth_root(Fq a) const {
    Fq r = a;
    for (int i = 0; i < k_ - 1; ++i) r = frob(r);
    return r;
}

int Field::trace(Fq a) const {
    uint8_t d[32];
    decode(a.v, p_, k_, d);
    int s = 0;
    for (int i = 0; i < k_; ++i) s += d[i] * trace_of_basis_[i];
    return s % p_;
}

std::vector<Fq> Field::as_solve(Fq a) const {
    const int k = k_, p = p_;
    uint8_t rhs[32];
    decode(a.v, p, k, rhs);
    // Apply the stored elimination to the rhs, then check consistency.
    std::vector<int> red(k, 0);
    for (int r = 0; r < k; ++r) {
        int s = 0;
        for (int c = 0; c < k; ++c) s += as_mat_[r][k + c] * rhs[c];
        red[r] = s % p;
    }
    uint8_t sol[32] = {0};
    for (int col = 0; col < k; ++col) {
        int r = as_pivots_[col];
        if (r >= 0) sol[col] = static_cast<uint8_t>(red[r]);
    }
    // rows without pivots demand zero rhs
    for (int r = 0; r < k; ++r) {
        bool pivot_row = false;
        for (int col = 0; col < k; ++col)
            if (as_pivots_[col] == r) pivot_row = true;
        if (!pivot_row && red[r] != 0) return {};
    }
    Fq z{encode(sol, p, k)};
    if (sub(frob(z), z) != a) return {};
    std::vector<Fq> out;
    for (int c = 0; c < p; ++c) out.push_back(add(z, from_int(c)));
    std::sort(out.begin(), out.end());
    return out;
}

std::string Field::to_string(Fq a) const {
    if (k_ == 1) return std::to_string(a.v);
    std::string s;
    bool first = true;
    uint8_t d[32];
    decode(a.v, p_, k_, d);
    for (int i = 0; i < k_; ++i) {
        if (!d[i]) continue;
        if (!first) s += "+";
        first = false;
        if (i == 0 || d[i] != 1) s += std::to_string(d[i]);
        if (i >= 1) {
            if (d[i] != 1) s += "*";
            s += "g";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    if (first) s = "0";
    return s;
}

// --- interning -------------------------------------------------------------

namespace {

std::vector<uint8_t> canonical_modulus(int p, int k) {
    // Smallest monic irreducible of degree k over GF(p), ordering candidates
    // by the integer code sum(c_i p^i) of the non-leading coefficients.
    uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= static_cast<uint64_t>(p);
    for (uint64_t code = 0; code < count; ++code) {
        std::vector<int> c(k + 1, 0);
        uint64_t v = code;
        for (int i = 0; i < k; ++i) {
            c[i] = static_cast<int>(v % p);
            v /= p;
        }
        c[k] = 1;
        if (poly_is_irreducible_prime_field(p, c)) {
            std::vector<uint8_t> out(k + 1);
            for (int i = 0; i <= k; ++i) out[i] = static_cast<uint8_t>(c[i]);
            return out;
        }
    }
    throw error("no irreducible modulus found");
}

struct Registry {
    std::map<std::pair<int, int>, std::unique_ptr<Field>> canonical;
    std::map<std::tuple<int, int, std::vector<uint8_t>>, std::unique_ptr<Field>> custom;
    std::map<std::pair<const Field*, const Field*>, std::unique_ptr<FieldEmbedding>> embeddings;
};

Registry& registry() {
    static Registry r;
    return r;
}

} // namespace

const Field& Field::get(int p, int k) {
    if (!is_prime(p)) throw error("p must be prime");
    if (k < 1 || k > 32) throw guard_error("extension degree out of range");
    auto& reg = registry();
    auto it = reg.canonical.find({p, k});
    if (it != reg.canonical.end()) return *it->second;
    std::vector<uint8_t> mod;
    if (k > 1) mod = canonical_modulus(p, k);
    auto f = std::unique_ptr<Field>(new Field(p, k, std::move(mod)));
    auto& ref = *f;
    reg.canonical.emplace(std::make_pair(p, k), std::move(f));
    return ref;
}

const Field& Field::get(int p, int k, const std::vector<int>& modulus_low_to_high) {
    if (!is_prime(p)) throw error("p must be prime");
    if (k < 1) throw error("k must be positive");
    if (static_cast<int>(modulus_low_to_high.size()) != k + 1 || modulus_low_to_high[k] != 1)
        throw error("modulus must be monic of degree k");
    std::vector<int> c = modulus_low_to_high;
    for (auto& x : c) x = ((x % p) + p) % p;
    if (!poly_is_irreducible_prime_field(p, c)) throw error("modulus is reducible");
    std::vector<uint8_t> mod(c.begin(), c.end());
    auto& reg = registry();
    auto key = std::make_tuple(p, k, mod);
    auto it = reg.custom.find(key);
    if (it != reg.custom.end()) return *it->second;
    auto f = std::unique_ptr<Field>(new Field(p, k, mod));
    auto& ref = *f;
    reg.custom.emplace(std::move(key), std::move(f));
    return ref;
}

FieldEmbedding::FieldEmbedding(const Field* from, const Field* into) : from_(from), into_(into) {
    if (from->p() != into->p() || into->k() % from->k() != 0)
        throw error("no embedding between these fields");
    Fq root;
    if (from->k() == 1) {
        root = into->zero(); // unused
    } else {
        // smallest root of the subfield modulus in the big field
        Poly m(*into);
        std::vector<Fq> cs;
        for (auto c : from->modulus()) cs.push_back(into->from_int(c));
        m = Poly(*into, cs);
        bool found = false;
        for (uint64_t code = 0; code < into->q(); ++code) {
            Fq x = into->from_code(code);
            if (into->is_zero(m.eval(x))) {
                root = x;
                found = true;
                break;
            }
        }
        if (!found) throw error("subfield modulus has no root in the extension");
    }
    gen_pows_.assign(from->k(), into->one());
    for (int i = 1; i < from->k(); ++i) gen_pows_[i] = into->mul(gen_pows_[i - 1], root);
}

Fq FieldEmbedding::map(Fq a) const {
    Fq out = into_->zero();
    for (int i = 0; i < from_->k(); ++i) {
        int d = from_->digit(a, i);
        if (d) out = into_->add(out, into_->mul(into_->from_int(d), gen_pows_[i]));
    }
    return out;
}

const FieldEmbedding& Field::embedding_from(const Field& subfield) const {
    auto& reg = registry();
    auto key = std::make_pair(&subfield, this);
    auto it = reg.embeddings.find(key);
    if (it != reg.embeddings.end()) return *it->second;
    auto e = std::unique_ptr<FieldEmbedding>(new FieldEmbedding(&subfield, this));
    auto& ref = *e;
    reg.embeddings.emplace(key, std::move(e));
    return ref;
}

} // namespace curve3
