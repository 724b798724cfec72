#include "curve3/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace curve3 {

// --- elements ----------------------------------------------------------------

GroupElement ge_identity_like(const GroupElement& g) {
    if (std::holds_alternative<Perm>(g)) {
        Perm id;
        id.img.resize(std::get<Perm>(g).img.size());
        std::iota(id.img.begin(), id.img.end(), 0);
        return id;
    }
    AffineMap id;
    id.d = std::get<AffineMap>(g).d;
    for (int i = 0; i < id.d; ++i) id.A[i][i] = 1;
    return id;
}

GroupElement ge_compose(const GroupElement& f, const GroupElement& g) {
    if (std::holds_alternative<Perm>(f)) {
        const Perm& a = std::get<Perm>(f);
        const Perm& b = std::get<Perm>(g);
        if (a.img.size() != b.img.size()) throw error("permutation domains differ");
        Perm c;
        c.img.resize(a.img.size());
        for (size_t i = 0; i < a.img.size(); ++i) c.img[i] = a.img[b.img[i]];
        return c;
    }
    const AffineMap& a = std::get<AffineMap>(f);
    const AffineMap& b = std::get<AffineMap>(g);
    if (a.d != b.d) throw error("affine dimensions differ");
    AffineMap c;
    c.d = a.d;
    // (f o g)(v) = A_f (A_g v + b_g) + b_f
    for (int i = 0; i < a.d; ++i)
        for (int j = 0; j < a.d; ++j) {
            int s = 0;
            for (int l = 0; l < a.d; ++l) s += a.A[i][l] * b.A[l][j];
            c.A[i][j] = static_cast<uint8_t>(s % 3);
        }
    for (int i = 0; i < a.d; ++i) {
        int s = a.b[i];
        for (int l = 0; l < a.d; ++l) s += a.A[i][l] * b.b[l];
        c.b[i] = static_cast<uint8_t>(s % 3);
    }
    return c;
}

namespace {

std::array<std::array<uint8_t, 5>, 5> invert_gl3(const std::array<std::array<uint8_t, 5>, 5>& A,
                                                 int d) {
    int aug[5][10];
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) aug[i][j] = A[i][j] % 3;
        for (int j = 0; j < d; ++j) aug[i][d + j] = (i == j);
    }
    for (int col = 0; col < d; ++col) {
        int pv = -1;
        for (int r = col; r < d; ++r)
            if (aug[r][col]) { pv = r; break; }
        if (pv < 0) throw error("affine map is not invertible");
        for (int c = 0; c < 2 * d; ++c) std::swap(aug[pv][c], aug[col][c]);
        int inv = aug[col][col] == 1 ? 1 : 2;
        for (int c = 0; c < 2 * d; ++c) aug[col][c] = aug[col][c] * inv % 3;
        for (int r = 0; r < d; ++r) {
            if (r == col || !aug[r][col]) continue;
            int f = aug[r][col];
            for (int c = 0; c < 2 * d; ++c) aug[r][c] = (aug[r][c] + (3 - f) * aug[col][c]) % 3;
        }
    }
    std::array<std::array<uint8_t, 5>, 5> out{};
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out[i][j] = static_cast<uint8_t>(aug[i][d + j]);
    return out;
}

} // namespace

GroupElement ge_inverse(const GroupElement& g) {
    if (std::holds_alternative<Perm>(g)) {
        const Perm& a = std::get<Perm>(g);
        Perm b;
        b.img.resize(a.img.size());
        for (size_t i = 0; i < a.img.size(); ++i) b.img[a.img[i]] = static_cast<uint16_t>(i);
        return b;
    }
    const AffineMap& a = std::get<AffineMap>(g);
    AffineMap b;
    b.d = a.d;
    b.A = invert_gl3(a.A, a.d);
    for (int i = 0; i < a.d; ++i) {
        int s = 0;
        for (int l = 0; l < a.d; ++l) s += b.A[i][l] * a.b[l];
        b.b[i] = static_cast<uint8_t>((3 - s % 3) % 3);
    }
    return b;
}

bool ge_is_identity(const GroupElement& g) { return g == ge_identity_like(g); }

std::string ge_to_string(const GroupElement& g) {
    std::ostringstream os;
    if (std::holds_alternative<Perm>(g)) {
        const Perm& p = std::get<Perm>(g);
        std::vector<bool> seen(p.img.size(), false);
        bool any = false;
        for (size_t i = 0; i < p.img.size(); ++i) {
            if (seen[i] || p.img[i] == i) continue;
            os << "(";
            size_t j = i;
            bool first = true;
            while (!seen[j]) {
                seen[j] = true;
                if (!first) os << " ";
                first = false;
                os << j;
                j = p.img[j];
            }
            os << ")";
            any = true;
        }
        if (!any) os << "()";
    } else {
        const AffineMap& m = std::get<AffineMap>(g);
        os << "[A=";
        for (int i = 0; i < m.d; ++i) {
            os << (i ? ";" : "");
            for (int j = 0; j < m.d; ++j) os << int(m.A[i][j]);
        }
        os << " b=";
        for (int i = 0; i < m.d; ++i) os << int(m.b[i]);
        os << "]";
    }
    return os.str();
}

Perm affine_to_perm(const AffineMap& m) {
    int n = 1;
    for (int i = 0; i < m.d; ++i) n *= 3;
    Perm p;
    p.img.resize(n);
    for (int code = 0; code < n; ++code) {
        int v[5], w[5];
        int c = code;
        for (int i = 0; i < m.d; ++i) {
            v[i] = c % 3;
            c /= 3;
        }
        for (int i = 0; i < m.d; ++i) {
            int s = m.b[i];
            for (int j = 0; j < m.d; ++j) s += m.A[i][j] * v[j];
            w[i] = s % 3;
        }
        int out = 0;
        for (int i = m.d - 1; i >= 0; --i) out = out * 3 + w[i];
        p.img[code] = static_cast<uint16_t>(out);
    }
    return p;
}

// --- group closure -------------------------------------------------------------

Group Group::closure(const std::vector<GroupElement>& gens) {
    if (gens.empty()) throw error("closure needs at least one generator");
    for (const auto& g : gens) {
        if (std::holds_alternative<Perm>(g) && std::get<Perm>(g).img.size() > 1024)
            throw guard_error("permutation domain exceeds 1024 points");
        if (std::holds_alternative<AffineMap>(g) && std::get<AffineMap>(g).d > 5)
            throw guard_error("affine dimension exceeds 5");
    }
    GroupElement id = ge_identity_like(gens[0]);
    std::set<GroupElement> seen{id};
    std::vector<GroupElement> queue{id};
    for (size_t head = 0; head < queue.size(); ++head) {
        GroupElement cur = queue[head];
        for (const auto& g : gens) {
            GroupElement nxt = ge_compose(cur, g);
            if (seen.insert(nxt).second) {
                if (seen.size() > kOrderGuard)
                    throw guard_error("group closure exceeds the 3^6 enumeration guard");
                queue.push_back(std::move(nxt));
            }
        }
    }
    Group out;
    out.elements_.assign(seen.begin(), seen.end());
    auto it = std::find(out.elements_.begin(), out.elements_.end(), id);
    std::rotate(out.elements_.begin(), it, it + 1);
    std::sort(out.elements_.begin() + 1, out.elements_.end());
    out.gens_ = gens;
    out.build_tables();
    return out;
}

void Group::build_tables() {
    int n = static_cast<int>(elements_.size());
    std::map<GroupElement, int> idx;
    for (int i = 0; i < n; ++i) idx[elements_[i]] = i;
    mul_table_.assign(static_cast<size_t>(n) * n, -1);
    inv_table_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            auto it = idx.find(ge_compose(elements_[a], elements_[b]));
            if (it == idx.end()) throw error("element set is not closed under composition");
            mul_table_[static_cast<size_t>(a) * n + b] = it->second;
            if (it->second == 0) inv_table_[a] = b;
        }
        if (inv_table_[a] < 0) throw error("element has no inverse in the set");
    }
}

int Group::index_of(const GroupElement& g) const {
    if (!elements_.empty() && elements_[0] == g) return 0;
    auto it = std::lower_bound(elements_.begin() + 1, elements_.end(), g);
    if (it != elements_.end() && *it == g) return static_cast<int>(it - elements_.begin());
    throw error("element not in group");
}

int Group::element_order(int a) const {
    int n = 1, cur = a;
    while (cur != 0) {
        cur = mul(cur, a);
        ++n;
    }
    return n;
}

long Group::exponent() const {
    long e = 1;
    for (size_t i = 0; i < order(); ++i)
        e = std::lcm(e, static_cast<long>(element_order(static_cast<int>(i))));
    return e;
}

bool Group::is_p_group(int p) const {
    size_t n = order();
    while (n % p == 0) n /= p;
    return n == 1;
}

std::map<long, long> Group::order_statistics() const {
    std::map<long, long> st;
    for (size_t i = 0; i < order(); ++i) ++st[element_order(static_cast<int>(i))];
    return st;
}

std::vector<int> Group::subgroup_closure(std::vector<int> gen_idx) const {
    std::set<int> seen{0};
    std::vector<int> queue{0};
    for (size_t head = 0; head < queue.size(); ++head) {
        for (int g : gen_idx) {
            int nxt = mul(queue[head], g);
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    return {seen.begin(), seen.end()};
}

Group Group::materialize(const std::vector<int>& idx) const {
    Group out;
    for (int i : idx) out.elements_.push_back(elements_[i]);
    std::sort(out.elements_.begin(), out.elements_.end());
    auto id = ge_identity_like(elements_[0]);
    auto it = std::find(out.elements_.begin(), out.elements_.end(), id);
    if (it == out.elements_.end()) throw error("subset does not contain the identity");
    std::rotate(out.elements_.begin(), it, it + 1);
    std::sort(out.elements_.begin() + 1, out.elements_.end());
    out.gens_ = out.elements_;
    out.build_tables();
    return out;
}

std::vector<int> Group::center_indices() const {
    std::vector<int> z;
    int n = static_cast<int>(order());
    for (int a = 0; a < n; ++a) {
        bool central = true;
        for (int b = 0; b < n && central; ++b)
            if (mul(a, b) != mul(b, a)) central = false;
        if (central) z.push_back(a);
    }
    return z;
}

std::vector<int> Group::derived_indices() const {
    int n = static_cast<int>(order());
    std::set<int> cs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) cs.insert(mul(mul(inv(a), inv(b)), mul(a, b)));
    return subgroup_closure({cs.begin(), cs.end()});
}

GroupCharacteristic Group::characteristic_subgroups(int p) const {
    if (!is_p_group(p))
        throw unsupported_error("frattini/maximal subgroups require a p-group");
    GroupCharacteristic out{materialize(center_indices()), materialize(derived_indices()), Group{}, {}};
    // A = G^p [G,G]
    std::set<int> agens;
    int n = static_cast<int>(order());
    for (int a = 0; a < n; ++a) {
        int c = a;
        for (int i = 1; i < p; ++i) c = mul(c, a);
        agens.insert(c);
    }
    for (int i : derived_indices()) agens.insert(i);
    std::vector<int> A = subgroup_closure({agens.begin(), agens.end()});
    std::set<int> Aset(A.begin(), A.end());

    // Coset ids for A in G; V = G/A is elementary abelian.
    std::vector<int> coset_of(n, -1);
    std::vector<int> coset_rep;
    for (int a = 0; a < n; ++a) {
        if (coset_of[a] >= 0) continue;
        int id = static_cast<int>(coset_rep.size());
        coset_rep.push_back(a);
        for (int h : A) coset_of[mul(a, h)] = id;
    }
    int m = static_cast<int>(coset_rep.size());
    // coordinates of each coset w.r.t. a greedy basis of V
    std::vector<std::vector<int>> coords(m);
    std::vector<bool> known(m, false);
    known[coset_of[0]] = true;
    std::vector<int> basis;
    std::vector<int> known_list{coset_of[0]};
    for (int c = 0; c < m; ++c) {
        if (known[c]) continue;
        basis.push_back(c);
        size_t r = basis.size();
        std::vector<int> snapshot = known_list;
        for (int x : snapshot) {
            int acc = x;
            for (int e = 1; e < p; ++e) {
                acc = coset_of[mul(coset_rep[acc], coset_rep[c])];
                if (!known[acc]) {
                    auto co = coords[x];
                    co.resize(r, 0);
                    co[r - 1] = e;
                    coords[acc] = co;
                    known[acc] = true;
                    known_list.push_back(acc);
                }
            }
        }
    }
    int r = static_cast<int>(basis.size());
    for (auto& co : coords) co.resize(r, 0);

    std::vector<std::vector<int>> functionals;
    {
        int total = 1;
        for (int i = 0; i < r; ++i) total *= p;
        for (int code = 1; code < total; ++code) {
            std::vector<int> f(r, 0);
            int v = code;
            for (int i = 0; i < r; ++i) {
                f[i] = v % p;
                v /= p;
            }
            int lead = 0;
            while (f[lead] == 0) ++lead;
            if (f[lead] != 1) continue;
            functionals.push_back(std::move(f));
        }
    }
    std::vector<int> inter;
    for (int a = 0; a < n; ++a) inter.push_back(a);
    for (const auto& fun : functionals) {
        std::vector<int> sub;
        for (int a = 0; a < n; ++a) {
            const auto& co = coords[coset_of[a]];
            int s = 0;
            for (int i = 0; i < r; ++i) s += fun[i] * co[i];
            if (s % p == 0) sub.push_back(a);
        }
        out.maximal_subgroups.push_back(materialize(sub));
        std::vector<int> keep;
        std::set<int> subset(sub.begin(), sub.end());
        for (int a : inter)
            if (subset.count(a)) keep.push_back(a);
        inter = std::move(keep);
    }
    // Frattini two ways: intersection of maximals vs G^p[G,G].
    std::vector<int> asorted = A;
    std::sort(asorted.begin(), asorted.end());
    std::sort(inter.begin(), inter.end());
    if (inter != asorted) throw error("Frattini mismatch: intersection of maximals != G^p[G,G]");
    out.frattini = materialize(inter);
    return out;
}

int Group::nilpotency_class() const {
    int n = static_cast<int>(order());
    std::vector<int> cur(n);
    std::iota(cur.begin(), cur.end(), 0);
    int cls = 0;
    while (cur.size() > 1) {
        std::set<int> gens;
        for (int a = 0; a < n; ++a)
            for (int b : cur) gens.insert(mul(mul(inv(a), inv(b)), mul(a, b)));
        std::vector<int> nxt = subgroup_closure({gens.begin(), gens.end()});
        ++cls;
        if (nxt.size() == cur.size()) throw error("lower central series stalled (not nilpotent)");
        cur = std::move(nxt);
        if (cls > 64) throw error("nilpotency class runaway");
    }
    return cls;
}

bool Group::is_maximal_class(int p) const {
    if (!is_p_group(p)) throw unsupported_error("maximal class is defined for p-groups");
    size_t q = order();
    int n = 0;
    while (q > 1) {
        q /= p;
        ++n;
    }
    if (n < 3) throw unsupported_error("maximal class needs |G| >= p^3");
    return nilpotency_class() == n - 1;
}

std::vector<int> Group::minimal_generators() const {
    int n = static_cast<int>(order());
    if (n == 1) return {0};
    for (int p : {3, 2, 5, 7}) {
        if (!is_p_group(p)) continue;
        // Burnside: lifts of a basis of G/Phi(G) generate.
        std::set<int> agens;
        for (int a = 0; a < n; ++a) {
            int c = a;
            for (int i = 1; i < p; ++i) c = mul(c, a);
            agens.insert(c);
        }
        for (int i : derived_indices()) agens.insert(i);
        std::vector<int> closure = subgroup_closure({agens.begin(), agens.end()});
        std::set<int> have(closure.begin(), closure.end());
        std::vector<int> gens;
        std::vector<int> closure_gens(closure.begin(), closure.end());
        while (static_cast<int>(have.size()) < n) {
            int pick = -1;
            for (int a = 1; a < n; ++a)
                if (!have.count(a)) { pick = a; break; }
            gens.push_back(pick);
            closure_gens.push_back(pick);
            std::vector<int> cl = subgroup_closure(closure_gens);
            have = std::set<int>(cl.begin(), cl.end());
        }
        return gens;
    }
    // general small groups: lexicographically first generating tuple, extending
    // only with elements outside the current closure
    std::vector<int> tuple;
    std::vector<int> stack_next{1};
    while (true) {
        if (!tuple.empty() && subgroup_closure(tuple).size() == order()) return tuple;
        if (static_cast<int>(tuple.size()) < 4) {
            std::vector<int> cl = tuple.empty() ? std::vector<int>{0} : subgroup_closure(tuple);
            std::set<int> have(cl.begin(), cl.end());
            int start = tuple.empty() ? 1 : tuple.back() + 1;
            int pick = -1;
            for (int a = start; a < n; ++a)
                if (!have.count(a)) { pick = a; break; }
            if (pick >= 0) {
                tuple.push_back(pick);
                continue;
            }
        }
        // backtrack
        while (!tuple.empty()) {
            int last = tuple.back();
            tuple.pop_back();
            std::vector<int> cl = tuple.empty() ? std::vector<int>{0} : subgroup_closure(tuple);
            std::set<int> have(cl.begin(), cl.end());
            int pick = -1;
            for (int a = last + 1; a < n; ++a)
                if (!have.count(a)) { pick = a; break; }
            if (pick >= 0) {
                tuple.push_back(pick);
                break;
            }
        }
        if (tuple.empty()) throw unsupported_error("no generating tuple found");
    }
}

Group::Fingerprint Group::fingerprint() const {
    Fingerprint fp;
    fp.order = order();
    for (auto& [o, c] : order_statistics()) fp.order_stats.emplace_back(o, c);
    int n = static_cast<int>(order());
    std::vector<bool> seen(n, false);
    std::vector<long> sizes;
    for (int a = 0; a < n; ++a) {
        if (seen[a]) continue;
        std::set<int> cls;
        for (int g = 0; g < n; ++g) cls.insert(mul(mul(inv(g), a), g));
        for (int x : cls) seen[x] = true;
        sizes.push_back(static_cast<long>(cls.size()));
    }
    std::sort(sizes.begin(), sizes.end());
    fp.class_sizes = sizes;
    fp.center_order = static_cast<long>(center_indices().size());
    fp.derived_order = static_cast<long>(derived_indices().size());
    return fp;
}

// --- isomorphism ----------------------------------------------------------------

namespace {

std::vector<long> class_size_of_elements(const Group& g) {
    int n = static_cast<int>(g.order());
    std::vector<long> cs(n, 0);
    for (int a = 0; a < n; ++a) {
        long cent = 0;
        for (int x = 0; x < n; ++x)
            if (g.mul(a, x) == g.mul(x, a)) ++cent;
        cs[a] = n / cent;
    }
    return cs;
}

// Attempt to extend gens -> imgs to a homomorphism by BFS over the Cayley
// graph; every cross edge is checked, which forces the relations.
std::optional<std::vector<int>> extend_hom(const Group& g, const std::vector<int>& gens,
                                           const Group& h, const std::vector<int>& imgs) {
    int n = static_cast<int>(g.order());
    std::vector<int> phi(n, -1);
    phi[0] = 0;
    std::vector<int> queue{0};
    for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (size_t i = 0; i < gens.size(); ++i) {
            int y = g.mul(x, gens[i]);
            int im = h.mul(phi[x], imgs[i]);
            if (phi[y] < 0) {
                phi[y] = im;
                queue.push_back(y);
            } else if (phi[y] != im) {
                return std::nullopt;
            }
        }
    }
    std::vector<bool> hit(n, false);
    for (int x = 0; x < n; ++x) {
        if (phi[x] < 0) return std::nullopt;
        if (hit[phi[x]]) return std::nullopt;
        hit[phi[x]] = true;
    }
    return phi;
}

} // namespace

std::optional<IsoWitness> are_isomorphic(const Group& g, const Group& h) {
    if (g.order() != h.order()) return std::nullopt;
    if (g.order() > Group::kOrderGuard) throw guard_error("isomorphism size guard exceeded");
    if (!(g.fingerprint() == h.fingerprint())) return std::nullopt;
    std::vector<int> gens = g.minimal_generators();
    int n = static_cast<int>(h.order());
    std::vector<long> gcs = class_size_of_elements(g);
    std::vector<long> hcs = class_size_of_elements(h);
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        int od = g.element_order(gens[i]);
        for (int x = 0; x < n; ++x)
            if (h.element_order(x) == od && hcs[x] == gcs[gens[i]]) candidates[i].push_back(x);
        if (candidates[i].empty()) return std::nullopt;
    }
    std::vector<int> imgs(gens.size(), -1);
    std::vector<size_t> pos(gens.size(), 0);
    size_t depth = 0;
    while (true) {
        if (depth == gens.size()) {
            if (extend_hom(g, gens, h, imgs)) {
                IsoWitness w;
                w.gen_indices = gens;
                w.image_indices = imgs;
                return w;
            }
            --depth;
            ++pos[depth];
        }
        if (pos[depth] >= candidates[depth].size()) {
            pos[depth] = 0;
            if (depth == 0) return std::nullopt;
            --depth;
            ++pos[depth];
            continue;
        }
        imgs[depth] = candidates[depth][pos[depth]];
        ++depth;
    }
}

// --- presentation parsing ----------------------------------------------------------

namespace {

struct WordParser {
    const std::string& s;
    size_t i = 0;
    const std::vector<std::string>& gens;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    int gen_index(const std::string& name) {
        for (size_t g = 0; g < gens.size(); ++g)
            if (gens[g] == name) return static_cast<int>(g) + 1;
        throw parse_error("unknown generator '" + name + "'");
    }

    long parse_int() {
        skip_ws();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw parse_error("expected integer exponent");
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    }

    static std::vector<int> inverse_word(const std::vector<int>& w) {
        std::vector<int> r;
        for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
        return r;
    }

    std::vector<int> parse_word();

    std::vector<int> parse_factor() {
        skip_ws();
        std::vector<int> base;
        if (peek() == '(') {
            ++i;
            base = parse_word();
            if (peek() != ')') throw parse_error("missing ')'");
            ++i;
        } else if (peek() == '[') {
            ++i;
            std::vector<int> u = parse_word();
            if (peek() != ',') throw parse_error("missing ',' in commutator");
            ++i;
            std::vector<int> v = parse_word();
            if (peek() != ']') throw parse_error("missing ']'");
            ++i;
            base = inverse_word(u);
            auto vi = inverse_word(v);
            base.insert(base.end(), vi.begin(), vi.end());
            base.insert(base.end(), u.begin(), u.end());
            base.insert(base.end(), v.begin(), v.end());
        } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
            std::string name;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                name += s[i++];
            base = {gen_index(name)};
        } else {
            throw parse_error(std::string("unexpected character '") + peek() + "' in word");
        }
        skip_ws();
        if (i < s.size() && s[i] == '^') {
            ++i;
            long e = parse_int();
            std::vector<int> rep = e >= 0 ? base : inverse_word(base);
            std::vector<int> out;
            for (long j = 0; j < std::llabs(e); ++j) out.insert(out.end(), rep.begin(), rep.end());
            return out;
        }
        return base;
    }
};

std::vector<int> WordParser::parse_word() {
    std::vector<int> out = parse_factor();
    while (true) {
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
            auto f = parse_factor();
            out.insert(out.end(), f.begin(), f.end());
        } else {
            break;
        }
    }
    return out;
}

} // namespace

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::istringstream in(text);
    std::string line;
    bool have_gens = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t b = line.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r\n");
        line = line.substr(b, e - b + 1);
        if (!have_gens) {
            if (line.rfind("gens:", 0) != 0)
                throw parse_error("line " + std::to_string(lineno) + ": expected 'gens: ...'");
            std::istringstream gs(line.substr(5));
            std::string name;
            while (gs >> name) p.gens.push_back(name);
            if (p.gens.empty()) throw parse_error("no generators declared");
            have_gens = true;
            continue;
        }
        auto eq = line.find('=');
        try {
            if (eq != std::string::npos) {
                std::string lhs = line.substr(0, eq), rhs = line.substr(eq + 1);
                WordParser pl{lhs, 0, p.gens};
                std::vector<int> u = pl.parse_word();
                if (!pl.eof()) throw parse_error("trailing input after word");
                size_t rb = rhs.find_first_not_of(" \t\r\n");
                size_t re = rhs.find_last_not_of(" \t\r\n");
                std::string rtrim = rb == std::string::npos ? "" : rhs.substr(rb, re - rb + 1);
                std::vector<int> v;
                if (rtrim != "1") {
                    WordParser pr{rhs, 0, p.gens};
                    v = pr.parse_word();
                    if (!pr.eof()) throw parse_error("trailing input after word");
                }
                auto vi = WordParser::inverse_word(v);
                u.insert(u.end(), vi.begin(), vi.end());
                p.relators.push_back(std::move(u));
            } else {
                WordParser pw{line, 0, p.gens};
                p.relators.push_back(pw.parse_word());
                if (!pw.eof()) throw parse_error("trailing input after word");
            }
        } catch (const parse_error& ex) {
            throw parse_error("line " + std::to_string(lineno) + ": " + ex.what());
        }
        p.relator_text.push_back(line);
    }
    if (!have_gens) throw parse_error("empty presentation");
    return p;
}

// --- Todd-Coxeter -------------------------------------------------------------------

namespace {

class CosetTable {
public:
    CosetTable(int ngens, size_t ceiling) : ngens_(ngens), ceiling_(ceiling) { add_coset(); }

    int cols() const { return 2 * ngens_; }
    static int col_of(int signed_gen) {
        return signed_gen > 0 ? 2 * (signed_gen - 1) : 2 * (-signed_gen - 1) + 1;
    }
    static int inv_col(int col) { return col ^ 1; }

    int get(int coset, int col) const { return table_[coset][col]; }

    int rep(int c) {
        while (parent_[c] != c) {
            parent_[c] = parent_[parent_[c]];
            c = parent_[c];
        }
        return c;
    }

    void define(int from, int col) {
        from = rep(from);
        int c = add_coset();
        install(from, col, c);
        process_merges();
    }

    void deduce(int a, int col, int b) {
        install(rep(a), col, rep(b));
        process_merges();
    }

    size_t defined_count() const { return parent_.size(); }

    void scan_and_fill(int coset, const std::vector<int>& word) {
        while (true) {
            coset = rep(coset);
            int f = coset;
            size_t fi = 0;
            while (fi < word.size()) {
                int nx = table_[f][col_of(word[fi])];
                if (nx < 0) break;
                f = rep(nx);
                ++fi;
            }
            if (fi == word.size()) {
                if (f != coset) {
                    merge(f, coset);
                    process_merges();
                    continue;
                }
                return;
            }
            int b = coset;
            size_t bi = word.size();
            while (bi > fi) {
                int nx = table_[b][inv_col(col_of(word[bi - 1]))];
                if (nx < 0) break;
                b = rep(nx);
                --bi;
            }
            if (bi == fi) {
                if (f != b) {
                    merge(f, b);
                    process_merges();
                    continue;
                }
                return;
            }
            if (bi == fi + 1) {
                deduce(f, col_of(word[fi]), b);
                continue;
            }
            define(f, col_of(word[fi]));
        }
    }

    std::vector<int> compact_map() {
        std::vector<int> live;
        for (size_t c = 0; c < parent_.size(); ++c)
            if (rep(static_cast<int>(c)) == static_cast<int>(c)) live.push_back(static_cast<int>(c));
        std::vector<int> newid(parent_.size(), -1);
        for (size_t i = 0; i < live.size(); ++i) newid[live[i]] = static_cast<int>(i);
        compact_live_ = live;
        return newid;
    }
    const std::vector<int>& live() const { return compact_live_; }

private:
    int add_coset() {
        if (parent_.size() >= ceiling_)
            throw guard_error("coset ceiling exceeded; enumeration inconclusive");
        parent_.push_back(static_cast<int>(parent_.size()));
        table_.emplace_back(cols(), -1);
        return static_cast<int>(parent_.size()) - 1;
    }

    // install a <-> b transitions for reps a, b; queue coincidences
    void install(int a, int col, int b) {
        int ex = table_[a][col];
        if (ex >= 0) {
            if (rep(ex) != b) merge(rep(ex), b);
            return;
        }
        table_[a][col] = b;
        int back = table_[b][inv_col(col)];
        if (back >= 0) {
            if (rep(back) != a) merge(rep(back), a);
        } else {
            table_[b][inv_col(col)] = a;
        }
    }

    void merge(int a, int b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        merge_queue_.push_back(b);
    }

    void process_merges() {
        while (!merge_queue_.empty()) {
            int dead = merge_queue_.back();
            merge_queue_.pop_back();
            int live = rep(dead);
            for (int col = 0; col < cols(); ++col) {
                int t = table_[dead][col];
                if (t < 0) continue;
                table_[dead][col] = -1;
                install(live, col, rep(t));
                live = rep(live); // live itself may have merged
            }
        }
    }

    int ngens_;
    size_t ceiling_;
    std::vector<std::vector<int>> table_;
    std::vector<int> parent_;
    std::vector<int> merge_queue_;
    std::vector<int> compact_live_;
};

} // namespace

Group todd_coxeter(const Presentation& pres, size_t coset_ceiling) {
    if (pres.relators.empty())
        throw guard_error("free presentation: enumeration cannot terminate");
    int ngens = static_cast<int>(pres.gens.size());
    CosetTable t(ngens, coset_ceiling);
    size_t next = 0;
    while (next < t.defined_count()) {
        int c = static_cast<int>(next);
        ++next;
        if (t.rep(c) != c) continue;
        for (const auto& rel : pres.relators) {
            t.scan_and_fill(c, rel);
            if (t.rep(c) != c) break;
        }
        if (t.rep(c) != c) continue;
        // row filling keeps the table complete
        for (int col = 0; col < t.cols(); ++col) {
            if (t.rep(c) != c) break;
            if (t.get(c, col) < 0) t.define(c, col);
        }
    }
    std::vector<int> newid = t.compact_map();
    size_t n = t.live().size();
    if (n > 1024) throw guard_error("enumerated index exceeds the permutation domain bound");
    std::vector<GroupElement> gens;
    for (int g = 1; g <= ngens; ++g) {
        Perm p;
        p.img.resize(n);
        for (size_t i = 0; i < n; ++i) {
            int from = t.live()[i];
            int to = t.get(from, CosetTable::col_of(g));
            if (to < 0) throw error("incomplete coset table after enumeration");
            p.img[i] = static_cast<uint16_t>(newid[t.rep(to)]);
        }
        gens.push_back(p);
    }
    Group g = Group::closure(gens);
    if (g.order() != n)
        throw error("coset count disagrees with the closure of the induced permutations");
    return g;
}

// --- presets --------------------------------------------------------------------------

namespace {

AffineMap linear3(std::initializer_list<std::initializer_list<int>> rows) {
    AffineMap m;
    m.d = static_cast<int>(rows.size());
    int i = 0;
    for (auto& r : rows) {
        int j = 0;
        for (int v : r) m.A[i][j++] = static_cast<uint8_t>(((v % 3) + 3) % 3);
        ++i;
    }
    return m;
}

Perm cycle_perm(int n, std::initializer_list<std::initializer_list<int>> cycles) {
    Perm p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    for (auto& c : cycles) {
        std::vector<int> v(c);
        for (size_t i = 0; i < v.size(); ++i)
            p.img[v[i]] = static_cast<uint16_t>(v[(i + 1) % v.size()]);
    }
    return p;
}

const char* kS81_9 =
    "gens: a b c\n"
    "a^9\nb^3\nc^3\n"
    "a*b = b*a\n"
    "c*a*c^-1 = a*b^-1\n"
    "c*b*c^-1 = a^3*b\n";

const char* kS81_8 =
    "gens: a b c\n"
    "a^9\nb^3\nc^3\n"
    "a*b = b*a\n"
    "c*a*c^-1 = a*b\n"
    "c*b*c^-1 = a^3*b\n";

} // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"UT33",     "C3wrC3",  "S81_8", "S81_9",
                                                   "C9semiC3", "C3cubed", "C9xC3", "D12",
                                                   "GL23"};
    return names;
}

Group preset_group(const std::string& name) {
    if (name == "UT33") {
        AffineMap e12 = linear3({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
        AffineMap e23 = linear3({{1, 0, 0}, {0, 1, 1}, {0, 0, 1}});
        return Group::closure({e12, e23});
    }
    if (name == "C3wrC3") {
        Perm base = cycle_perm(9, {{0, 1, 2}});
        Perm top = cycle_perm(9, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
        return Group::closure({base, top});
    }
    if (name == "S81_8") return todd_coxeter(parse_presentation(kS81_8));
    if (name == "S81_9") return todd_coxeter(parse_presentation(kS81_9));
    if (name == "C9semiC3")
        return todd_coxeter(parse_presentation("gens: a b\na^9\nb^3\nb*a*b^-1 = a^4\n"));
    if (name == "C3cubed")
        return Group::closure({cycle_perm(9, {{0, 1, 2}}), cycle_perm(9, {{3, 4, 5}}),
                               cycle_perm(9, {{6, 7, 8}})});
    if (name == "C9xC3")
        return Group::closure(
            {cycle_perm(12, {{0, 1, 2, 3, 4, 5, 6, 7, 8}}), cycle_perm(12, {{9, 10, 11}})});
    if (name == "D12") {
        Perm r = cycle_perm(6, {{0, 1, 2, 3, 4, 5}});
        Perm s;
        s.img = {0, 5, 4, 3, 2, 1};
        return Group::closure({r, s});
    }
    if (name == "GL23") {
        AffineMap a = linear3({{1, 1}, {0, 1}});
        AffineMap b = linear3({{0, 2}, {1, 0}});
        return Group::closure({a, b});
    }
    throw error("unknown preset group '" + name + "'");
}

std::optional<std::string> classify_against_presets(const Group& g) {
    for (const auto& name : preset_names()) {
        Group p = preset_group(name);
        if (p.order() != g.order()) continue;
        if (are_isomorphic(g, p)) return name;
    }
    return std::nullopt;
}

} // namespace curve3
