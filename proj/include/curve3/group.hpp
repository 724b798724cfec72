#ifndef CURVE3_GROUP_HPP
#define CURVE3_GROUP_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "curve3/errors.hpp"

namespace curve3 {

// Permutation on points 0..n-1.
struct Perm {
    std::vector<uint16_t> img;
    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;
};

// Affine map v -> A v + b on GF(3)^d, d <= 5; A invertible.
struct AffineMap {
    int d = 0;
    std::array<std::array<uint8_t, 5>, 5> A{};
    std::array<uint8_t, 5> b{};
    friend bool operator==(const AffineMap&, const AffineMap&) = default;
    friend auto operator<=>(const AffineMap&, const AffineMap&) = default;
};

using GroupElement = std::variant<Perm, AffineMap>;

GroupElement ge_identity_like(const GroupElement& g);
GroupElement ge_compose(const GroupElement& f, const GroupElement& g); // f after g
GroupElement ge_inverse(const GroupElement& g);
bool ge_is_identity(const GroupElement& g);
std::string ge_to_string(const GroupElement& g);

Perm affine_to_perm(const AffineMap& m); // action on all 3^d points

struct GroupCharacteristic;

// Exhaustively enumerated finite group. Elements are sorted canonically;
// index 0 is the identity. Guarded at order <= 3^6 = 729.
class Group {
public:
    static constexpr size_t kOrderGuard = 729;

    static Group closure(const std::vector<GroupElement>& gens);

    size_t order() const { return elements_.size(); }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const std::vector<GroupElement>& generators() const { return gens_; }

    int mul(int a, int b) const { return mul_table_[a * static_cast<int>(order()) + b]; }
    int inv(int a) const { return inv_table_[a]; }
    int index_of(const GroupElement& g) const;
    int element_order(int a) const;
    long exponent() const;

    bool is_p_group(int p) const;

    // order -> count, counts sum to |G|
    std::map<long, long> order_statistics() const;

    std::vector<int> subgroup_closure(std::vector<int> gen_idx) const; // sorted indices
    Group materialize(const std::vector<int>& idx) const;              // subset as standalone group

    std::vector<int> center_indices() const;
    std::vector<int> derived_indices() const;

    // For p-groups (frattini/maximals need that); throws unsupported_error otherwise.
    GroupCharacteristic characteristic_subgroups(int p = 3) const;

    // Lower central series length; maximal class means class == n-1 for |G| = p^n.
    int nilpotency_class() const;
    bool is_maximal_class(int p = 3) const;

    // Deterministic minimal generating tuple (indices).
    std::vector<int> minimal_generators() const;

    struct Fingerprint {
        size_t order;
        std::vector<std::pair<long, long>> order_stats;
        std::vector<long> class_sizes; // sorted conjugacy class sizes
        long center_order, derived_order;
        bool operator==(const Fingerprint&) const = default;
    };
    Fingerprint fingerprint() const;

private:
    std::vector<GroupElement> elements_;
    std::vector<GroupElement> gens_;
    std::vector<int> mul_table_;
    std::vector<int> inv_table_;
    void build_tables();
};

struct GroupCharacteristic {
    Group center;
    Group derived;
    Group frattini;
    std::vector<Group> maximal_subgroups;
};

// Witness homomorphism: images of G's minimal generators in H.
struct IsoWitness {
    std::vector<int> gen_indices;   // generators in G
    std::vector<int> image_indices; // their images in H
};

std::optional<IsoWitness> are_isomorphic(const Group& g, const Group& h);

// --- finitely presented groups ----------------------------------------------

struct Presentation {
    std::vector<std::string> gens;
    std::vector<std::vector<int>> relators; // signed generator indices, 1-based
    std::vector<std::string> relator_text;
};

// Text format: first line `gens: a b c`, then one relator (or equality u = v)
// per line; words use `*`, `^` with integer exponents and `[x,y]` commutators.
Presentation parse_presentation(const std::string& text);

// Coset enumeration over the trivial subgroup (HLT). Returns the group as
// permutations on the compacted coset table; order = number of cosets.
// Throws guard_error once more than `coset_ceiling` cosets have been defined.
Group todd_coxeter(const Presentation& pres, size_t coset_ceiling = 100000);

// --- preset catalog -----------------------------------------------------------

// Names: UT33, C3wrC3, S81_8, S81_9, C9semiC3, C3cubed, C9xC3, D12, GL23.
Group preset_group(const std::string& name);

const std::vector<std::string>& preset_names();

// Name of the isomorphic preset, if any.
std::optional<std::string> classify_against_presets(const Group& g);

} // namespace curve3

#endif
