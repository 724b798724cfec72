#ifndef CURVE3_COVER_HPP
#define CURVE3_COVER_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "curve3/errors.hpp"

namespace curve3 {

using BigInt = boost::multiprecision::cpp_int;

// One short orbit of a Galois p-cover: orbit length, and the ramification
// filtration at a point of it as group orders |S_P^(0)|, |S_P^(1)|, ...,
// listed down to (but not including) the terminal 1.
struct ShortOrbit {
    BigInt length;
    std::vector<BigInt> jumps;

    BigInt stabilizer_order(const BigInt& group_order) const { return group_order / length; }
    BigInt different_exponent() const; // sum of (jumps[i] - 1)
};

// Abstract ramification bookkeeping for a Galois p-cover X -> X/S.
struct CoverData {
    BigInt group_order;
    BigInt base_genus;
    BigInt base_prank;
    std::vector<ShortOrbit> orbits;

    void validate(int p = 3) const;

    static CoverData from_json_text(const std::string& text);
    std::string to_json_text() const;
};

// Genus from 2g - 2 = |S|(2g_bar - 2) + sum_i l_i * d_i. Throws
// inconsistent_data_error on parity violation or negative genus.
BigInt hurwitz_genus(const CoverData& c, int p = 3);

// p-rank from gamma - 1 = |S|(gamma_bar - 1) + sum_i (|S| - l_i).
BigInt dsh_prank(const CoverData& c, int p = 3);

struct BoundReport {
    BigInt stichtenoth_total;            // floor(4p/(p-1) * g^2)
    std::optional<BigInt> point_stabilizer; // floor(p/(p-1) * g), when fixes_point
    std::optional<BigInt> nakajima;      // floor(p/(p-2) * (gamma-1)) for gamma > 1
    bool nakajima_divisibility_case = false; // gamma == 1: |S| must divide g - 1
    bool nakajima_inapplicable = false;  // gamma == 0
    BigInt large_group_threshold;        // 2(g - 1)

    std::optional<bool> exceeds_threshold;  // filled when a group order is supplied
    std::optional<bool> attains_nakajima;
};

BoundReport bound_report(const BigInt& g, const BigInt& gamma, int p, bool fixes_point,
                         std::optional<BigInt> group_order = std::nullopt);

// Exhaustive solutions of p^m + p^r < p^h < 2(p^m + p^r) with h > m >= r > 0.
struct OrbitNumerology {
    int h;
    std::vector<std::pair<int, int>> solutions; // (m, r)
    BigInt l1, l2;                              // orbit lengths for the unique solution
};

OrbitNumerology short_orbit_numerology(int h, int p = 3);

} // namespace curve3

#endif
