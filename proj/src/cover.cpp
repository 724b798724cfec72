#include "curve3/cover.hpp"

#include <json.hpp>

namespace curve3 {

namespace {

BigInt pow_int(int base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace

BigInt ShortOrbit::different_exponent() const {
    BigInt d = 0;
    for (const auto& j : jumps) d += j - 1;
    return d;
}

void CoverData::validate(int p) const {
    if (group_order <= 0) throw inconsistent_data_error("group order must be positive");
    if (base_genus < 0 || base_prank < 0) throw inconsistent_data_error("negative base invariants");
    if (base_prank > base_genus)
        throw inconsistent_data_error("base p-rank exceeds base genus");
    {
        BigInt n = group_order;
        while (n % p == 0) n /= p;
        if (n != 1) throw inconsistent_data_error("group order is not a power of p");
    }
    for (const auto& o : orbits) {
        if (o.length <= 0 || group_order % o.length != 0)
            throw inconsistent_data_error("orbit length must divide the group order");
        if (o.length >= group_order)
            throw inconsistent_data_error("short orbit length must be < |S|");
        BigInt stab = group_order / o.length;
        if (o.jumps.size() < 2 || o.jumps[0] != stab || o.jumps[1] != stab)
            throw inconsistent_data_error(
                "jump sequence must start with |S_P^(0)| = |S_P^(1)| = stabilizer order");
        for (size_t i = 0; i + 1 < o.jumps.size(); ++i) {
            if (o.jumps[i + 1] > o.jumps[i] || o.jumps[i] % o.jumps[i + 1] != 0)
                throw inconsistent_data_error("jumps must be nonincreasing and divide each other");
        }
        for (const auto& j : o.jumps)
            if (j <= 1) throw inconsistent_data_error("jumps are listed down to, not including, 1");
    }
}

BigInt hurwitz_genus(const CoverData& c, int p) {
    c.validate(p);
    BigInt rhs = c.group_order * (2 * c.base_genus - 2);
    for (const auto& o : c.orbits) rhs += o.length * o.different_exponent();
    BigInt twog = rhs + 2;
    if (twog % 2 != 0)
        throw inconsistent_data_error("Hurwitz right-hand side has the wrong parity");
    BigInt g = twog / 2;
    if (g < 0) throw inconsistent_data_error("Hurwitz formula yields negative genus");
    return g;
}

BigInt dsh_prank(const CoverData& c, int p) {
    c.validate(p);
    BigInt gamma = 1 + c.group_order * (c.base_prank - 1);
    for (const auto& o : c.orbits) gamma += c.group_order - o.length;
    if (gamma < 0) throw inconsistent_data_error("Deuring-Shafarevich formula yields negative p-rank");
    return gamma;
}

BoundReport bound_report(const BigInt& g, const BigInt& gamma, int p, bool fixes_point,
                         std::optional<BigInt> group_order) {
    if (g < 2) throw inconsistent_data_error("bound_report requires g >= 2");
    if (gamma < 0 || gamma > g) throw inconsistent_data_error("requires 0 <= gamma <= g");
    BoundReport r;
    r.stichtenoth_total = (4 * p * g * g) / (p - 1);
    if (fixes_point) r.point_stabilizer = (p * g) / (p - 1);
    if (gamma > 1) {
        r.nakajima = (p * (gamma - 1)) / (p - 2);
    } else if (gamma == 1) {
        r.nakajima_divisibility_case = true;
    } else {
        r.nakajima_inapplicable = true;
    }
    r.large_group_threshold = 2 * (g - 1);
    if (group_order) {
        r.exceeds_threshold = *group_order > r.large_group_threshold;
        r.attains_nakajima = r.nakajima && *group_order == *r.nakajima;
    }
    return r;
}

OrbitNumerology short_orbit_numerology(int h, int p) {
    if (h < 2 || h > 20) throw guard_error("short_orbit_numerology requires 2 <= h <= 20");
    OrbitNumerology out;
    out.h = h;
    BigInt ph = pow_int(p, h);
    for (int m = 1; m < h; ++m)
        for (int r = 1; r <= m; ++r) {
            BigInt s = pow_int(p, m) + pow_int(p, r);
            if (s < ph && ph < 2 * s) out.solutions.emplace_back(m, r);
        }
    if (out.solutions.size() == 1) {
        out.l1 = pow_int(p, out.solutions[0].first);
        out.l2 = pow_int(p, out.solutions[0].second);
    }
    return out;
}

CoverData CoverData::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CoverData c;
    c.group_order = j.at("group_order").get<long long>();
    c.base_genus = j.at("base_genus").get<long long>();
    c.base_prank = j.at("base_prank").get<long long>();
    for (const auto& jo : j.at("orbits")) {
        ShortOrbit o;
        o.length = jo.at("length").get<long long>();
        for (const auto& jj : jo.at("jumps")) o.jumps.push_back(BigInt(jj.get<long long>()));
        c.orbits.push_back(std::move(o));
    }
    return c;
}

std::string CoverData::to_json_text() const {
    nlohmann::json j;
    j["group_order"] = group_order.convert_to<long long>();
    j["base_genus"] = base_genus.convert_to<long long>();
    j["base_prank"] = base_prank.convert_to<long long>();
    j["orbits"] = nlohmann::json::array();
    for (const auto& o : orbits) {
        nlohmann::json jo;
        jo["length"] = o.length.convert_to<long long>();
        jo["jumps"] = nlohmann::json::array();
        for (const auto& x : o.jumps) jo["jumps"].push_back(x.convert_to<long long>());
        j["orbits"].push_back(jo);
    }
    return j.dump(2);
}

} // namespace curve3
