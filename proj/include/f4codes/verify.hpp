#ifndef F4CODES_VERIFY_HPP
#define F4CODES_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "aqc.hpp"
#include "code.hpp"
#include "ext_field.hpp"
#include "perm.hpp"
#include "rs_concat.hpp"
#include "s_map.hpp"
#include "skew.hpp"
#include "wenum.hpp"

// Self-contained verification suite: every check rebuilds its own inputs,
// runs against frozen expected values or an independent recomputation, and
// reports pass/fail plus wall time against a fixed budget.

namespace f4codes::verify {

struct CheckOutcome {
    bool pass = true;
    std::string detail;
};

struct CheckResult {
    std::string name;
    bool correct = false;
    double ms = 0.0;
    double limit_ms = 0.0;   // 0 = untimed
    std::string detail;

    bool within_limit() const { return limit_ms == 0.0 || ms < limit_ms; }
    bool ok() const { return correct && within_limit(); }
};

namespace detail {

inline void expect(CheckOutcome& o, bool cond, const std::string& what) {
    if (!cond) {
        o.pass = false;
        if (!o.detail.empty()) o.detail += "; ";
        o.detail += what;
    }
}

inline F4Vec vec(std::string_view s) { return F4Vec::from_symbols(s); }

inline F4Vec random_vec(std::mt19937_64& rng, std::size_t n) {
    F4Vec v(n);
    for (std::size_t i = 0; i < n; ++i)
        v.set(i, F4::from_code(static_cast<std::uint8_t>(rng() & 3u)));
    return v;
}

inline AdditiveCode random_additive(std::mt19937_64& rng, std::size_t n, std::size_t nrows) {
    std::vector<F4Vec> rows;
    rows.reserve(nrows);
    for (std::size_t i = 0; i < nrows; ++i) rows.push_back(random_vec(rng, n));
    return AdditiveCode::from_generators(n, rows);
}

inline LinearCode repetition_code(std::size_t n) {
    F4Vec ones(n);
    for (std::size_t i = 0; i < n; ++i) ones.set(i, F4::one());
    return LinearCode::from_span(n, {ones});
}

// [4,2,3] skew-cyclic fixture, generator 1 + wX + X^2 staircased.
inline LinearCode skew_fixture_4() {
    return LinearCode::from_generators(4, {vec("10Ww"), vec("01wW")});
}

// [7,4,3] cyclic fixture, generator 1 + X + X^3.
inline LinearCode skew_fixture_7() {
    return LinearCode::from_generators(
        7, {vec("1101000"), vec("0110100"), vec("0011010"), vec("0001101")});
}

// [6,3,4] Hermitian self-dual fixture.
inline LinearCode hexacode() {
    return LinearCode::from_generators(6, {vec("1001ww"), vec("010w1w"), vec("001ww1")});
}

} // namespace detail

// 1. The doubling map on a worked pair: image values and the failure of
// GF(4)-linearity, both frozen.
inline CheckOutcome check_doubling_example() {
    using detail::vec;
    CheckOutcome o;
    F4Vec u = vec("wW");
    F4Vec su = s_apply(u);
    detail::expect(o, su == vec("wWWw"), "S((w,W)) != (w,W,W,w)");
    F4Vec s_of_scaled = s_apply(u.scaled(F4::omega()));
    detail::expect(o, s_of_scaled == vec("Ww11"), "S(w*u) != (W,w,1,1)");
    F4Vec scaled_s = su.scaled(F4::omega());
    detail::expect(o, scaled_s == vec("W11W"), "w*S(u) != (W,1,1,W)");
    detail::expect(o, !(s_of_scaled == scaled_s), "S(w*u) should differ from w*S(u)");
    if (o.pass) o.detail = "image and non-linearity witness match";
    return o;
}

// 2. Frozen cycle notations for the interleaved shift and its conjugators.
inline CheckOutcome check_permutation_fixtures() {
    CheckOutcome o;
    detail::expect(o, sigma(4).cycle_notation() == "(1,4,5,8)(2,3,6,7)",
                   "sigma(4) = " + sigma(4).cycle_notation());
    detail::expect(o, sigma_double_prime(4).cycle_notation() == "(1,8,2,7)(3,5,4,6)",
                   "sigma''(4) = " + sigma_double_prime(4).cycle_notation());
    detail::expect(o, sigma(7).cycle_notation() == "(1,4,5,8,9,12,13,2,3,6,7,10,11,14)",
                   "sigma(7) = " + sigma(7).cycle_notation());
    detail::expect(o, sigma_prime(7).cycle_notation() == "(1,14)(2,11,8,13,4,7)(3,10,9,12,5,6)",
                   "sigma'(7) = " + sigma_prime(7).cycle_notation());
    if (o.pass) o.detail = "all four cycle notations match";
    return o;
}

// 3. Order of the interleaved shift: 2n for odd n, n for even n, and the
// n-th power for odd n is the adjacent transposition product.
inline CheckOutcome check_order_law() {
    CheckOutcome o;
    for (std::size_t n = 2; n <= 16; ++n) {
        auto s = sigma(n);
        unsigned long long want = (n % 2 == 1) ? 2 * n : n;
        detail::expect(o, s.order() == want,
                       "order(sigma(" + std::to_string(n) + ")) = " + std::to_string(s.order()));
        if (n % 2 == 1)
            detail::expect(o, s.power(static_cast<long long>(n)) == tau(n),
                           "sigma(" + std::to_string(n) + ")^n != tau");
    }
    if (o.pass) o.detail = "orders and odd-power identity hold for n = 2..16";
    return o;
}

// 4. Frozen conjugated images of doubled codewords from the two fixture
// codes.
inline CheckOutcome check_worked_vectors() {
    using detail::vec;
    CheckOutcome o;

    F4Vec v4 = s_apply(vec("10Ww"));
    detail::expect(o, v4 == vec("1100WwwW"), "S((1,0,W,w)) mismatch");
    auto s4 = sigma(4);
    auto sdp4 = sigma_double_prime(4);
    detail::expect(o, induced_apply(sdp4, induced_apply(s4, v4)) == vec("11WwWw00"),
                   "composite image of the doubled [4,2,3] word mismatch");
    detail::expect(o, induced_apply(sdp4, v4) == vec("WwWw0011"),
                   "direct image of the doubled [4,2,3] word mismatch");

    F4Vec v7 = s_apply(vec("1101000"));
    detail::expect(o, v7 == vec("11110011000000"), "S((1,1,0,1,0,0,0)) mismatch");
    auto s7 = sigma(7);
    auto sp7 = sigma_prime(7);
    detail::expect(o, induced_apply(sp7, induced_apply(s7, v7)) == vec("10001011000101"),
                   "composite image of the doubled [7,4,3] word mismatch");
    detail::expect(o, induced_apply(sp7, v7) == vec("00010110001011"),
                   "direct image of the doubled [7,4,3] word mismatch");

    if (o.pass) o.detail = "all six vectors match";
    return o;
}

// 5. The conjugated doubled fixtures are shift invariant, checked codeword
// by codeword: 2-quasi-cyclic at doubled length 8, cyclic at doubled
// length 14.
inline CheckOutcome check_shift_image_structure() {
    CheckOutcome o;

    AdditiveCode s4 = s_apply_code(detail::skew_fixture_4());
    auto sdp = sigma_double_prime(4);
    std::vector<F4Vec> img4;
    for (const auto& g : s4.generators()) img4.push_back(induced_apply(sdp, g));
    AdditiveCode c8 = AdditiveCode::from_generators(8, img4);
    detail::expect(o, is_invariant_under_exhaustive(c8, index_rotation(8, 8 - 2)),
                   "conjugated doubled [4,2,3] image is not 2-quasi-cyclic");

    AdditiveCode s7 = s_apply_code(detail::skew_fixture_7());
    auto sp = sigma_prime(7);
    std::vector<F4Vec> img7;
    for (const auto& g : s7.generators()) img7.push_back(induced_apply(sp, g));
    AdditiveCode c14 = AdditiveCode::from_generators(14, img7);
    detail::expect(o, is_invariant_under_exhaustive(c14, index_rotation(14, 14 - 1)),
                   "conjugated doubled [7,4,3] image is not cyclic");

    if (o.pass) o.detail = "2^4 and 2^8 codewords stay inside under the shifts";
    return o;
}

// 6. The doubled image always lands inside its own trace dual.
inline CheckOutcome check_self_orthogonality() {
    CheckOutcome o;
    std::mt19937_64 rng(0x5EEDFACE01u);
    for (int t = 0; t < 200 && o.pass; ++t) {
        std::size_t n = 1 + rng() % 8;
        std::size_t nrows = 1 + rng() % 8;
        AdditiveCode c = detail::random_additive(rng, n, nrows);
        AdditiveCode sc = s_apply_code(c);
        detail::expect(o, is_subcode(sc, sc.trace_dual()),
                       "doubled image escapes its trace dual at trial " + std::to_string(t));
    }
    if (o.pass) o.detail = "200 random codes, n <= 8, kappa <= 8";
    return o;
}

// 7. Doubling doubles weights, per vector and for whole-code distances.
inline CheckOutcome check_weight_doubling() {
    CheckOutcome o;
    std::mt19937_64 rng(0x5EEDFACE02u);
    for (int t = 0; t < 10000 && o.pass; ++t) {
        std::size_t n = 1 + rng() % 64;
        F4Vec v = detail::random_vec(rng, n);
        detail::expect(o, s_apply(v).weight() == 2 * v.weight(),
                       "weight not doubled at trial " + std::to_string(t));
    }
    LinearCode fixtures[] = {detail::skew_fixture_4(), detail::skew_fixture_7(),
                             detail::repetition_code(4)};
    for (const auto& c : fixtures) {
        AdditiveCode a = c.additive();
        detail::expect(o, s_apply_code(a).min_distance() == 2 * a.min_distance(),
                       "code distance not doubled at length " + std::to_string(a.length()));
    }
    if (o.pass) o.detail = "10^4 vectors plus three fixture codes";
    return o;
}

// 8. Transform output against the enumerated dual distribution.
inline CheckOutcome check_macwilliams_oracle() {
    CheckOutcome o;
    std::mt19937_64 rng(0x5EEDFACE03u);
    for (int t = 0; t < 100 && o.pass; ++t) {
        std::size_t n = 1 + rng() % 6;
        std::size_t nrows = 1 + rng() % (2 * n);
        AdditiveCode c = detail::random_additive(rng, n, nrows);
        WeightEnumerator w = c.weight_enumerator();
        WeightEnumerator dual_w = c.trace_dual().weight_enumerator();
        detail::expect(o, macwilliams_transform(w, w.total()) == dual_w,
                       "transform disagrees with the enumerated dual at trial " + std::to_string(t));
    }
    if (o.pass) o.detail = "100 random codes, n <= 6, exact integer match";
    return o;
}

// 9. Low coefficients of the dual of the doubled image: (1, 0, 3n) whenever
// the primal trace dual has distance >= 3, and B2 = 3n + 4*A2' at dual
// distance exactly 2 (repetition codes).
inline CheckOutcome check_dual_b_coefficients() {
    CheckOutcome o;

    std::vector<AdditiveCode> wide_dual;
    wide_dual.push_back(detail::hexacode().additive());
    {
        LinearCode hex = detail::hexacode();
        detail::expect(o, hex.hermitian_dual() == hex, "hexacode is not Hermitian self-dual");
    }
    std::mt19937_64 rng(0x5EEDFACE04u);
    for (int t = 0; t < 2000 && wide_dual.size() < 4; ++t) {
        std::size_t n = 4 + rng() % 3;
        AdditiveCode c = detail::random_additive(rng, n, 2 * n - 4);
        AdditiveCode d = c.trace_dual();
        if (d.kappa() == 0 || c.kappa() == 0) continue;
        if (d.min_distance() >= 3) wide_dual.push_back(c);
    }
    for (const auto& c : wide_dual) {
        AdditiveCode d = c.trace_dual();
        detail::expect(o, d.kappa() > 0 && d.min_distance() >= 3, "searched fixture lost its dual distance");
        WeightEnumerator w = c.weight_enumerator();
        DualWeightData data = dual_s_image_wenum(w, w.total());
        cpp_int n3 = 3 * cpp_int(c.length());
        detail::expect(o, data.b.a[0] == 1 && data.b.a[1] == 0 && data.b.a[2] == n3,
                       "low coefficients differ from (1, 0, 3n) at n = " + std::to_string(c.length()));
        BCoeffReport rep = analyze_dual_low_coeffs(w, w.total(), d.weight_enumerator());
        detail::expect(o, rep.consistent, "coefficient report inconsistent at n = " + std::to_string(c.length()));
    }

    for (std::size_t n = 2; n <= 6; ++n) {
        AdditiveCode c = detail::repetition_code(n).additive();
        AdditiveCode d = c.trace_dual();
        detail::expect(o, d.min_distance() == 2,
                       "repetition dual distance is not 2 at n = " + std::to_string(n));
        WeightEnumerator w = c.weight_enumerator();
        WeightEnumerator dual_w = d.weight_enumerator();
        DualWeightData data = dual_s_image_wenum(w, w.total());
        cpp_int want_b2 = 3 * cpp_int(n) + 4 * dual_w.a[2];
        detail::expect(o, data.b.a[1] == 0 && data.b.a[2] == want_b2,
                       "repetition low coefficients mismatch at n = " + std::to_string(n));
    }

    if (o.pass)
        o.detail = std::to_string(wide_dual.size()) +
                   " codes with dual distance >= 3, plus repetition codes n = 2..6";
    return o;
}

// 10. First three power-moment identities against enumerated dual counts.
inline CheckOutcome check_power_moments() {
    CheckOutcome o;
    std::vector<AdditiveCode> fixtures;
    fixtures.push_back(detail::skew_fixture_4().additive());
    fixtures.push_back(detail::skew_fixture_7().additive());
    fixtures.push_back(detail::hexacode().additive());
    for (std::size_t n = 2; n <= 6; ++n)
        fixtures.push_back(detail::repetition_code(n).additive());
    std::mt19937_64 rng(0x5EEDFACE05u);
    while (fixtures.size() < 18) {
        std::size_t n = 2 + rng() % 4;
        AdditiveCode c = detail::random_additive(rng, n, 1 + rng() % (2 * n));
        fixtures.push_back(c);
    }
    for (const auto& c : fixtures) {
        WeightEnumerator w = c.weight_enumerator();
        WeightEnumerator dual_w = c.trace_dual().weight_enumerator();
        PowerMomentCheck pm = pless_power_moments(w, w.total(), dual_w.a[1], dual_w.a[2]);
        detail::expect(o, pm.all(),
                       "power moment failed at n = " + std::to_string(c.length()) +
                           " kappa = " + std::to_string(c.kappa()));
    }
    if (o.pass) o.detail = std::to_string(fixtures.size()) + " fixture codes, exact";
    return o;
}

// 11. The worked nested pair: direct derivation gives [[4,1,3/2]] at the
// Singleton bound, the doubled route gives [[8,1,6/2]] off it.
inline CheckOutcome check_nested_pipeline() {
    CheckOutcome o;
    LinearCode d4 = detail::skew_fixture_4();
    LinearCode rep = detail::repetition_code(4);
    detail::expect(o, is_subcode(rep, d4), "repetition code is not inside the [4,2,3] code");

    AqcParams direct = derive_from_nested(rep.additive().trace_dual(), d4.additive());
    detail::expect(o,
                   direct.n == 4 && direct.k_twice == 2 && direct.dz == 3 && direct.dx == 2 &&
                       direct.mds && !direct.dz_floor,
                   "direct derivation gave " + direct.to_string());

    AqcParams doubled = derive_via_s(rep, d4);
    detail::expect(o,
                   doubled.n == 8 && doubled.k_twice == 2 && doubled.dz == 6 && doubled.dx == 2 &&
                       !doubled.mds,
                   "doubled derivation gave " + doubled.to_string());

    if (o.pass) o.detail = direct.to_string() + " and " + doubled.to_string();
    return o;
}

// 12. Doubling a repetition code against itself: [[2n, 0, 2n/2]] at the
// Singleton bound for n = 2..10.
inline CheckOutcome check_repetition_family() {
    CheckOutcome o;
    for (std::size_t n = 2; n <= 10; ++n) {
        LinearCode rep = detail::repetition_code(n);
        AqcParams p = derive_via_s(rep, rep);
        detail::expect(o,
                       p.n == 2 * n && p.k_twice == 0 && p.dz == 2 * n && p.dx == 2 &&
                           singleton_equality(p),
                       "repetition pair gave " + p.to_string() + " at n = " + std::to_string(n));
    }
    if (o.pass) o.detail = "[[2n,0,2n/2]] with Singleton equality for n = 2..10";
    return o;
}

// 13. The [[n, n-2, 2/2]] family from the sum-zero code and a full-weight
// member, for every n = 3..20.
inline CheckOutcome check_mds_family() {
    CheckOutcome o;
    for (std::size_t n = 3; n <= 20; ++n) {
        MdsConstruction mc = mds_construction(n);
        detail::expect(o, mc.word.weight() == n,
                       "picked word is not full weight at n = " + std::to_string(n));
        detail::expect(o, mc.outer.contains(mc.word),
                       "picked word left the sum-zero code at n = " + std::to_string(n));
        detail::expect(o, mc.outer.dim() == n - 1, "outer dimension off at n = " + std::to_string(n));
        const AqcParams& p = mc.params;
        detail::expect(o,
                       p.n == n && p.k_twice == 2 * (static_cast<long long>(n) - 2) &&
                           p.dz == 2 && p.dx == 2 && p.mds && singleton_equality(p),
                       "family member gave " + p.to_string() + " at n = " + std::to_string(n));
    }
    if (o.pass) o.detail = "[[n,n-2,2/2]] at the Singleton bound for n = 3..20";
    return o;
}

namespace detail {

// Minimum weight of the length-q extension-field code by message-space
// enumeration.
inline unsigned ext_min_weight(const ExtField& F, const ExtRsCode& code) {
    std::size_t q = static_cast<std::size_t>(F.size());
    std::vector<std::uint64_t> msg(code.k, 0);
    unsigned best = static_cast<unsigned>(q) + 1;
    while (true) {
        std::size_t i = 0;
        while (i < code.k) {
            if (++msg[i] < F.size()) break;
            msg[i] = 0;
            ++i;
        }
        if (i == code.k) break;
        std::vector<ExtField::Elem> word(q, 0);
        for (std::size_t r = 0; r < code.k; ++r) {
            if (msg[r] == 0) continue;
            auto coef = static_cast<ExtField::Elem>(msg[r]);
            for (std::size_t t = 0; t < q; ++t)
                word[t] = ExtField::add(word[t], F.mul(coef, code.gen[r][t]));
        }
        unsigned wt = 0;
        for (auto x : word) wt += (x != 0);
        if (wt < best) best = wt;
    }
    return best;
}

} // namespace detail

// 14. The degree-2 concatenation table: 16 rows of (k', dz floor) against
// frozen values, with the outer distance confirmed by enumeration for
// k <= 3, and the derived parameters re-checked through the full pipeline.
inline CheckOutcome check_rs_table_16() {
    CheckOutcome o;
    static const unsigned want_kp[16] = {1, 3, 5, 7, 9, 11, 13, 15,
                                         17, 19, 21, 23, 25, 27, 29, 31};
    static const unsigned want_dz[16] = {32, 30, 28, 26, 24, 22, 20, 18,
                                         16, 14, 12, 10, 8, 6, 4, 2};
    ExtField F(2);
    auto rows = rs_concat_table(F);
    detail::expect(o, rows.size() == 16, "row count");
    for (std::size_t i = 0; i < rows.size() && o.pass; ++i) {
        detail::expect(o, rows[i].k == i + 1 && rows[i].k_prime == want_kp[i] &&
                              rows[i].dz_floor == want_dz[i],
                       "row k = " + std::to_string(i + 1) + " is (" +
                           std::to_string(rows[i].k_prime) + ", " +
                           std::to_string(rows[i].dz_floor) + ")");
    }
    for (unsigned k = 1; k <= 16 && o.pass; ++k) {
        AqcParams p = rs_concat_aqc_params(F, k);
        detail::expect(o,
                       p.n == 64 && p.k_twice == 2 * (2 * static_cast<long long>(k) - 1) &&
                           p.dz == want_dz[k - 1] && p.dx == 2 && p.dz_floor,
                       "derived parameters gave " + p.to_string() + " at k = " + std::to_string(k));
    }
    for (unsigned k = 1; k <= 3 && o.pass; ++k) {
        ExtRsCode b = extended_rs(F, k);
        unsigned d = detail::ext_min_weight(F, b);
        detail::expect(o, d == 17 - k,
                       "outer distance " + std::to_string(d) + " at k = " + std::to_string(k));
    }
    if (o.pass) o.detail = "16 rows, outer distances enumerated for k <= 3";
    return o;
}

// 15. The degree-3 concatenation table: 64 rows against frozen values, all
// built with the nesting verified, distances taken as designed floors.
inline CheckOutcome check_rs_table_64() {
    CheckOutcome o;
    static const unsigned want_kp[64] = {
        2, 5, 8, 11, 14, 17, 20, 23, 26, 29, 32, 35, 38, 41, 44, 47,
        50, 53, 56, 59, 62, 65, 68, 71, 74, 77, 80, 83, 86, 89, 92, 95,
        98, 101, 104, 107, 110, 113, 116, 119, 122, 125, 128, 131, 134, 137, 140, 143,
        146, 149, 152, 155, 158, 161, 164, 167, 170, 173, 176, 179, 182, 185, 188, 191};
    static const unsigned want_dz[64] = {
        128, 126, 124, 122, 120, 118, 116, 114, 112, 110, 108, 106, 104, 102, 100, 98,
        96, 94, 92, 90, 88, 86, 84, 82, 80, 78, 76, 74, 72, 70, 68, 66,
        64, 62, 60, 58, 56, 54, 52, 50, 48, 46, 44, 42, 40, 38, 36, 34,
        32, 30, 28, 26, 24, 22, 20, 18, 16, 14, 12, 10, 8, 6, 4, 2};
    ExtField F(3);
    auto rows = rs_concat_table(F);
    detail::expect(o, rows.size() == 64, "row count");
    for (std::size_t i = 0; i < rows.size() && o.pass; ++i) {
        detail::expect(o, rows[i].k == i + 1 && rows[i].k_prime == want_kp[i] &&
                              rows[i].dz_floor == want_dz[i],
                       "row k = " + std::to_string(i + 1) + " is (" +
                           std::to_string(rows[i].k_prime) + ", " +
                           std::to_string(rows[i].dz_floor) + ")");
        detail::expect(o, rows[i].k_prime == 3 * rows[i].k - 1 &&
                              rows[i].dz_floor == 2 * (65 - rows[i].k),
                       "formula mismatch at k = " + std::to_string(i + 1));
    }
    for (unsigned k : {1u, 32u, 64u}) {
        if (!o.pass) break;
        AqcParams p = rs_concat_aqc_params(F, k);
        detail::expect(o,
                       p.n == 384 && p.k_twice == 2 * (3 * static_cast<long long>(k) - 1) &&
                           p.dz == want_dz[k - 1] && p.dx == 2 && p.dz_floor,
                       "derived parameters gave " + p.to_string() + " at k = " + std::to_string(k));
    }
    if (o.pass) o.detail = "64 rows, nesting verified in construction";
    return o;
}

// 16. Twisted division round-trips, and every module shift code of odd
// length up to 9 is plainly cyclic.
inline CheckOutcome check_skew_division_oracle() {
    CheckOutcome o;
    std::mt19937_64 rng(0x5EEDFACE06u);
    for (int t = 0; t < 10000 && o.pass; ++t) {
        std::vector<F4> fc(1 + rng() % 12), gc(1 + rng() % 8);
        for (auto& c : fc) c = F4::from_code(static_cast<std::uint8_t>(rng() & 3u));
        for (std::size_t i = 0; i + 1 < gc.size(); ++i)
            gc[i] = F4::from_code(static_cast<std::uint8_t>(rng() & 3u));
        gc.back() = F4::from_code(static_cast<std::uint8_t>(1 + rng() % 3));
        SkewPoly f = SkewPoly::from_coeffs(fc), g = SkewPoly::from_coeffs(gc);
        SkewDivMod d = right_divmod(f, g);
        detail::expect(o, d.quot * g + d.rem == f,
                       "division round-trip failed at trial " + std::to_string(t));
        detail::expect(o, d.rem.degree() < g.degree(),
                       "remainder too large at trial " + std::to_string(t));
    }
    std::size_t codes = 0;
    for (std::size_t n = 3; n <= 9 && o.pass; n += 2) {
        for (std::size_t r = 1; r < n && o.pass; ++r) {
            for (const auto& g : enumerate_skew_cyclic_generators(n, r)) {
                LinearCode c = module_theta_cyclic_code(g, n);
                ++codes;
                bool cyclic = true;
                for (const auto& row : c.generators())
                    if (!c.contains(row.cyclic_shift(1))) { cyclic = false; break; }
                if (!cyclic) {
                    detail::expect(o, false,
                                   "module code of " + g.to_string() + " at n = " +
                                       std::to_string(n) + " is not plainly cyclic");
                    break;
                }
            }
        }
    }
    if (o.pass)
        o.detail = "10^4 round-trips, " + std::to_string(codes) + " odd-length module codes cyclic";
    return o;
}

struct CheckEntry {
    const char* name;
    double limit_ms;
    CheckOutcome (*fn)();
};

inline const std::vector<CheckEntry>& all_checks() {
    static const std::vector<CheckEntry> table = {
        {"doubling-example", 1.0, &check_doubling_example},
        {"permutation-fixtures", 0.0, &check_permutation_fixtures},
        {"order-law", 1000.0, &check_order_law},
        {"worked-vectors", 0.0, &check_worked_vectors},
        {"shift-image-structure", 1000.0, &check_shift_image_structure},
        {"self-orthogonality", 10000.0, &check_self_orthogonality},
        {"weight-doubling", 1000.0, &check_weight_doubling},
        {"macwilliams-oracle", 30000.0, &check_macwilliams_oracle},
        {"dual-b-coefficients", 0.0, &check_dual_b_coefficients},
        {"power-moments", 0.0, &check_power_moments},
        {"nested-pipeline", 0.0, &check_nested_pipeline},
        {"repetition-family", 0.0, &check_repetition_family},
        {"mds-family", 10000.0, &check_mds_family},
        {"rs-table-16", 30000.0, &check_rs_table_16},
        {"rs-table-64", 30000.0, &check_rs_table_64},
        {"skew-division-oracle", 60000.0, &check_skew_division_oracle},
    };
    return table;
}

inline CheckResult run_entry(const CheckEntry& e) {
    CheckResult r;
    r.name = e.name;
    r.limit_ms = e.limit_ms;
    auto t0 = std::chrono::steady_clock::now();
    try {
        CheckOutcome out = e.fn();
        r.correct = out.pass;
        r.detail = out.detail;
    } catch (const std::exception& ex) {
        r.correct = false;
        r.detail = std::string("exception: ") + ex.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    r.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

inline std::vector<CheckResult> run_named_checks(const std::vector<std::string>& names) {
    std::vector<CheckResult> results;
    for (const auto& name : names) {
        bool found = false;
        for (const auto& e : all_checks()) {
            if (name == e.name) {
                results.push_back(run_entry(e));
                found = true;
                break;
            }
        }
        if (!found) throw PreconditionError("run_named_checks: unknown check " + name);
    }
    return results;
}

inline std::vector<CheckResult> run_all_checks() {
    std::vector<CheckResult> results;
    for (const auto& e : all_checks()) results.push_back(run_entry(e));
    return results;
}

inline std::string format_result_line(const CheckResult& r) {
    std::ostringstream os;
    os << (r.ok() ? "[PASS] " : "[FAIL] ") << r.name;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << " (" << r.ms << " ms";
    if (r.limit_ms > 0) os << ", limit " << static_cast<long long>(r.limit_ms) << " ms";
    os << ")";
    if (!r.detail.empty()) os << ": " << r.detail;
    if (r.correct && !r.within_limit()) os << " [over time budget]";
    return os.str();
}

} // namespace f4codes::verify

#endif
