#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "f4codes/code.hpp"
#include "f4codes/s_map.hpp"
#include "f4codes/wenum.hpp"

using namespace f4codes;
using boost::multiprecision::cpp_int;

namespace {

F4Vec random_vec(std::mt19937_64& rng, std::size_t n) {
    F4Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, F4::from_code(static_cast<unsigned>(rng() & 3u)));
    return v;
}

AdditiveCode random_additive(std::mt19937_64& rng, std::size_t n, std::size_t rows) {
    std::vector<F4Vec> gens;
    for (std::size_t i = 0; i < rows; ++i) gens.push_back(random_vec(rng, n));
    return AdditiveCode::from_generators(n, gens);
}

LinearCode repetition(std::size_t n) {
    return LinearCode::from_generators(n, {F4Vec::from_symbols(std::string(n, '1'))});
}

LinearCode hexacode() {
    return LinearCode::from_generators(6, {
        F4Vec::from_symbols("1001ww"),
        F4Vec::from_symbols("010w1w"),
        F4Vec::from_symbols("001ww1"),
    });
}

}  // namespace

TEST_CASE("transform of the repetition code distribution") {
    WeightEnumerator w = repetition(4).weight_enumerator();
    CHECK(w.a == std::vector<cpp_int>{1, 0, 0, 0, 3});
    WeightEnumerator d = macwilliams_transform(w, 4);
    CHECK(d.a == std::vector<cpp_int>{1, 0, 18, 24, 21});
    CHECK(d.total() == 64);
}

TEST_CASE("self dual distribution is a fixed point") {
    LinearCode h = hexacode();
    REQUIRE(h.hermitian_dual() == h);
    WeightEnumerator w = h.weight_enumerator();
    CHECK(w.a == std::vector<cpp_int>{1, 0, 0, 0, 45, 0, 18});
    CHECK(macwilliams_transform(w, 64) == w);
}

TEST_CASE("transform matches the enumerated dual distribution") {
    std::mt19937_64 rng(401);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 1 + rng() % 5;
        AdditiveCode c = random_additive(rng, n, 1 + rng() % (2 * n));
        WeightEnumerator w = c.weight_enumerator();
        CHECK(macwilliams_transform(w, c.size()) == c.trace_dual().weight_enumerator());
    }
}

TEST_CASE("transform is an involution") {
    std::mt19937_64 rng(402);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 1 + rng() % 6;
        AdditiveCode c = random_additive(rng, n, 1 + rng() % n);
        WeightEnumerator w = c.weight_enumerator();
        cpp_int space = cpp_int(1) << (2 * n);
        WeightEnumerator d = macwilliams_transform(w, c.size());
        CHECK(macwilliams_transform(d, space / c.size()) == w);
    }
}

TEST_CASE("transform rejects bad inputs") {
    WeightEnumerator w(2);
    w.a = {1, 0, 3};
    CHECK_THROWS_AS(macwilliams_transform(w, 5), PreconditionError);   // wrong size
    CHECK_THROWS_AS(macwilliams_transform(w, 0), PreconditionError);
    // sums to 2 but is no weight distribution of a code of size 2
    WeightEnumerator fake(1);
    fake.a = {0, 2};
    CHECK_THROWS_AS(macwilliams_transform(fake, 2), PreconditionError);
    CHECK_THROWS_AS(dual_s_image_wenum(fake, 2), PreconditionError);
}

TEST_CASE("doubled image distribution shifts weights to even positions") {
    std::mt19937_64 rng(403);
    for (int t = 0; t < 15; ++t) {
        std::size_t n = 1 + rng() % 5;
        AdditiveCode c = random_additive(rng, n, 1 + rng() % (2 * n));
        WeightEnumerator w = c.weight_enumerator();
        WeightEnumerator img = s_image_wenum(w);
        CHECK(img.length() == 2 * n);
        CHECK(img == s_apply_code(c).weight_enumerator());
        for (std::size_t i = 0; i <= 2 * n; ++i)
            if (i % 2 == 1) CHECK(img.a[i] == 0);
    }
}

TEST_CASE("dual distribution of the doubled image, three independent routes") {
    std::mt19937_64 rng(404);
    for (int t = 0; t < 12; ++t) {
        std::size_t n = 1 + rng() % 3;
        AdditiveCode c = random_additive(rng, n, 1 + rng() % (2 * n));
        WeightEnumerator w = c.weight_enumerator();
        DualWeightData d = dual_s_image_wenum(w, c.size());
        CHECK(d.m == c.size());
        // route two: transform of the doubled distribution
        CHECK(d.b == macwilliams_transform(s_image_wenum(w), c.size()));
        // route three: enumerate the dual of the doubled image directly
        CHECK(d.b == s_apply_code(c).trace_dual().weight_enumerator());
    }
}

TEST_CASE("power moment identities hold with the enumerated dual counts") {
    std::mt19937_64 rng(405);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 1 + rng() % 5;
        AdditiveCode c = random_additive(rng, n, 1 + rng() % (2 * n));
        WeightEnumerator w = c.weight_enumerator();
        WeightEnumerator dw = c.trace_dual().weight_enumerator();
        cpp_int a1 = dw.a.size() > 1 ? dw.a[1] : 0;
        cpp_int a2 = dw.a.size() > 2 ? dw.a[2] : 0;
        PowerMomentCheck pm = pless_power_moments(w, c.size(), a1, a2);
        CHECK(pm.zeroth);
        CHECK(pm.first);
        CHECK(pm.second);
        CHECK(pm.all());
        // perturbing the dual counts must break an identity
        PowerMomentCheck bad = pless_power_moments(w, c.size(), a1 + 4, a2);
        CHECK_FALSE(bad.all());
    }
}

TEST_CASE("low dual coefficients by dual distance") {
    SECTION("dual distance at least three") {
        LinearCode h = hexacode();
        AdditiveCode c = h.additive();
        REQUIRE(*c.trace_dual().weight_enumerator().min_positive_weight() == 4);
        BCoeffReport r = analyze_dual_low_coeffs(c.weight_enumerator(), c.size(),
                                                 c.trace_dual().weight_enumerator());
        CHECK(r.consistent);
        CHECK(r.b0 == 1);
        CHECK(r.b1 == 0);
        REQUIRE(r.expected_b2.has_value());
        CHECK(*r.expected_b2 == 18);   // three times the doubled length is 3 * 6
        CHECK(r.b2 == 18);
    }
    SECTION("dual distance two") {
        for (std::size_t n : {2, 3, 4, 5}) {
            AdditiveCode c = repetition(n).additive();
            WeightEnumerator dw = c.trace_dual().weight_enumerator();
            REQUIRE(*dw.min_positive_weight() == 2);
            BCoeffReport r = analyze_dual_low_coeffs(c.weight_enumerator(), c.size(), dw);
            CHECK(r.consistent);
            CHECK(r.b1 == 0);
            CHECK(r.b2 == 3 * cpp_int(n) + 4 * dw.a[2]);
        }
    }
    SECTION("dual distance one") {
        AdditiveCode c = AdditiveCode::from_generators(2, {F4Vec::from_symbols("11")});
        WeightEnumerator dw = c.trace_dual().weight_enumerator();
        REQUIRE(*dw.min_positive_weight() == 1);
        BCoeffReport r = analyze_dual_low_coeffs(c.weight_enumerator(), c.size(), dw);
        CHECK(r.consistent);
        REQUIRE(r.expected_b1.has_value());
        CHECK(*r.expected_b1 == 2 * dw.a[1]);
        CHECK_FALSE(r.expected_b2.has_value());
    }
    SECTION("a trivial dual is rejected") {
        // the full space: its dual is the zero code
        AdditiveCode full = AdditiveCode::from_generators(2, {
            F4Vec::from_symbols("10"), F4Vec::from_symbols("w0"),
            F4Vec::from_symbols("01"), F4Vec::from_symbols("0w"),
        });
        REQUIRE(full.kappa() == 4);
        CHECK_THROWS_AS(analyze_dual_low_coeffs(full.weight_enumerator(), full.size(),
                                                full.trace_dual().weight_enumerator()),
                        PreconditionError);
    }
    SECTION("random codes are always consistent") {
        std::mt19937_64 rng(406);
        int done = 0;
        while (done < 15) {
            std::size_t n = 2 + rng() % 4;
            AdditiveCode c = random_additive(rng, n, 1 + rng() % n);
            AdditiveCode d = c.trace_dual();
            if (d.kappa() == 0) continue;
            BCoeffReport r = analyze_dual_low_coeffs(c.weight_enumerator(), c.size(),
                                                     d.weight_enumerator());
            CHECK(r.consistent);
            ++done;
        }
    }
}
