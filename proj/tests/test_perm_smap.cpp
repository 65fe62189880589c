#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "f4codes/code.hpp"
#include "f4codes/perm.hpp"
#include "f4codes/s_map.hpp"

using namespace f4codes;

namespace {

F4Vec random_vec(std::mt19937_64& rng, std::size_t n) {
    F4Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, F4::from_code(static_cast<unsigned>(rng() & 3u)));
    return v;
}

IndexPermutation random_perm(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return IndexPermutation::from_images(img);
}

AdditiveCode random_additive(std::mt19937_64& rng, std::size_t n, std::size_t rows) {
    std::vector<F4Vec> gens;
    for (std::size_t i = 0; i < rows; ++i) gens.push_back(random_vec(rng, n));
    return AdditiveCode::from_generators(n, gens);
}

}  // namespace

TEST_CASE("permutations validate their images") {
    CHECK_THROWS_AS(IndexPermutation::from_images({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(IndexPermutation::from_images({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(IndexPermutation::from_images({2, 3}), std::invalid_argument);
    IndexPermutation p = IndexPermutation::from_images({2, 1, 3});
    CHECK(p.apply(1) == 2);
    CHECK(p.apply(2) == 1);
    CHECK(p.apply(3) == 3);
    CHECK_THROWS_AS(p.apply(0), std::out_of_range);
    CHECK_THROWS_AS(p.apply(4), std::out_of_range);
}

TEST_CASE("composition, inverse and powers") {
    std::mt19937_64 rng(201);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 1 + rng() % 10;
        IndexPermutation p = random_perm(rng, n);
        IndexPermutation q = random_perm(rng, n);
        IndexPermutation pq = p.compose(q);
        for (std::size_t j = 1; j <= n; ++j) CHECK(pq.apply(j) == p.apply(q.apply(j)));
        CHECK(p.compose(p.inverse()).is_identity());
        CHECK(p.inverse().compose(p).is_identity());
        CHECK(p.power(0).is_identity());
        CHECK(p.power(1) == p);
        CHECK(p.power(-1) == p.inverse());
        CHECK(p.power(5) == p.compose(p).compose(p).compose(p).compose(p));
        CHECK(p.power(-3) == p.inverse().power(3));
        CHECK(p.power(static_cast<long long>(p.order())).is_identity());
    }
    CHECK_THROWS_AS(IndexPermutation::identity(3).compose(IndexPermutation::identity(4)),
                    std::invalid_argument);
}

TEST_CASE("order is the least positive identity power") {
    std::mt19937_64 rng(202);
    CHECK(IndexPermutation::identity(5).order() == 1);
    for (int t = 0; t < 15; ++t) {
        IndexPermutation p = random_perm(rng, 1 + rng() % 8);
        unsigned long long o = p.order();
        CHECK(p.power(static_cast<long long>(o)).is_identity());
        for (unsigned long long e = 1; e < o; ++e)
            CHECK_FALSE(p.power(static_cast<long long>(e)).is_identity());
    }
}

TEST_CASE("cycle notation") {
    CHECK(IndexPermutation::identity(4).cycle_notation() == "(1)");
    CHECK(tau(2).cycle_notation() == "(1,2)(3,4)");
    CHECK(sigma(4).cycle_notation() == "(1,4,5,8)(2,3,6,7)");
    CHECK(sigma(3).cycle_notation() == "(1,4,5,2,3,6)");
    auto cs = sigma(4).cycles();
    REQUIRE(cs.size() == 2);
    CHECK(cs[0] == std::vector<std::size_t>{1, 4, 5, 8});
}

TEST_CASE("induced vector action composes contravariantly") {
    std::mt19937_64 rng(203);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng() % 12;
        IndexPermutation p = random_perm(rng, n);
        IndexPermutation q = random_perm(rng, n);
        F4Vec v = random_vec(rng, n);
        for (std::size_t j = 1; j <= n; ++j)
            CHECK(induced_apply(p, v).get(j - 1) == v.get(p.apply(j) - 1));
        CHECK(induced_apply(p, induced_apply(q, v)) == induced_apply(q.compose(p), v));
        CHECK(induced_apply(IndexPermutation::identity(n), v) == v);
        CHECK(induced_apply(p.inverse(), induced_apply(p, v)) == v);
    }
}

TEST_CASE("index rotations induce the inverse rotation on vectors") {
    std::mt19937_64 rng(204);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + rng() % 20;
        std::size_t l = rng() % n;
        F4Vec v = random_vec(rng, n);
        // the permutation i -> i+l pulls coordinates from the right, which
        // is a left rotation of the vector; cyclic_shift rotates right
        CHECK(induced_apply(index_rotation(n, l), v) == v.cyclic_shift((n - l) % n));
        CHECK(induced_apply(index_rotation(n, (n - l) % n), v) == v.cyclic_shift(l));
    }
    CHECK(index_rotation(5, 0).is_identity());
    CHECK(index_rotation(6, 2).order() == 3);
}

TEST_CASE("doubling permutation values match the defining formula") {
    for (std::size_t n : {1, 2, 3, 4, 5, 6, 7, 8}) {
        IndexPermutation s = sigma(n);
        std::size_t m = 2 * n;
        for (std::size_t i = 1; i <= m; ++i) {
            std::size_t want = ((i - 1) + (i % 2 == 1 ? 3 : 1)) % m + 1;
            CHECK(s.apply(i) == want);
        }
        CHECK(s.order() == (n % 2 == 1 ? 2 * n : n));
        IndexPermutation t = tau(n);
        for (std::size_t i = 1; i <= m; ++i) CHECK(t.apply(i) == (i % 2 == 1 ? i + 1 : i - 1));
        CHECK(t.compose(t).is_identity());
        if (n % 2 == 1) CHECK(s.power(static_cast<long long>(n)) == t);
    }
    CHECK_THROWS_AS(sigma(0), PreconditionError);
}

TEST_CASE("odd length conjugator matches its defining orbit formula") {
    for (std::size_t n : {1, 3, 5, 7, 9}) {
        IndexPermutation s = sigma(n);
        IndexPermutation sp = sigma_prime(n);
        std::size_t m = 2 * n;
        for (std::size_t j = 1; j <= m; ++j)
            CHECK(sp.apply(j) == s.power(static_cast<long long>(m - j)).apply(1));
    }
    CHECK(sigma_prime(3).cycle_notation() == "(1,6)(2,3)(4,5)");
    CHECK_THROWS_AS(sigma_prime(4), PreconditionError);
}

TEST_CASE("even length conjugator matches its defining orbit formula") {
    for (std::size_t n : {2, 4, 6, 8}) {
        IndexPermutation s = sigma(n);
        IndexPermutation sp = sigma_double_prime(n);
        for (std::size_t b = 1; b <= n; ++b) {
            CHECK(sp.apply(2 * b - 1) == s.power(static_cast<long long>(n - b)).apply(1));
            CHECK(sp.apply(2 * b) == s.power(static_cast<long long>(n - b)).apply(2));
        }
    }
    CHECK(sigma_double_prime(2).apply(1) == 4);
    CHECK(sigma_double_prime(2).apply(2) == 3);
    CHECK(sigma_double_prime(2).apply(3) == 1);
    CHECK(sigma_double_prime(2).apply(4) == 2);
    CHECK_THROWS_AS(sigma_double_prime(3), PreconditionError);
}

TEST_CASE("doubling map interleaves coordinates with their conjugates") {
    CHECK(s_apply(F4Vec::from_symbols("wW")).to_string() == "wWWw");
    CHECK(s_apply(F4Vec::from_symbols("01")).to_string() == "0011");
    std::mt19937_64 rng(205);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng() % 40;
        F4Vec u = random_vec(rng, n);
        F4Vec v = random_vec(rng, n);
        F4Vec su = s_apply(u);
        REQUIRE(su.length() == 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(su.get(2 * i) == u.get(i));
            CHECK(su.get(2 * i + 1) == u.get(i).conj());
        }
        CHECK(su.weight() == 2 * u.weight());
        CHECK(s_apply(u + v) == su + s_apply(v));   // additive
    }
    // not linear over the whole field
    CHECK(s_apply(F4Vec::from_symbols("1").scaled(F4::omega())) !=
          s_apply(F4Vec::from_symbols("1")).scaled(F4::omega()));
}

TEST_CASE("doubled code images") {
    std::mt19937_64 rng(206);
    for (int t = 0; t < 15; ++t) {
        std::size_t n = 2 + rng() % 5;
        AdditiveCode c = random_additive(rng, n, 1 + rng() % n);
        AdditiveCode img = s_apply_code(c);
        CHECK(img.length() == 2 * n);
        CHECK(img.kappa() == c.kappa());   // the map is injective
        c.for_each_codeword([&](const F4Vec& w) { CHECK(img.contains(s_apply(w))); });
        // images are self orthogonal for the trace product
        CHECK(is_subcode(img, img.trace_dual()));
        if (c.kappa() > 0) CHECK(img.min_distance() == 2 * c.min_distance());
    }
}

TEST_CASE("generator and exhaustive invariance tests agree") {
    std::mt19937_64 rng(207);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + rng() % 5;
        AdditiveCode c = random_additive(rng, n, 1 + rng() % n);
        IndexPermutation p = random_perm(rng, n);
        CHECK(is_invariant_under(c, p) == is_invariant_under_exhaustive(c, p));
    }
    AdditiveCode c = random_additive(rng, 4, 3);
    CHECK_THROWS_AS(is_invariant_under(c, IndexPermutation::identity(5)), PreconditionError);
}

TEST_CASE("skew cyclic codes have equivalent images with plain shift structure") {
    SECTION("odd length gives a cyclic image") {
        LinearCode c = LinearCode::from_generators(7, {
            F4Vec::from_symbols("1101000"),
            F4Vec::from_symbols("0110100"),
            F4Vec::from_symbols("0011010"),
            F4Vec::from_symbols("0001101"),
        });
        ShiftImage si = equivalent_shift_image(c);
        CHECK(si.invariance.kind == ShiftKind::cyclic);
        CHECK(si.invariance.index == 1);
        CHECK(si.used == sigma_prime(7));
        CHECK(invariant_under_shift(si.code, 1));
        // relabeling preserves the weight distribution
        CHECK(si.code.weight_enumerator() == s_apply_code(c).weight_enumerator());
    }
    SECTION("even length gives a quasi cyclic image") {
        LinearCode c = LinearCode::from_generators(4, {
            F4Vec::from_symbols("10Ww"),
            F4Vec::from_symbols("01wW"),
        });
        ShiftImage si = equivalent_shift_image(c);
        CHECK(si.invariance.kind == ShiftKind::quasi_cyclic);
        CHECK(si.invariance.index == 2);
        CHECK(si.used == sigma_double_prime(4));
        CHECK(invariant_under_shift(si.code, 2));
        CHECK(si.code.weight_enumerator() == s_apply_code(c).weight_enumerator());
    }
    SECTION("codes without skew shift structure are rejected") {
        AdditiveCode c = AdditiveCode::from_generators(2, {F4Vec::from_symbols("10")});
        CHECK_THROWS_AS(equivalent_shift_image(c), PreconditionError);
    }
}
