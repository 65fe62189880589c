#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>
#include <vector>

#include "f4codes/aqc.hpp"
#include "f4codes/ext_field.hpp"
#include "f4codes/rs_concat.hpp"

using namespace f4codes;
using Elem = ExtField::Elem;

namespace {

// every codeword of an extended RS code, through its generator rows
template <typename Fn>
void for_each_rs_codeword(const ExtField& F, const ExtRsCode& c, Fn&& fn) {
    std::size_t q = c.length();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < c.k; ++i) total *= F.size();
    for (std::uint64_t t = 0; t < total; ++t) {
        std::vector<Elem> v(q, 0);
        std::uint64_t msg = t;
        for (unsigned i = 0; i < c.k; ++i) {
            Elem s = static_cast<Elem>(msg % F.size());
            msg /= F.size();
            if (s == 0) continue;
            for (std::size_t j = 0; j < q; ++j)
                v[j] = ExtField::add(v[j], F.mul(s, c.gen[i][j]));
        }
        fn(v);
    }
}

std::size_t ext_weight(const std::vector<Elem>& v) {
    std::size_t w = 0;
    for (Elem x : v)
        if (x != 0) ++w;
    return w;
}

}  // namespace

TEST_CASE("degree one extensions reproduce the base field") {
    ExtField F(1);
    CHECK(F.size() == 4);
    for (unsigned a = 0; a < 4; ++a) {
        for (unsigned b = 0; b < 4; ++b) {
            F4 fa = F4::from_code(a), fb = F4::from_code(b);
            CHECK(F.mul(a, b) == (fa * fb).code());
            CHECK(ExtField::add(a, b) == (fa + fb).code());
        }
        CHECK(F.from_base(F4::from_code(a)) == a);
        if (a != 0) CHECK(F.inv(a) == F4::from_code(a).inv().code());
        // degree one expansion is the identity
        if (true) {
            auto c = F.phi(a);
            REQUIRE(c.size() == 1);
            CHECK(c[0].code() == a);
        }
    }
    CHECK(F.elem_order(F.generator()) == 3);
}

TEST_CASE("default modulus is the first irreducible in symbol order") {
    auto mod2 = ExtField::default_modulus(2);
    REQUIRE(mod2.size() == 3);
    CHECK(mod2[0] == F4::omega());
    CHECK(mod2[1] == F4::one());
    CHECK(mod2[2] == F4::one());
    CHECK(ExtField::is_irreducible(mod2));
    for (unsigned m = 1; m <= 4; ++m) CHECK(ExtField::is_irreducible(ExtField::default_modulus(m)));
}

TEST_CASE("irreducibility testing") {
    auto poly = [](std::initializer_list<char> syms) {
        std::vector<F4> c;
        for (char s : syms) c.push_back(*F4::from_symbol(s));
        return c;
    };
    CHECK_FALSE(ExtField::is_irreducible(poly({'1', '0', '1'})));   // (y+1)^2
    CHECK_FALSE(ExtField::is_irreducible(poly({'1', '1', '1'})));   // roots w, W
    CHECK_FALSE(ExtField::is_irreducible(poly({'w', '0', '1'})));   // square of y+W
    CHECK(ExtField::is_irreducible(poly({'w', '1', '1'})));
    CHECK(ExtField::is_irreducible(poly({'1', '1'})));              // y + 1
    CHECK_FALSE(ExtField::is_irreducible(poly({'0', '1', '1'})));   // divisible by y
}

TEST_CASE("field construction validates its arguments") {
    CHECK_THROWS_AS(ExtField(0), PreconditionError);
    CHECK_THROWS_AS(ExtField(9), PreconditionError);
    // reducible modulus
    CHECK_THROWS_AS(ExtField(2, {F4::one(), F4::zero(), F4::one()}), PreconditionError);
    // not monic
    CHECK_THROWS_AS(ExtField(2, {F4::omega(), F4::one(), F4::omega()}), PreconditionError);
    // wrong degree
    CHECK_THROWS_AS(ExtField(2, {F4::omega(), F4::one()}), PreconditionError);
}

TEST_CASE("sixteen element field against schoolbook arithmetic") {
    ExtField F(2);
    REQUIRE(F.size() == 16);
    // with modulus y^2 + y + w the reduction is y^2 = y + w
    const F4 w = F4::omega();
    for (Elem x = 0; x < 16; ++x) {
        auto a = F.coords(x);
        CHECK(F.from_coords(a) == x);
        for (Elem y = 0; y < 16; ++y) {
            auto b = F.coords(y);
            F4 c0 = a[0] * b[0] + w * (a[1] * b[1]);
            F4 c1 = a[0] * b[1] + a[1] * b[0] + a[1] * b[1];
            CHECK(F.mul(x, y) == F.from_coords({c0, c1}));
        }
        if (x != 0) {
            CHECK(F.mul(x, F.inv(x)) == ExtField::one());
            CHECK(F.pow(x, 15) == ExtField::one());
            CHECK(F.pow(x, 3) == F.mul(x, F.mul(x, x)));
            CHECK((F.size() - 1) % F.elem_order(x) == 0);
        }
    }
    CHECK(F.pow(0, 5) == 0);
    CHECK(F.elem_order(F.generator()) == 15);
    CHECK(F.alpha(1) == ExtField::one());
    CHECK(F.alpha(2) == F.generator());
    CHECK_THROWS_AS(F.alpha(0), PreconditionError);
    CHECK_THROWS_AS(F.alpha(16), PreconditionError);
    CHECK_THROWS_AS(F.inv(0), PreconditionError);
    CHECK_THROWS_AS(F.elem_order(0), PreconditionError);
}

TEST_CASE("galois action fixes exactly the base field") {
    for (unsigned m : {2u, 3u}) {
        ExtField F(m);
        std::mt19937_64 rng(601 + m);
        for (int t = 0; t < 60; ++t) {
            Elem a = static_cast<Elem>(rng() % F.size());
            Elem b = static_cast<Elem>(rng() % F.size());
            CHECK(F.frobenius(ExtField::add(a, b)) ==
                  ExtField::add(F.frobenius(a), F.frobenius(b)));
            CHECK(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
            // m-fold iteration is the identity
            Elem it = a;
            for (unsigned i = 0; i < m; ++i) it = F.frobenius(it);
            CHECK(it == a);
        }
        // fixed points are the four base elements
        std::size_t fixed = 0;
        for (Elem a = 0; a < F.size(); ++a)
            if (F.frobenius(a) == a) ++fixed;
        CHECK(fixed == 4);
        for (unsigned c = 0; c < 4; ++c)
            CHECK(F.frobenius(F.from_base(F4::from_code(c))) == F.from_base(F4::from_code(c)));
    }
}

TEST_CASE("power sums of all nonzero elements vanish below the group order") {
    ExtField F(2);
    for (unsigned j = 1; j <= 14; ++j) {
        Elem s = 0;
        for (std::size_t i = 1; i <= 15; ++i) s = ExtField::add(s, F.pow(F.alpha(i), j));
        CHECK(s == 0);
    }
    // at the group order every term is one and there are q-1 of them
    Elem s = 0;
    for (std::size_t i = 1; i <= 15; ++i) s = ExtField::add(s, F.pow(F.alpha(i), 15));
    CHECK(s == ExtField::one());
}

TEST_CASE("base field expansion") {
    ExtField F(2);
    SECTION("linear, injective, and inverted by the basis") {
        std::mt19937_64 rng(602);
        for (int t = 0; t < 50; ++t) {
            Elem a = static_cast<Elem>(rng() % 16);
            Elem b = static_cast<Elem>(rng() % 16);
            F4 s = F4::from_code(static_cast<unsigned>(rng() & 3u));
            auto pa = F.phi(a);
            auto pb = F.phi(ExtField::add(a, b));
            for (unsigned j = 0; j < 2; ++j)
                CHECK(pb[j] == pa[j] + F.phi(b)[j]);
            auto ps = F.phi(F.mul(F.from_base(s), a));
            for (unsigned j = 0; j < 2; ++j) CHECK(ps[j] == s * pa[j]);
            // reconstruction over the basis
            Elem back = 0;
            for (unsigned j = 0; j < 2; ++j)
                back = ExtField::add(back, F.mul(F.from_base(pa[j]), F.phi_basis()[j]));
            CHECK(back == a);
        }
    }
    SECTION("base elements expand with a single leading coordinate") {
        CHECK(F.phi_basis()[0] == ExtField::one());
        for (unsigned c = 0; c < 4; ++c) {
            auto p = F.phi(F.from_base(F4::from_code(c)));
            CHECK(p[0].code() == c);
            CHECK(p[1].is_zero());
        }
        auto g = F.phi(F.generator());
        CHECK(g[0].is_zero());
        CHECK(g[1] == F4::one());
    }
    SECTION("custom bases") {
        // swapped basis swaps the coordinates
        std::vector<Elem> swapped = {F.generator(), ExtField::one()};
        auto p = F.phi_with_basis(F.generator(), swapped);
        CHECK(p[0] == F4::one());
        CHECK(p[1].is_zero());
        for (Elem a = 0; a < 16; ++a) {
            auto d = F.phi(a);
            auto s = F.phi_with_basis(a, swapped);
            CHECK(s[0] == d[1]);
            CHECK(s[1] == d[0]);
        }
        CHECK_THROWS_AS(F.phi_with_basis(5, {ExtField::one(), F.from_base(F4::omega())}),
                        PreconditionError);   // dependent over the base field
        CHECK_THROWS_AS(F.phi_with_basis(5, {ExtField::one()}), PreconditionError);
    }
    SECTION("blockwise expansion of vectors") {
        std::vector<Elem> v = {ExtField::one(), 0, F.generator()};
        F4Vec out = phi_star(F, v);
        REQUIRE(out.length() == 6);
        CHECK(out.to_string() == "100001");
        std::mt19937_64 rng(603);
        for (int t = 0; t < 30; ++t) {
            std::vector<Elem> u(4);
            for (auto& x : u) x = static_cast<Elem>(rng() % 16);
            F4Vec img = phi_star(F, u);
            CHECK(img.weight() >= ext_weight(u));   // expansion never kills a coordinate
            CHECK((img.weight() == 0) == (ext_weight(u) == 0));
        }
    }
}

TEST_CASE("extended codes over the base field itself are MDS") {
    ExtField F(1);
    for (unsigned k = 1; k <= 4; ++k) {
        ExtRsCode c = extended_rs(F, k);
        CHECK(c.length() == 4);
        CHECK(c.designed_distance() == 5 - k);
        CHECK(c.gen.size() == k);
        CHECK(c.checks.size() == 4 - k);
        std::size_t dmin = 5;
        for_each_rs_codeword(F, c, [&](const std::vector<Elem>& v) {
            CHECK(c.contains(v));
            std::size_t wt = ext_weight(v);
            if (wt > 0 && wt < dmin) dmin = wt;
        });
        CHECK(dmin == c.designed_distance());
    }
    CHECK_THROWS_AS(extended_rs(F, 0), PreconditionError);
    CHECK_THROWS_AS(extended_rs(F, 5), PreconditionError);
}

TEST_CASE("extended code over sixteen elements, low dimensions") {
    ExtField F(2);
    for (unsigned k = 1; k <= 2; ++k) {
        ExtRsCode c = extended_rs(F, k);
        CHECK(c.length() == 16);
        CHECK(c.gen.size() == k);
        CHECK(c.checks.size() == 16 - k);
        std::size_t dmin = 17;
        for_each_rs_codeword(F, c, [&](const std::vector<Elem>& v) {
            CHECK(c.contains(v));
            std::size_t wt = ext_weight(v);
            if (wt > 0 && wt < dmin) dmin = wt;
        });
        CHECK(dmin == 17 - k);
    }
    // the all ones word spans the dimension one code
    ExtRsCode rep = extended_rs(F, 1);
    CHECK(rep.contains(std::vector<Elem>(16, ExtField::one())));
}

TEST_CASE("concatenated pairs expand with nesting intact") {
    SECTION("base field case has exact outer distances") {
        ExtField F(1);
        for (unsigned k = 1; k <= 4; ++k) {
            ConcatRs pair = concat_rs_pair(F, k);
            CHECK(pair.q == 4);
            CHECK(pair.m == 1);
            CHECK(pair.inner.length() == 4);
            CHECK(pair.inner.dim() == 1);
            CHECK(pair.outer.length() == 4);
            CHECK(pair.outer.dim() == k);
            CHECK(pair.designed_floor == 5 - k);
            CHECK(pair.outer.min_distance() == 5 - k);   // the bound is exact here
            CHECK(is_subcode(pair.inner, pair.outer));
        }
    }
    SECTION("degree two expansion") {
        ExtField F(2);
        ConcatRs pair = concat_rs_pair(F, 2);
        CHECK(pair.inner.length() == 32);
        CHECK(pair.inner.dim() == 1);
        CHECK(pair.inner.min_distance() == 32);
        CHECK(pair.outer.dim() == 4);
        CHECK(pair.designed_floor == 15);
        CHECK(is_subcode(pair.inner, pair.outer));
        // expanded words of the outer code keep weight at least the floor
        CHECK(pair.outer.min_distance() >= pair.designed_floor);
    }
}

TEST_CASE("concatenated derivations and the parameter table") {
    ExtField F(1);
    AqcParams p = rs_concat_aqc_params(F, 2);
    CHECK(p.n == 8);
    CHECK(p.k_twice == 2);
    CHECK(p.dz == 6);
    CHECK(p.dx == 2);
    CHECK(p.dz_floor);
    CHECK(p.to_string() == "[[8,1,>=6/2]]_4");

    // the floor is attained: the direct doubled-image route gives dz = 6
    ConcatRs pair = concat_rs_pair(F, 2);
    AqcParams exact = derive_via_s(pair.inner, pair.outer);
    CHECK(exact.dz == p.dz);
    CHECK(exact.k_twice == p.k_twice);

    auto table = rs_concat_table(F);
    REQUIRE(table.size() == 4);
    for (unsigned k = 1; k <= 4; ++k) {
        CHECK(table[k - 1].k == k);
        CHECK(table[k - 1].k_prime == k - 1);
        CHECK(table[k - 1].dz_floor == 2 * (5 - k));
    }
}
