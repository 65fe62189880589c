#ifndef F4CODES_S_MAP_HPP
#define F4CODES_S_MAP_HPP

#include <cstdint>
#include <vector>

#include "code.hpp"
#include "errors.hpp"
#include "perm.hpp"
#include "skew.hpp"

namespace f4codes {

// Doubling map: each coordinate is followed by its conjugate,
// (v_0, ..., v_{n-1}) -> (v_0, v_0^2, v_1, v_1^2, ...). GF(2)-linear and
// injective but not GF(4)-linear; doubles Hamming weight.
inline F4Vec s_apply(const F4Vec& v) {
    F4Vec r(2 * v.length());
    for (std::size_t i = 0; i < v.length(); ++i) {
        F4 x = v.get(i);
        r.set(2 * i, x);
        r.set(2 * i + 1, x.conj());
    }
    return r;
}

// Image of an additive code under the doubling map. Linearity over GF(2)
// means mapping a basis maps the code; sizes agree and kappa is preserved.
inline AdditiveCode s_apply_code(const AdditiveCode& c) {
    std::vector<F4Vec> gens;
    gens.reserve(c.kappa());
    for (const auto& g : c.generators()) gens.push_back(s_apply(g));
    return AdditiveCode::from_generators(2 * c.length(), gens);
}

inline AdditiveCode s_apply_code(const LinearCode& c) { return s_apply_code(c.additive()); }

// The permutation of {1, ..., 2n} sending odd i to i+3 and even i to i+1,
// both mod 2n with representatives in 1..2n.
inline IndexPermutation sigma(std::size_t n) {
    if (n < 1) throw PreconditionError("sigma: n must be positive");
    std::size_t m = 2 * n;
    std::vector<std::size_t> img(m);
    for (std::size_t i = 1; i <= m; ++i) {
        std::size_t step = (i % 2 == 1) ? 3 : 1;
        img[i - 1] = (i - 1 + step) % m + 1;
    }
    return IndexPermutation::from_images(img);
}

// tau = (1 2)(3 4)...(2n-1 2n)
inline IndexPermutation tau(std::size_t n) {
    std::size_t m = 2 * n;
    std::vector<std::size_t> img(m);
    for (std::size_t i = 1; i <= m; ++i) img[i - 1] = (i % 2 == 1) ? i + 1 : i - 1;
    return IndexPermutation::from_images(img);
}

// Index rotation i -> i + l mod N (1-based representatives). Its induced
// vector action is rotation to the left; the vector cyclic shift used
// throughout is F4Vec::cyclic_shift, a rotation to the right.
inline IndexPermutation index_rotation(std::size_t size, std::size_t l) {
    std::vector<std::size_t> img(size);
    for (std::size_t i = 1; i <= size; ++i) img[i - 1] = (i - 1 + l) % size + 1;
    return IndexPermutation::from_images(img);
}

// For odd n: sigma'(j) = sigma^(2n-j)(1).
inline IndexPermutation sigma_prime(std::size_t n) {
    if (n % 2 == 0) throw PreconditionError("sigma_prime: n must be odd");
    IndexPermutation s = sigma(n);
    std::size_t m = 2 * n;
    // precompute the forward orbit of 1; sigma has order 2n for odd n
    std::vector<std::size_t> orbit(m + 1);
    std::size_t cur = 1;
    for (std::size_t e = 0; e <= m; ++e) {
        orbit[e] = cur;
        cur = s.apply(cur);
    }
    std::vector<std::size_t> img(m);
    for (std::size_t j = 1; j <= m; ++j) img[j - 1] = orbit[m - j];
    return IndexPermutation::from_images(img);
}

// For even n: sigma''(2b-1) = sigma^(n-b)(1), sigma''(2b) = sigma^(n-b)(2).
inline IndexPermutation sigma_double_prime(std::size_t n) {
    if (n % 2 != 0) throw PreconditionError("sigma_double_prime: n must be even");
    IndexPermutation s = sigma(n);
    std::size_t m = 2 * n;
    std::vector<std::size_t> orbit1(n), orbit2(n);
    std::size_t c1 = 1, c2 = 2;
    for (std::size_t e = 0; e < n; ++e) {
        orbit1[e] = c1;
        orbit2[e] = c2;
        c1 = s.apply(c1);
        c2 = s.apply(c2);
    }
    std::vector<std::size_t> img(m);
    for (std::size_t b = 1; b <= n; ++b) {
        img[2 * b - 2] = orbit1[n - b];
        img[2 * b - 1] = orbit2[n - b];
    }
    return IndexPermutation::from_images(img);
}

// Is the code setwise fixed by the induced action of p? Generator images
// suffice since relabeling coordinates is GF(2)-linear.
inline bool is_invariant_under(const AdditiveCode& c, const IndexPermutation& p) {
    if (p.size() != c.length())
        throw PreconditionError("is_invariant_under: permutation size differs from length");
    for (const auto& g : c.generators())
        if (!c.contains(induced_apply(p, g))) return false;
    return true;
}

// Same question answered the slow way, codeword by codeword.
inline bool is_invariant_under_exhaustive(const AdditiveCode& c, const IndexPermutation& p,
                                          std::uint64_t budget = kDefaultBudget) {
    if (p.size() != c.length())
        throw PreconditionError("is_invariant_under: permutation size differs from length");
    bool ok = true;
    c.for_each_codeword([&](const F4Vec& w) {
        if (ok && !c.contains(induced_apply(p, w))) ok = false;
    }, budget);
    return ok;
}

struct ShiftImage {
    AdditiveCode code{0};
    ShiftInvariance invariance;
    IndexPermutation used{0};
};

// Conjugates the doubled image of a skew-cyclic code into plain shift
// structure: odd lengths give a cyclic code via sigma', even lengths a
// 2-quasi-cyclic code via sigma''. The claimed invariance is re-checked.
inline ShiftImage equivalent_shift_image(const AdditiveCode& c) {
    if (!is_skew_cyclic(c))
        throw PreconditionError("equivalent_shift_image: code is not skew cyclic");
    std::size_t n = c.length();
    AdditiveCode img = s_apply_code(c);
    IndexPermutation p = (n % 2 == 1) ? sigma_prime(n) : sigma_double_prime(n);
    std::vector<F4Vec> gens;
    for (const auto& g : img.generators()) gens.push_back(induced_apply(p, g));
    AdditiveCode conj = AdditiveCode::from_generators(2 * n, gens);
    std::size_t l = (n % 2 == 1) ? 1 : 2;
    if (!invariant_under_shift(conj, l))
        throw PreconditionError("equivalent_shift_image: expected shift invariance failed");
    ShiftInvariance inv{l == 1 ? ShiftKind::cyclic : ShiftKind::quasi_cyclic, l};
    return {std::move(conj), inv, std::move(p)};
}

inline ShiftImage equivalent_shift_image(const LinearCode& c) {
    return equivalent_shift_image(c.additive());
}

} // namespace f4codes

#endif
