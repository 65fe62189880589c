#ifndef F4CODES_WENUM_HPP
#define F4CODES_WENUM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "code.hpp"
#include "errors.hpp"

namespace f4codes {

namespace detail {

inline std::vector<std::vector<cpp_int>> binomial_table(std::size_t n) {
    std::vector<std::vector<cpp_int>> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        c[i].assign(i + 1, 1);
        for (std::size_t j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

inline std::vector<cpp_int> convolve(const std::vector<cpp_int>& a, const std::vector<cpp_int>& b) {
    std::vector<cpp_int> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// coefficients of (X + 3Y)^e in Y
inline std::vector<cpp_int> plus3_pow(std::size_t e, const std::vector<std::vector<cpp_int>>& bin) {
    std::vector<cpp_int> p(e + 1);
    cpp_int three = 1;
    for (std::size_t j = 0; j <= e; ++j) {
        p[j] = bin[e][j] * three;
        three *= 3;
    }
    return p;
}

// coefficients of (X - Y)^e in Y
inline std::vector<cpp_int> minus1_pow(std::size_t e, const std::vector<std::vector<cpp_int>>& bin) {
    std::vector<cpp_int> p(e + 1);
    for (std::size_t j = 0; j <= e; ++j) p[j] = (j % 2 == 0) ? bin[e][j] : -bin[e][j];
    return p;
}

inline std::vector<cpp_int> exact_divide(std::vector<cpp_int> num, const cpp_int& M,
                                         const char* who) {
    for (auto& x : num) {
        if (x % M != 0)
            throw PreconditionError(std::string(who) + ": transform coefficient is not an integer");
        x /= M;
        if (x < 0)
            throw PreconditionError(std::string(who) + ": transform coefficient is negative");
    }
    return num;
}

} // namespace detail

// MacWilliams transform for codes over GF(4), linear or additive alike:
// W'(X, Y) = W(X + 3Y, X - Y) / M. All arithmetic is exact; a coefficient
// that fails to come out a nonnegative integer means the input was not a
// weight distribution of size M, and raises.
inline WeightEnumerator macwilliams_transform(const WeightEnumerator& w, const cpp_int& M) {
    std::size_t n = w.length();
    if (M <= 0 || w.total() != M)
        throw PreconditionError("macwilliams_transform: coefficients do not sum to the code size");
    auto bin = detail::binomial_table(n);
    std::vector<cpp_int> num(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
        if (w.a[i] == 0) continue;
        auto p = detail::plus3_pow(n - i, bin);
        auto m = detail::minus1_pow(i, bin);
        auto li = detail::convolve(p, m);
        for (std::size_t j = 0; j <= n; ++j) num[j] += w.a[i] * li[j];
    }
    WeightEnumerator out(n);
    out.a = detail::exact_divide(std::move(num), M, "macwilliams_transform");
    return out;
}

// Weight distribution of the doubled image: weights double, counts carry over.
inline WeightEnumerator s_image_wenum(const WeightEnumerator& w) {
    WeightEnumerator out(2 * w.length());
    for (std::size_t i = 0; i <= w.length(); ++i) out.a[2 * i] = w.a[i];
    return out;
}

struct DualWeightData {
    WeightEnumerator b;   // length 2n
    cpp_int m;            // size of the primal code
};

// Weight distribution of the trace-Hermitian dual of the doubled image,
// straight from the primal distribution: each A_i contributes
// ((X+3Y)^(n-i))^2 ((X-Y)^i)^2, and the sum is divided by M. Squaring the
// binomial expansions keeps every step in integer convolutions.
inline DualWeightData dual_s_image_wenum(const WeightEnumerator& w, const cpp_int& M) {
    std::size_t n = w.length();
    if (M <= 0 || w.total() != M)
        throw PreconditionError("dual_s_image_wenum: coefficients do not sum to the code size");
    auto bin = detail::binomial_table(n);
    std::vector<cpp_int> num(2 * n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
        if (w.a[i] == 0) continue;
        auto p = detail::plus3_pow(n - i, bin);
        auto m1 = detail::minus1_pow(i, bin);
        auto li = detail::convolve(detail::convolve(p, p), detail::convolve(m1, m1));
        for (std::size_t j = 0; j <= 2 * n; ++j) num[j] += w.a[i] * li[j];
    }
    DualWeightData out;
    out.m = M;
    out.b.a = detail::exact_divide(std::move(num), M, "dual_s_image_wenum");
    return out;
}

struct PowerMomentCheck {
    bool zeroth = false, first = false, second = false;
    bool all() const { return zeroth && first && second; }
};

// The first three power-moment identities linking a distribution of size M
// on length n to the dual's counts of weight-1 and weight-2 words. Checked
// cross-multiplied so everything stays integral.
inline PowerMomentCheck pless_power_moments(const WeightEnumerator& w, const cpp_int& M,
                                            const cpp_int& a1_dual, const cpp_int& a2_dual) {
    std::size_t n = w.length();
    cpp_int s0 = 0, s1 = 0, s2 = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        s0 += w.a[i];
        s1 += cpp_int(i) * w.a[i];
        s2 += cpp_int(i) * cpp_int(i) * w.a[i];
    }
    PowerMomentCheck r;
    cpp_int nn(n);
    r.zeroth = (s0 == M);
    r.first = (4 * s1 == M * (3 * nn - a1_dual));
    r.second = (16 * s2 == M * (9 * nn * nn + 3 * nn - (6 * nn - 2) * a1_dual + 2 * a2_dual));
    return r;
}

struct BCoeffReport {
    cpp_int b0, b1, b2;                         // computed low coefficients
    std::optional<cpp_int> expected_b1, expected_b2;   // forced by the dual distance
    bool consistent = false;
};

// Low-order coefficients of the dual of the doubled image, compared with
// what the primal dual's distance forces: dual distance >= 3 pins (1, 0, 3n),
// distance 2 pins (1, 0, 3n + 4 A2'), distance 1 pins B1 = 2 A1'.
inline BCoeffReport analyze_dual_low_coeffs(const WeightEnumerator& w, const cpp_int& M,
                                            const WeightEnumerator& dual_w) {
    std::size_t n = w.length();
    auto dd = dual_w.min_positive_weight();
    if (!dd)
        throw PreconditionError("analyze_dual_low_coeffs: dual has no nonzero codeword");
    DualWeightData d = dual_s_image_wenum(w, M);
    BCoeffReport r;
    r.b0 = d.b.a[0];
    r.b1 = d.b.a[1];
    r.b2 = d.b.a[2];
    cpp_int a1 = dual_w.a.size() > 1 ? dual_w.a[1] : 0;
    cpp_int a2 = dual_w.a.size() > 2 ? dual_w.a[2] : 0;
    if (*dd >= 3) {
        r.expected_b1 = 0;
        r.expected_b2 = 3 * cpp_int(n);
    } else if (*dd == 2) {
        r.expected_b1 = 0;
        r.expected_b2 = 3 * cpp_int(n) + 4 * a2;
    } else {
        r.expected_b1 = 2 * a1;
    }
    r.consistent = (r.b0 == 1) &&
                   (!r.expected_b1 || r.b1 == *r.expected_b1) &&
                   (!r.expected_b2 || r.b2 == *r.expected_b2);
    return r;
}

} // namespace f4codes

#endif
