#ifndef F4CODES_SKEW_HPP
#define F4CODES_SKEW_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "code.hpp"
#include "errors.hpp"
#include "gf4.hpp"

namespace f4codes {

// Polynomials in X over GF(4) twisted by the Frobenius: X a = a^2 X.
// Multiplication is associative but not commutative; only right division is
// provided, and right divisors are what cut out the cyclic module codes below.
class SkewPoly {
public:
    SkewPoly() = default;

    static SkewPoly from_coeffs(std::vector<F4> c) {
        SkewPoly p;
        p.c_ = std::move(c);
        p.trim();
        return p;
    }
    static SkewPoly zero() { return SkewPoly(); }
    static SkewPoly constant(F4 a) { return from_coeffs({a}); }
    static SkewPoly x_pow(std::size_t k) {
        std::vector<F4> c(k + 1);
        c[k] = F4::one();
        return from_coeffs(std::move(c));
    }

    // X^n - 1, which in characteristic 2 is X^n + 1.
    static SkewPoly x_pow_n_minus_one(std::size_t n) {
        std::vector<F4> c(n + 1);
        c[0] = F4::one();
        c[n] = F4::one();
        return from_coeffs(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    F4 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F4::zero(); }
    F4 lead() const { return c_.empty() ? F4::zero() : c_.back(); }
    bool is_monic() const { return lead() == F4::one(); }

    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
        std::vector<F4> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return from_coeffs(std::move(c));
    }
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + b; }

    // sum over i,j of a_i theta^i(b_j) X^(i+j), theta the Frobenius
    friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<F4> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            bool tw = i & 1;   // theta^i is conjugation for odd i
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                F4 bj = tw ? b.c_[j].conj() : b.c_[j];
                c[i + j] += a.c_[i] * bj;
            }
        }
        return from_coeffs(std::move(c));
    }

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

    // Left multiple by a scalar: c * p. (Right multiples differ when deg is odd.)
    SkewPoly left_scaled(F4 s) const {
        std::vector<F4> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = s * c_[i];
        return from_coeffs(std::move(c));
    }

    // Rendered low degree first: "w + 1*X + W*X^2". Zero terms are omitted;
    // the zero polynomial renders as "0".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            if (i == 0) {
                s.push_back(c_[i].symbol());
            } else {
                s.push_back(c_[i].symbol());
                s += "*X";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

    static SkewPoly parse(const std::string& text);

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<F4> c_;   // low to high, no trailing zeros
};

struct SkewDivMod {
    SkewPoly quot, rem;
};

// Right division: f = q * g + r with deg r < deg g. Unique because the
// leading twist theta^d is invertible.
inline SkewDivMod right_divmod(const SkewPoly& f, const SkewPoly& g) {
    if (g.is_zero()) throw PreconditionError("right_divmod: division by zero");
    SkewPoly r = f;
    SkewPoly q = SkewPoly::zero();
    int dg = g.degree();
    while (!r.is_zero() && r.degree() >= dg) {
        std::size_t d = static_cast<std::size_t>(r.degree() - dg);
        F4 glead = (d & 1) ? g.lead().conj() : g.lead();
        F4 c = r.lead() * glead.inv();
        SkewPoly t = SkewPoly::from_coeffs([&] {
            std::vector<F4> v(d + 1);
            v[d] = c;
            return v;
        }());
        q = q + t;
        r = r - t * g;
    }
    return {q, r};
}

inline bool right_divides(const SkewPoly& g, const SkewPoly& f) {
    return right_divmod(f, g).rem.is_zero();
}

inline SkewPoly SkewPoly::parse(const std::string& text) {
    // terms joined by '+'; a term is SYM, SYM*X, SYM*X^k, X, or X^k
    std::vector<F4> coeffs;
    auto put = [&](std::size_t k, F4 v) {
        if (coeffs.size() <= k) coeffs.resize(k + 1);
        coeffs[k] += v;
    };
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    bool expect_term = true;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        if (!expect_term) {
            if (text[pos] != '+') throw ParseError("skew polynomial: expected '+'");
            ++pos;
            expect_term = true;
            continue;
        }
        F4 coef = F4::one();
        bool have_coef = false;
        if (auto x = F4::from_symbol(text[pos])) {
            coef = *x;
            have_coef = true;
            ++pos;
        }
        std::size_t deg = 0;
        bool have_x = false;
        skip_ws();
        if (have_coef && pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
        }
        if (pos < text.size() && text[pos] == 'X') {
            have_x = true;
            deg = 1;
            ++pos;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::size_t start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (pos == start) throw ParseError("skew polynomial: missing exponent");
                deg = static_cast<std::size_t>(std::stoull(text.substr(start, pos - start)));
            }
        }
        if (!have_coef && !have_x) throw ParseError("skew polynomial: bad term");
        put(have_x ? deg : 0, coef);
        expect_term = false;
    }
    if (expect_term && !coeffs.empty()) throw ParseError("skew polynomial: trailing '+'");
    if (coeffs.empty()) throw ParseError("skew polynomial: empty input");
    return SkewPoly::from_coeffs(std::move(coeffs));
}

// Code cut out by a right divisor g of X^n - 1: the module generated by g,
// with generator matrix row i holding theta^i(g_0 .. g_r) at offset i,
// i = 0 .. n-r-1.
inline LinearCode module_theta_cyclic_code(const SkewPoly& g, std::size_t n) {
    if (g.is_zero() || !g.is_monic())
        throw PreconditionError("module_theta_cyclic_code: generator must be monic");
    int r = g.degree();
    if (static_cast<std::size_t>(r) >= n)
        throw PreconditionError("module_theta_cyclic_code: deg g must be below n");
    if (!right_divides(g, SkewPoly::x_pow_n_minus_one(n)))
        throw PreconditionError("module_theta_cyclic_code: g does not right-divide X^n - 1");
    std::vector<F4Vec> rows;
    for (std::size_t i = 0; i + static_cast<std::size_t>(r) < n; ++i) {
        F4Vec v(n);
        for (int j = 0; j <= r; ++j) {
            F4 cj = g.coeff(static_cast<std::size_t>(j));
            v.set(i + static_cast<std::size_t>(j), (i & 1) ? cj.conj() : cj);
        }
        rows.push_back(std::move(v));
    }
    return LinearCode::from_span(n, std::move(rows));
}

// All monic degree-r right divisors of X^n - 1 with nonzero constant term.
inline std::vector<SkewPoly> enumerate_skew_cyclic_generators(std::size_t n, std::size_t r) {
    if (r == 0 || r >= n)
        throw PreconditionError("enumerate_skew_cyclic_generators: need 0 < r < n");
    SkewPoly target = SkewPoly::x_pow_n_minus_one(n);
    std::vector<SkewPoly> found;
    std::vector<F4> c(r + 1);
    c[r] = F4::one();
    // odometer over c_0 in {1,w,W} and c_1..c_{r-1} in GF(4)
    std::vector<unsigned> digits(r, 0);
    digits[0] = 1;
    while (true) {
        c[0] = F4::from_code(digits[0]);
        for (std::size_t i = 1; i < r; ++i) c[i] = F4::from_code(digits[i]);
        SkewPoly g = SkewPoly::from_coeffs(c);
        if (right_divides(g, target)) found.push_back(g);
        std::size_t i = 0;
        while (i < r) {
            if (++digits[i] < 4) break;
            digits[i] = i == 0 ? 1 : 0;   // constant term stays nonzero
            ++i;
        }
        if (i == r) break;
    }
    return found;
}

// Is the code closed under v -> (theta(v_{n-1}), theta(v_0), ..., theta(v_{n-2}))?
// The map is GF(2)-linear and GF(4)-semilinear, so checking generators suffices.
inline bool is_skew_cyclic(const AdditiveCode& c) {
    for (const auto& g : c.generators())
        if (!c.contains(g.skew_shift())) return false;
    return true;
}

inline bool is_skew_cyclic(const LinearCode& c) {
    for (const auto& g : c.generators())
        if (!c.contains(g.skew_shift())) return false;
    return true;
}

// Recovers the monic generator of a module cyclic code: row reduce from the
// right to expose the codeword of least degree, then normalize.
inline SkewPoly staircase_generator(const LinearCode& c) {
    if (c.dim() == 0)
        throw PreconditionError("staircase_generator: zero code");
    std::vector<F4Vec> rows = c.generators();
    std::size_t n = c.length();
    // eliminate on columns n-1, n-2, ...: after this the last surviving row
    // has the fewest trailing entries
    std::vector<F4Vec> out;
    std::vector<std::size_t> pivots;   // rightmost nonzero column per row
    for (auto& row : rows) {
        F4Vec v = row;
        for (std::size_t j = 0; j < out.size(); ++j) {
            F4 coef = v.get(pivots[j]);
            if (!coef.is_zero()) v += out[j].scaled(coef);
        }
        std::size_t p = n;
        for (std::size_t i = n; i-- > 0;) {
            if (!v.get(i).is_zero()) { p = i; break; }
        }
        if (p == n) continue;
        v = v.scaled(v.get(p).inv());
        out.push_back(v);
        pivots.push_back(p);
        for (std::size_t j = 0; j + 1 < out.size(); ++j) {
            F4 coef = out[j].get(p);
            if (!coef.is_zero()) out[j] += v.scaled(coef);
        }
    }
    std::size_t best = 0;
    for (std::size_t j = 1; j < pivots.size(); ++j)
        if (pivots[j] < pivots[best]) best = j;
    std::vector<F4> coef(pivots[best] + 1);
    for (std::size_t i = 0; i <= pivots[best]; ++i) coef[i] = out[best].get(i);
    SkewPoly g = SkewPoly::from_coeffs(std::move(coef));
    return g.left_scaled(g.lead().inv());
}

} // namespace f4codes

#endif
