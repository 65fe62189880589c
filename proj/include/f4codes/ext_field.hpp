#ifndef F4CODES_EXT_FIELD_HPP
#define F4CODES_EXT_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "gf4.hpp"

namespace f4codes {

namespace detail {

// Dense commutative polynomials over GF(4), low degree first, for modulus
// bookkeeping only.
using Poly4 = std::vector<F4>;

inline void poly4_trim(Poly4& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Poly4 poly4_mul(const Poly4& a, const Poly4& b) {
    if (a.empty() || b.empty()) return {};
    Poly4 c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    poly4_trim(c);
    return c;
}

inline Poly4 poly4_mod(Poly4 a, const Poly4& g) {
    poly4_trim(a);
    while (a.size() >= g.size()) {
        F4 c = a.back() * g.back().inv();
        std::size_t off = a.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) a[off + i] += c * g[i];
        poly4_trim(a);
    }
    return a;
}

} // namespace detail

// GF(4^m) presented as GF(4)[y] modulo a monic irreducible of degree m.
// Elements are packed little-endian, two bits per power-basis coordinate.
// Multiplication and inversion run off exp/log tables for a fixed
// multiplicative generator, chosen as the least element (in packed order)
// of full order. Degrees up to 8 are supported; that covers far more than
// the concatenation constructions need.
class ExtField {
public:
    using Elem = std::uint32_t;

    explicit ExtField(unsigned m) : ExtField(m, default_modulus(m)) {}

    ExtField(unsigned m, std::vector<F4> modulus) : m_(m), mod_(std::move(modulus)) {
        if (m_ < 1 || m_ > 8)
            throw PreconditionError("ExtField: extension degree must be in 1..8");
        if (mod_.size() != m_ + 1 || mod_.back() != F4::one())
            throw PreconditionError("ExtField: modulus must be monic of degree m");
        if (!is_irreducible(mod_))
            throw PreconditionError("ExtField: modulus is reducible over GF(4)");
        q_ = 1;
        for (unsigned i = 0; i < m_; ++i) q_ *= 4;
        build_tables();
        build_phi_basis();
    }

    unsigned degree() const { return m_; }
    std::uint64_t size() const { return q_; }
    const std::vector<F4>& modulus() const { return mod_; }

    static Elem zero() { return 0; }
    static Elem one() { return 1; }

    Elem from_coords(const std::vector<F4>& c) const {
        if (c.size() != m_) throw PreconditionError("ExtField: coordinate count mismatch");
        Elem e = 0;
        for (unsigned i = 0; i < m_; ++i) e |= static_cast<Elem>(c[i].code()) << (2 * i);
        return e;
    }

    std::vector<F4> coords(Elem x) const {
        std::vector<F4> c(m_);
        for (unsigned i = 0; i < m_; ++i) c[i] = F4::from_code((x >> (2 * i)) & 3u);
        return c;
    }

    // Embedding of the base field along constants.
    Elem from_base(F4 x) const { return static_cast<Elem>(x.code()); }

    static Elem add(Elem a, Elem b) { return a ^ b; }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    Elem inv(Elem a) const {
        if (a == 0) throw PreconditionError("ExtField: inverse of zero");
        return exp_[q_ - 1 - log_[a]];
    }

    Elem pow(Elem a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? one() : 0;
        std::uint64_t r = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
        return exp_[r];
    }

    // x -> x^4, the Galois action fixing GF(4).
    Elem frobenius(Elem a) const { return pow(a, 4); }

    std::uint64_t elem_order(Elem a) const {
        if (a == 0) throw PreconditionError("ExtField: order of zero");
        return (q_ - 1) / gcd64(log_[a], q_ - 1);
    }

    Elem generator() const { return gen_; }

    // alpha_i = generator^(i-1), i = 1 .. q-1: the nonzero elements ordered
    // by increasing powers of the generator.
    Elem alpha(std::size_t i) const {
        if (i < 1 || i > q_ - 1) throw PreconditionError("ExtField: alpha index out of range");
        return exp_[i - 1];
    }

    // Expansion basis beta_j = generator^(j-1), j = 1 .. m. Independent over
    // GF(4) because the generator lies in no proper subfield.
    const std::vector<Elem>& phi_basis() const { return basis_; }

    // Coordinates of x over phi_basis(): x = sum_j phi_j(x) * beta_j.
    std::vector<F4> phi(Elem x) const {
        std::vector<F4> out(m_, F4::zero());
        for (unsigned col = 0; col < m_; ++col) {
            F4 xc = F4::from_code((x >> (2 * col)) & 3u);
            if (xc.is_zero()) continue;
            for (unsigned rowi = 0; rowi < m_; ++rowi) out[rowi] += phi_[rowi][col] * xc;
        }
        return out;
    }

    // Same, over a caller-supplied basis of q over GF(4).
    std::vector<F4> phi_with_basis(Elem x, const std::vector<Elem>& basis) const {
        if (basis.size() != m_) throw PreconditionError("ExtField: basis size mismatch");
        auto inv = basis_inverse(basis);
        std::vector<F4> out(m_, F4::zero());
        for (unsigned col = 0; col < m_; ++col) {
            F4 xc = F4::from_code((x >> (2 * col)) & 3u);
            if (xc.is_zero()) continue;
            for (unsigned rowi = 0; rowi < m_; ++rowi) out[rowi] += inv[rowi][col] * xc;
        }
        return out;
    }

    // Lexicographically first monic irreducible of degree m: coefficient
    // tuples (c_{m-1}, ..., c_0) scanned in symbol order 0 < 1 < w < W.
    static std::vector<F4> default_modulus(unsigned m) {
        if (m < 1) throw PreconditionError("ExtField: degree must be positive");
        std::vector<unsigned> digits(m, 0);   // digits[i] is the code of c_{m-1-i}
        while (true) {
            std::vector<F4> f(m + 1);
            f[m] = F4::one();
            for (unsigned i = 0; i < m; ++i) f[m - 1 - i] = F4::from_code(digits[i]);
            if (is_irreducible(f)) return f;
            std::size_t i = m;
            while (i-- > 0) {
                if (++digits[i] < 4) break;
                digits[i] = 0;
                if (i == 0) throw PreconditionError("ExtField: no irreducible found");
            }
        }
    }

    static bool is_irreducible(const std::vector<F4>& f) {
        unsigned m = static_cast<unsigned>(f.size()) - 1;
        if (m == 0) return false;
        if (f[0].is_zero()) return m == 1;   // divisible by y unless it is y
        // trial division by every monic polynomial of degree 1 .. m/2
        for (unsigned d = 1; 2 * d <= m; ++d) {
            std::uint64_t count = 1;
            for (unsigned i = 0; i < d; ++i) count *= 4;
            for (std::uint64_t t = 0; t < count; ++t) {
                detail::Poly4 g(d + 1);
                g[d] = F4::one();
                std::uint64_t tt = t;
                for (unsigned i = 0; i < d; ++i) {
                    g[i] = F4::from_code(static_cast<unsigned>(tt & 3u));
                    tt >>= 2;
                }
                if (detail::poly4_mod(detail::Poly4(f.begin(), f.end()), g).empty()) return false;
            }
        }
        return true;
    }

private:
    static std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
        while (b) { auto t = a % b; a = b; b = t; }
        return a;
    }

    Elem mul_raw(Elem a, Elem b) const {
        // schoolbook product in the power basis, reduced by the modulus
        std::vector<F4> r(2 * m_ - 1);
        for (unsigned i = 0; i < m_; ++i) {
            F4 ai = F4::from_code((a >> (2 * i)) & 3u);
            if (ai.is_zero()) continue;
            for (unsigned j = 0; j < m_; ++j) {
                F4 bj = F4::from_code((b >> (2 * j)) & 3u);
                r[i + j] += ai * bj;
            }
        }
        for (std::size_t t = r.size(); t-- > m_;) {
            F4 c = r[t];
            if (c.is_zero()) continue;
            r[t] = F4::zero();
            for (unsigned s = 0; s < m_; ++s) r[t - m_ + s] += c * mod_[s];
        }
        Elem e = 0;
        for (unsigned i = 0; i < m_; ++i) e |= static_cast<Elem>(r[i].code()) << (2 * i);
        return e;
    }

    Elem pow_raw(Elem a, std::uint64_t e) const {
        Elem acc = one(), base = a;
        while (e) {
            if (e & 1) acc = mul_raw(acc, base);
            base = mul_raw(base, base);
            e >>= 1;
        }
        return acc;
    }

    void build_tables() {
        // prime factors of q-1
        std::vector<std::uint64_t> primes;
        std::uint64_t rem = q_ - 1;
        for (std::uint64_t p = 2; p * p <= rem; ++p) {
            if (rem % p == 0) {
                primes.push_back(p);
                while (rem % p == 0) rem /= p;
            }
        }
        if (rem > 1) primes.push_back(rem);

        gen_ = 0;
        for (Elem cand = 1; cand < q_; ++cand) {
            bool full = true;
            for (auto p : primes) {
                if (pow_raw(cand, (q_ - 1) / p) == one()) { full = false; break; }
            }
            if (full) { gen_ = cand; break; }
        }
        if (gen_ == 0) throw PreconditionError("ExtField: no generator found");

        exp_.assign(2 * (q_ - 1), 0);
        log_.assign(q_, 0);
        Elem cur = one();
        for (std::uint64_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = cur;
            exp_[i + (q_ - 1)] = cur;
            log_[cur] = i;
            cur = mul_raw(cur, gen_);
        }
        if (cur != one()) throw PreconditionError("ExtField: generator order check failed");
    }

    std::vector<std::vector<F4>> basis_inverse(const std::vector<Elem>& basis) const {
        unsigned m = m_;
        // columns are the power-basis coordinates of the basis elements;
        // invert by Gauss-Jordan over GF(4)
        std::vector<std::vector<F4>> a(m, std::vector<F4>(2 * m, F4::zero()));
        for (unsigned j = 0; j < m; ++j)
            for (unsigned i = 0; i < m; ++i)
                a[i][j] = F4::from_code((basis[j] >> (2 * i)) & 3u);
        for (unsigned i = 0; i < m; ++i) a[i][m + i] = F4::one();
        for (unsigned col = 0; col < m; ++col) {
            unsigned piv = col;
            while (piv < m && a[piv][col].is_zero()) ++piv;
            if (piv == m) throw PreconditionError("ExtField: basis is not independent over GF(4)");
            std::swap(a[piv], a[col]);
            F4 s = a[col][col].inv();
            for (unsigned j = 0; j < 2 * m; ++j) a[col][j] = a[col][j] * s;
            for (unsigned r2 = 0; r2 < m; ++r2) {
                if (r2 == col || a[r2][col].is_zero()) continue;
                F4 c = a[r2][col];
                for (unsigned j = 0; j < 2 * m; ++j) a[r2][j] += c * a[col][j];
            }
        }
        std::vector<std::vector<F4>> inv(m, std::vector<F4>(m));
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < m; ++j) inv[i][j] = a[i][m + j];
        return inv;
    }

    void build_phi_basis() {
        basis_.resize(m_);
        for (unsigned j = 0; j < m_; ++j) basis_[j] = pow(gen_, j);
        phi_ = basis_inverse(basis_);
    }

    unsigned m_;
    std::vector<F4> mod_;
    std::uint64_t q_ = 0;
    Elem gen_ = 0;
    std::vector<Elem> exp_;
    std::vector<std::uint64_t> log_;
    std::vector<Elem> basis_;
    std::vector<std::vector<F4>> phi_;   // inverse change of basis
};

} // namespace f4codes

#endif
