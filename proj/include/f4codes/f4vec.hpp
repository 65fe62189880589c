#ifndef F4CODES_F4VEC_HPP
#define F4CODES_F4VEC_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gf4.hpp"

namespace f4codes {

// Vector over GF(4), packed as two bit planes: plane lo holds the low bit of
// each element code, plane hi the high bit. Addition is a plane-wise XOR and
// the coordinate-wise product needs five word ops per word.
class F4Vec {
public:
    F4Vec() : n_(0) {}
    explicit F4Vec(std::size_t n) : n_(n), lo_(words(n), 0), hi_(words(n), 0) {}

    F4Vec(std::initializer_list<F4> xs) : F4Vec(xs.size()) {
        std::size_t i = 0;
        for (F4 x : xs) set(i++, x);
    }

    // Compact literal, one symbol per coordinate: "10wW".
    static F4Vec from_symbols(std::string_view s) {
        F4Vec v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto x = F4::from_symbol(s[i]);
            if (!x) throw std::invalid_argument("F4Vec: bad symbol in literal");
            v.set(i, *x);
        }
        return v;
    }

    std::size_t length() const { return n_; }

    F4 get(std::size_t i) const {
        return F4::from_code(bit(lo_, i) | (bit(hi_, i) << 1));
    }
    void set(std::size_t i, F4 x) {
        put(lo_, i, x.code() & 1u);
        put(hi_, i, x.code() >> 1);
    }

    F4Vec& operator+=(const F4Vec& o) {
        check_len(o);
        for (std::size_t w = 0; w < lo_.size(); ++w) {
            lo_[w] ^= o.lo_[w];
            hi_[w] ^= o.hi_[w];
        }
        return *this;
    }
    friend F4Vec operator+(F4Vec a, const F4Vec& b) { return a += b; }

    friend bool operator==(const F4Vec& a, const F4Vec& b) {
        return a.n_ == b.n_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }
    friend bool operator!=(const F4Vec& a, const F4Vec& b) { return !(a == b); }

    bool is_zero() const {
        for (std::size_t w = 0; w < lo_.size(); ++w)
            if (lo_[w] | hi_[w]) return false;
        return true;
    }

    std::size_t weight() const {
        std::size_t c = 0;
        for (std::size_t w = 0; w < lo_.size(); ++w)
            c += static_cast<std::size_t>(std::popcount(lo_[w] | hi_[w]));
        return c;
    }

    // Coordinate-wise Frobenius: swaps w and w^2, so lo ^= hi.
    F4Vec conj() const {
        F4Vec r(*this);
        for (std::size_t w = 0; w < lo_.size(); ++w) r.lo_[w] ^= r.hi_[w];
        return r;
    }

    F4Vec scaled(F4 c) const {
        F4Vec r(n_);
        switch (c.code()) {
            case 0: break;
            case 1: r = *this; break;
            case 2:   // times w: (hi, lo) -> (hi^lo, hi)
                for (std::size_t w = 0; w < lo_.size(); ++w) {
                    r.hi_[w] = hi_[w] ^ lo_[w];
                    r.lo_[w] = hi_[w];
                }
                break;
            case 3:   // times w^2: (hi, lo) -> (lo, hi^lo)
                for (std::size_t w = 0; w < lo_.size(); ++w) {
                    r.hi_[w] = lo_[w];
                    r.lo_[w] = hi_[w] ^ lo_[w];
                }
                break;
        }
        return r;
    }

    friend F4Vec coordinatewise_mul(const F4Vec& a, const F4Vec& b) {
        a.check_len(b);
        F4Vec r(a.n_);
        for (std::size_t w = 0; w < a.lo_.size(); ++w) {
            std::uint64_t a0 = a.lo_[w], a1 = a.hi_[w], b0 = b.lo_[w], b1 = b.hi_[w];
            r.lo_[w] = (a0 & b0) ^ (a1 & b1);
            r.hi_[w] = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
        }
        return r;
    }

    // Sum of all coordinates.
    F4 coordinate_sum() const {
        unsigned plo = 0, phi = 0;
        for (std::size_t w = 0; w < lo_.size(); ++w) {
            plo ^= static_cast<unsigned>(std::popcount(lo_[w])) & 1u;
            phi ^= static_cast<unsigned>(std::popcount(hi_[w])) & 1u;
        }
        return F4::from_code((phi << 1) | plo);
    }

    // Rotation to the right by l places: (v_{n-l}, ..., v_{n-1}, v_0, ...).
    F4Vec cyclic_shift(std::size_t l) const {
        if (n_ == 0) return *this;
        l %= n_;
        F4Vec r(n_);
        for (std::size_t i = 0; i < n_; ++i) r.set((i + l) % n_, get(i));
        return r;
    }

    // Conjugate-then-rotate: (v_{n-1}^2, v_0^2, ..., v_{n-2}^2).
    F4Vec skew_shift() const { return cyclic_shift(1).conj(); }

    std::string to_string() const {
        std::string s;
        s.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i) s.push_back(get(i).symbol());
        return s;
    }

private:
    static std::size_t words(std::size_t n) { return (n + 63) / 64; }
    static unsigned bit(const std::vector<std::uint64_t>& p, std::size_t i) {
        return static_cast<unsigned>((p[i >> 6] >> (i & 63)) & 1u);
    }
    static void put(std::vector<std::uint64_t>& p, std::size_t i, unsigned b) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (b) p[i >> 6] |= m; else p[i >> 6] &= ~m;
    }
    void check_len(const F4Vec& o) const {
        if (n_ != o.n_) throw std::invalid_argument("F4Vec: length mismatch");
    }

    std::size_t n_;
    std::vector<std::uint64_t> lo_, hi_;
};

// Hermitian inner product: sum over i of u_i * v_i^2.
inline F4 hermitian_inner(const F4Vec& u, const F4Vec& v) {
    return coordinatewise_mul(u, v.conj()).coordinate_sum();
}

// Trace-Hermitian inner product: sum over i of u_i v_i^2 + u_i^2 v_i.
// Always lands in {0, 1}; vanishes whenever u = v.
inline F4 trace_hermitian_inner(const F4Vec& u, const F4Vec& v) {
    F4Vec t = coordinatewise_mul(u, v.conj()) + coordinatewise_mul(u.conj(), v);
    return t.coordinate_sum();
}

} // namespace f4codes

#endif
