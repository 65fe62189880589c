#ifndef F4CODES_GF4_HPP
#define F4CODES_GF4_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace f4codes {

// The field with four elements {0, 1, w, w^2}, w^2 = w + 1, w^3 = 1.
// Encoding: two bits (hi, lo) with 0 -> 00, 1 -> 01, w -> 10, w^2 -> 11,
// so addition is XOR of codes. Text symbols: 0 1 w W (W stands for w^2).
class F4 {
public:
    constexpr F4() : code_(0) {}

    static constexpr F4 from_code(unsigned c) { return F4(static_cast<std::uint8_t>(c & 3u)); }
    static constexpr F4 zero() { return from_code(0); }
    static constexpr F4 one() { return from_code(1); }
    static constexpr F4 omega() { return from_code(2); }
    static constexpr F4 omega_sq() { return from_code(3); }

    constexpr unsigned code() const { return code_; }
    constexpr bool is_zero() const { return code_ == 0; }

    friend constexpr F4 operator+(F4 a, F4 b) { return from_code(a.code_ ^ b.code_); }
    friend constexpr F4 operator-(F4 a, F4 b) { return a + b; }   // char 2
    constexpr F4& operator+=(F4 o) { code_ ^= o.code_; return *this; }

    friend constexpr F4 operator*(F4 a, F4 b) {
        unsigned a0 = a.code_ & 1u, a1 = a.code_ >> 1;
        unsigned b0 = b.code_ & 1u, b1 = b.code_ >> 1;
        // product of a0 + a1*w and b0 + b1*w reduced mod w^2 + w + 1
        unsigned lo = (a0 & b0) ^ (a1 & b1);
        unsigned hi = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
        return from_code((hi << 1) | lo);
    }
    constexpr F4& operator*=(F4 o) { *this = *this * o; return *this; }

    friend constexpr bool operator==(F4 a, F4 b) { return a.code_ == b.code_; }
    friend constexpr bool operator!=(F4 a, F4 b) { return a.code_ != b.code_; }

    // Frobenius x -> x^2, an involution fixing {0,1} and swapping w with w^2.
    constexpr F4 conj() const { return from_code(((code_ & 1u) ^ (code_ >> 1)) | (code_ & 2u)); }

    constexpr F4 inv() const {
        if (code_ == 0) throw std::domain_error("F4: inverse of zero");
        return conj();   // x^-1 = x^2 for nonzero x since x^3 = 1
    }

    char symbol() const {
        static constexpr char tab[4] = {'0', '1', 'w', 'W'};
        return tab[code_];
    }

    static std::optional<F4> from_symbol(char c) {
        switch (c) {
            case '0': return zero();
            case '1': return one();
            case 'w': return omega();
            case 'W': return omega_sq();
            default: return std::nullopt;
        }
    }

private:
    explicit constexpr F4(std::uint8_t c) : code_(c) {}
    std::uint8_t code_;
};

inline constexpr F4 conjugate(F4 x) { return x.conj(); }

// Trace onto GF(2): x + x^2, giving 0 on {0,1} and 1 on {w, w^2}.
inline constexpr F4 trace(F4 x) { return x + x.conj(); }

inline std::string to_string(F4 x) { return std::string(1, x.symbol()); }

} // namespace f4codes

#endif
