#ifndef F4CODES_CODE_HPP
#define F4CODES_CODE_HPP

#include <algorithm>
#include <utility>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "f4vec.hpp"
#include "gf2.hpp"

namespace f4codes {

using boost::multiprecision::cpp_int;

// Weight distribution: a[i] counts codewords of Hamming weight i.
struct WeightEnumerator {
    std::vector<cpp_int> a;

    WeightEnumerator() = default;
    explicit WeightEnumerator(std::size_t n) : a(n + 1, 0) {}

    std::size_t length() const { return a.empty() ? 0 : a.size() - 1; }

    cpp_int total() const {
        cpp_int t = 0;
        for (const auto& x : a) t += x;
        return t;
    }

    // Smallest positive weight with a nonzero count.
    std::optional<std::size_t> min_positive_weight() const {
        for (std::size_t i = 1; i < a.size(); ++i)
            if (a[i] != 0) return i;
        return std::nullopt;
    }

    friend bool operator==(const WeightEnumerator& x, const WeightEnumerator& y) {
        return x.a == y.a;
    }
};

namespace detail {

inline BitVec to_bits(const F4Vec& v) {
    BitVec b(2 * v.length());
    for (std::size_t i = 0; i < v.length(); ++i) {
        unsigned c = v.get(i).code();
        b.set(2 * i, c & 1u);
        b.set(2 * i + 1, c >> 1);
    }
    return b;
}

inline F4Vec from_bits(const BitVec& b) {
    F4Vec v(b.size() / 2);
    for (std::size_t i = 0; i < v.length(); ++i)
        v.set(i, F4::from_code(b.get(2 * i) | (b.get(2 * i + 1) << 1)));
    return v;
}

} // namespace detail

// GF(2)-linear subset of GF(4)^n, canonicalized as the reduced row echelon
// form of its generators viewed in GF(2)^(2n) over the basis {1, w} per
// coordinate. Size is 2^kappa.
class AdditiveCode {
public:
    explicit AdditiveCode(std::size_t n) : n_(n) {}

    static AdditiveCode from_generators(std::size_t n, const std::vector<F4Vec>& gens) {
        std::vector<detail::BitVec> rows;
        rows.reserve(gens.size());
        for (const auto& g : gens) {
            if (g.length() != n) throw PreconditionError("AdditiveCode: generator length mismatch");
            rows.push_back(detail::to_bits(g));
        }
        return from_bit_rows(n, std::move(rows));
    }

    static AdditiveCode zero(std::size_t n) { return AdditiveCode(n); }

    static AdditiveCode full(std::size_t n) {
        std::vector<detail::BitVec> rows;
        for (std::size_t j = 0; j < 2 * n; ++j) {
            detail::BitVec r(2 * n);
            r.set(j, 1);
            rows.push_back(std::move(r));
        }
        return from_bit_rows(n, std::move(rows));
    }

    std::size_t length() const { return n_; }
    std::size_t kappa() const { return rows_.size(); }

    cpp_int size() const { return cpp_int(1) << kappa(); }

    std::vector<F4Vec> generators() const {
        std::vector<F4Vec> g;
        g.reserve(rows_.size());
        for (const auto& r : rows_) g.push_back(detail::from_bits(r));
        return g;
    }

    bool contains(const F4Vec& v) const {
        if (v.length() != n_) throw PreconditionError("AdditiveCode: vector length mismatch");
        detail::BitVec b = detail::to_bits(v);
        for (std::size_t j = 0; j < rows_.size(); ++j)
            if (b.get(pivots_[j])) b ^= rows_[j];
        return !b.any();
    }

    friend bool operator==(const AdditiveCode& a, const AdditiveCode& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const AdditiveCode& a, const AdditiveCode& b) { return !(a == b); }

    // Dual under the trace-Hermitian form. For a generator g the functional
    // v -> <g, v>_tr evaluated on the unit vectors e_t and w e_t gives the
    // high and low bit of g_t respectively, so the Gram system is just the
    // generator matrix with the two bit planes swapped per coordinate.
    AdditiveCode trace_dual() const {
        std::vector<detail::BitVec> gram;
        gram.reserve(rows_.size());
        for (const auto& r : rows_) {
            detail::BitVec s(2 * n_);
            for (std::size_t t = 0; t < n_; ++t) {
                s.set(2 * t, r.get(2 * t + 1));
                s.set(2 * t + 1, r.get(2 * t));
            }
            gram.push_back(std::move(s));
        }
        return from_bit_rows(n_, detail::nullspace(std::move(gram), 2 * n_));
    }

    // Visits every codeword exactly once, zero vector first, stepping through
    // GF(2) combinations in Gray-code order (one generator added per step).
    template <class Fn>
    void for_each_codeword(Fn&& fn, std::uint64_t budget = kDefaultBudget) const {
        std::size_t k = kappa();
        if (k >= 63 || (std::uint64_t(1) << k) > budget)
            throw BudgetError("AdditiveCode: 2^" + std::to_string(k) + " codewords exceed budget");
        std::vector<F4Vec> gens = generators();
        F4Vec w(n_);
        fn(std::as_const(w));
        std::uint64_t count = std::uint64_t(1) << k;
        for (std::uint64_t c = 1; c < count; ++c) {
            w += gens[static_cast<std::size_t>(std::countr_zero(c))];
            fn(std::as_const(w));
        }
    }

    WeightEnumerator weight_enumerator(std::uint64_t budget = kDefaultBudget) const {
        WeightEnumerator we(n_);
        for_each_codeword([&](const F4Vec& w) { ++we.a[w.weight()]; }, budget);
        return we;
    }

    std::size_t min_distance(std::uint64_t budget = kDefaultBudget) const {
        if (kappa() == 0)
            throw PreconditionError("min_distance: code has a single codeword");
        std::size_t best = n_ + 1;
        for_each_codeword([&](const F4Vec& w) {
            std::size_t wt = w.weight();
            if (wt > 0 && wt < best) best = wt;
        }, budget);
        return best;
    }

private:
    static AdditiveCode from_bit_rows(std::size_t n, std::vector<detail::BitVec> rows) {
        AdditiveCode c(n);
        c.pivots_ = detail::rref(rows);
        c.rows_ = std::move(rows);
        return c;
    }

    std::size_t n_;
    std::vector<detail::BitVec> rows_;
    std::vector<std::size_t> pivots_;
};

namespace detail {

// Reduced row echelon form over GF(4); dependent rows vanish.
// Returns pivot columns, ascending, parallel to the surviving rows.
inline std::vector<std::size_t> rref4(std::vector<F4Vec>& rows) {
    std::vector<F4Vec> out;
    std::vector<std::size_t> pivots;
    auto first_nonzero = [](const F4Vec& v) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < v.length(); ++i)
            if (!v.get(i).is_zero()) return i;
        return std::nullopt;
    };
    for (auto& r : rows) {
        F4Vec v = r;
        for (std::size_t j = 0; j < out.size(); ++j) {
            F4 c = v.get(pivots[j]);
            if (!c.is_zero()) v += out[j].scaled(c);
        }
        auto p = first_nonzero(v);
        if (!p) continue;
        v = v.scaled(v.get(*p).inv());
        std::size_t at = 0;
        while (at < pivots.size() && pivots[at] < *p) ++at;
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(at), v);
        pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(at), *p);
        for (std::size_t j = 0; j < out.size(); ++j) {
            if (j == at) continue;
            F4 c = out[j].get(*p);
            if (!c.is_zero()) out[j] += v.scaled(c);
        }
    }
    rows = std::move(out);
    return pivots;
}

} // namespace detail

// GF(4)-linear code, canonicalized as a GF(4) reduced row echelon basis.
class LinearCode {
public:
    explicit LinearCode(std::size_t n) : n_(n) {}

    // Reduces the given spanning set; dependent rows are tolerated.
    static LinearCode from_span(std::size_t n, std::vector<F4Vec> rows) {
        for (const auto& r : rows)
            if (r.length() != n) throw PreconditionError("LinearCode: generator length mismatch");
        LinearCode c(n);
        c.pivots_ = detail::rref4(rows);
        c.rows_ = std::move(rows);
        return c;
    }

    // Rejects dependent rows; this is the file-parser entry point.
    static LinearCode from_generators(std::size_t n, std::vector<F4Vec> rows) {
        std::size_t given = rows.size();
        LinearCode c = from_span(n, std::move(rows));
        if (c.dim() != given)
            throw ParseError("LinearCode: generator rows are dependent over GF(4)");
        return c;
    }

    std::size_t length() const { return n_; }
    std::size_t dim() const { return rows_.size(); }

    cpp_int size() const { return cpp_int(1) << (2 * dim()); }

    const std::vector<F4Vec>& generators() const { return rows_; }

    bool contains(const F4Vec& v) const {
        if (v.length() != n_) throw PreconditionError("LinearCode: vector length mismatch");
        F4Vec w = v;
        for (std::size_t j = 0; j < rows_.size(); ++j) {
            F4 c = w.get(pivots_[j]);
            if (!c.is_zero()) w += rows_[j].scaled(c);
        }
        return w.is_zero();
    }

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const LinearCode& a, const LinearCode& b) { return !(a == b); }

    // The same point set viewed additively (GF(2) basis {g, w g}).
    AdditiveCode additive() const {
        std::vector<F4Vec> gens;
        gens.reserve(2 * rows_.size());
        for (const auto& g : rows_) {
            gens.push_back(g);
            gens.push_back(g.scaled(F4::omega()));
        }
        return AdditiveCode::from_generators(n_, gens);
    }

    // Dual under the Hermitian form <u,v> = sum u_i v_i^2. A vector lies in
    // the dual iff it is orthogonal, in the ordinary bilinear sense, to every
    // conjugated generator.
    LinearCode hermitian_dual() const {
        std::vector<F4Vec> conj_rows;
        conj_rows.reserve(rows_.size());
        for (const auto& g : rows_) conj_rows.push_back(g.conj());
        auto pivots = detail::rref4(conj_rows);
        std::vector<char> is_pivot(n_, 0);
        for (auto p : pivots) is_pivot[p] = 1;
        std::vector<F4Vec> basis;
        for (std::size_t free = 0; free < n_; ++free) {
            if (is_pivot[free]) continue;
            F4Vec x(n_);
            x.set(free, F4::one());
            for (std::size_t j = 0; j < pivots.size(); ++j)
                x.set(pivots[j], conj_rows[j].get(free));
            basis.push_back(std::move(x));
        }
        return from_span(n_, std::move(basis));
    }

    WeightEnumerator weight_enumerator(std::uint64_t budget = kDefaultBudget) const {
        return additive().weight_enumerator(budget);
    }

    std::size_t min_distance(std::uint64_t budget = kDefaultBudget) const {
        return additive().min_distance(budget);
    }

private:
    std::size_t n_;
    std::vector<F4Vec> rows_;
    std::vector<std::size_t> pivots_;
};

inline bool is_subcode(const AdditiveCode& inner, const AdditiveCode& outer) {
    if (inner.length() != outer.length())
        throw PreconditionError("is_subcode: length mismatch");
    for (const auto& g : inner.generators())
        if (!outer.contains(g)) return false;
    return true;
}

inline bool is_subcode(const LinearCode& inner, const LinearCode& outer) {
    if (inner.length() != outer.length())
        throw PreconditionError("is_subcode: length mismatch");
    for (const auto& g : inner.generators())
        if (!outer.contains(g)) return false;
    return true;
}

// Shift structure of a code: invariant under rotation by 1 (cyclic), by some
// proper divisor l of n (quasi-cyclic of index l, the least such l), or neither.
enum class ShiftKind { cyclic, quasi_cyclic, none };

struct ShiftInvariance {
    ShiftKind kind = ShiftKind::none;
    std::size_t index = 0;   // the shift amount when kind != none
};

inline bool invariant_under_shift(const AdditiveCode& c, std::size_t l) {
    for (const auto& g : c.generators())
        if (!c.contains(g.cyclic_shift(l))) return false;
    return true;
}

inline ShiftInvariance shift_invariance_kind(const AdditiveCode& c) {
    std::size_t n = c.length();
    for (std::size_t l = 1; l < n; ++l) {
        if (n % l != 0) continue;
        if (invariant_under_shift(c, l))
            return {l == 1 ? ShiftKind::cyclic : ShiftKind::quasi_cyclic, l};
    }
    return {ShiftKind::none, 0};
}

inline std::string to_string(ShiftKind k) {
    switch (k) {
        case ShiftKind::cyclic: return "cyclic";
        case ShiftKind::quasi_cyclic: return "quasi-cyclic";
        default: return "none";
    }
}

// ---- text format ----------------------------------------------------------
//
//   field gf4
//   length 4
//   kind linear
//   1 0 W w
//   0 1 w W
//
// One generator row per line, coordinates as symbols 0 1 w W.

enum class CodeKind { linear, additive };

struct CodeFile {
    CodeKind kind = CodeKind::additive;
    AdditiveCode additive{0};
    std::optional<LinearCode> linear;   // set when kind == linear

    std::size_t length() const { return additive.length(); }
    // log2 of the code size
    std::size_t kappa() const { return additive.kappa(); }
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> ts;
    std::string t;
    while (in >> t) ts.push_back(t);
    return ts;
}

} // namespace detail

inline CodeFile parse_code_file(std::istream& in) {
    std::vector<std::vector<std::string>> lines;
    std::string raw;
    while (std::getline(in, raw)) {
        auto ts = detail::tokens(raw);
        if (!ts.empty()) lines.push_back(std::move(ts));
    }
    if (lines.size() < 3) throw ParseError("code file: missing header lines");
    if (lines[0] != std::vector<std::string>{"field", "gf4"})
        throw ParseError("code file: first line must be 'field gf4'");
    if (lines[1].size() != 2 || lines[1][0] != "length")
        throw ParseError("code file: second line must be 'length <n>'");
    std::size_t n = 0;
    try {
        n = static_cast<std::size_t>(std::stoull(lines[1][1]));
    } catch (const std::exception&) {
        throw ParseError("code file: bad length value");
    }
    if (n == 0) throw ParseError("code file: length must be positive");
    if (lines[2].size() != 2 || lines[2][0] != "kind" ||
        (lines[2][1] != "linear" && lines[2][1] != "additive"))
        throw ParseError("code file: third line must be 'kind linear' or 'kind additive'");
    bool linear = lines[2][1] == "linear";

    std::vector<F4Vec> rows;
    for (std::size_t li = 3; li < lines.size(); ++li) {
        const auto& ts = lines[li];
        if (ts.size() != n)
            throw ParseError("code file: row has " + std::to_string(ts.size()) +
                             " coordinates, expected " + std::to_string(n));
        F4Vec v(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (ts[i].size() != 1)
                throw ParseError("code file: bad coordinate token '" + ts[i] + "'");
            auto x = F4::from_symbol(ts[i][0]);
            if (!x) throw ParseError("code file: bad coordinate symbol '" + ts[i] + "'");
            v.set(i, *x);
        }
        rows.push_back(std::move(v));
    }

    CodeFile f;
    if (linear) {
        f.kind = CodeKind::linear;
        f.linear = LinearCode::from_generators(n, rows);
        f.additive = f.linear->additive();
    } else {
        f.kind = CodeKind::additive;
        f.additive = AdditiveCode::from_generators(n, rows);
    }
    return f;
}

inline CodeFile parse_code_file(const std::string& text) {
    std::istringstream in(text);
    return parse_code_file(in);
}

namespace detail {

inline std::string format_row(const F4Vec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.length(); ++i) {
        if (i) s.push_back(' ');
        s.push_back(v.get(i).symbol());
    }
    return s;
}

} // namespace detail

inline std::string format_code_file(const LinearCode& c) {
    std::string s = "field gf4\nlength " + std::to_string(c.length()) + "\nkind linear\n";
    for (const auto& g : c.generators()) s += detail::format_row(g) + "\n";
    return s;
}

inline std::string format_code_file(const AdditiveCode& c) {
    std::string s = "field gf4\nlength " + std::to_string(c.length()) + "\nkind additive\n";
    for (const auto& g : c.generators()) s += detail::format_row(g) + "\n";
    return s;
}

} // namespace f4codes

#endif
