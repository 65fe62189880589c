#ifndef F4CODES_RS_CONCAT_HPP
#define F4CODES_RS_CONCAT_HPP

#include <cstdint>
#include <vector>

#include "aqc.hpp"
#include "code.hpp"
#include "errors.hpp"
#include "ext_field.hpp"

namespace f4codes {

// Extended Reed-Solomon code over GF(q), q = 4^m: length q, dimension k,
// distance q - k + 1. Held by its parity checks, one row of ones plus the
// rows (alpha_1^j ... alpha_{q-1}^j, 0) for j = 1 .. q-k-1, and a generator
// basis computed as their nullspace.
struct ExtRsCode {
    const ExtField* field = nullptr;
    unsigned k = 0;
    std::vector<std::vector<ExtField::Elem>> checks;   // (q-k) x q
    std::vector<std::vector<ExtField::Elem>> gen;      // k x q

    std::size_t length() const { return static_cast<std::size_t>(field->size()); }
    unsigned designed_distance() const {
        return static_cast<unsigned>(field->size()) - k + 1;
    }

    bool contains(const std::vector<ExtField::Elem>& v) const {
        if (v.size() != length()) throw PreconditionError("ExtRsCode: vector length mismatch");
        for (const auto& row : checks) {
            ExtField::Elem s = 0;
            for (std::size_t t = 0; t < v.size(); ++t)
                s = ExtField::add(s, field->mul(row[t], v[t]));
            if (s != 0) return false;
        }
        return true;
    }
};

namespace detail {

// Nullspace basis over GF(q) via reduced row echelon form.
inline std::vector<std::vector<ExtField::Elem>> ext_nullspace(
        const ExtField& F, std::vector<std::vector<ExtField::Elem>> rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::vector<std::vector<ExtField::Elem>> red;
    for (auto& row : rows) {
        auto v = row;
        for (std::size_t j = 0; j < red.size(); ++j) {
            ExtField::Elem c = v[pivots[j]];
            if (c == 0) continue;
            for (std::size_t t = 0; t < ncols; ++t)
                v[t] = ExtField::add(v[t], F.mul(c, red[j][t]));
        }
        std::size_t p = ncols;
        for (std::size_t t = 0; t < ncols; ++t)
            if (v[t] != 0) { p = t; break; }
        if (p == ncols) continue;
        ExtField::Elem s = F.inv(v[p]);
        for (std::size_t t = 0; t < ncols; ++t) v[t] = F.mul(v[t], s);
        std::size_t at = 0;
        while (at < pivots.size() && pivots[at] < p) ++at;
        red.insert(red.begin() + static_cast<std::ptrdiff_t>(at), v);
        pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(at), p);
        for (std::size_t j = 0; j < red.size(); ++j) {
            if (j == at) continue;
            ExtField::Elem c = red[j][p];
            if (c == 0) continue;
            for (std::size_t t = 0; t < ncols; ++t)
                red[j][t] = ExtField::add(red[j][t], F.mul(c, v[t]));
        }
    }
    std::vector<char> is_pivot(ncols, 0);
    for (auto p : pivots) is_pivot[p] = 1;
    std::vector<std::vector<ExtField::Elem>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<ExtField::Elem> x(ncols, 0);
        x[free] = ExtField::one();
        for (std::size_t j = 0; j < pivots.size(); ++j) x[pivots[j]] = red[j][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace detail

inline ExtRsCode extended_rs(const ExtField& F, unsigned k) {
    std::size_t q = static_cast<std::size_t>(F.size());
    if (k < 1 || k > q) throw PreconditionError("extended_rs: need 1 <= k <= q");
    ExtRsCode code;
    code.field = &F;
    code.k = k;
    if (k < q) {
        std::vector<ExtField::Elem> ones(q, ExtField::one());
        code.checks.push_back(std::move(ones));
        for (unsigned j = 1; j + k < q; ++j) {
            std::vector<ExtField::Elem> row(q, 0);
            for (std::size_t i = 1; i <= q - 1; ++i) row[i - 1] = F.pow(F.alpha(i), j);
            code.checks.push_back(std::move(row));
        }
    }
    code.gen = detail::ext_nullspace(F, code.checks, q);
    if (code.gen.size() != k)
        throw PreconditionError("extended_rs: parity checks are not independent");
    return code;
}

// Blockwise base-field expansion over the pinned basis: each GF(4^m)
// coordinate becomes m GF(4) coordinates. Injective, GF(4)-linear, never
// decreases weight, preserves nesting.
inline F4Vec phi_star(const ExtField& F, const std::vector<ExtField::Elem>& v) {
    unsigned m = F.degree();
    F4Vec out(m * v.size());
    for (std::size_t t = 0; t < v.size(); ++t) {
        auto c = F.phi(v[t]);
        for (unsigned j = 0; j < m; ++j) out.set(t * m + j, c[j]);
    }
    return out;
}

struct ConcatRs {
    unsigned m = 0;
    unsigned k = 0;
    std::uint64_t q = 0;
    LinearCode inner{0};        // repetition code of length m q
    LinearCode outer{0};        // expanded extended RS code, dimension m k
    unsigned designed_floor = 0;   // q - k + 1, a bound on d(outer)
};

// Expand an extended RS code and its repetition subcode to GF(4). The basis
// starts at 1, so the expanded repetition subcode sits inside the expanded
// code and the all-ones word generates it.
inline ConcatRs concat_rs_pair(const ExtField& F, unsigned k) {
    ExtRsCode b = extended_rs(F, k);
    std::size_t q = static_cast<std::size_t>(F.size());
    unsigned m = F.degree();

    // the repetition code over GF(q) sits inside the RS code: all its
    // parity rows pair the constant vector to a full power sum, which
    // vanishes, or to q ones, and q is even
    std::vector<ExtField::Elem> ones_q(q, ExtField::one());
    if (!b.contains(ones_q))
        throw PreconditionError("concat_rs_pair: repetition code escaped the RS code");

    std::vector<F4Vec> rows;
    rows.reserve(static_cast<std::size_t>(m) * k);
    for (const auto& g : b.gen)
        for (unsigned j = 0; j < m; ++j) {
            std::vector<ExtField::Elem> scaled(q);
            for (std::size_t t = 0; t < q; ++t) scaled[t] = F.mul(F.phi_basis()[j], g[t]);
            rows.push_back(phi_star(F, scaled));
        }
    LinearCode outer = LinearCode::from_span(m * q, std::move(rows));
    if (outer.dim() != static_cast<std::size_t>(m) * k)
        throw PreconditionError("concat_rs_pair: expansion dropped rank");

    F4Vec all_ones(m * q);
    for (std::size_t i = 0; i < m * q; ++i) all_ones.set(i, F4::one());
    LinearCode inner = LinearCode::from_span(m * q, {all_ones});
    if (!is_subcode(inner, outer))
        throw PreconditionError("concat_rs_pair: repetition code is not nested in the expansion");

    ConcatRs out;
    out.m = m;
    out.k = k;
    out.q = q;
    out.inner = std::move(inner);
    out.outer = std::move(outer);
    out.designed_floor = b.designed_distance();
    return out;
}

// Doubled-image parameters of the expanded pair:
// [[2 m q, m k - 1, dz/2]] with dz at least 2 (q - k + 1).
inline AqcParams rs_concat_aqc_params(const ExtField& F, unsigned k) {
    ConcatRs pair = concat_rs_pair(F, k);
    AdditiveCode inner_add = pair.inner.additive();
    if (!detail::trace_dual_distance_at_least_2(inner_add))
        throw PreconditionError("rs_concat_aqc_params: dual distance precondition failed");
    AqcParams p;
    p.n = 2 * static_cast<std::size_t>(pair.m) * pair.q;
    p.k_twice = 2 * (static_cast<long long>(pair.m) * pair.k - 1);
    p.dz = 2 * pair.designed_floor;
    p.dx = 2;
    p.dz_floor = true;
    p.mds = singleton_equality(p);
    return p;
}

struct RsTableRow {
    unsigned k = 0;
    unsigned k_prime = 0;    // m k - 1
    unsigned dz_floor = 0;   // 2 (q - k + 1)
};

// One row per 1 <= k <= q, each constructed and nesting-checked.
inline std::vector<RsTableRow> rs_concat_table(const ExtField& F) {
    std::vector<RsTableRow> rows;
    std::size_t q = static_cast<std::size_t>(F.size());
    for (unsigned k = 1; k <= q; ++k) {
        ConcatRs pair = concat_rs_pair(F, k);
        RsTableRow r;
        r.k = k;
        r.k_prime = F.degree() * k - 1;
        r.dz_floor = 2 * pair.designed_floor;
        rows.push_back(r);
    }
    return rows;
}

} // namespace f4codes

#endif
