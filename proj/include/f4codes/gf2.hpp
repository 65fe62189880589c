#ifndef F4CODES_GF2_HPP
#define F4CODES_GF2_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace f4codes::detail {

// Bit vector over GF(2) with the word layout left implicit; used for the
// additive-code row space and for nullspace computations.
class BitVec {
public:
    BitVec() : n_(0) {}
    explicit BitVec(std::size_t nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    unsigned get(std::size_t i) const {
        return static_cast<unsigned>((w_[i >> 6] >> (i & 63)) & 1u);
    }
    void set(std::size_t i, unsigned b) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (b) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator<(const BitVec& a, const BitVec& b) { return a.w_ < b.w_; }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }

    // Index of the lowest set bit, i.e. the leftmost nonzero column.
    std::optional<std::size_t> first_one() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
        return std::nullopt;
    }

private:
    std::size_t n_;
    std::vector<std::uint64_t> w_;
};

// In-place reduced row echelon form; dependent rows are dropped.
// Returns the pivot columns, ascending.
inline std::vector<std::size_t> rref(std::vector<BitVec>& rows) {
    std::vector<std::size_t> pivots;
    std::vector<BitVec> out;
    for (auto& r : rows) {
        BitVec v = r;
        for (std::size_t j = 0; j < out.size(); ++j)
            if (v.get(pivots[j])) v ^= out[j];
        auto p = v.first_one();
        if (!p) continue;
        // keep rows sorted by pivot and re-reduce earlier rows
        std::size_t at = 0;
        while (at < pivots.size() && pivots[at] < *p) ++at;
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(at), v);
        pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(at), *p);
        for (std::size_t j = 0; j < out.size(); ++j)
            if (j != at && out[j].get(*p)) out[j] ^= v;
    }
    rows = std::move(out);
    return pivots;
}

// Basis of { x : M x = 0 } for M given by rows of length ncols.
inline std::vector<BitVec> nullspace(std::vector<BitVec> rows, std::size_t ncols) {
    auto pivots = rref(rows);
    std::vector<char> is_pivot(ncols, 0);
    for (auto p : pivots) is_pivot[p] = 1;
    std::vector<BitVec> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        BitVec x(ncols);
        x.set(free, 1);
        for (std::size_t j = 0; j < pivots.size(); ++j)
            if (rows[j].get(free)) x.set(pivots[j], 1);
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace f4codes::detail

#endif
