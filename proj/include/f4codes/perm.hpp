#ifndef F4CODES_PERM_HPP
#define F4CODES_PERM_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "f4vec.hpp"

namespace f4codes {

// Permutation of {1, ..., N}. The interface is 1-based throughout; only the
// private image table is 0-based.
class IndexPermutation {
public:
    explicit IndexPermutation(std::size_t n) : img_(n) {
        for (std::size_t i = 0; i < n; ++i) img_[i] = i;
    }

    static IndexPermutation identity(std::size_t n) { return IndexPermutation(n); }

    // images[j-1] = p(j), 1-based values
    static IndexPermutation from_images(const std::vector<std::size_t>& images) {
        IndexPermutation p(images.size());
        std::vector<char> seen(images.size(), 0);
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (images[i] < 1 || images[i] > images.size() || seen[images[i] - 1])
                throw std::invalid_argument("IndexPermutation: not a bijection");
            seen[images[i] - 1] = 1;
            p.img_[i] = images[i] - 1;
        }
        return p;
    }

    std::size_t size() const { return img_.size(); }

    std::size_t apply(std::size_t j) const {
        if (j < 1 || j > img_.size()) throw std::out_of_range("IndexPermutation: index");
        return img_[j - 1] + 1;
    }

    // (this o other)(j) = this(other(j))
    IndexPermutation compose(const IndexPermutation& other) const {
        check_size(other);
        IndexPermutation r(size());
        for (std::size_t i = 0; i < size(); ++i) r.img_[i] = img_[other.img_[i]];
        return r;
    }

    IndexPermutation inverse() const {
        IndexPermutation r(size());
        for (std::size_t i = 0; i < size(); ++i) r.img_[img_[i]] = i;
        return r;
    }

    IndexPermutation power(long long e) const {
        IndexPermutation base = e < 0 ? inverse() : *this;
        unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e)
                                     : static_cast<unsigned long long>(e);
        IndexPermutation acc = identity(size());
        while (k) {
            if (k & 1) acc = acc.compose(base);
            base = base.compose(base);
            k >>= 1;
        }
        return acc;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    friend bool operator==(const IndexPermutation& a, const IndexPermutation& b) {
        return a.img_ == b.img_;
    }
    friend bool operator!=(const IndexPermutation& a, const IndexPermutation& b) {
        return !(a == b);
    }

    std::vector<std::vector<std::size_t>> cycles() const {
        std::vector<std::vector<std::size_t>> cs;
        std::vector<char> seen(size(), 0);
        for (std::size_t s = 0; s < size(); ++s) {
            if (seen[s]) continue;
            std::vector<std::size_t> c;
            std::size_t i = s;
            while (!seen[i]) {
                seen[i] = 1;
                c.push_back(i + 1);
                i = img_[i];
            }
            if (c.size() > 1) cs.push_back(std::move(c));
        }
        return cs;
    }

    unsigned long long order() const {
        unsigned long long o = 1;
        for (const auto& c : cycles()) o = std::lcm(o, static_cast<unsigned long long>(c.size()));
        return o;
    }

    // Disjoint cycles, fixed points omitted, e.g. "(1,4,5,8)(2,3,6,7)".
    // The identity prints as "(1)".
    std::string cycle_notation() const {
        auto cs = cycles();
        if (cs.empty()) return "(1)";
        std::string s;
        for (const auto& c : cs) {
            s.push_back('(');
            for (std::size_t j = 0; j < c.size(); ++j) {
                if (j) s.push_back(',');
                s += std::to_string(c[j]);
            }
            s.push_back(')');
        }
        return s;
    }

private:
    void check_size(const IndexPermutation& o) const {
        if (size() != o.size()) throw std::invalid_argument("IndexPermutation: size mismatch");
    }
    std::vector<std::size_t> img_;
};

// Action on vectors by position relabeling: out_j = v_{p(j)}.
inline F4Vec induced_apply(const IndexPermutation& p, const F4Vec& v) {
    if (p.size() != v.length())
        throw std::invalid_argument("induced_apply: permutation size differs from vector length");
    F4Vec r(v.length());
    for (std::size_t j = 1; j <= p.size(); ++j) r.set(j - 1, v.get(p.apply(j) - 1));
    return r;
}

} // namespace f4codes

#endif
