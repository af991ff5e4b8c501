#include "htn/network/bool_matrix.h"

#include <bit>

namespace htn {

BoolMatrix::BoolMatrix(std::size_t n) : n_(n), stride_((n + 63) / 64), words_(n * stride_, 0) {}

void BoolMatrix::or_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < stride_; ++w)
        words_[dst * stride_ + w] |= words_[src * stride_ + w];
}

bool BoolMatrix::row_any(std::size_t i) const {
    for (std::size_t w = 0; w < stride_; ++w)
        if (words_[i * stride_ + w])
            return true;
    return false;
}

bool BoolMatrix::column_any(std::size_t j) const {
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i, j))
            return true;
    return false;
}

bool BoolMatrix::has_reflexive() const {
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i, i))
            return true;
    return false;
}

std::size_t BoolMatrix::count() const {
    std::size_t c = 0;
    for (auto w : words_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

BoolMatrix BoolMatrix::without(std::size_t removed) const {
    BoolMatrix out(n_ - 1);
    for (std::size_t i = 0, oi = 0; i < n_; ++i) {
        if (i == removed)
            continue;
        for (std::size_t j = 0, oj = 0; j < n_; ++j) {
            if (j == removed)
                continue;
            if (get(i, j))
                out.set(oi, oj);
            ++oj;
        }
        ++oi;
    }
    return out;
}

BoolMatrix BoolMatrix::permuted(const std::vector<std::size_t> &perm) const {
    BoolMatrix out(n_);
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            if (get(perm[a], perm[b]))
                out.set(a, b);
    return out;
}

BoolMatrix warshall_closure(BoolMatrix m) {
    const std::size_t n = m.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (m.get(i, k))
                m.or_row(i, k);
    return m;
}

void add_edge_closed(BoolMatrix &m, std::size_t i, std::size_t j) {
    const std::size_t n = m.size();
    // Every a that reaches i (or is i) now reaches j and everything j reaches.
    std::vector<std::size_t> sources;
    for (std::size_t a = 0; a < n; ++a)
        if (a == i || m.get(a, i))
            sources.push_back(a);
    std::vector<bool> targets(n, false);
    for (std::size_t b = 0; b < n; ++b)
        targets[b] = b == j || m.get(j, b);
    for (std::size_t a : sources)
        for (std::size_t b = 0; b < n; ++b)
            if (targets[b])
                m.set(a, b);
}

}  // namespace htn
