#ifndef HTN_NETWORK_BOOL_MATRIX_H
#define HTN_NETWORK_BOOL_MATRIX_H

#include <cstddef>
#include <cstdint>
#include <vector>

namespace htn {

/// Square boolean matrix with word-packed rows.
class BoolMatrix {
public:
    BoolMatrix() = default;
    explicit BoolMatrix(std::size_t n);

    std::size_t size() const { return n_; }

    bool get(std::size_t i, std::size_t j) const {
        return (words_[i * stride_ + j / 64] >> (j % 64)) & 1U;
    }
    void set(std::size_t i, std::size_t j, bool value = true) {
        auto &w = words_[i * stride_ + j / 64];
        const std::uint64_t bit = std::uint64_t{1} << (j % 64);
        w = value ? (w | bit) : (w & ~bit);
    }

    /// row[dst] |= row[src]
    void or_row(std::size_t dst, std::size_t src);
    bool row_any(std::size_t i) const;
    bool column_any(std::size_t j) const;
    /// True if some i has get(i, i).
    bool has_reflexive() const;
    std::size_t count() const;

    /// Copy with row and column i removed.
    BoolMatrix without(std::size_t i) const;
    /// Matrix m'[a][b] = m[perm[a]][perm[b]].
    BoolMatrix permuted(const std::vector<std::size_t> &perm) const;

    const std::vector<std::uint64_t> &words() const { return words_; }

    friend bool operator==(const BoolMatrix &, const BoolMatrix &) = default;

private:
    std::size_t n_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Transitive closure by Warshall's algorithm. A cycle through i shows up as
/// a set diagonal entry (i, i).
BoolMatrix warshall_closure(BoolMatrix m);

/// Adds the edge i -> j to a transitively closed matrix and keeps it closed.
void add_edge_closed(BoolMatrix &m, std::size_t i, std::size_t j);

}  // namespace htn

#endif
