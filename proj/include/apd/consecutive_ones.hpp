#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace apd {

// Dense 0-1 matrix, row-major bit storage.
class BinaryMatrix {
public:
    BinaryMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), bits_(rows * stride_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * stride_ + (c >> 6)] >> (c & 63)) & 1ULL;
    }
    void set(std::size_t r, std::size_t c, bool v = true) {
        if (v)
            bits_[r * stride_ + (c >> 6)] |= (1ULL << (c & 63));
        else
            bits_[r * stride_ + (c >> 6)] &= ~(1ULL << (c & 63));
    }

    static BinaryMatrix from_rows(std::size_t cols,
                                  const std::vector<std::vector<int>>& rows) {
        BinaryMatrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int c : rows[r]) m.set(r, static_cast<std::size_t>(c));
        return m;
    }

private:
    std::size_t rows_, cols_, stride_;
    std::vector<std::uint64_t> bits_;
};

// If some column permutation makes the 1s of every row contiguous, returns
// one such ordering (order[i] = column placed at position i), canonicalized
// to the lexicographically smaller of the ordering and its reverse.
// Deterministic for fixed input. Returns nullopt when no ordering exists.
std::optional<std::vector<int>> c1p_column_order(const BinaryMatrix& m);

// Checks contiguity of every row's 1s under the given column ordering.
// Throws std::invalid_argument on a malformed permutation.
bool verify_c1p(const BinaryMatrix& m, const std::vector<int>& order);

}  // namespace apd
