#pragma once

#include <cstdint>
#include <vector>

namespace qf {

/// Dense matrix over GF(2), bitset rows packed in 64-bit words.
/// Elimination pivots columns in index order and is fully deterministic.
class Z2Matrix {
public:
    Z2Matrix() = default;
    Z2Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool v);
    void flip(int r, int c);
    /// row[r] ^= row[src]
    void xor_row(int r, int src);

    int rank() const;

    /// Solves M x = b; returns false if inconsistent. Any solution is
    /// returned (free variables set to zero).
    bool solve(const std::vector<std::uint8_t>& b, std::vector<std::uint8_t>& x) const;

    /// Basis of the null space {x : M x = 0}, one vector per row of the
    /// result.
    std::vector<std::vector<std::uint8_t>> null_space() const;

    static Z2Matrix multiply(const Z2Matrix& A, const Z2Matrix& B);
    bool is_zero() const;

    std::size_t bit_size() const { return static_cast<std::size_t>(rows_) * cols_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;

    friend struct Z2Elim;
};

/// Rank of a sparse GF(2) matrix given by columns (sorted row indices),
/// via standard column reduction with a pivot->column map. Deterministic:
/// columns are processed in index order, the pivot is the largest row
/// index. `skip` marks columns known to reduce to zero (clearing).
int sparse_rank(std::vector<std::vector<std::int32_t>>& columns, const std::vector<std::uint8_t>* skip = nullptr,
                std::vector<std::int32_t>* pivot_of_column = nullptr);

} // namespace qf
