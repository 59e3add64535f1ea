#include "qflab/z2.hpp"

#include <algorithm>
#include <unordered_map>

#include "qflab/errors.hpp"

namespace qf {

Z2Matrix::Z2Matrix(int rows, int cols) : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64) {
    if (rows < 0 || cols < 0) throw precondition_error("Z2Matrix: negative dimension");
    bits_.assign(static_cast<std::size_t>(rows_) * words_per_row_, 0);
}

bool Z2Matrix::get(int r, int c) const {
    return (bits_[static_cast<std::size_t>(r) * words_per_row_ + (c >> 6)] >> (c & 63)) & 1ULL;
}

void Z2Matrix::set(int r, int c, bool v) {
    auto& w = bits_[static_cast<std::size_t>(r) * words_per_row_ + (c >> 6)];
    if (v)
        w |= (1ULL << (c & 63));
    else
        w &= ~(1ULL << (c & 63));
}

void Z2Matrix::flip(int r, int c) {
    bits_[static_cast<std::size_t>(r) * words_per_row_ + (c >> 6)] ^= (1ULL << (c & 63));
}

void Z2Matrix::xor_row(int r, int src) {
    std::uint64_t* dst = bits_.data() + static_cast<std::size_t>(r) * words_per_row_;
    const std::uint64_t* s = bits_.data() + static_cast<std::size_t>(src) * words_per_row_;
    for (int w = 0; w < words_per_row_; ++w) dst[w] ^= s[w];
}

namespace {

// Row echelon in place over a copy; records pivot column per pivot row.
struct Echelon {
    Z2Matrix m;
    std::vector<int> pivot_row_of_col; // -1 when the column is free
    int rank = 0;
};

Echelon echelonize(const Z2Matrix& in) {
    Echelon e{in, std::vector<int>(static_cast<std::size_t>(in.cols()), -1), 0};
    int r = 0;
    for (int c = 0; c < e.m.cols() && r < e.m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < e.m.rows(); ++i)
            if (e.m.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r) {
            // Swap rows via xor (cheap and keeps storage simple).
            e.m.xor_row(r, pivot);
            e.m.xor_row(pivot, r);
            e.m.xor_row(r, pivot);
        }
        for (int i = 0; i < e.m.rows(); ++i)
            if (i != r && e.m.get(i, c)) e.m.xor_row(i, r);
        e.pivot_row_of_col[static_cast<std::size_t>(c)] = r;
        ++r;
    }
    e.rank = r;
    return e;
}

} // namespace

int Z2Matrix::rank() const { return echelonize(*this).rank; }

bool Z2Matrix::solve(const std::vector<std::uint8_t>& b, std::vector<std::uint8_t>& x) const {
    if (static_cast<int>(b.size()) != rows_) throw precondition_error("Z2Matrix::solve: size mismatch");
    // Eliminate the augmented system.
    Z2Matrix aug(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int w = 0; w < words_per_row_; ++w)
            aug.bits_[static_cast<std::size_t>(r) * aug.words_per_row_ + w] =
                bits_[static_cast<std::size_t>(r) * words_per_row_ + w];
        // Clear any spill past cols_ (none, since words only grow).
        if (b[static_cast<std::size_t>(r)]) aug.set(r, cols_, true);
    }
    Echelon e = echelonize(aug);
    // Inconsistent iff the augmented column is a pivot.
    if (e.pivot_row_of_col[static_cast<std::size_t>(cols_)] >= 0) return false;
    x.assign(static_cast<std::size_t>(cols_), 0);
    for (int c = 0; c < cols_; ++c) {
        int pr = e.pivot_row_of_col[static_cast<std::size_t>(c)];
        if (pr >= 0 && e.m.get(pr, cols_)) x[static_cast<std::size_t>(c)] = 1;
    }
    return true;
}

std::vector<std::vector<std::uint8_t>> Z2Matrix::null_space() const {
    Echelon e = echelonize(*this);
    std::vector<std::vector<std::uint8_t>> basis;
    for (int c = 0; c < cols_; ++c) {
        if (e.pivot_row_of_col[static_cast<std::size_t>(c)] >= 0) continue;
        std::vector<std::uint8_t> v(static_cast<std::size_t>(cols_), 0);
        v[static_cast<std::size_t>(c)] = 1;
        for (int pc = 0; pc < cols_; ++pc) {
            int pr = e.pivot_row_of_col[static_cast<std::size_t>(pc)];
            if (pr >= 0 && e.m.get(pr, c)) v[static_cast<std::size_t>(pc)] = 1;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Z2Matrix Z2Matrix::multiply(const Z2Matrix& A, const Z2Matrix& B) {
    if (A.cols() != B.rows()) throw precondition_error("Z2Matrix::multiply: shape mismatch");
    Z2Matrix C(A.rows(), B.cols());
    // Word-level accumulation of selected rows of B.
    for (int r = 0; r < A.rows(); ++r) {
        std::uint64_t* dst = C.bits_.data() + static_cast<std::size_t>(r) * C.words_per_row_;
        for (int k = 0; k < A.cols(); ++k) {
            if (!A.get(r, k)) continue;
            const std::uint64_t* src = B.bits_.data() + static_cast<std::size_t>(k) * B.words_per_row_;
            for (int w = 0; w < C.words_per_row_; ++w) dst[w] ^= src[w];
        }
    }
    return C;
}

bool Z2Matrix::is_zero() const {
    for (auto w : bits_)
        if (w) return false;
    return true;
}

int sparse_rank(std::vector<std::vector<std::int32_t>>& columns, const std::vector<std::uint8_t>* skip,
                std::vector<std::int32_t>* pivot_of_column) {
    std::unordered_map<std::int32_t, std::int32_t> pivot_owner;
    pivot_owner.reserve(columns.size());
    if (pivot_of_column) pivot_of_column->assign(columns.size(), -1);
    int rank = 0;
    std::vector<std::int32_t> tmp;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (skip && (*skip)[c]) {
            columns[c].clear();
            continue;
        }
        auto& col = columns[c];
        while (!col.empty()) {
            std::int32_t piv = col.back();
            auto it = pivot_owner.find(piv);
            if (it == pivot_owner.end()) break;
            // Symmetric difference with the owning column.
            const auto& other = columns[static_cast<std::size_t>(it->second)];
            tmp.clear();
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                          std::back_inserter(tmp));
            col.swap(tmp);
        }
        if (!col.empty()) {
            pivot_owner.emplace(col.back(), static_cast<std::int32_t>(c));
            if (pivot_of_column) (*pivot_of_column)[c] = col.back();
            ++rank;
        }
    }
    return rank;
}

} // namespace qf
