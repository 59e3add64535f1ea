#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qf {

/// Dense real symmetric n x n matrix. Storage is the full row-major
/// square; mutation goes through set() which writes both triangles, so
/// entries[i][j] == entries[j][i] holds exactly at all times.
class SymMatrix {
public:
    SymMatrix() : n_(0) {}
    explicit SymMatrix(int n);

    static SymMatrix zero(int n) { return SymMatrix(n); }
    static SymMatrix identity(int n);
    static SymMatrix diagonal(std::initializer_list<double> d);
    static SymMatrix diagonal(const std::vector<double>& d);
    /// Builds from a full row-major array; entries differing from their
    /// transpose by more than sym_tol are an error, smaller asymmetries
    /// are averaged away.
    static SymMatrix from_rows(int n, const std::vector<double>& rows, double sym_tol = 1e-12);

    int n() const { return n_; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, double v) {
        a_[static_cast<std::size_t>(i) * n_ + j] = v;
        a_[static_cast<std::size_t>(j) * n_ + i] = v;
    }

    const std::vector<double>& data() const { return a_; }

    double max_abs() const;
    double trace() const;
    /// Frobenius inner product tr(AB).
    double dot(const SymMatrix& other) const;

    SymMatrix& add_scaled(const SymMatrix& other, double c);
    SymMatrix& add_diagonal(double c);
    SymMatrix& scale(double c);

    /// Value of the quadratic form x^T S x.
    double quadratic_form(const std::vector<double>& x) const;

    bool same_shape(const SymMatrix& other) const { return n_ == other.n_; }

private:
    int n_;
    std::vector<double> a_;
};

/// Descending eigenvalues with matching orthonormal eigenvectors
/// (column k of `vectors` pairs with values[k]; vectors stored row-major).
struct EigenData {
    std::vector<double> values;
    std::vector<double> vectors;
    int n = 0;

    double vec(int row, int col) const { return vectors[static_cast<std::size_t>(row) * n + col]; }
    std::vector<double> column(int col) const;
};

/// Cyclic Jacobi eigensolver: deterministic sweep order, off-diagonal
/// threshold 1e-13 relative to the input scale, capped at 50 sweeps.
/// Throws numerics_error if the cap is reached (unreachable for n <= 16).
EigenData eigen_sorted(const SymMatrix& S);

/// (n_pos, n_neg, n_zero): eigenvalue counted as zero iff |lambda| <= tol,
/// positive iff lambda > tol.
struct IndexCounts {
    int n_pos = 0;
    int n_neg = 0;
    int n_zero = 0;
};
IndexCounts index_counts(const SymMatrix& S, double tol);

/// lambda_j - lambda_{j+1} >= 0 for 1 <= j <= n-1 (1-based j).
double gap(const SymMatrix& S, int j);
double gap(const EigenData& e, int j);

/// Scale-invariant default zero tolerance: 1e-9 * (1 + max|entry|).
double default_zero_tol(const SymMatrix& S);

/// Operator norm (largest |eigenvalue|).
double op_norm(const SymMatrix& S);

} // namespace qf
