#include "qflab/sym_matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "qflab/errors.hpp"

namespace qf {

SymMatrix::SymMatrix(int n) : n_(n) {
    if (n < 1) throw precondition_error("SymMatrix: dimension must be >= 1");
    a_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

SymMatrix SymMatrix::identity(int n) {
    SymMatrix s(n);
    for (int i = 0; i < n; ++i) s.set(i, i, 1.0);
    return s;
}

SymMatrix SymMatrix::diagonal(std::initializer_list<double> d) {
    return diagonal(std::vector<double>(d));
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& d) {
    SymMatrix s(static_cast<int>(d.size()));
    for (int i = 0; i < s.n(); ++i) s.set(i, i, d[static_cast<std::size_t>(i)]);
    return s;
}

SymMatrix SymMatrix::from_rows(int n, const std::vector<double>& rows, double sym_tol) {
    if (static_cast<int>(rows.size()) != n * n)
        throw precondition_error("SymMatrix::from_rows: need n*n entries");
    SymMatrix s(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double x = rows[static_cast<std::size_t>(i) * n + j];
            double y = rows[static_cast<std::size_t>(j) * n + i];
            if (std::abs(x - y) > sym_tol)
                throw precondition_error("SymMatrix::from_rows: asymmetry beyond tolerance");
            s.set(i, j, 0.5 * (x + y));
        }
    }
    return s;
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::dot(const SymMatrix& other) const {
    double t = 0.0;
    for (std::size_t k = 0; k < a_.size(); ++k) t += a_[k] * other.a_[k];
    return t;
}

SymMatrix& SymMatrix::add_scaled(const SymMatrix& other, double c) {
    if (!same_shape(other)) throw precondition_error("SymMatrix::add_scaled: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += c * other.a_[k];
    return *this;
}

SymMatrix& SymMatrix::add_diagonal(double c) {
    for (int i = 0; i < n_; ++i) set(i, i, (*this)(i, i) + c);
    return *this;
}

SymMatrix& SymMatrix::scale(double c) {
    for (auto& v : a_) v *= c;
    return *this;
}

double SymMatrix::quadratic_form(const std::vector<double>& x) const {
    double q = 0.0;
    for (int i = 0; i < n_; ++i) {
        double row = 0.0;
        for (int j = 0; j < n_; ++j) row += (*this)(i, j) * x[static_cast<std::size_t>(j)];
        q += x[static_cast<std::size_t>(i)] * row;
    }
    return q;
}

std::vector<double> EigenData::column(int col) const {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) v[static_cast<std::size_t>(r)] = vec(r, col);
    return v;
}

IndexCounts index_counts(const SymMatrix& S, double tol) {
    if (tol < 0.0) throw precondition_error("index_counts: tol must be >= 0");
    EigenData e = eigen_sorted(S);
    IndexCounts c;
    for (double v : e.values) {
        if (std::abs(v) <= tol)
            ++c.n_zero;
        else if (v > tol)
            ++c.n_pos;
        else
            ++c.n_neg;
    }
    return c;
}

double gap(const EigenData& e, int j) {
    if (j < 1 || j > e.n - 1) throw precondition_error("gap: index out of range");
    return e.values[static_cast<std::size_t>(j - 1)] - e.values[static_cast<std::size_t>(j)];
}

double gap(const SymMatrix& S, int j) { return gap(eigen_sorted(S), j); }

double default_zero_tol(const SymMatrix& S) { return 1e-9 * (1.0 + S.max_abs()); }

double op_norm(const SymMatrix& S) {
    EigenData e = eigen_sorted(S);
    double m = 0.0;
    for (double v : e.values) m = std::max(m, std::abs(v));
    return m;
}

} // namespace qf
