#include "qflab/quadratic_family.hpp"

#include <cmath>
#include <utility>

#include "qflab/errors.hpp"

namespace qf {

QuadraticFamily::QuadraticFamily(ParamDomain domain, SymMatrix base, std::vector<SymMatrix> dirs)
    : domain_(std::move(domain)), base_(std::move(base)), dirs_(std::move(dirs)) {
    if (static_cast<int>(dirs_.size()) != domain_.dim())
        throw precondition_error("QuadraticFamily: directions count must equal domain dimension");
    for (const auto& a : dirs_)
        if (!a.same_shape(base_)) throw precondition_error("QuadraticFamily: matrix dimension mismatch");
}

SymMatrix QuadraticFamily::eval(const Vec& v) const {
    double slack = 1e-12 * (1.0 + domain_.diameter());
    if (!domain_.contains(v, slack)) throw precondition_error("QuadraticFamily::eval: point outside domain");
    return eval_unchecked(v);
}

SymMatrix QuadraticFamily::eval_unchecked(const Vec& v) const {
    SymMatrix s = base_;
    for (std::size_t i = 0; i < dirs_.size(); ++i) s.add_scaled(dirs_[i], v[i]);
    return s;
}

double QuadraticFamily::lipschitz() const {
    if (lipschitz_ < 0.0) {
        double s = 0.0;
        for (const auto& a : dirs_) {
            double o = op_norm(a);
            s += o * o;
        }
        lipschitz_ = std::sqrt(s);
    }
    return lipschitz_;
}

QuadraticFamily QuadraticFamily::scaled(double c) const {
    SymMatrix b = base_;
    b.scale(c);
    std::vector<SymMatrix> ds = dirs_;
    for (auto& a : ds) a.scale(c);
    return QuadraticFamily(domain_, std::move(b), std::move(ds));
}

double lambda_j(const QuadraticFamily& F, const Vec& v, int j) {
    if (j < 1 || j > F.n()) throw precondition_error("lambda_j: index out of range");
    EigenData e = eigen_sorted(F.eval(v));
    return e.values[static_cast<std::size_t>(j - 1)];
}

double gap_at(const QuadraticFamily& F, const Vec& v, int j) {
    return gap(eigen_sorted(F.eval_unchecked(v)), j);
}

} // namespace qf
