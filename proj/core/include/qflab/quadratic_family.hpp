#pragma once

#include <vector>

#include "qflab/param_domain.hpp"
#include "qflab/sym_matrix.hpp"

namespace qf {

/// Affine family of symmetric matrices v -> base + sum v_i * dirs[i] over a
/// parameter domain. Affinity is what makes directional derivatives exact
/// for the continuation machinery; non-affine families are out of scope.
class QuadraticFamily {
public:
    QuadraticFamily(ParamDomain domain, SymMatrix base, std::vector<SymMatrix> dirs);

    const ParamDomain& domain() const { return domain_; }
    const SymMatrix& base() const { return base_; }
    const std::vector<SymMatrix>& directions() const { return dirs_; }
    int n() const { return base_.n(); }
    int d() const { return domain_.dim(); }

    /// base + sum v_i dirs[i]; v must lie in the domain within 1e-12
    /// relative slack.
    SymMatrix eval(const Vec& v) const;
    /// Same without the domain check (continuation correctors may step a
    /// hair outside while homing in on a boundary point).
    SymMatrix eval_unchecked(const Vec& v) const;

    /// sqrt(sum ||dirs[i]||_op^2): Lipschitz constant of v -> f_v in the
    /// spectral norm, hence of every eigenvalue. Cached.
    double lipschitz() const;

    QuadraticFamily scaled(double c) const;

private:
    ParamDomain domain_;
    SymMatrix base_;
    std::vector<SymMatrix> dirs_;
    mutable double lipschitz_ = -1.0;
};

double lambda_j(const QuadraticFamily& F, const Vec& v, int j);
double gap_at(const QuadraticFamily& F, const Vec& v, int j);

} // namespace qf
