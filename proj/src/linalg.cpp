#include "affineorth/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace affineorth {

Matrix inverse_checked(const Matrix& a) {
    if (a.rows() != a.cols())
        throw ShapeError("inverse: matrix is not square");
    Eigen::FullPivLU<Matrix> lu(a);
    if (!lu.isInvertible())
        throw PreconditionError("inverse: singular matrix");
    return lu.inverse();
}

std::vector<double> eigenvalue_moduli(const Matrix& a) {
    if (a.rows() != a.cols())
        throw ShapeError("eigenvalue_moduli: matrix is not square");
    Eigen::EigenSolver<Matrix> es(a, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw IntegrationError("eigenvalue_moduli: eigensolver failed to converge");
    std::vector<double> mods(static_cast<std::size_t>(a.rows()));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        mods[static_cast<std::size_t>(i)] = std::abs(es.eigenvalues()[i]);
    std::sort(mods.begin(), mods.end());
    return mods;
}

Matrix random_special_orthogonal(std::size_t n, Rng& rng) {
    const auto ni = static_cast<Eigen::Index>(n);
    Matrix g(ni, ni);
    for (Eigen::Index i = 0; i < ni; ++i)
        for (Eigen::Index j = 0; j < ni; ++j)
            g(i, j) = rng.uniform(-1.0, 1.0);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < ni; ++i)
        if (r(i, i) < 0.0)
            q.col(i) = -q.col(i);
    if (q.determinant() < 0.0)
        q.col(ni - 1) = -q.col(ni - 1);
    return q;
}

Matrix random_skew(std::size_t n, Rng& rng, double lo, double hi) {
    const auto ni = static_cast<Eigen::Index>(n);
    Matrix m = Matrix::Zero(ni, ni);
    for (Eigen::Index i = 0; i < ni; ++i) {
        for (Eigen::Index j = i + 1; j < ni; ++j) {
            const double v = rng.uniform(lo, hi);
            m(i, j) = v;
            m(j, i) = -v;
        }
    }
    return m;
}

double max_abs(const Matrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

} // namespace affineorth
