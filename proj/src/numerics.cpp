#include "exlasso/numerics.hpp"

#include <cmath>
#include <random>

#include "exlasso/errors.hpp"

namespace exlasso {

namespace {

constexpr double kSymmetryTol = 1e-10;
constexpr double kJitterScale = 1e-12;
constexpr double kPowerTol = 1e-10;
constexpr int kPowerMaxIterations = 10000;
constexpr double kPowerInflation = 1e-10;
constexpr double kPinvCutoff = 1e-10;

void require_square(const Matrix& a, const char* who) {
    if (a.rows() != a.cols()) {
        throw DimensionMismatch(std::string(who) + ": matrix is " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
}

void require_symmetric(const Matrix& a, const char* who) {
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    const double dev = (a - a.transpose()).cwiseAbs().maxCoeff();
    if (dev > kSymmetryTol * scale) {
        throw Error(std::string(who) + ": matrix is not symmetric (deviation " +
                    std::to_string(dev) + ")");
    }
}

}  // namespace

Matrix cholesky_factor(const Matrix& a) {
    require_square(a, "cholesky_factor");
    if (a.rows() == 0) return a;
    require_symmetric(a, "cholesky_factor");

    const Matrix sym = 0.5 * (a + a.transpose());
    Eigen::LLT<Matrix> llt(sym);
    if (llt.info() == Eigen::Success) return llt.matrixL();

    const double jitter = kJitterScale * sym.trace() / static_cast<double>(sym.rows());
    Matrix bumped = sym;
    bumped.diagonal().array() += jitter;
    llt.compute(bumped);
    if (llt.info() == Eigen::Success) return llt.matrixL();

    throw NotPositiveDefinite("cholesky_factor: matrix is not positive definite");
}

double largest_eigenvalue(const Matrix& a) {
    require_square(a, "largest_eigenvalue");
    const Eigen::Index p = a.rows();
    if (p == 0) return 0.0;
    require_symmetric(a, "largest_eigenvalue");
    if (p == 1) return a(0, 0) * (1.0 + kPowerInflation);

    // Fixed-seed start vector keeps repeated calls bit-identical.
    std::mt19937_64 eng(0x243f6a8885a308d3ull);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Vector v(p);
    for (Eigen::Index i = 0; i < p; ++i) v[i] = unif(eng);
    v.normalize();

    double rayleigh_prev = 0.0;
    for (int iter = 0; iter < kPowerMaxIterations; ++iter) {
        const Vector w = a * v;
        const double rayleigh = v.dot(w);
        if (iter > 0 &&
            std::abs(rayleigh - rayleigh_prev) <= kPowerTol * std::max(1.0, std::abs(rayleigh))) {
            return rayleigh * (1.0 + kPowerInflation);
        }
        rayleigh_prev = rayleigh;
        const double norm = w.norm();
        if (norm == 0.0) return 0.0;  // start vector lies in the null space of a PSD matrix
        v = w / norm;
    }
    throw NonConvergence("largest_eigenvalue: power iteration did not converge");
}

Vector pinv_solve(const Matrix& a, const Vector& b) {
    require_square(a, "pinv_solve");
    if (a.rows() != b.size()) {
        throw DimensionMismatch("pinv_solve: matrix is " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " but vector has length " +
                                std::to_string(b.size()));
    }
    if (a.rows() == 0) return Vector(0);

    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (a + a.transpose()));
    if (es.info() != Eigen::Success) {
        throw NonConvergence("pinv_solve: eigendecomposition failed");
    }
    const Vector& evals = es.eigenvalues();
    const double emax = evals.cwiseAbs().maxCoeff();
    const double cutoff = kPinvCutoff * emax;

    Vector q = es.eigenvectors().transpose() * b;
    for (Eigen::Index i = 0; i < q.size(); ++i) {
        q[i] = (evals[i] > cutoff && evals[i] > 0.0) ? q[i] / evals[i] : 0.0;
    }
    return es.eigenvectors() * q;
}

Vector ols_solve(const Matrix& x, const Vector& y) {
    if (x.rows() != y.size()) {
        throw DimensionMismatch("ols_solve: design has " + std::to_string(x.rows()) +
                                " rows but response has length " + std::to_string(y.size()));
    }
    const Matrix gram = x.transpose() * x;
    return pinv_solve(gram, x.transpose() * y);
}

}  // namespace exlasso
