#include "czlab/quadrature.hpp"

#include "czlab/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace czlab {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the
// three-term recurrence, weights mu0 * (first eigenvector component)^2.
GaussRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag, double mu0)
{
    const Eigen::Index n = diag.size();
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        jacobi(i, i) = diag(i);
        if (i + 1 < n) {
            jacobi(i, i + 1) = offdiag(i);
            jacobi(i + 1, i) = offdiag(i);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        const double v0 = solver.eigenvectors()(0, i);
        rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
        rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
    }
    return rule;
}

GaussRule make_legendre(int n)
{
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd off(std::max(n - 1, 0));
    for (int i = 1; i < n; ++i) off(i - 1) = i / std::sqrt(4.0 * i * i - 1.0);
    GaussRule rule = golub_welsch(diag, off, 2.0);
    // Polish nodes with Newton steps on P_n; the eigen solver leaves ~1e-15 noise.
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        double x = rule.nodes[k];
        double dp = 1.0;
        for (int it = 0; it < 3; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            x -= p1 / dp;
        }
        rule.nodes[k] = x;
        rule.weights[k] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

GaussRule make_laguerre(int n)
{
    Eigen::VectorXd diag(n);
    Eigen::VectorXd off(std::max(n - 1, 0));
    for (int i = 0; i < n; ++i) diag(i) = 2.0 * i + 1.0;
    for (int i = 1; i < n; ++i) off(i - 1) = i;
    return golub_welsch(diag, off, 1.0);
}

template <class Make>
const GaussRule& cached(std::map<int, std::unique_ptr<GaussRule>>& cache, std::mutex& mutex,
                        int order, Make make)
{
    if (order < 1) throw ParameterError("Gauss rule order must be positive, got " + std::to_string(order));
    std::lock_guard lock(mutex);
    auto& slot = cache[order];
    if (!slot) slot = std::make_unique<GaussRule>(make(order));
    return *slot;
}

}  // namespace

const GaussRule& gauss_legendre(int order)
{
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    static std::mutex mutex;
    return cached(cache, mutex, order, make_legendre);
}

const GaussRule& gauss_laguerre(int order)
{
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    static std::mutex mutex;
    return cached(cache, mutex, order, make_laguerre);
}

}  // namespace czlab
