#include "simplex.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace partlat::detail {

// Revised simplex: the basis is refactorized every iteration, so round-off
// from earlier pivots does not pile up in a long degenerate run.
std::optional<std::vector<double>> find_nonnegative_solution(const std::vector<std::vector<double>> &columns,
                                                             const std::vector<double> &b, double tol) {
    constexpr double kPivotEps = 1e-9;
    constexpr double kZero = 1e-12;
    const Eigen::Index rows = static_cast<Eigen::Index>(b.size());
    const Eigen::Index vars = static_cast<Eigen::Index>(columns.size());
    const Eigen::Index width = vars + rows;  // originals then one artificial per row

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(rows, width);
    Eigen::VectorXd rhs(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        if (b[r] < 0.0) {
            throw std::invalid_argument("find_nonnegative_solution: negative right-hand side");
        }
        rhs(r) = b[r];
        for (Eigen::Index c = 0; c < vars; ++c) {
            a(r, c) = columns[c].at(r);
        }
        a(r, vars + r) = 1.0;
    }
    Eigen::VectorXd cost = Eigen::VectorXd::Zero(width);
    cost.tail(rows).setOnes();

    std::vector<Eigen::Index> basis(rows);
    std::vector<char> in_basis(width, 0);
    for (Eigen::Index r = 0; r < rows; ++r) {
        basis[r] = vars + r;
        in_basis[vars + r] = 1;
    }

    Eigen::MatrixXd bm(rows, rows);
    Eigen::VectorXd cb(rows), xb(rows);
    const std::size_t max_iterations = 50 * static_cast<std::size_t>(width);
    for (std::size_t iter = 0; iter <= max_iterations; ++iter) {
        for (Eigen::Index r = 0; r < rows; ++r) {
            bm.col(r) = a.col(basis[r]);
            cb(r) = cost(basis[r]);
        }
        const Eigen::PartialPivLU<Eigen::MatrixXd> lu(bm);
        xb = lu.solve(rhs);
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (std::abs(xb(r)) < kZero) {
                xb(r) = 0.0;
            }
        }
        if (cb.dot(xb) <= tol || iter == max_iterations) {
            break;
        }

        const Eigen::VectorXd dual = lu.transpose().solve(cb);
        Eigen::Index entering = width;
        for (Eigen::Index c = 0; c < width; ++c) {
            if (!in_basis[c] && cost(c) - dual.dot(a.col(c)) < -kPivotEps) {
                entering = c;
                break;
            }
        }
        if (entering == width) {
            break;
        }
        const Eigen::VectorXd dir = lu.solve(a.col(entering));
        Eigen::Index leaving = rows;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (dir(r) > kPivotEps) {
                const double ratio = std::max(0.0, xb(r)) / dir(r);
                if (ratio < best_ratio - kZero ||
                    (ratio <= best_ratio + kZero && leaving < rows && basis[r] < basis[leaving])) {
                    best_ratio = ratio;
                    leaving = r;
                }
            }
        }
        if (leaving == rows) {
            break;
        }
        in_basis[basis[leaving]] = 0;
        in_basis[entering] = 1;
        basis[leaving] = entering;
    }

    double infeasibility = 0.0;
    for (Eigen::Index r = 0; r < rows; ++r) {
        if (basis[r] >= vars) {
            infeasibility += std::abs(xb(r));
        }
    }
    if (infeasibility > tol) {
        return std::nullopt;
    }
    std::vector<double> x(vars, 0.0);
    for (Eigen::Index r = 0; r < rows; ++r) {
        if (basis[r] < vars) {
            x[basis[r]] = std::max(0.0, xb(r));
        }
    }
    return x;
}

}  // namespace partlat::detail
