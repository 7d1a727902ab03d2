#pragma once

#include <optional>

#include "pmd/rational.hpp"

namespace pmd {

/// Decides feasibility of rows * x >= 1 (componentwise, x free-signed) by
/// phase-one simplex over an exact scalar, returning a feasible point when one
/// exists. Bland's rule (lowest index) everywhere, so the returned point is a
/// deterministic function of the row order.
template <typename Scalar>
std::optional<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>
feasible_point(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& rows) {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    const Eigen::Index m = rows.rows();
    const Eigen::Index v = rows.cols();
    if (m == 0)
        return Vector::Zero(v);

    // Split x = u - w with u, w >= 0, add surplus s and artificial a:
    //   rows*u - rows*w - s + a = 1,  minimize sum(a).
    const Eigen::Index cols = 2 * v + 2 * m;
    Matrix tab = Matrix::Zero(m, cols + 1);
    tab.block(0, 0, m, v) = rows;
    tab.block(0, v, m, v) = -rows;
    tab.block(0, 2 * v, m, m) = -Matrix::Identity(m, m);
    tab.block(0, 2 * v + m, m, m) = Matrix::Identity(m, m);
    tab.col(cols).setConstant(Scalar(1));

    std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
    for (Eigen::Index i = 0; i < m; ++i)
        basis[static_cast<std::size_t>(i)] = 2 * v + m + i;

    // Reduced costs for min sum(a) with the artificial basis: r_j = c_j - sum_i tab(i,j).
    Vector reduced = Vector::Zero(cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        Scalar colsum(0);
        for (Eigen::Index i = 0; i < m; ++i)
            colsum += tab(i, j);
        Scalar cost = (j >= 2 * v + m) ? Scalar(1) : Scalar(0);
        reduced(j) = cost - colsum;
    }

    while (true) {
        Eigen::Index enter = -1;
        for (Eigen::Index j = 0; j < cols; ++j)
            if (reduced(j) < 0) {
                enter = j;
                break;
            }
        if (enter < 0)
            break;
        Eigen::Index leave = -1;
        Scalar best_ratio(0);
        for (Eigen::Index i = 0; i < m; ++i) {
            if (tab(i, enter) <= 0)
                continue;
            Scalar ratio = tab(i, cols) / tab(i, enter);
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio &&
                 basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0)
            return std::nullopt; // unbounded phase-one cannot happen; treat as infeasible
        const Scalar pivot = tab(leave, enter);
        tab.row(leave) /= pivot;
        for (Eigen::Index i = 0; i < m; ++i) {
            if (i == leave || tab(i, enter) == 0)
                continue;
            const Scalar factor = tab(i, enter);
            tab.row(i) -= factor * tab.row(leave);
        }
        const Scalar entering_cost = reduced(enter);
        reduced -= entering_cost * tab.row(leave).head(cols).transpose();
        basis[static_cast<std::size_t>(leave)] = enter;
    }

    Scalar infeasibility(0);
    for (Eigen::Index i = 0; i < m; ++i)
        if (basis[static_cast<std::size_t>(i)] >= 2 * v + m)
            infeasibility += tab(i, cols);
    if (infeasibility != 0)
        return std::nullopt;

    Vector x = Vector::Zero(v);
    for (Eigen::Index i = 0; i < m; ++i) {
        const Eigen::Index b = basis[static_cast<std::size_t>(i)];
        if (b < v)
            x(b) += tab(i, cols);
        else if (b < 2 * v)
            x(b - v) -= tab(i, cols);
    }
    return x;
}

} // namespace pmd
