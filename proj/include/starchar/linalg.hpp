#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "starchar/rational.hpp"

namespace starchar {

/// Dense matrix over the rationals.
class RatMatrix {
public:
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)]; }
    const Rational& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)];
    }

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

/// Solves A x = b exactly. Returns one solution, or nullopt when the system
/// is inconsistent.
inline std::optional<std::vector<Rational>> solve_linear(RatMatrix a, std::vector<Rational> b) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("dimension mismatch");
    const int m = a.rows(), n = a.cols();
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int sel = -1;
        for (int r = row; r < m; ++r)
            if (a.at(r, col) != 0) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != row) {
            for (int j = col; j < n; ++j) std::swap(a.at(sel, j), a.at(row, j));
            std::swap(b[static_cast<std::size_t>(sel)], b[static_cast<std::size_t>(row)]);
        }
        Rational inv_p = Rational(1) / a.at(row, col);
        for (int j = col; j < n; ++j) a.at(row, j) *= inv_p;
        b[static_cast<std::size_t>(row)] *= inv_p;
        for (int r = 0; r < m; ++r) {
            if (r == row || a.at(r, col) == 0) continue;
            Rational f = a.at(r, col);
            for (int j = col; j < n; ++j) a.at(r, j) -= f * a.at(row, j);
            b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(row)];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int r = row; r < m; ++r)
        if (b[static_cast<std::size_t>(r)] != 0) return std::nullopt;
    std::vector<Rational> x(static_cast<std::size_t>(n), Rational(0));
    for (int r = 0; r < row; ++r) x[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = b[static_cast<std::size_t>(r)];
    return x;
}

/// Is `target` a Q-linear combination of `generators`? Returns the witness
/// coefficients when it is.
inline std::optional<std::vector<Rational>> in_rational_span(const std::vector<Rational>& target,
                                                             const std::vector<std::vector<Rational>>& generators) {
    const std::size_t dim = target.size();
    if (dim == 0) throw std::invalid_argument("empty target vector");
    for (const auto& g : generators)
        if (g.size() != dim) throw std::invalid_argument("dimension mismatch between target and generators");
    if (generators.empty()) {
        for (const auto& v : target)
            if (v != 0) return std::nullopt;
        return std::vector<Rational>{};
    }
    RatMatrix a(static_cast<int>(dim), static_cast<int>(generators.size()));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < generators.size(); ++j) a.at(static_cast<int>(i), static_cast<int>(j)) = generators[j][i];
    return solve_linear(std::move(a), target);
}

}  // namespace starchar
