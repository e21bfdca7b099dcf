// Exact rational linear algebra: dense rank/kernel computations for
// finite-degree cohomology, and a deterministic sparse solver used to invert
// the horizontal differential on its image.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "gstar/poly.hpp"

namespace gstar {

class RatMatrix {
  public:
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows, std::vector<Rat>(cols, 0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rat& at(size_t i, size_t j) { return a_[i][j]; }
    const Rat& at(size_t i, size_t j) const { return a_[i][j]; }

    // Row-reduced copy; returns rank.  Deterministic: first nonzero pivot in
    // column order.
    size_t rank() const {
        auto m = a_;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t piv = r;
            while (piv < rows_ && m[piv][c] == 0) ++piv;
            if (piv == rows_) continue;
            std::swap(m[piv], m[r]);
            for (size_t i = r + 1; i < rows_; ++i) {
                if (m[i][c] == 0) continue;
                Rat f = m[i][c] / m[r][c];
                for (size_t j = c; j < cols_; ++j) m[i][j] -= f * m[r][j];
            }
            ++r;
        }
        return r;
    }

    // Basis of the kernel (column vectors x with A x = 0).
    std::vector<std::vector<Rat>> kernel() const {
        auto m = a_;
        std::vector<long> pivot_of_col(cols_, -1);
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t piv = r;
            while (piv < rows_ && m[piv][c] == 0) ++piv;
            if (piv == rows_) continue;
            std::swap(m[piv], m[r]);
            Rat p = m[r][c];
            for (size_t j = c; j < cols_; ++j) m[r][j] /= p;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r || m[i][c] == 0) continue;
                Rat f = m[i][c];
                for (size_t j = c; j < cols_; ++j) m[i][j] -= f * m[r][j];
            }
            pivot_of_col[c] = (long)r;
            ++r;
        }
        std::vector<std::vector<Rat>> basis;
        for (size_t c = 0; c < cols_; ++c) {
            if (pivot_of_col[c] >= 0) continue;
            std::vector<Rat> v(cols_, 0);
            v[c] = 1;
            for (size_t c2 = 0; c2 < cols_; ++c2)
                if (pivot_of_col[c2] >= 0) v[c2] = -m[(size_t)pivot_of_col[c2]][c];
            basis.push_back(std::move(v));
        }
        return basis;
    }

  private:
    size_t rows_, cols_;
    std::vector<std::vector<Rat>> a_;
};

// Sparse exact solve of  sum_j x_j col_j = rhs  with rows keyed by Monomial.
// Free variables are set to zero; columns are eliminated in index order, the
// pivot row being the smallest row key available, so the solution is
// deterministic.  Returns nullopt (with `residual` filled) when inconsistent.
struct SparseSolveResult {
    std::optional<std::vector<Rat>> solution;
    std::map<Monomial, Rat> residual;  // unmatched right-hand side on failure
};

inline SparseSolveResult sparse_solve(const std::vector<std::map<Monomial, Rat>>& cols,
                                      const std::map<Monomial, Rat>& rhs) {
    size_t n = cols.size();
    // Assemble rows (keyed by monomial) of the augmented system.
    struct Row {
        std::map<size_t, Rat> a;
        Rat b = 0;
    };
    std::map<Monomial, Row> rows;
    for (size_t j = 0; j < n; ++j)
        for (auto& [m, c] : cols[j]) rows[m].a[j] = c;
    for (auto& [m, c] : rhs) rows[m].b = c;

    // Row-driven elimination in row-key order.  Each incoming row is reduced
    // against the pivot rows found so far; a surviving row contributes a new
    // pivot at its smallest remaining column.  Deterministic by construction.
    std::map<size_t, Row> pivot_rows;  // pivot column -> reduced row
    SparseSolveResult res;
    for (auto& [key, row0] : rows) {
        Row row = row0;
        while (!row.a.empty()) {
            size_t lead = row.a.begin()->first;
            auto pv = pivot_rows.find(lead);
            if (pv == pivot_rows.end()) break;
            Rat f = row.a.begin()->second / pv->second.a.begin()->second;
            for (auto& [cj, cv] : pv->second.a) {
                auto& slot = row.a[cj];
                slot -= f * cv;
                if (slot == 0) row.a.erase(cj);
            }
            row.b -= f * pv->second.b;
        }
        if (row.a.empty()) {
            if (row.b != 0) res.residual[key] = row.b;  // inconsistent row
        } else {
            pivot_rows.emplace(row.a.begin()->first, std::move(row));
        }
    }
    if (!res.residual.empty()) return res;

    // Back substitution in decreasing pivot-column order; every non-pivot
    // (free) variable is zero.  A pivot row's non-leading entries only involve
    // larger columns, whose values are already known.
    std::vector<Rat> x(n, 0);
    for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
        const Row& row = it->second;
        size_t pc = it->first;
        Rat acc = row.b;
        for (auto& [cj, cv] : row.a)
            if (cj != pc) acc -= cv * x[cj];
        x[pc] = acc / row.a.at(pc);
    }
    res.solution = std::move(x);
    return res;
}

}  // namespace gstar
