// Dense exact-rational simplex (Bland's rule, two phases).
//
// Small by design: the cones and integer programs in this library produce
// LPs with at most a few hundred active rows, and exactness matters more
// than sparse-matrix speed.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "hec/rational.hpp"

namespace hec {

enum class Rel { LE, EQ, GE };

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPRow {
    QVec a;
    Rel rel = Rel::LE;
    Rat b = 0;
};

struct LPProblem {
    int nvars = 0;
    QVec objective;  // minimized; empty means feasibility only
    std::vector<LPRow> rows;
    std::vector<std::optional<Rat>> lower, upper;  // default lower = 0, upper = none

    explicit LPProblem(int nv) : nvars(nv), lower(nv, Rat(0)), upper(nv) {}

    void add_row(QVec a, Rel rel, Rat b) { rows.push_back({std::move(a), rel, std::move(b)}); }
    void set_free(int j) { lower[j].reset(); }
};

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rat objective = 0;
    QVec x;  // original variables, when Optimal
};

namespace detail {

class SimplexTableau {
  public:
    // Standard form: min c.y, A y = b, y >= 0, b >= 0.
    SimplexTableau(std::vector<QVec> A, QVec b, size_t cols) : m_(A.size()), k_(cols) {
        T_.assign(m_ + 1, QVec(k_ + 1, Rat(0)));
        for (size_t i = 0; i < m_; ++i) {
            for (size_t j = 0; j < k_; ++j) T_[i + 1][j] = std::move(A[i][j]);
            T_[i + 1][k_] = std::move(b[i]);
        }
        basis_.assign(m_, -1);
        allowed_.assign(k_, true);
    }

    size_t add_artificials() {
        size_t first = k_;
        k_ += m_;
        for (auto& row : T_) row.resize(k_ + 1);
        for (size_t i = 0; i < m_; ++i) {
            std::swap(T_[i + 1][first], T_[i + 1][k_]);  // b moves to the last column
            T_[i + 1][first + i] = 1;
            basis_[i] = int(first + i);
        }
        allowed_.resize(k_, true);
        return first;
    }

    // Installs costs c (size k_) and prices out the current basis.
    void set_costs(const QVec& c) {
        for (size_t j = 0; j < k_; ++j) T_[0][j] = j < c.size() ? c[j] : Rat(0);
        T_[0][k_] = 0;
        for (size_t i = 0; i < m_; ++i) {
            int bj = basis_[i];
            if (T_[0][bj] == 0) continue;
            Rat f = T_[0][bj];
            for (size_t j = 0; j <= k_; ++j) T_[0][j] -= f * T_[i + 1][j];
        }
    }

    // Bland-rule iteration to optimality.  Returns false on unboundedness.
    bool solve() {
        for (;;) {
            int enter = -1;
            for (size_t j = 0; j < k_; ++j)
                if (allowed_[j] && T_[0][j] < 0) {
                    enter = int(j);
                    break;
                }
            if (enter < 0) return true;
            int leave_row = -1;
            for (size_t i = 0; i < m_; ++i) {
                if (T_[i + 1][enter] <= 0) continue;
                if (leave_row < 0) {
                    leave_row = int(i);
                    continue;
                }
                // ratio b_i/a_i vs b_l/a_l compared by cross-multiplication
                Rat mine = T_[i + 1][k_] * T_[leave_row + 1][enter];
                Rat best = T_[leave_row + 1][k_] * T_[i + 1][enter];
                if (mine < best || (mine == best && basis_[i] < basis_[leave_row])) leave_row = int(i);
            }
            if (leave_row < 0) return false;
            pivot(leave_row, enter);
        }
    }

    void pivot(int row, int col) {
        QVec& pr = T_[row + 1];
        Rat d = pr[col];
        for (size_t j = 0; j <= k_; ++j)
            if (pr[j] != 0) pr[j] /= d;
        for (size_t i = 0; i <= m_; ++i) {
            if (int(i) == row + 1) continue;
            Rat f = T_[i][col];
            if (f == 0) continue;
            for (size_t j = 0; j <= k_; ++j)
                if (pr[j] != 0) T_[i][j] -= f * pr[j];
        }
        basis_[row] = col;
    }

    // Pivots basic artificials (cols >= first_art) out where possible and
    // forbids all artificial columns.
    void retire_artificials(size_t first_art) {
        for (size_t i = 0; i < m_; ++i) {
            if (size_t(basis_[i]) < first_art) continue;
            for (size_t j = 0; j < first_art; ++j)
                if (allowed_[j] && T_[i + 1][j] != 0) {
                    pivot(int(i), int(j));
                    break;
                }
        }
        for (size_t j = first_art; j < k_; ++j) allowed_[j] = false;
    }

    Rat objective() const { return -T_[0][k_]; }

    QVec basic_solution(size_t nfirst) const {
        QVec x(nfirst, Rat(0));
        for (size_t i = 0; i < m_; ++i)
            if (size_t(basis_[i]) < nfirst) x[basis_[i]] = T_[i + 1][k_];
        return x;
    }

  private:
    size_t m_, k_;
    std::vector<QVec> T_;  // row 0: reduced costs, T[0][k] = -objective
    std::vector<int> basis_;
    std::vector<bool> allowed_;
};

}  // namespace detail

inline LPResult lp_solve(const LPProblem& p) {
    // Column layout: for each original variable, one shifted column (lower
    // bound) or a +/- pair (free).  Upper bounds become extra rows.
    struct ColMap {
        int pos = -1, neg = -1;
        Rat shift = 0;
    };
    std::vector<ColMap> cm(p.nvars);
    size_t k = 0;
    for (int j = 0; j < p.nvars; ++j) {
        if (p.lower[j]) {
            cm[j].pos = int(k++);
            cm[j].shift = *p.lower[j];
        } else {
            cm[j].pos = int(k++);
            cm[j].neg = int(k++);
        }
    }
    std::vector<LPRow> rows = p.rows;
    for (int j = 0; j < p.nvars; ++j)
        if (p.upper[j]) {
            QVec a(p.nvars, Rat(0));
            a[j] = 1;
            rows.push_back({std::move(a), Rel::LE, *p.upper[j]});
        }
    size_t extra = 0;  // slack count
    for (const auto& r : rows)
        if (r.rel != Rel::EQ) ++extra;
    size_t m = rows.size(), cols = k + extra;
    std::vector<QVec> A(m, QVec(cols, Rat(0)));
    QVec b(m, Rat(0));
    size_t slack = k;
    for (size_t i = 0; i < m; ++i) {
        const auto& r = rows[i];
        Rat rhs = r.b;
        for (int j = 0; j < p.nvars; ++j) {
            if (size_t(j) >= r.a.size() || r.a[j] == 0) continue;
            A[i][cm[j].pos] = r.a[j];
            if (cm[j].neg >= 0) A[i][cm[j].neg] = -r.a[j];
            rhs -= r.a[j] * cm[j].shift;
        }
        if (r.rel == Rel::LE) A[i][slack++] = 1;
        if (r.rel == Rel::GE) A[i][slack++] = -1;
        if (rhs < 0) {
            for (auto& v : A[i]) v = -v;
            rhs = -rhs;
        } else if (rhs == 0 && r.rel == Rel::GE) {
            // orient zero-rhs >= rows so the slack can serve as a basis column
            for (auto& v : A[i]) v = -v;
        }
        b[i] = rhs;
    }

    detail::SimplexTableau tab(std::move(A), std::move(b), cols);
    size_t first_art = tab.add_artificials();
    QVec phase1(first_art + m, Rat(0));
    for (size_t j = first_art; j < first_art + m; ++j) phase1[j] = 1;
    tab.set_costs(phase1);
    if (!tab.solve()) throw std::logic_error("lp_solve: phase 1 unbounded");
    LPResult res;
    if (tab.objective() != 0) {
        res.status = LPStatus::Infeasible;
        return res;
    }
    tab.retire_artificials(first_art);

    QVec cost(first_art, Rat(0));
    for (int j = 0; j < p.nvars && size_t(j) < p.objective.size(); ++j) {
        if (p.objective[j] == 0) continue;
        cost[cm[j].pos] = p.objective[j];
        if (cm[j].neg >= 0) cost[cm[j].neg] = -p.objective[j];
    }
    tab.set_costs(cost);
    if (!tab.solve()) {
        res.status = LPStatus::Unbounded;
        return res;
    }
    res.status = LPStatus::Optimal;
    QVec y = tab.basic_solution(first_art);
    res.x.assign(p.nvars, Rat(0));
    Rat obj = 0;
    for (int j = 0; j < p.nvars; ++j) {
        res.x[j] = y[cm[j].pos] + cm[j].shift;
        if (cm[j].neg >= 0) res.x[j] -= y[cm[j].neg];
        if (size_t(j) < p.objective.size()) obj += p.objective[j] * res.x[j];
    }
    res.objective = obj;
    return res;
}

inline bool lp_feasible(const LPProblem& p) { return lp_solve(p).status != LPStatus::Infeasible; }

}  // namespace hec
