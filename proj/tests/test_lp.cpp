#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "hec/lp.hpp"

using namespace hec;

TEST_CASE("basic minimization") {
    // min -x - y  s.t. x + y <= 3, x <= 2, y <= 2, x,y >= 0
    LPProblem p(2);
    p.objective = {rat(-1), rat(-1)};
    p.add_row({rat(1), rat(1)}, Rel::LE, rat(3));
    p.upper[0] = rat(2);
    p.upper[1] = rat(2);
    auto r = lp_solve(p);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.objective == -3);
    CHECK(r.x[0] + r.x[1] == 3);
}

TEST_CASE("infeasible and unbounded cases") {
    LPProblem p(1);
    p.add_row({rat(1)}, Rel::GE, rat(2));
    p.add_row({rat(1)}, Rel::LE, rat(1));
    CHECK(lp_solve(p).status == LPStatus::Infeasible);

    LPProblem q(1);
    q.objective = {rat(-1)};
    q.add_row({rat(1)}, Rel::GE, rat(0));
    CHECK(lp_solve(q).status == LPStatus::Unbounded);
}

TEST_CASE("equalities and free variables") {
    // min x + y s.t. x - y = 3, y free, x >= 0
    LPProblem p(2);
    p.objective = {rat(1), rat(1)};
    p.set_free(1);
    p.add_row({rat(1), rat(-1)}, Rel::EQ, rat(3));
    auto r = lp_solve(p);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.x[0] - r.x[1] == 3);
    CHECK(r.objective == -3);  // x = 0, y = -3
}

TEST_CASE("exact rational optimum") {
    // min -x s.t. 3x <= 1  ->  x = 1/3
    LPProblem p(1);
    p.objective = {rat(-1)};
    p.add_row({rat(3)}, Rel::LE, rat(1));
    auto r = lp_solve(p);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.x[0] == rat(1, 3));
}

TEST_CASE("degenerate problems terminate (Bland)") {
    // classic cycling-prone instance
    LPProblem p(4);
    p.objective = {rat(-3, 4), rat(150), rat(-1, 50), rat(6)};
    p.add_row({rat(1, 4), rat(-60), rat(-1, 25), rat(9)}, Rel::LE, rat(0));
    p.add_row({rat(1, 2), rat(-90), rat(-1, 50), rat(3)}, Rel::LE, rat(0));
    p.add_row({rat(0), rat(0), rat(1), rat(0)}, Rel::LE, rat(1));
    auto r = lp_solve(p);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.objective == rat(-1, 20));
}

TEST_CASE("random feasibility cross-check") {
    // random systems checked against brute-force sampling of the unit box
    std::mt19937 rng(4242);
    for (int t = 0; t < 60; ++t) {
        int nv = 2 + int(rng() % 3);
        LPProblem p(nv);
        for (int j = 0; j < nv; ++j) p.upper[j] = rat(1);
        int nr = 1 + int(rng() % 4);
        for (int i = 0; i < nr; ++i) {
            QVec a(nv);
            for (auto& v : a) v = rat(int(rng() % 7) - 3);
            p.add_row(a, Rel::GE, rat(int(rng() % 3)));
        }
        bool witness = false;  // scan the grid {0, 1/2, 1}^nv
        int pts = 1;
        for (int j = 0; j < nv; ++j) pts *= 3;
        for (int code = 0; code < pts && !witness; ++code) {
            int c = code;
            QVec x(nv);
            for (int j = 0; j < nv; ++j, c /= 3) x[j] = rat(c % 3, 2);
            bool ok = true;
            for (int i = 0; i < nr && ok; ++i) {
                Rat dot = 0;
                for (int j = 0; j < nv; ++j) dot += p.rows[i].a[j] * x[j];
                ok = dot >= p.rows[i].b;
            }
            witness = ok;
        }
        bool lp = lp_feasible(p);
        if (witness) CHECK(lp);  // grid witness implies LP feasibility
        if (!lp) CHECK(!witness);
    }
}

TEST_CASE("optimal solutions satisfy all rows exactly") {
    std::mt19937 rng(99);
    for (int t = 0; t < 40; ++t) {
        int nv = 2 + int(rng() % 4);
        LPProblem p(nv);
        p.objective.assign(nv, Rat(0));
        for (int j = 0; j < nv; ++j) {
            p.upper[j] = rat(2);
            p.objective[j] = rat(int(rng() % 5) - 2);
        }
        for (int i = 0; i < 3; ++i) {
            QVec a(nv);
            for (auto& v : a) v = rat(int(rng() % 5) - 2, 1 + int(rng() % 2));
            p.add_row(a, i % 2 ? Rel::LE : Rel::GE, rat(int(rng() % 2)));
        }
        auto r = lp_solve(p);
        if (r.status != LPStatus::Optimal) continue;
        for (const auto& row : p.rows) {
            Rat dot = 0;
            for (int j = 0; j < nv; ++j) dot += row.a[j] * r.x[j];
            if (row.rel == Rel::LE) CHECK(dot <= row.b);
            if (row.rel == Rel::GE) CHECK(dot >= row.b);
            if (row.rel == Rel::EQ) CHECK(dot == row.b);
        }
        for (int j = 0; j < nv; ++j) {
            CHECK(r.x[j] >= 0);
            CHECK(r.x[j] <= 2);
        }
    }
}
