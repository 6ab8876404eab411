#include <doctest.h>

#include <random>

#include "symchev/linalg.hpp"

using namespace symchev;

namespace {

// Independent oracle: rank by fraction-free (Bareiss-style) elimination over
// integers, no divisions by pivots of the kind rref performs.
int fraction_free_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    Int prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int sel = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[sel], m[rank]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

QMatrix from_long_rows(const std::vector<std::vector<long>>& rows) {
    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Rat(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("rationals canonicalize") {
    CHECK(rat(2, 6) == rat(1, 3));
    CHECK(rat(-2, -6) == rat(1, 3));
    CHECK(rat(2, -6) == rat(-1, 3));
    CHECK(to_string(rat(4, 6)) == "2/3");
    CHECK(rat_from_string("3/4") == rat(3, 4));
    CHECK(rat_from_string("-7") == rat(-7));
    CHECK_THROWS(rat_from_string("1/0"));
    CHECK(is_zero(rat(0, 5)));
}

TEST_CASE("rat_kernel examples") {
    // [[1, -1]] -> span{(1,1)}
    auto k1 = rat_kernel(from_long_rows({{1, -1}}));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0][0] == k1[0][1]);
    CHECK(!is_zero(k1[0][0]));

    // identity -> empty
    CHECK(rat_kernel(QMatrix::identity(2)).empty());

    // [[1,2],[2,4]] -> span{(-2,1)}
    auto k3 = rat_kernel(from_long_rows({{1, 2}, {2, 4}}));
    REQUIRE(k3.size() == 1);
    CHECK(k3[0][0] == Rat(-2) * k3[0][1]);
}

TEST_CASE("kernel vectors multiply to exactly zero and rank+nullity=cols") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dim(1, 5), entry(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        int r = dim(rng), c = dim(rng);
        QMatrix m(r, c);
        std::vector<std::vector<Int>> zi(r, std::vector<Int>(c));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                int v = entry(rng);
                m.at(i, j) = Rat(v);
                zi[i][j] = v;
            }
        auto ker = rat_kernel(m);
        for (const auto& v : ker)
            for (const Rat& x : m.apply(v)) CHECK(is_zero(x));
        CHECK(rank(m) + static_cast<int>(ker.size()) == c);
        CHECK(rank(m) == fraction_free_rank(zi));
    }
}

TEST_CASE("rat_solve") {
    auto sol = rat_solve(QMatrix::identity(3), {Rat(1), Rat(2), Rat(3)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 1);
    CHECK((*sol)[2] == 3);

    QMatrix m = from_long_rows({{1, 1}});
    auto s2 = rat_solve(m, {Rat(2)});
    REQUIRE(s2.has_value());
    CHECK((*s2)[0] + (*s2)[1] == 2);  // verified by substitution

    QMatrix m3 = from_long_rows({{1}, {1}});
    CHECK(!rat_solve(m3, {Rat(1), Rat(2)}).has_value());
}

TEST_CASE("inverse and determinant") {
    QMatrix m = from_long_rows({{2, 1}, {1, 1}});
    QMatrix inv = inverse(m);
    CHECK(m * inv == QMatrix::identity(2));
    CHECK(determinant(m) == 1);
    CHECK(determinant(from_long_rows({{1, 2}, {2, 4}})) == 0);
    CHECK_THROWS_AS(inverse(from_long_rows({{1, 2}, {2, 4}})), std::domain_error);
}

TEST_CASE("int_kernel examples") {
    auto k1 = int_kernel(zmatrix_from_rows({{1, -1}}));
    REQUIRE(k1.basis.size() == 1);
    CHECK(abs(k1.basis[0][0]) == 1);
    CHECK(k1.basis[0][0] == k1.basis[0][1]);

    // gcd reduction: 2x = 4y has primitive solution (2,1)
    auto k2 = int_kernel(zmatrix_from_rows({{2, -4}}));
    REQUIRE(k2.basis.size() == 1);
    std::vector<Int> want{2, 1};
    std::vector<Int> wantn{-2, -1};
    CHECK((k2.basis[0] == want || k2.basis[0] == wantn));

    // rank-2 lattice containing (2,0,1) and (0,2,1)
    auto k3 = int_kernel(zmatrix_from_rows({{1, 1, -2}}));
    REQUIRE(k3.basis.size() == 2);
    CHECK(k3.contains({Int(2), Int(0), Int(1)}));
    CHECK(k3.contains({Int(0), Int(2), Int(1)}));
    CHECK(!k3.contains({Int(1), Int(0), Int(1)}));
}

TEST_CASE("int_kernel saturation: divisible vectors stay inside") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> entry(-3, 3), dim(2, 5), rowc(1, 3), coef(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        int r = rowc(rng), c = dim(rng);
        ZMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = entry(rng);
        IntLatticeBasis lat = int_kernel(m);
        // every basis combination divisible by p <= 7 must be p * (lattice member)
        for (int combo = 0; combo < 10; ++combo) {
            std::vector<Int> v(c);
            for (const auto& b : lat.basis) {
                int lambda = coef(rng);
                for (int j = 0; j < c; ++j) v[j] += lambda * b[j];
            }
            for (int p : {2, 3, 5, 7}) {
                bool divisible = true;
                bool nonzero = false;
                for (const auto& x : v) {
                    if (x % p != 0) divisible = false;
                    if (x != 0) nonzero = true;
                }
                if (divisible && nonzero) {
                    std::vector<Int> w(c);
                    for (int j = 0; j < c; ++j) w[j] = v[j] / p;
                    CHECK(lat.contains(w));
                }
            }
        }
    }
}

TEST_CASE("rref serial and parallel agree") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        QMatrix m(6, 9);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 9; ++j) m.at(i, j) = rat(entry(rng), 1 + (trial % 3));
        QMatrix a = m, b = m;
        auto pa = rref(a, Exec::Serial);
        auto pb = rref(b, Exec::Omp);
        CHECK(pa == pb);
        CHECK(a == b);
    }
}
