#include <biderlab/linalg.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace biderlab;

namespace {

Vector vec(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

MatrixQ mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Vector> rs;
    for (auto r : rows) rs.push_back(vec(r));
    return MatrixQ::from_rows(rs);
}

MatrixQ random_matrix(std::mt19937& gen, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::bernoulli_distribution sparse(0.4);
    MatrixQ m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (!sparse(gen)) m(r, c) = Rational(coeff(gen), 1 + (coeff(gen) + 3) % 3);
    return m;
}

} // namespace

TEST(Rational, Canonical) {
    EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_rational("-3/2")), "-3/2");
    EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
    EXPECT_EQ(to_string(parse_rational("+7")), "7");
    EXPECT_EQ(to_string(parse_rational("0/5")), "0");
    EXPECT_EQ(to_string(Rational(1, 3) + Rational(1, 6)), "1/2");
    EXPECT_EQ(to_string(Rational(2, 3) * Rational(3, 4)), "1/2");
}

TEST(Rational, Malformed) {
    EXPECT_THROW(parse_rational(""), ParseError);
    EXPECT_THROW(parse_rational("1.5"), ParseError);
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("3/-2"), ParseError);
    EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(Matrix, BoundsAndEquality) {
    MatrixQ m(2, 3);
    EXPECT_THROW(m(2, 0), DimensionMismatch);
    EXPECT_THROW(m(0, 3), DimensionMismatch);
    EXPECT_EQ(m, MatrixQ(2, 3));
    m(1, 2) = Rational(1, 2);
    EXPECT_NE(m, MatrixQ(2, 3));
    EXPECT_THROW(MatrixQ::from_rows({vec({1, 2}), vec({1})}), DimensionMismatch);
}

TEST(Rref, Examples) {
    auto z = rref(mat({{0, 0}, {0, 0}}));
    EXPECT_EQ(z.matrix, mat({{0, 0}, {0, 0}}));
    EXPECT_TRUE(z.pivots.empty());

    auto r1 = rref(mat({{2, 4}, {1, 2}}));
    EXPECT_EQ(r1.matrix, mat({{1, 2}, {0, 0}}));
    EXPECT_EQ(r1.pivots, (std::vector<std::size_t>{0}));

    auto full = rref(mat({{1, 2}, {3, 4}}));
    EXPECT_EQ(full.matrix, MatrixQ::identity(2));
    EXPECT_EQ(full.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Kernel, Examples) {
    EXPECT_TRUE(kernel_basis(MatrixQ::identity(3)).is_zero());
    EXPECT_EQ(kernel_basis(MatrixQ(2, 3)).dim(), 3u);
    const Subspace k = kernel_basis(mat({{1, 1, 0}}));
    EXPECT_EQ(k.dim(), 2u);
    EXPECT_TRUE(k.contains(vec({1, -1, 0})));
    EXPECT_TRUE(k.contains(vec({0, 0, 1})));
    EXPECT_FALSE(k.contains(vec({1, 0, 0})));
}

TEST(Subspace, ContainsAndEqual) {
    const Subspace x = Subspace::span(2, {vec({1, 0})});
    const Subspace y = Subspace::span(2, {vec({0, 1})});
    EXPECT_TRUE(subspace_contains(x, x));
    EXPECT_TRUE(subspace_contains(Subspace::full(2), x));
    EXPECT_FALSE(subspace_contains(x, y));
    EXPECT_TRUE(subspace_equal(Subspace(2), Subspace(2)));
    EXPECT_TRUE(subspace_equal(Subspace::span(2, {vec({1, 0}), vec({0, 1})}), Subspace::span(2, {vec({1, 1}), vec({1, -1})})));
    EXPECT_FALSE(subspace_equal(x, Subspace::full(2)));
    EXPECT_TRUE(subspace_equal(subspace_sum(x, y), Subspace::full(2)));
    EXPECT_THROW(subspace_equal(x, Subspace(3)), DimensionMismatch);
}

TEST(Subspace, Coordinates) {
    const Subspace s = Subspace::span(3, {vec({1, 2, 0}), vec({0, 1, 1})});
    const auto c = s.coordinates(vec({2, 5, 1}));
    ASSERT_TRUE(c);
    Vector back = zero_vector(3);
    for (std::size_t k = 0; k < s.dim(); ++k) axpy(back, (*c)[k], s.basis()[k]);
    EXPECT_EQ(back, vec({2, 5, 1}));
    EXPECT_FALSE(s.coordinates(vec({0, 0, 1})));
}

TEST(ParticularSolution, SolvesOrRejects) {
    RowReducer red(3);  // x + y = 2, y = 1 as [A | b]
    red.add_row(std::span<const Rational>(vec({1, 1, 2})));
    red.add_row(std::span<const Rational>(vec({0, 1, 1})));
    EXPECT_EQ(particular_solution(red), vec({1, 1}));
    red.add_row(std::span<const Rational>(vec({1, 0, 0})));
    EXPECT_FALSE(particular_solution(red));
}

TEST(LinalgProperties, RankNullityKernelRref) {
    std::mt19937 gen(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + trial % 7, cols = 1 + (trial * 5) % 8;
        const MatrixQ m = random_matrix(gen, rows, cols);
        const Subspace k = kernel_basis(m);
        EXPECT_EQ(rank(m) + k.dim(), cols);
        for (const auto& v : k.basis()) EXPECT_TRUE(is_zero(m * v));
        const auto r = rref(m);
        EXPECT_EQ(rref(r.matrix).matrix, r.matrix);
        EXPECT_EQ(rref(r.matrix).pivots, r.pivots);
    }
}

TEST(LinalgProperties, EqualIffMutualContainment) {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 40; ++trial) {
        const MatrixQ a = random_matrix(gen, 2 + trial % 3, 4);
        const MatrixQ b = random_matrix(gen, 2 + trial % 2, 4);
        std::vector<Vector> ra, rb;
        for (std::size_t r = 0; r < a.rows(); ++r) ra.push_back(a.row_vector(r));
        for (std::size_t r = 0; r < b.rows(); ++r) rb.push_back(b.row_vector(r));
        const Subspace s1 = Subspace::span(4, ra);
        const Subspace s2 = trial % 3 == 0 ? Subspace::span(4, {ra.rbegin(), ra.rend()}) : Subspace::span(4, rb);
        EXPECT_EQ(subspace_equal(s1, s2), subspace_contains(s1, s2) && subspace_contains(s2, s1));
        if (trial % 3 == 0) {
            EXPECT_TRUE(subspace_equal(s1, s2));
        }
    }
}
