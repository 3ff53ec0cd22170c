#include <biderlab/identities.hpp>
#include <biderlab/polynomial.hpp>
#include <biderlab/presets.hpp>

#include <gtest/gtest.h>

using namespace biderlab;

namespace {

using Terms = std::map<Permutation, Rational>;

std::vector<MultilinearPolynomial> sample_polys() {
    std::vector<MultilinearPolynomial> out;
    for (const auto& n : named_polynomials()) out.push_back(build_named_poly(n));
    out.emplace_back(3, Terms{{{1, 2, 0}, Rational(2, 3)}, {{0, 2, 1}, -5}, {{2, 0, 1}, 1}});
    out.emplace_back(4, Terms{{{3, 1, 0, 2}, 1}, {{0, 1, 2, 3}, Rational(-1, 2)}, {{2, 3, 1, 0}, 7}});
    return out;
}

} // namespace

TEST(NamedPolys, Terms) {
    EXPECT_EQ(build_named_poly("jordan").terms(), (Terms{{{0, 1}, 1}, {{1, 0}, 1}}));
    EXPECT_EQ(build_named_poly("jordan_triple").terms(), (Terms{{{0, 1, 2}, 1}, {{2, 1, 0}, 1}}));
    EXPECT_EQ(build_named_poly("lie_triple").terms(),
              (Terms{{{0, 1, 2}, 1}, {{1, 0, 2}, -1}, {{2, 0, 1}, -1}, {{2, 1, 0}, 1}}));
    EXPECT_THROW(build_named_poly("nope"), Error);
}

TEST(NamedPolys, LieTripleIsNestedBracket) {
    const Algebra M2 = matrix_algebra(2);
    Xorshift64Star rng(3);
    const auto f = build_named_poly("lie_triple");
    for (int s = 0; s < 20; ++s) {
        const Element x = random_element(4, rng), y = random_element(4, rng), z = random_element(4, rng);
        EXPECT_EQ(evaluate_poly(f, M2, {x, y, z}), M2.commutator(M2.commutator(x, y), z));
    }
}

TEST(Polynomial, Invalid) {
    EXPECT_THROW(MultilinearPolynomial(1, Terms{{{0}, 1}}), Error);
    EXPECT_THROW(MultilinearPolynomial(2, Terms{{{0, 0}, 1}}), Error);
    EXPECT_THROW(MultilinearPolynomial(2, Terms{{{0, 2}, 1}}), Error);
    EXPECT_THROW(MultilinearPolynomial(2, Terms{{{0, 1, 2}, 1}}), Error);
    EXPECT_THROW(MultilinearPolynomial(2, Terms{{{0, 1}, 0}}), Error);
}

TEST(Evaluate, Examples) {
    const Algebra T2 = upper_triangular(2);
    EXPECT_EQ(evaluate_poly(build_named_poly("jordan"), T2, {T2.basis(0), T2.basis(1)}), T2.basis(1));
    const Algebra M2 = matrix_algebra(2);
    const Element x = M2.basis(0) + Rational(3) * M2.basis(1) - M2.basis(3);
    EXPECT_TRUE(is_zero(evaluate_poly(build_named_poly("lie"), M2, {x, x})));
    // E12, E21, E12 in matrix(2): E12 is basis index 1, E21 index 2
    EXPECT_EQ(evaluate_poly(build_named_poly("jordan_triple"), M2, {M2.basis(1), M2.basis(2), M2.basis(1)}),
              Rational(2) * M2.basis(1));
    EXPECT_THROW(evaluate_poly(build_named_poly("jordan"), M2, {x}), DimensionMismatch);
}

TEST(Stats, Examples) {
    const auto lie = poly_stats(build_named_poly("lie"));
    EXPECT_EQ(lie.alpha, 0);
    EXPECT_EQ(lie.beta, 1);
    EXPECT_EQ(lie.gamma, -1);
    for (const char* n : {"jordan", "jordan_triple"}) {
        const auto s = poly_stats(build_named_poly(n));
        EXPECT_EQ(s.alpha, 2) << n;
        EXPECT_EQ(s.beta, 1) << n;
        EXPECT_EQ(s.gamma, 1) << n;
    }
}

TEST(PolyProperties, AlphaIsBetaPlusGamma) {
    for (const auto& f : sample_polys()) {
        const auto s = poly_stats(f);
        EXPECT_EQ(s.alpha, s.beta + s.gamma);
    }
}

TEST(PolyProperties, UnitySubstitution) {
    // x_i := 1 for i >= 3 leaves beta x1 x2 + gamma x2 x1
    for (const char* p : {"t3", "m2"}) {
        const Algebra A = preset_algebra(p);
        for (const auto& f : sample_polys()) {
            const auto s = poly_stats(f);
            for (std::size_t i = 0; i < A.dim(); ++i)
                for (std::size_t j = 0; j < A.dim(); ++j) {
                    std::vector<Element> args(f.arity(), A.unity());
                    args[0] = A.basis(i);
                    args[1] = A.basis(j);
                    const Element expect = s.beta * A.multiply(A.basis(i), A.basis(j)) + s.gamma * A.multiply(A.basis(j), A.basis(i));
                    EXPECT_EQ(evaluate_poly(f, A, args), expect);
                }
        }
    }
}

TEST(PolyProperties, Multilinear) {
    const Algebra M2 = matrix_algebra(2);
    Xorshift64Star rng(5);
    for (const auto& f : sample_polys()) {
        for (std::size_t slot = 0; slot < f.arity(); ++slot) {
            std::vector<Element> args;
            for (std::size_t k = 0; k < f.arity(); ++k) args.push_back(random_element(4, rng));
            const Element y = random_element(4, rng);
            const Rational s(rng.uniform(-9, 9), 1 + rng.uniform(0, 4));
            auto with = [&](const Element& v) {
                auto a = args;
                a[slot] = v;
                return evaluate_poly(f, M2, a);
            };
            EXPECT_EQ(with(args[slot] + s * y), with(args[slot]) + s * with(y));
        }
    }
}

TEST(Rng, DeterministicAndInRange) {
    Xorshift64Star a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 1000; ++i) {
        const auto x = a.uniform(-9, 9);
        EXPECT_EQ(x, b.uniform(-9, 9));
        EXPECT_GE(x, -9);
        EXPECT_LE(x, 9);
        differs |= x != c.uniform(-9, 9);
    }
    EXPECT_TRUE(differs);
    Xorshift64Star z(0);
    EXPECT_NE(z.next(), 0u);
}
