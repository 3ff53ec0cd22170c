#include "oracle.hpp"

#include <biderlab/bilinear.hpp>
#include <biderlab/identities.hpp>
#include <biderlab/presets.hpp>

#include <gtest/gtest.h>

#include <cstdlib>

using namespace biderlab;

namespace {

const KindSpec bider = KindSpec::of(MapKind::biderivation);
const KindSpec anti = KindSpec::of(MapKind::antibiderivation);
const KindSpec jordan = KindSpec::of(MapKind::jordan_biderivation);

MapSpace solve(const Algebra& A, const KindSpec& k) { return solve_space(A, regular_bimodule(A), k); }

Verdict check(const Algebra& A, const BilinearMap& b, const KindSpec& k) {
    return check_bilinear(A, regular_bimodule(A), b, k);
}

} // namespace

TEST(Eval, Examples) {
    const Algebra T2 = upper_triangular(2);
    const BilinearMap c = commutator_map(T2);
    EXPECT_EQ(eval_bilinear(c, T2.basis(0), T2.basis(1)), T2.basis(1));
    EXPECT_TRUE(is_zero(eval_bilinear(c, T2.zero(), T2.unity())));
    const Algebra M2 = matrix_algebra(2);
    EXPECT_EQ(eval_bilinear(commutator_map(M2), M2.basis(1), M2.basis(2)), M2.basis(0) - M2.basis(3));
    EXPECT_THROW(eval_bilinear(c, M2.basis(0), T2.basis(0)), DimensionMismatch);
}

TEST(Vectorize, RoundTrip) {
    const Algebra M2 = matrix_algebra(2);
    const BilinearMap c = commutator_map(M2);
    EXPECT_EQ(BilinearMap::devectorize(4, 4, c.vectorize()), c);
    // row-major over (i, j, component)
    EXPECT_EQ(c.vectorize()[(1 * 4 + 2) * 4 + 0], 1);
}

TEST(Check, Examples) {
    const Algebra M2 = matrix_algebra(2);
    EXPECT_TRUE(check(M2, commutator_map(M2), bider).passed());
    const Verdict prod = check(M2, product_map(M2), bider);
    EXPECT_FALSE(prod.passed());
    EXPECT_FALSE(prod.detail.empty());
    EXPECT_TRUE(check(M2, commutator_map(M2), jordan).passed());
}

TEST(CheckLinear, Examples) {
    const Algebra M2 = matrix_algebra(2);
    const Bimodule reg = regular_bimodule(M2);
    LinearMap inner(4, 4);
    for (std::size_t i = 0; i < 4; ++i) inner.at(i) = M2.commutator(M2.basis(1), M2.basis(i));
    EXPECT_TRUE(check_linear(M2, reg, inner, build_named_poly("product")).passed());
    EXPECT_TRUE(check_linear(M2, reg, inner, build_named_poly("jordan")).passed());

    const Algebra T2 = upper_triangular(2);
    LinearMap corner(3, 3);
    for (std::size_t i = 0; i < 3; ++i) corner.at(i) = T2.multiply(T2.basis(0), T2.basis(i), T2.basis(0));
    const Verdict v = check_linear(T2, regular_bimodule(T2), corner, build_named_poly("product"));
    EXPECT_FALSE(v.passed());
    EXPECT_FALSE(v.detail.empty());
}

TEST(Extremal, Witness) {
    const Algebra T2 = upper_triangular(2);
    const auto w = find_extremal_witness(T2, extremal_map(T2, T2.basis(1)));
    ASSERT_EQ(w.kind, ExtremalWitness::Kind::extremal);
    EXPECT_EQ(extremal_map(T2, w.a), extremal_map(T2, T2.basis(1)));
    EXPECT_EQ(find_extremal_witness(T2, BilinearMap(3, 3)).kind, ExtremalWitness::Kind::zero);
    const Algebra M2 = matrix_algebra(2);
    EXPECT_EQ(find_extremal_witness(M2, commutator_map(M2)).kind, ExtremalWitness::Kind::not_extremal);
}

TEST(Extremal, MapsAreBiderivations) {
    for (const char* p : {"t2", "t3", "block:2,1"}) {
        const Algebra A = preset_algebra(p);
        // a with [[A, A], a] = 0: solve for it, then every such map is a biderivation
        std::vector<Vector> conditions;
        for (std::size_t i = 0; i < A.dim(); ++i)
            for (std::size_t j = 0; j < A.dim(); ++j) {
                const MatrixQ ad = A.ad_matrix(A.commutator(A.basis(i), A.basis(j)));
                for (std::size_t r = 0; r < A.dim(); ++r) conditions.push_back(ad.row_vector(r));
            }
        const Subspace good = kernel_basis(MatrixQ::from_rows(conditions));
        ASSERT_FALSE(good.is_zero());
        for (const auto& a : good.basis()) EXPECT_TRUE(check(A, extremal_map(A, a), bider).passed()) << p;
    }
}

TEST(Solve, OneDim) {
    const Algebra u = one_dim();
    EXPECT_EQ(solve(u, bider).size(), 0u);
    EXPECT_EQ(solve(u, anti).size(), 0u);
    EXPECT_EQ(solve(u, jordan).size(), 0u);
}

TEST(Solve, Matrix2BiderivationsPinnedByOracle) {
    const Algebra M2 = matrix_algebra(2);
    const oracle::Solve ref = oracle::biderivations(M2);
    EXPECT_EQ(ref.rows, 2u * 4 * 4 * 4 * 4);
    ASSERT_EQ(ref.kernel.size(), 1u);
    const MapSpace s = solve(M2, bider);
    EXPECT_EQ(s.size(), ref.kernel.size());
    EXPECT_EQ(s.rows, ref.rows);
    EXPECT_TRUE(s.space.contains(commutator_map(M2).vectorize()));
    EXPECT_TRUE(s.space.contains(ref.kernel.front()));
    EXPECT_TRUE(Subspace::span(64, {ref.kernel.front()}).contains(oracle::commutator_vector(M2)));
}

TEST(Solve, OracleAgreesOnOtherAlgebras) {
    for (const char* p : {"t2", "t3", "one_dim", "block:2,1"}) {
        const Algebra A = preset_algebra(p);
        const oracle::Solve ref = oracle::biderivations(A);
        const MapSpace s = solve(A, bider);
        EXPECT_EQ(s.size(), ref.kernel.size()) << p;
        EXPECT_TRUE(subspace_equal(s.space, Subspace::span(s.space.ambient_dim(), ref.kernel))) << p;
    }
}

TEST(Solve, TriangularJordanEqualsBider) {
    const Algebra T2 = upper_triangular(2);
    EXPECT_TRUE(subspace_equal(solve(T2, jordan).space, solve(T2, bider).space));
}

TEST(Solve, Soundness) {
    std::vector<KindSpec> kinds{bider, anti, jordan};
    for (const char* n : {"product", "jordan", "lie", "jordan_triple"}) kinds.push_back(KindSpec::f_bider(build_named_poly(n)));
    for (const char* p : {"t2", "t3", "m2"})
        for (const auto& k : kinds) {
            const Algebra A = preset_algebra(p);
            const MapSpace s = solve(A, k);
            for (std::size_t i = 0; i < s.size(); ++i) EXPECT_TRUE(check(A, s.bilinear(i), k).passed()) << p << " " << k.name();
        }
}

TEST(Solve, LinearSoundness) {
    for (const char* p : {"t2", "m2"})
        for (const char* n : {"product", "jordan", "lie_triple"}) {
            const Algebra A = preset_algebra(p);
            const auto f = build_named_poly(n);
            const MapSpace s = solve_space(A, regular_bimodule(A), KindSpec::f_der(f));
            EXPECT_GT(s.size(), 0u);
            for (std::size_t i = 0; i < s.size(); ++i) EXPECT_TRUE(check_linear(A, regular_bimodule(A), s.linear(i), f).passed());
        }
    // derivations of matrix(2) are inner: dim = 4 - dim center
    const Algebra M2 = matrix_algebra(2);
    EXPECT_EQ(solve_space(M2, regular_bimodule(M2), KindSpec::f_der(build_named_poly("product"))).size(), 3u);
}

TEST(Solve, Containments) {
    for (const char* p : {"t2", "t3", "m2"}) {
        const Algebra A = preset_algebra(p);
        const MapSpace j = solve(A, jordan);
        EXPECT_TRUE(subspace_contains(j.space, solve(A, bider).space)) << p;
        for (const char* n : {"product", "jordan", "jordan_triple"}) {
            const MapSpace f = solve(A, KindSpec::f_bider(build_named_poly(n)));
            EXPECT_TRUE(subspace_contains(j.space, f.space)) << p << " " << n;
            for (std::size_t k = 0; k < f.size(); ++k) EXPECT_TRUE(check_unity_vanishing(A, f.bilinear(k)).passed());
        }
    }
}

TEST(Solve, GeneralBimodule) {
    // one-dimensional T2-bimodule: E11 acts by 1 on the left, E22 by 1 on the right
    const Algebra T2 = upper_triangular(2);
    Bimodule m{1, {}, {}};
    auto one = [](long v) { return MatrixQ::from_rows({{Rational(v)}}); };
    m.left = {one(1), one(0), one(0)};
    m.right = {one(0), one(0), one(1)};
    ASSERT_TRUE(validate_bimodule(T2, T2, m).passed());
    const MapSpace s = solve_space(T2, m, bider);
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_TRUE(check_bilinear(T2, m, s.bilinear(i), bider).passed());
    EXPECT_EQ(s.mdim, 1u);
}

TEST(Solve, Limits) {
    const Algebra M2 = matrix_algebra(2);
    SolveLimits tight;
    tight.max_rows = 10;
    EXPECT_THROW(solve_space(M2, regular_bimodule(M2), bider, tight), LimitExceeded);
    SolveLimits narrow;
    narrow.max_arity = 2;
    EXPECT_THROW(solve_space(M2, regular_bimodule(M2), KindSpec::f_bider(build_named_poly("jordan_triple")), narrow),
                 LimitExceeded);
    EXPECT_EQ(constraint_rows(4, 4, bider), 2u * 4 * 4 * 4 * 4);
    EXPECT_EQ(constraint_rows(4, 4, KindSpec::f_der(build_named_poly("jordan_triple"))), 4u * 4 * 4 * 4);
}

TEST(Solve, LimitFromEnvironment) {
    ::setenv("BIDERLAB_MAX_ROWS", "100", 1);
    const SolveLimits l = SolveLimits::from_env();
    ::unsetenv("BIDERLAB_MAX_ROWS");
    EXPECT_EQ(l.max_rows, 100u);
    EXPECT_EQ(SolveLimits::from_env().max_rows, 200000u);
}

TEST(Identities, JordanMapsOnTriangularAndMatrix) {
    for (const char* p : {"t3", "m2"}) {
        const Algebra A = preset_algebra(p);
        Xorshift64Star rng(default_seed);
        for (const auto& j : solve(A, jordan).bilinear_maps())
            for (const auto& v : identity_suite(A, j, rng, 50)) EXPECT_TRUE(v.passed()) << p << " " << v.name << " " << v.detail;
    }
}

TEST(Identities, DetectNonJordanMap) {
    const Algebra M2 = matrix_algebra(2);
    EXPECT_FALSE(check_triple_identity(M2, product_map(M2)).passed());
    EXPECT_FALSE(check_unity_vanishing(M2, product_map(M2)).passed());
}
