#pragma once
// Identity suites for Jordan biderivations: sampled checks for the
// non-multilinear identities and exhaustive basis checks for the
// multilinear ones.

#include <biderlab/algebra.hpp>
#include <biderlab/bilinear.hpp>
#include <biderlab/verdict.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace biderlab {

/// xorshift64*; a zero seed is remapped since the all-zero state is fixed.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1Dull;
    }

    /// Uniform integer in [lo, hi] by rejection.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t r;
        do r = next();
        while (r >= limit);
        return lo + static_cast<std::int64_t>(r % span);
    }

private:
    std::uint64_t state_;
};

inline constexpr std::uint64_t default_seed = 42;
inline constexpr std::size_t default_samples = 200;

inline Element random_element(std::size_t dim, Xorshift64Star& rng) {
    Element x(dim);
    for (auto& c : x) c = Rational(static_cast<long>(rng.uniform(-9, 9)));
    return x;
}

/// [[x, y], J(x, y)] = 0 on random pairs.
inline Verdict check_commuting_pairs(const Algebra& alg, const BilinearMap& j, Xorshift64Star& rng, std::size_t samples) {
    for (std::size_t s = 0; s < samples; ++s) {
        const Element x = random_element(alg.dim(), rng);
        const Element y = random_element(alg.dim(), rng);
        const Element v = alg.commutator(alg.commutator(x, y), eval_bilinear(j, x, y));
        if (!biderlab::is_zero(v))
            return Verdict::of("[[x,y],J(x,y)]=0", false,
                               "sample " + std::to_string(s) + ": x = " + format_element(alg, x) + ", y = " + format_element(alg, y));
    }
    return Verdict::of("[[x,y],J(x,y)]=0", true, std::to_string(samples) + " samples");
}

namespace detail {

/// J(x, t)yz + xJ(y, t)z + xyJ(z, t)
inline Element triple_expansion(const Algebra& A, const BilinearMap& j, const Element& x, const Element& y, const Element& z,
                                const Element& t) {
    return A.multiply(eval_bilinear(j, x, t), y, z) + A.multiply(x, eval_bilinear(j, y, t), z) +
           A.multiply(x, y, eval_bilinear(j, z, t));
}

} // namespace detail

/// J(xyz + zyx, t) = J(x,t)yz + xJ(y,t)z + xyJ(z,t) + J(z,t)yx + zJ(y,t)x + zyJ(x,t)
/// on every basis quadruple.
inline Verdict check_triple_identity(const Algebra& A, const BilinearMap& j) {
    const std::size_t d = A.dim();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c) {
                const Element x = A.basis(a), y = A.basis(b), z = A.basis(c);
                const Element w = A.multiply(x, y, z) + A.multiply(z, y, x);
                for (std::size_t k = 0; k < d; ++k) {
                    const Element t = A.basis(k);
                    const Element lhs = eval_bilinear(j, w, t);
                    const Element rhs = detail::triple_expansion(A, j, x, y, z, t) + detail::triple_expansion(A, j, z, y, x, t);
                    if (lhs != rhs)
                        return Verdict::of("J(xyz+zyx,t)", false,
                                           "at (" + A.basis_names()[a] + ", " + A.basis_names()[b] + ", " + A.basis_names()[c] +
                                               ", " + A.basis_names()[k] + "): " + format_element(A, lhs) +
                                               " != " + format_element(A, rhs));
                }
            }
    return Verdict::of("J(xyz+zyx,t)", true);
}

/// J(xyx, z) = J(x,z)yx + xJ(y,z)x + xyJ(x,z) on random triples.
inline Verdict check_sandwich_identity(const Algebra& A, const BilinearMap& j, Xorshift64Star& rng, std::size_t samples) {
    for (std::size_t s = 0; s < samples; ++s) {
        const Element x = random_element(A.dim(), rng);
        const Element y = random_element(A.dim(), rng);
        const Element z = random_element(A.dim(), rng);
        if (eval_bilinear(j, A.multiply(x, y, x), z) != detail::triple_expansion(A, j, x, y, x, z))
            return Verdict::of("J(xyx,z)", false, "sample " + std::to_string(s));
    }
    return Verdict::of("J(xyx,z)", true, std::to_string(samples) + " samples");
}

/// F(1, u_j) = F(u_j, 1) = 0 for every basis element.
inline Verdict check_unity_vanishing(const Algebra& A, const BilinearMap& f) {
    for (std::size_t k = 0; k < A.dim(); ++k) {
        const Element u = A.basis(k);
        if (!biderlab::is_zero(eval_bilinear(f, A.unity(), u)) || !biderlab::is_zero(eval_bilinear(f, u, A.unity())))
            return Verdict::of("F(1,y)=F(y,1)=0", false, "at y = " + A.basis_names()[k]);
    }
    return Verdict::of("F(1,y)=F(y,1)=0", true);
}

/// All identity checks for one Jordan biderivation; the generator is shared
/// so a suite over several maps consumes one deterministic stream.
inline std::vector<Verdict> identity_suite(const Algebra& A, const BilinearMap& j, Xorshift64Star& rng, std::size_t samples) {
    return {check_commuting_pairs(A, j, rng, samples), check_triple_identity(A, j),
            check_sandwich_identity(A, j, rng, samples)};
}

} // namespace biderlab
