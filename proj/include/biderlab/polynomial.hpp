#pragma once
// Multilinear polynomials f(x_1..x_n) = sum over permutations pi of
// alpha_pi x_pi(1) ... x_pi(n) in noncommuting indeterminates.
//
// Permutations are stored in one-line notation, 0-indexed: perm[k] is the
// index of the variable in position k of the word. Files use 1-indexed
// arrays.

#include <biderlab/algebra.hpp>
#include <biderlab/rational.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace biderlab {

using Permutation = std::vector<std::size_t>;

inline constexpr std::size_t default_max_arity = 4;

class MultilinearPolynomial {
public:
    MultilinearPolynomial(std::size_t n, std::map<Permutation, Rational> terms) : n_(n) {
        if (n < 2) throw Error("polynomial arity must be at least 2");
        for (auto& [perm, coeff] : terms) {
            if (perm.size() != n) throw Error("permutation length differs from arity " + std::to_string(n));
            std::vector<bool> seen(n, false);
            for (auto p : perm) {
                if (p >= n || seen[p]) throw Error("permutation is not a bijection of {1.." + std::to_string(n) + "}");
                seen[p] = true;
            }
            if (sgn(coeff) != 0) terms_.emplace(perm, coeff);
        }
        if (terms_.empty()) throw Error("polynomial must have a nonzero coefficient");
    }

    std::size_t arity() const { return n_; }
    const std::map<Permutation, Rational>& terms() const { return terms_; }

    friend bool operator==(const MultilinearPolynomial&, const MultilinearPolynomial&) = default;

private:
    std::size_t n_;
    std::map<Permutation, Rational> terms_;
};

inline const std::vector<std::string>& named_polynomials() {
    static const std::vector<std::string> names{"product", "jordan", "lie", "jordan_triple", "lie_triple"};
    return names;
}

inline MultilinearPolynomial build_named_poly(const std::string& name) {
    using M = std::map<Permutation, Rational>;
    if (name == "product") return {2, M{{{0, 1}, 1}}};
    if (name == "jordan") return {2, M{{{0, 1}, 1}, {{1, 0}, 1}}};
    if (name == "lie") return {2, M{{{0, 1}, 1}, {{1, 0}, -1}}};
    if (name == "jordan_triple") return {3, M{{{0, 1, 2}, 1}, {{2, 1, 0}, 1}}};
    // [[x1, x2], x3] = x1x2x3 - x2x1x3 - x3x1x2 + x3x2x1
    if (name == "lie_triple") return {3, M{{{0, 1, 2}, 1}, {{1, 0, 2}, -1}, {{2, 0, 1}, -1}, {{2, 1, 0}, 1}}};
    throw Error("unknown polynomial \"" + name + "\"");
}

/// Left-to-right products of the words, weighted by coefficients.
inline Element evaluate_poly(const MultilinearPolynomial& f, const Algebra& alg, const std::vector<Element>& args) {
    if (args.size() != f.arity())
        throw DimensionMismatch("polynomial of arity " + std::to_string(f.arity()) + " given " +
                                std::to_string(args.size()) + " arguments");
    Element out = alg.zero();
    for (const auto& [perm, coeff] : f.terms()) {
        Element word = args[perm[0]];
        for (std::size_t k = 1; k < perm.size(); ++k) word = alg.multiply(word, args[perm[k]]);
        axpy(out, coeff, word);
    }
    return out;
}

struct PolyStats {
    Rational alpha; ///< sum of all coefficients
    Rational beta;  ///< permutations placing x_1 before x_2
    Rational gamma; ///< permutations placing x_1 after x_2
};

inline PolyStats poly_stats(const MultilinearPolynomial& f) {
    PolyStats s{0, 0, 0};
    for (const auto& [perm, coeff] : f.terms()) {
        s.alpha += coeff;
        std::size_t pos0 = 0, pos1 = 0;
        for (std::size_t k = 0; k < perm.size(); ++k) {
            if (perm[k] == 0) pos0 = k;
            if (perm[k] == 1) pos1 = k;
        }
        (pos0 < pos1 ? s.beta : s.gamma) += coeff;
    }
    return s;
}

} // namespace biderlab
