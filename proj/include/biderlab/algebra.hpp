#pragma once
// Finite-dimensional unital associative algebras given by structure
// constants, their bimodules, and the Peirce decomposition attached to an
// idempotent.

#include <biderlab/linalg.hpp>
#include <biderlab/rational.hpp>
#include <biderlab/verdict.hpp>

#include <cstddef>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace biderlab {

/// Coordinate vector over an algebra's basis.
using Element = Vector;

class Algebra {
public:
    Algebra() = default;

    /// table[(i * d + j) * d + k] is the coefficient of u_k in u_i u_j.
    /// No validation happens here; see validate_algebra / make_algebra.
    Algebra(std::string name, std::vector<std::string> basis_names, std::vector<Rational> table, Element unity)
        : name_(std::move(name)), names_(std::move(basis_names)), table_(std::move(table)), unity_(std::move(unity)) {
        const std::size_t d = names_.size();
        require_same_size(table_.size(), d * d * d, "structure-constant table size");
        require_same_size(unity_.size(), d, "unity length");
        terms_.resize(d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k)
                    if (sgn(coeff(i, j, k)) != 0) terms_[i * d + j].push_back({k, coeff(i, j, k)});
    }

    const std::string& name() const { return name_; }
    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Element& unity() const { return unity_; }

    const Rational& coeff(std::size_t i, std::size_t j, std::size_t k) const {
        const std::size_t d = dim();
        return table_.at((i * d + j) * d + k);
    }

    /// Nonzero coordinates of u_i u_j.
    const SparseRow& product_terms(std::size_t i, std::size_t j) const { return terms_.at(i * dim() + j); }

    Element basis(std::size_t i) const { return unit_vector(dim(), i); }
    Element zero() const { return zero_vector(dim()); }

    Element multiply(const Element& x, const Element& y) const {
        require_same_size(x.size(), dim(), "left factor");
        require_same_size(y.size(), dim(), "right factor");
        Element out = zero();
        const std::size_t d = dim();
        for (std::size_t i = 0; i < d; ++i) {
            if (sgn(x[i]) == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (sgn(y[j]) == 0) continue;
                const Rational s = x[i] * y[j];
                for (const auto& t : terms_[i * d + j]) out[t.col] += s * t.value;
            }
        }
        return out;
    }

    Element multiply(const Element& x, const Element& y, const Element& z) const { return multiply(multiply(x, y), z); }

    Element commutator(const Element& x, const Element& y) const { return multiply(x, y) - multiply(y, x); }
    Element jordan(const Element& x, const Element& y) const { return multiply(x, y) + multiply(y, x); }

    /// Matrix of y -> x y (column c is x u_c).
    MatrixQ left_matrix(const Element& x) const { return operator_matrix([&](const Element& u) { return multiply(x, u); }); }
    /// Matrix of y -> y x.
    MatrixQ right_matrix(const Element& x) const { return operator_matrix([&](const Element& u) { return multiply(u, x); }); }
    /// Matrix of y -> [x, y].
    MatrixQ ad_matrix(const Element& x) const { return operator_matrix([&](const Element& u) { return commutator(x, u); }); }

    const std::vector<Rational>& table() const { return table_; }

private:
    template <class F>
    MatrixQ operator_matrix(F&& f) const {
        const std::size_t d = dim();
        MatrixQ m(d, d);
        for (std::size_t c = 0; c < d; ++c) {
            const Element col = f(basis(c));
            for (std::size_t r = 0; r < d; ++r) m(r, c) = col[r];
        }
        return m;
    }

    std::string name_;
    std::vector<std::string> names_;
    std::vector<Rational> table_;
    Element unity_;
    std::vector<SparseRow> terms_;
};

inline std::string format_element(const std::vector<std::string>& names, const Element& x) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        Rational c = x[i];
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            c = abs(c);
        }
        if (c != 1) os << to_string(c) << "*";
        os << (i < names.size() ? names[i] : "u" + std::to_string(i));
        first = false;
    }
    return first ? "0" : os.str();
}

inline std::string format_element(const Algebra& alg, const Element& x) { return format_element(alg.basis_names(), x); }

/// Associativity on all basis triples, then the unity law.
inline Verdict validate_algebra(const Algebra& alg) {
    const std::size_t d = alg.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const Element lhs = alg.multiply(alg.multiply(alg.basis(i), alg.basis(j)), alg.basis(k));
                const Element rhs = alg.multiply(alg.basis(i), alg.multiply(alg.basis(j), alg.basis(k)));
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "associativity fails at basis triple (" << i << ", " << j << ", " << k << "): ("
                       << alg.basis_names()[i] << "*" << alg.basis_names()[j] << ")*" << alg.basis_names()[k]
                       << " = " << format_element(alg, lhs) << " but " << alg.basis_names()[i] << "*("
                       << alg.basis_names()[j] << "*" << alg.basis_names()[k] << ") = " << format_element(alg, rhs);
                    return Verdict::of("associativity", false, os.str());
                }
            }
    for (std::size_t i = 0; i < d; ++i) {
        const Element u = alg.basis(i);
        if (alg.multiply(alg.unity(), u) != u || alg.multiply(u, alg.unity()) != u)
            return Verdict::of("unity", false,
                               "unity law fails at basis index " + std::to_string(i) + " (" + alg.basis_names()[i] +
                                   ")");
    }
    return Verdict::of("algebra", true);
}

class InvalidAlgebra : public Error {
public:
    using Error::Error;
};

inline Algebra make_algebra(std::string name, std::vector<std::string> basis_names, std::vector<Rational> table,
                            Element unity) {
    Algebra alg(std::move(name), std::move(basis_names), std::move(table), std::move(unity));
    if (const auto v = validate_algebra(alg); !v.passed()) throw InvalidAlgebra(v.detail);
    return alg;
}

/// A bimodule over a pair of algebras (left over L, right over R); for an
/// A-bimodule both are A. Action matrices act on column coordinate vectors:
/// u_i . m = left[i] m and m . u_i = right[i] m.
struct Bimodule {
    std::size_t mdim = 0;
    std::vector<MatrixQ> left;
    std::vector<MatrixQ> right;

    Vector act_left(const Element& x, const Vector& m) const {
        Vector out = zero_vector(mdim);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (sgn(x[i]) != 0) axpy(out, x[i], left.at(i) * m);
        return out;
    }
    Vector act_right(const Vector& m, const Element& x) const {
        Vector out = zero_vector(mdim);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (sgn(x[i]) != 0) axpy(out, x[i], right.at(i) * m);
        return out;
    }
};

/// The algebra acting on itself by multiplication.
inline Bimodule regular_bimodule(const Algebra& alg) {
    Bimodule m{alg.dim(), {}, {}};
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        m.left.push_back(alg.left_matrix(alg.basis(i)));
        m.right.push_back(alg.right_matrix(alg.basis(i)));
    }
    return m;
}

inline MatrixQ combine(const std::vector<MatrixQ>& mats, const Element& x, std::size_t n) {
    MatrixQ out(n, n);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) out(r, c) += x[i] * mats[i](r, c);
    }
    return out;
}

/// Unital, associative on each side, and the two actions commute.
inline Verdict validate_bimodule(const Algebra& left_alg, const Algebra& right_alg, const Bimodule& m) {
    const std::size_t n = m.mdim;
    if (m.left.size() != left_alg.dim() || m.right.size() != right_alg.dim())
        return Verdict::of("bimodule", false, "action count does not match algebra dimension");
    for (const auto& mats : {std::cref(m.left), std::cref(m.right)})
        for (const auto& a : mats.get())
            if (a.rows() != n || a.cols() != n)
                return Verdict::of("bimodule", false, "action matrix is not " + std::to_string(n) + "x" + std::to_string(n));
    if (combine(m.left, left_alg.unity(), n) != MatrixQ::identity(n))
        return Verdict::of("bimodule", false, "left action of unity is not the identity");
    if (combine(m.right, right_alg.unity(), n) != MatrixQ::identity(n))
        return Verdict::of("bimodule", false, "right action of unity is not the identity");
    for (std::size_t i = 0; i < left_alg.dim(); ++i)
        for (std::size_t j = 0; j < left_alg.dim(); ++j) {
            const Element ij = left_alg.multiply(left_alg.basis(i), left_alg.basis(j));
            if (m.left[i] * m.left[j] != combine(m.left, ij, n))
                return Verdict::of("bimodule", false,
                                   "left action not associative at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }
    for (std::size_t i = 0; i < right_alg.dim(); ++i)
        for (std::size_t j = 0; j < right_alg.dim(); ++j) {
            const Element ij = right_alg.multiply(right_alg.basis(i), right_alg.basis(j));
            // (m u_i) u_j = right[j] right[i] m
            if (m.right[j] * m.right[i] != combine(m.right, ij, n))
                return Verdict::of("bimodule", false,
                                   "right action not associative at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }
    for (std::size_t i = 0; i < left_alg.dim(); ++i)
        for (std::size_t j = 0; j < right_alg.dim(); ++j)
            if (m.left[i] * m.right[j] != m.right[j] * m.left[i])
                return Verdict::of("bimodule", false,
                                   "left and right actions do not commute at (" + std::to_string(i) + ", " +
                                       std::to_string(j) + ")");
    return Verdict::of("bimodule", true);
}

// ---------------------------------------------------------------------------
// Presets

namespace detail {

inline std::string unit_name(std::size_t i, std::size_t j, std::size_t n) {
    if (n < 10) return "E" + std::to_string(i + 1) + std::to_string(j + 1);
    return "E" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

/// Span of the matrix units E_ij for the allowed (i, j), which must be
/// closed under multiplication and contain every E_ii.
inline Algebra matrix_unit_algebra(std::string name, std::size_t n, const std::function<bool(std::size_t, std::size_t)>& allowed) {
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (allowed(i, j)) units.emplace_back(i, j);
    const std::size_t d = units.size();
    std::vector<std::size_t> index(n * n, d);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < d; ++k) {
        index[units[k].first * n + units[k].second] = k;
        names.push_back(unit_name(units[k].first, units[k].second, n));
    }
    std::vector<Rational> table(d * d * d, Rational(0));
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
            if (units[p].second == units[q].first) {
                const std::size_t k = index[units[p].first * n + units[q].second];
                if (k == d) throw InvalidAlgebra("matrix-unit set is not closed under multiplication");
                table[(p * d + q) * d + k] = 1;
            }
    Element unity = zero_vector(d);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = index[i * n + i];
        if (k == d) throw InvalidAlgebra("matrix-unit set misses a diagonal unit");
        unity[k] = 1;
    }
    return make_algebra(std::move(name), std::move(names), std::move(table), std::move(unity));
}

} // namespace detail

/// Full matrix algebra M_n, basis E_ij in row-major order.
inline Algebra matrix_algebra(std::size_t n) {
    if (n == 0) throw InvalidAlgebra("matrix(n) needs n >= 1");
    return detail::matrix_unit_algebra("matrix(" + std::to_string(n) + ")", n, [](auto, auto) { return true; });
}

/// Upper triangular T_n, basis E_ij with i <= j in row-major order.
inline Algebra upper_triangular(std::size_t n) {
    if (n == 0) throw InvalidAlgebra("upper_triangular(n) needs n >= 1");
    return detail::matrix_unit_algebra("upper_triangular(" + std::to_string(n) + ")", n,
                                       [](std::size_t i, std::size_t j) { return i <= j; });
}

inline Algebra block_upper_triangular(const std::vector<std::size_t>& sizes) {
    std::vector<std::size_t> block;
    std::string label;
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        if (sizes[b] == 0) throw InvalidAlgebra("block sizes must be positive");
        block.insert(block.end(), sizes[b], b);
        label += (b ? "," : "") + std::to_string(sizes[b]);
    }
    if (block.empty()) throw InvalidAlgebra("block_upper_triangular needs at least one block");
    return detail::matrix_unit_algebra("block_upper_triangular(" + label + ")", block.size(),
                                       [&](std::size_t i, std::size_t j) { return block[i] <= block[j]; });
}

inline Algebra one_dim() { return make_algebra("one_dim", {"u"}, {Rational(1)}, {Rational(1)}); }

/// Tri(A; M; B): basis (A-basis, M-basis, B-basis), multiplied as 2x2
/// upper triangular matrices [[a, m], [0, b]]. M is an (A, B)-bimodule.
inline Algebra triangular(const Algebra& a, const Algebra& b, const Bimodule& m) {
    if (const auto v = validate_bimodule(a, b, m); !v.passed()) throw InvalidAlgebra("invalid bimodule: " + v.detail);
    const std::size_t da = a.dim(), dm = m.mdim, db = b.dim();
    const std::size_t d = da + dm + db;
    std::vector<std::string> names;
    for (const auto& s : a.basis_names()) names.push_back("A." + s);
    for (std::size_t i = 0; i < dm; ++i) names.push_back("M." + std::to_string(i + 1));
    for (const auto& s : b.basis_names()) names.push_back("B." + s);
    std::vector<Rational> table(d * d * d, Rational(0));
    auto put = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) { table[(i * d + j) * d + k] += v; };
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < da; ++k) put(i, j, k, a.coeff(i, j, k));
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < db; ++k) put(da + dm + i, da + dm + j, da + dm + k, b.coeff(i, j, k));
    // a_i * m_c = sum_r left[i](r, c) m_r ;  m_c * b_j = sum_r right[j](r, c) m_r
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t c = 0; c < dm; ++c)
            for (std::size_t r = 0; r < dm; ++r) put(i, da + c, da + r, m.left[i](r, c));
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t c = 0; c < dm; ++c)
            for (std::size_t r = 0; r < dm; ++r) put(da + c, da + dm + j, da + r, m.right[j](r, c));
    Element unity = zero_vector(d);
    for (std::size_t i = 0; i < da; ++i) unity[i] = a.unity()[i];
    for (std::size_t i = 0; i < db; ++i) unity[da + dm + i] = b.unity()[i];
    return make_algebra("triangular(" + a.name() + ";" + std::to_string(dm) + ";" + b.name() + ")", std::move(names),
                        std::move(table), std::move(unity));
}

/// The idempotent of Tri(A; M; B) given by the unity of the A block.
inline Element triangular_idempotent(const Algebra& a, std::size_t mdim, std::size_t bdim) {
    Element e = zero_vector(a.dim() + mdim + bdim);
    for (std::size_t i = 0; i < a.dim(); ++i) e[i] = a.unity()[i];
    return e;
}

// ---------------------------------------------------------------------------
// Linear solves over the algebra

/// Kernel of the linear map taking unknown t to columns[t]; returned as
/// coefficient vectors over the unknowns.
inline Subspace kernel_of_columns(std::size_t unknowns, const std::vector<Vector>& columns) {
    require_same_size(columns.size(), unknowns, "column count");
    const std::size_t len = columns.empty() ? 0 : columns.front().size();
    RowReducer red(unknowns);
    for (std::size_t r = 0; r < len; ++r) {
        SparseRow row;
        for (std::size_t t = 0; t < unknowns; ++t)
            if (sgn(columns[t][r]) != 0) row.push_back({t, columns[t][r]});
        red.add_row(row);
    }
    return kernel_basis(red);
}

/// {x in span(basis) : f(x) = 0} for a linear f, as a subspace of the algebra.
inline Subspace restricted_kernel(std::size_t ambient, const std::vector<Vector>& basis,
                                  const std::function<Vector(const Element&)>& f) {
    std::vector<Vector> cols;
    for (const auto& s : basis) cols.push_back(f(s));
    const Subspace coeffs = kernel_of_columns(basis.size(), cols);
    std::vector<Vector> elems;
    for (const auto& c : coeffs.basis()) {
        Element x = zero_vector(ambient);
        for (std::size_t t = 0; t < basis.size(); ++t) axpy(x, c[t], basis[t]);
        elems.push_back(std::move(x));
    }
    return Subspace::span(ambient, elems);
}

/// Z(A): elements commuting with every basis element.
inline Subspace center(const Algebra& alg) {
    const std::size_t d = alg.dim();
    std::vector<Vector> all;
    for (std::size_t i = 0; i < d; ++i) all.push_back(alg.basis(i));
    return restricted_kernel(d, all, [&](const Element& x) {
        Vector out;
        for (std::size_t i = 0; i < d; ++i) {
            const Element c = alg.commutator(x, alg.basis(i));
            out.insert(out.end(), c.begin(), c.end());
        }
        return out;
    });
}

// ---------------------------------------------------------------------------
// Peirce decomposition

enum class Corner { a11, a12, a21, a22 };

inline const char* corner_letter(Corner c) {
    switch (c) {
    case Corner::a11: return "a";
    case Corner::a12: return "m";
    case Corner::a21: return "n";
    case Corner::a22: return "b";
    }
    return "?";
}

struct PeirceComponents {
    Element a, m, n, b;

    const Element& operator[](Corner c) const {
        switch (c) {
        case Corner::a11: return a;
        case Corner::a12: return m;
        case Corner::a21: return n;
        default: return b;
        }
    }
};

inline constexpr Corner all_corners[] = {Corner::a11, Corner::a12, Corner::a21, Corner::a22};

class NotIdempotent : public Error {
public:
    using Error::Error;
};

/// A verified nontrivial idempotent e with e' = 1 - e and the four corners
/// eAe, eAe', e'Ae, e'Ae' kept in the ambient coordinates.
class PeirceContext {
public:
    PeirceContext(const Algebra& alg, Element e) : alg_(std::make_shared<const Algebra>(alg)), e_(std::move(e)) {
        require_same_size(e_.size(), alg.dim(), "idempotent length");
        if (alg.multiply(e_, e_) != e_) throw NotIdempotent("not idempotent: e*e != e for e = " + format_element(alg, e_));
        if (biderlab::is_zero(e_)) throw NotIdempotent("trivial idempotent: e = 0");
        if (e_ == alg.unity()) throw NotIdempotent("trivial idempotent: e equals unity");
        e_prime_ = alg.unity() - e_;
        const std::size_t d = alg.dim();
        std::vector<Vector> spans[4];
        for (std::size_t i = 0; i < d; ++i) {
            const auto parts = split(alg.basis(i));
            for (Corner c : all_corners) spans[static_cast<int>(c)].push_back(parts[c]);
        }
        std::size_t total = 0;
        for (Corner c : all_corners) {
            corners_[static_cast<int>(c)] = Subspace::span(d, spans[static_cast<int>(c)]);
            total += corners_[static_cast<int>(c)].dim();
        }
        if (total != d) throw Error("Peirce corners do not form a direct sum");
    }

    const Algebra& algebra() const { return *alg_; }
    const Element& e() const { return e_; }
    const Element& e_prime() const { return e_prime_; }
    const Subspace& corner(Corner c) const { return corners_[static_cast<int>(c)]; }
    const std::vector<Vector>& corner_basis(Corner c) const { return corner(c).basis(); }

    /// a = exe, m = exe', n = e'xe, b = e'xe'.
    PeirceComponents split(const Element& x) const {
        const Algebra& A = *alg_;
        const Element xe = A.multiply(x, e_);
        const Element xe_ = A.multiply(x, e_prime_);
        return {A.multiply(e_, xe), A.multiply(e_, xe_), A.multiply(e_prime_, xe), A.multiply(e_prime_, xe_)};
    }

    /// p x q for p, q in {e, e'}.
    Element sandwich(bool left_e, const Element& x, bool right_e) const {
        return alg_->multiply(left_e ? e_ : e_prime_, x, right_e ? e_ : e_prime_);
    }

private:
    std::shared_ptr<const Algebra> alg_;
    Element e_;
    Element e_prime_;
    Subspace corners_[4];
};

inline PeirceContext peirce_context(const Algebra& alg, const Element& e) { return PeirceContext(alg, e); }

inline PeirceComponents peirce_split(const PeirceContext& ctx, const Element& x) { return ctx.split(x); }

/// Corner multiplication rules A12 A12 = 0, A21 A21 = 0, A12 A21 in A11,
/// A21 A12 in A22, checked on corner bases.
inline Verdict check_corner_products(const PeirceContext& ctx) {
    const Algebra& A = ctx.algebra();
    struct Rule {
        Corner x, y;
        const Subspace* target;
        const char* label;
    };
    const Subspace zero(A.dim());
    const Rule rules[] = {{Corner::a12, Corner::a12, &zero, "A12*A12 = 0"},
                          {Corner::a21, Corner::a21, &zero, "A21*A21 = 0"},
                          {Corner::a12, Corner::a21, &ctx.corner(Corner::a11), "A12*A21 in A11"},
                          {Corner::a21, Corner::a12, &ctx.corner(Corner::a22), "A21*A12 in A22"}};
    for (const auto& r : rules)
        for (const auto& x : ctx.corner_basis(r.x))
            for (const auto& y : ctx.corner_basis(r.y)) {
                const Element p = A.multiply(x, y);
                if (!r.target->contains(p))
                    return Verdict::of("corner_products", false,
                                       std::string(r.label) + " fails: (" + format_element(A, x) + ")*(" +
                                           format_element(A, y) + ") = " + format_element(A, p));
            }
    return Verdict::of("corner_products", true);
}

class NotSubalgebra : public Error {
public:
    using Error::Error;
};

/// Two-sided ideal of the corner algebra generated by its commutators,
/// closed under multiplication by corner basis elements until stable.
inline Subspace commutator_ideal(const Algebra& alg, const Subspace& corner) {
    const auto& basis = corner.basis();
    for (const auto& x : basis)
        for (const auto& y : basis)
            if (!corner.contains(alg.multiply(x, y))) throw NotSubalgebra("corner is not multiplicatively closed");
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) gens.push_back(alg.commutator(basis[i], basis[j]));
    Subspace ideal = Subspace::span(alg.dim(), gens);
    for (;;) {
        std::vector<Vector> next = ideal.basis();
        for (const auto& v : ideal.basis())
            for (const auto& x : basis) {
                next.push_back(alg.multiply(x, v));
                next.push_back(alg.multiply(v, x));
            }
        Subspace grown = Subspace::span(alg.dim(), next);
        if (grown.dim() == ideal.dim()) return ideal;
        ideal = std::move(grown);
    }
}

// ---------------------------------------------------------------------------
// Hypotheses

enum class Hypothesis { star, triangular, ideal11, ideal22, zero_morphism, orthogonality, faithful };

inline constexpr Hypothesis all_hypotheses[] = {Hypothesis::star,          Hypothesis::triangular,    Hypothesis::ideal11,
                                                Hypothesis::ideal22,       Hypothesis::zero_morphism, Hypothesis::orthogonality,
                                                Hypothesis::faithful};

inline const char* to_string(Hypothesis h) {
    switch (h) {
    case Hypothesis::star: return "star";
    case Hypothesis::triangular: return "triangular";
    case Hypothesis::ideal11: return "ideal11";
    case Hypothesis::ideal22: return "ideal22";
    case Hypothesis::zero_morphism: return "zero_morphism";
    case Hypothesis::orthogonality: return "orthogonality";
    case Hypothesis::faithful: return "faithful";
    }
    return "?";
}

inline Hypothesis parse_hypothesis(std::string s) {
    for (auto& ch : s)
        if (ch == '-') ch = '_';
    for (Hypothesis h : all_hypotheses)
        if (s == to_string(h)) return h;
    throw ParseError("unknown hypothesis \"" + s + "\"");
}

namespace detail {

inline Vector concat(const std::vector<Vector>& parts) {
    Vector out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

/// {x in corner : for every g in gens, (left ? x g : g x) = 0}, checked
/// against two families at once.
inline Subspace annihilator(const Algebra& A, const Subspace& corner, const std::vector<Vector>& right_of_x,
                            const std::vector<Vector>& left_of_x) {
    return restricted_kernel(A.dim(), corner.basis(), [&](const Element& x) {
        std::vector<Vector> parts;
        for (const auto& g : right_of_x) parts.push_back(A.multiply(x, g));
        for (const auto& g : left_of_x) parts.push_back(A.multiply(g, x));
        return concat(parts);
    });
}

inline Verdict star(const PeirceContext& ctx) {
    const Algebra& A = ctx.algebra();
    const auto& m = ctx.corner_basis(Corner::a12);
    const auto& n = ctx.corner_basis(Corner::a21);
    const Subspace k11 = annihilator(A, ctx.corner(Corner::a11), m, n);
    if (!k11.is_zero())
        return Verdict::of("star", false,
                           "nonzero a in eAe with a*eAe' = 0 = e'Ae*a: a = " + format_element(A, k11.basis().front()));
    // b with eAe' * b = 0 = b * e'Ae
    const Subspace k22 = restricted_kernel(A.dim(), ctx.corner_basis(Corner::a22), [&](const Element& b) {
        std::vector<Vector> parts;
        for (const auto& g : m) parts.push_back(A.multiply(g, b));
        for (const auto& g : n) parts.push_back(A.multiply(b, g));
        return concat(parts);
    });
    if (!k22.is_zero())
        return Verdict::of("star", false,
                           "nonzero b in e'Ae' with eAe'*b = 0 = b*e'Ae: b = " + format_element(A, k22.basis().front()));
    return Verdict::of("star", true);
}

/// Only f = 0 among (A11, A22)-bimodule maps f on A12 with
/// e[A,A]e * f(A12) = 0 = f(A12) * e'[A,A]e'.
inline Verdict zero_morphism(const PeirceContext& ctx) {
    const Algebra& A = ctx.algebra();
    const Subspace& a12 = ctx.corner(Corner::a12);
    const auto& ms = a12.basis();
    const std::size_t k = ms.size();
    if (k == 0) return Verdict::of("zero_morphism", true, "A12 = 0");
    std::vector<Vector> c11, c22;
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            const Element c = A.commutator(A.basis(i), A.basis(j));
            c11.push_back(ctx.sandwich(true, c, true));
            c22.push_back(ctx.sandwich(false, c, false));
        }
    const Subspace s11 = Subspace::span(A.dim(), c11);
    const Subspace s22 = Subspace::span(A.dim(), c22);
    // unknown t * k + s is the coefficient of m_t in f(m_s)
    auto apply = [&](const Vector& F, const Element& v) {
        const auto coords = a12.coordinates(v);
        if (!coords) throw Error("Peirce corner product left A12");
        Element out = A.zero();
        for (std::size_t s = 0; s < k; ++s)
            for (std::size_t t = 0; t < k; ++t)
                if (sgn((*coords)[s]) != 0 && sgn(F[t * k + s]) != 0) axpy(out, (*coords)[s] * F[t * k + s], ms[t]);
        return out;
    };
    auto conditions = [&](const Vector& F) {
        std::vector<Vector> parts;
        for (std::size_t s = 0; s < k; ++s) {
            const Element fs = apply(F, ms[s]);
            for (const auto& a : ctx.corner_basis(Corner::a11))
                parts.push_back(apply(F, A.multiply(a, ms[s])) - A.multiply(a, fs));
            for (const auto& b : ctx.corner_basis(Corner::a22))
                parts.push_back(apply(F, A.multiply(ms[s], b)) - A.multiply(fs, b));
            for (const auto& c : s11.basis()) parts.push_back(A.multiply(c, fs));
            for (const auto& c : s22.basis()) parts.push_back(A.multiply(fs, c));
        }
        return concat(parts);
    };
    std::vector<Vector> cols;
    for (std::size_t u = 0; u < k * k; ++u) cols.push_back(conditions(unit_vector(k * k, u)));
    const Subspace sols = kernel_of_columns(k * k, cols);
    if (sols.is_zero()) return Verdict::of("zero_morphism", true);
    const Vector& F = sols.basis().front();
    std::ostringstream os;
    os << "nonzero bimodule morphism f on A12:";
    for (std::size_t s = 0; s < k; ++s)
        os << " f(" << format_element(A, ms[s]) << ") = " << format_element(A, apply(F, ms[s])) << ";";
    return Verdict::of("zero_morphism", false, os.str());
}

} // namespace detail

inline Verdict check_hypothesis(const Algebra& alg, const PeirceContext& ctx, Hypothesis which) {
    const Algebra& A = alg;
    require_same_size(alg.dim(), ctx.algebra().dim(), "context algebra dimension");
    switch (which) {
    case Hypothesis::star: return detail::star(ctx);
    case Hypothesis::triangular: {
        const auto& n = ctx.corner(Corner::a21);
        if (n.is_zero()) return Verdict::of("triangular", true);
        return Verdict::of("triangular", false, "e'Ae != 0, contains " + format_element(A, n.basis().front()));
    }
    case Hypothesis::ideal11:
    case Hypothesis::ideal22: {
        const Corner c = which == Hypothesis::ideal11 ? Corner::a11 : Corner::a22;
        const Subspace ideal = commutator_ideal(A, ctx.corner(c));
        const bool ok = subspace_equal(ideal, ctx.corner(c));
        return Verdict::of(to_string(which), ok,
                           ok ? "" : "commutator ideal has dim " + std::to_string(ideal.dim()) + " < corner dim " +
                                         std::to_string(ctx.corner(c).dim()));
    }
    case Hypothesis::zero_morphism: return detail::zero_morphism(ctx);
    case Hypothesis::orthogonality: {
        for (const auto& m : ctx.corner_basis(Corner::a12))
            for (const auto& n : ctx.corner_basis(Corner::a21)) {
                if (const auto p = A.multiply(m, n); !biderlab::is_zero(p))
                    return Verdict::of("orthogonality", false,
                                       "eAe'Ae != 0: (" + format_element(A, m) + ")*(" + format_element(A, n) +
                                           ") = " + format_element(A, p));
                if (const auto p = A.multiply(n, m); !biderlab::is_zero(p))
                    return Verdict::of("orthogonality", false,
                                       "e'AeAe' != 0: (" + format_element(A, n) + ")*(" + format_element(A, m) +
                                           ") = " + format_element(A, p));
            }
        return Verdict::of("orthogonality", true);
    }
    case Hypothesis::faithful: {
        const auto& ms = ctx.corner_basis(Corner::a12);
        const Subspace left = detail::annihilator(A, ctx.corner(Corner::a11), ms, {});
        if (!left.is_zero())
            return Verdict::of("faithful", false,
                               "eAe' not left-faithful: " + format_element(A, left.basis().front()) + " * eAe' = 0");
        const Subspace right = detail::annihilator(A, ctx.corner(Corner::a22), {}, ms);
        if (!right.is_zero())
            return Verdict::of("faithful", false,
                               "eAe' not right-faithful: eAe' * " + format_element(A, right.basis().front()) + " = 0");
        return Verdict::of("faithful", true);
    }
    }
    return Verdict::of("unknown", false);
}

} // namespace biderlab
