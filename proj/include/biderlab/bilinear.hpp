#pragma once
// Linear and bilinear maps A -> M and A x A -> M into a bimodule, the
// predicates defining each map kind, and the exact linear systems whose
// nullspaces are the spaces of such maps.
//
// Every identity is written once (IdentityInstance) and evaluated either on a
// concrete map (checks) or on a map of unknowns (constraint assembly), so the
// checker and the solver cannot drift apart.

#include <biderlab/algebra.hpp>
#include <biderlab/linalg.hpp>
#include <biderlab/polynomial.hpp>
#include <biderlab/verdict.hpp>

#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace biderlab {

class LinearMap {
public:
    LinearMap(std::size_t dim, std::size_t mdim) : dim_(dim), mdim_(mdim), values_(dim, zero_vector(mdim)) {}
    LinearMap(std::size_t mdim, std::vector<Vector> values) : dim_(values.size()), mdim_(mdim), values_(std::move(values)) {
        for (const auto& v : values_) require_same_size(v.size(), mdim_, "linear map value length");
    }

    std::size_t dim() const { return dim_; }
    std::size_t mdim() const { return mdim_; }
    const Vector& at(std::size_t i) const { return values_.at(i); }
    Vector& at(std::size_t i) { return values_.at(i); }

    Vector operator()(const Element& x) const {
        require_same_size(x.size(), dim_, "linear map argument");
        Vector out = zero_vector(mdim_);
        for (std::size_t i = 0; i < dim_; ++i)
            if (sgn(x[i]) != 0) axpy(out, x[i], values_[i]);
        return out;
    }

private:
    std::size_t dim_, mdim_;
    std::vector<Vector> values_;
};

/// values(i, j) is the image of (u_i, u_j).
class BilinearMap {
public:
    BilinearMap() = default;
    BilinearMap(std::size_t dim, std::size_t mdim) : dim_(dim), mdim_(mdim), values_(dim * dim, zero_vector(mdim)) {}

    template <class F>
    static BilinearMap tabulate(std::size_t dim, std::size_t mdim, F&& f) {
        BilinearMap b(dim, mdim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                b.at(i, j) = f(i, j);
                require_same_size(b.at(i, j).size(), mdim, "bilinear map value length");
            }
        return b;
    }

    std::size_t dim() const { return dim_; }
    std::size_t mdim() const { return mdim_; }
    const Vector& at(std::size_t i, std::size_t j) const { return values_.at(i * dim_ + j); }
    Vector& at(std::size_t i, std::size_t j) { return values_.at(i * dim_ + j); }

    bool is_zero() const {
        for (const auto& v : values_)
            if (!biderlab::is_zero(v)) return false;
        return true;
    }

    /// Row-major over (i, j, component).
    Vector vectorize() const {
        Vector out;
        out.reserve(values_.size() * mdim_);
        for (const auto& v : values_) out.insert(out.end(), v.begin(), v.end());
        return out;
    }

    static BilinearMap devectorize(std::size_t dim, std::size_t mdim, const Vector& flat) {
        require_same_size(flat.size(), dim * dim * mdim, "vectorized bilinear map length");
        BilinearMap b(dim, mdim);
        for (std::size_t k = 0; k < dim * dim; ++k)
            std::copy(flat.begin() + static_cast<std::ptrdiff_t>(k * mdim),
                      flat.begin() + static_cast<std::ptrdiff_t>((k + 1) * mdim), b.values_[k].begin());
        return b;
    }

    BilinearMap& operator+=(const BilinearMap& o) {
        check_compatible(o);
        for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
        return *this;
    }
    BilinearMap& operator-=(const BilinearMap& o) {
        check_compatible(o);
        for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
        return *this;
    }
    friend BilinearMap operator+(BilinearMap a, const BilinearMap& b) { return a += b; }
    friend BilinearMap operator-(BilinearMap a, const BilinearMap& b) { return a -= b; }
    friend BilinearMap operator*(const Rational& s, BilinearMap a) {
        for (auto& v : a.values_) v = s * v;
        return a;
    }
    friend bool operator==(const BilinearMap& a, const BilinearMap& b) {
        return a.dim_ == b.dim_ && a.mdim_ == b.mdim_ && a.values_ == b.values_;
    }

private:
    void check_compatible(const BilinearMap& o) const {
        require_same_size(dim_, o.dim_, "bilinear map domain");
        require_same_size(mdim_, o.mdim_, "bilinear map target");
    }

    std::size_t dim_ = 0, mdim_ = 0;
    std::vector<Vector> values_;
};

/// sum_ij x_i y_j B(u_i, u_j)
inline Vector eval_bilinear(const BilinearMap& b, const Element& x, const Element& y) {
    require_same_size(x.size(), b.dim(), "first argument");
    require_same_size(y.size(), b.dim(), "second argument");
    Vector out = zero_vector(b.mdim());
    for (std::size_t i = 0; i < b.dim(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < b.dim(); ++j)
            if (sgn(y[j]) != 0) axpy(out, x[i] * y[j], b.at(i, j));
    }
    return out;
}

inline BilinearMap commutator_map(const Algebra& alg) {
    return BilinearMap::tabulate(alg.dim(), alg.dim(), [&](auto i, auto j) { return alg.commutator(alg.basis(i), alg.basis(j)); });
}

inline BilinearMap product_map(const Algebra& alg) {
    return BilinearMap::tabulate(alg.dim(), alg.dim(), [&](auto i, auto j) { return alg.multiply(alg.basis(i), alg.basis(j)); });
}

/// (x, y) -> [x, [y, a]]
inline BilinearMap extremal_map(const Algebra& alg, const Element& a) {
    return BilinearMap::tabulate(alg.dim(), alg.dim(), [&](auto i, auto j) {
        return alg.commutator(alg.basis(i), alg.commutator(alg.basis(j), a));
    });
}

// ---------------------------------------------------------------------------
// Map kinds

enum class MapKind { biderivation, antibiderivation, jordan_biderivation, f_biderivation, f_derivation };

struct KindSpec {
    MapKind kind = MapKind::biderivation;
    std::optional<MultilinearPolynomial> poly; ///< required for the f-kinds

    static KindSpec of(MapKind k) { return {k, std::nullopt}; }
    static KindSpec f_bider(MultilinearPolynomial f) { return {MapKind::f_biderivation, std::move(f)}; }
    static KindSpec f_der(MultilinearPolynomial f) { return {MapKind::f_derivation, std::move(f)}; }

    bool bilinear() const { return kind != MapKind::f_derivation; }

    /// Arity of the defining polynomial identity.
    std::size_t arity() const { return poly ? poly->arity() : 2; }

    std::string name() const {
        switch (kind) {
        case MapKind::biderivation: return "biderivation";
        case MapKind::antibiderivation: return "antibiderivation";
        case MapKind::jordan_biderivation: return "jordan_biderivation";
        case MapKind::f_biderivation: return "f_biderivation";
        case MapKind::f_derivation: return "f_derivation";
        }
        return "?";
    }
};

struct SolveLimits {
    std::size_t max_rows = 200000;
    std::size_t max_arity = default_max_arity;

    /// Reads BIDERLAB_MAX_ROWS when set.
    static SolveLimits from_env() {
        SolveLimits l;
        if (const char* s = std::getenv("BIDERLAB_MAX_ROWS"); s && *s) l.max_rows = std::stoull(s);
        return l;
    }
};

class LimitExceeded : public Error {
public:
    using Error::Error;
};

namespace detail {

/// Sparse matrix as rows of (col, value).
using SparseMatrix = std::vector<SparseRow>;

/// One instance of a defining identity at a basis tuple:
///   G(lhs) = sum_terms coeff * prefix . G(u_{args[slot]}) . suffix
/// where G is the map in its varying slot. An empty prefix/suffix means no
/// multiplication on that side.
struct IdentityTerm {
    std::size_t slot;
    Rational coeff;
    Element prefix;
    Element suffix;
};

struct IdentityInstance {
    Element lhs;
    std::vector<IdentityTerm> terms;
};

inline IdentityInstance instantiate(const Algebra& alg, const KindSpec& kind, const std::vector<std::size_t>& args) {
    IdentityInstance inst;
    std::vector<Element> xs;
    for (auto a : args) xs.push_back(alg.basis(a));
    if (kind.kind == MapKind::antibiderivation) {
        // G(x1 x2) = G(x2) x1 + x2 G(x1)
        inst.lhs = alg.multiply(xs[0], xs[1]);
        inst.terms.push_back({1, Rational(1), {}, xs[0]});
        inst.terms.push_back({0, Rational(1), xs[1], {}});
        return inst;
    }
    const MultilinearPolynomial f = kind.poly                                   ? *kind.poly
                                    : kind.kind == MapKind::jordan_biderivation ? build_named_poly("jordan")
                                                                                : build_named_poly("product");
    inst.lhs = evaluate_poly(f, alg, xs);
    const std::size_t n = f.arity();
    for (const auto& [perm, coeff] : f.terms()) {
        // prefix[k] = product of the first k letters, suffix[k] = product from k on
        std::vector<Element> prefix(n + 1), suffix(n + 1);
        for (std::size_t k = 1; k <= n; ++k)
            prefix[k] = k == 1 ? xs[perm[0]] : alg.multiply(prefix[k - 1], xs[perm[k - 1]]);
        for (std::size_t k = n; k-- > 0;)
            suffix[k] = k == n - 1 ? xs[perm[k]] : alg.multiply(xs[perm[k]], suffix[k + 1]);
        for (std::size_t pos = 0; pos < n; ++pos) {
            IdentityTerm t{perm[pos], coeff, prefix[pos], suffix[pos + 1]};
            if ((!t.prefix.empty() && biderlab::is_zero(t.prefix)) || (!t.suffix.empty() && biderlab::is_zero(t.suffix)))
                continue;
            inst.terms.push_back(std::move(t));
        }
    }
    return inst;
}

/// Precomputed sparse action matrices of the basis on the bimodule.
class ActionTables {
public:
    ActionTables(const Algebra& alg, const Bimodule& m) : mdim_(m.mdim) {
        require_same_size(m.left.size(), alg.dim(), "bimodule left actions");
        require_same_size(m.right.size(), alg.dim(), "bimodule right actions");
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            left_.push_back(sparse(m.left[i]));
            right_.push_back(sparse(m.right[i]));
        }
    }

    std::size_t mdim() const { return mdim_; }
    SparseMatrix left(const Element& x) const { return combine(left_, x); }
    SparseMatrix right(const Element& x) const { return combine(right_, x); }

private:
    static SparseMatrix sparse(const MatrixQ& m) {
        SparseMatrix s;
        for (std::size_t r = 0; r < m.rows(); ++r) s.push_back(to_sparse(m.row(r)));
        return s;
    }

    SparseMatrix combine(const std::vector<SparseMatrix>& mats, const Element& x) const {
        std::optional<std::size_t> single;
        std::size_t nnz = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (sgn(x[i]) != 0) {
                single = i;
                ++nnz;
            }
        if (nnz == 1 && x[*single] == 1) return mats[*single];
        std::vector<Vector> dense(mdim_, zero_vector(mdim_));
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (sgn(x[i]) == 0) continue;
            for (std::size_t r = 0; r < mdim_; ++r)
                for (const auto& e : mats[i][r]) dense[r][e.col] += x[i] * e.value;
        }
        SparseMatrix out;
        for (const auto& row : dense) out.push_back(to_sparse(row));
        return out;
    }

    std::size_t mdim_;
    std::vector<SparseMatrix> left_, right_;
};

/// acc += s * b for sorted sparse rows.
inline void add_scaled(SparseRow& acc, const Rational& s, const SparseRow& b) {
    if (b.empty() || sgn(s) == 0) return;
    SparseRow out;
    out.reserve(acc.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < acc.size() || j < b.size()) {
        if (j == b.size() || (i < acc.size() && acc[i].col < b[j].col)) {
            out.push_back(std::move(acc[i++]));
        } else if (i == acc.size() || b[j].col < acc[i].col) {
            out.push_back({b[j].col, s * b[j].value});
            ++j;
        } else {
            Rational v = acc[i].value + s * b[j].value;
            if (sgn(v) != 0) out.push_back({acc[i].col, std::move(v)});
            ++i;
            ++j;
        }
    }
    acc = std::move(out);
}

/// Value arithmetic for concrete vectors and for vectors of linear forms.
struct ConcreteOps {
    using Value = Vector;
    static Value zero(std::size_t n) { return zero_vector(n); }
    static void add(Value& acc, const Rational& s, const Value& v) { axpy(acc, s, v); }
    static Value apply(const SparseMatrix& m, const Value& v) {
        Value out = zero_vector(m.size());
        for (std::size_t r = 0; r < m.size(); ++r)
            for (const auto& e : m[r])
                if (sgn(v[e.col]) != 0) out[r] += e.value * v[e.col];
        return out;
    }
};

struct SymbolicOps {
    using Value = std::vector<SparseRow>;
    static Value zero(std::size_t n) { return Value(n); }
    static void add(Value& acc, const Rational& s, const Value& v) {
        for (std::size_t c = 0; c < acc.size(); ++c) add_scaled(acc[c], s, v[c]);
    }
    static Value apply(const SparseMatrix& m, const Value& v) {
        Value out(m.size());
        for (std::size_t r = 0; r < m.size(); ++r)
            for (const auto& e : m[r]) add_scaled(out[r], e.value, v[e.col]);
        return out;
    }
};

/// G(lhs) - sum of the right-hand terms.
template <class Ops, class G>
typename Ops::Value residual(const IdentityInstance& inst, const std::vector<std::size_t>& args, const ActionTables& act,
                             std::size_t dim, G&& g) {
    auto out = g(inst.lhs);
    for (const auto& t : inst.terms) {
        auto v = g(unit_vector(dim, args[t.slot]));
        if (!t.suffix.empty()) v = Ops::apply(act.right(t.suffix), v);
        if (!t.prefix.empty()) v = Ops::apply(act.left(t.prefix), v);
        Ops::add(out, -t.coeff, v);
    }
    return out;
}

/// Calls visit(slot_label, args, z) for every basis tuple, lexicographically.
/// slot_label is 0/1 for the two slots of a bilinear identity and 0 for a
/// linear one (z unused). Stops when visit returns false.
template <class Visit>
bool for_each_tuple(std::size_t dim, const KindSpec& kind, Visit&& visit) {
    const std::size_t n = kind.arity();
    const std::size_t slots = kind.bilinear() ? 2 : 1;
    const std::size_t zs = kind.bilinear() ? dim : 1;
    std::vector<std::size_t> args(n, 0);
    for (std::size_t slot = 0; slot < slots; ++slot) {
        std::fill(args.begin(), args.end(), 0);
        for (;;) {
            for (std::size_t z = 0; z < zs; ++z)
                if (!visit(slot, args, z)) return false;
            std::size_t k = n;
            while (k > 0 && ++args[k - 1] == dim) args[--k] = 0;
            if (k == 0) break;
        }
    }
    return true;
}

inline std::size_t pow_size(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

inline std::string tuple_label(const Algebra& alg, const std::vector<std::size_t>& args) {
    std::string s;
    for (std::size_t k = 0; k < args.size(); ++k) s += (k ? ", " : "") + alg.basis_names()[args[k]];
    return s;
}

} // namespace detail

/// Scalar row count of the constraint system for `kind`.
inline std::size_t constraint_rows(std::size_t dim, std::size_t mdim, const KindSpec& kind) {
    const std::size_t n = kind.arity();
    return kind.bilinear() ? 2 * detail::pow_size(dim, n + 1) * mdim : detail::pow_size(dim, n) * mdim;
}

inline std::size_t unknown_count(std::size_t dim, std::size_t mdim, const KindSpec& kind) {
    return kind.bilinear() ? dim * dim * mdim : dim * mdim;
}

/// Bimodule vectors print with algebra basis names when M is the regular module.
inline std::string format_value(const Algebra& alg, const Vector& v) {
    if (v.size() == alg.dim()) return format_element(alg, v);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < v.size(); ++i) names.push_back("m" + std::to_string(i + 1));
    return format_element(names, v);
}

/// Exhaustive check of the defining identities on basis tuples.
inline Verdict check_bilinear(const Algebra& alg, const Bimodule& m, const BilinearMap& b, const KindSpec& kind) {
    if (!kind.bilinear()) throw Error("check_bilinear needs a bilinear map kind");
    if ((kind.kind == MapKind::f_biderivation) != kind.poly.has_value())
        throw Error("f_biderivation needs a polynomial (and only it takes one)");
    require_same_size(b.dim(), alg.dim(), "bilinear map domain");
    require_same_size(b.mdim(), m.mdim, "bilinear map target");
    const detail::ActionTables act(alg, m);
    std::string witness;
    detail::for_each_tuple(alg.dim(), kind, [&](std::size_t slot, const std::vector<std::size_t>& args, std::size_t z) {
        const auto inst = detail::instantiate(alg, kind, args);
        const Element uz = alg.basis(z);
        const Vector r = detail::residual<detail::ConcreteOps>(inst, args, act, alg.dim(), [&](const Element& x) {
            return slot == 0 ? eval_bilinear(b, x, uz) : eval_bilinear(b, uz, x);
        });
        if (biderlab::is_zero(r)) return true;
        std::ostringstream os;
        os << (slot == 0 ? "first" : "second") << " slot fails at (" << detail::tuple_label(alg, args)
           << "; z = " << alg.basis_names()[z] << "): residual " << format_value(alg, r);
        witness = os.str();
        return false;
    });
    return Verdict::of(kind.name(), witness.empty(), witness);
}

/// Exhaustive check of D(f(x...)) = sum_i f(.., D(x_i), ..) on basis tuples.
inline Verdict check_linear(const Algebra& alg, const Bimodule& m, const LinearMap& d, const MultilinearPolynomial& f) {
    require_same_size(d.dim(), alg.dim(), "linear map domain");
    require_same_size(d.mdim(), m.mdim, "linear map target");
    const KindSpec kind = KindSpec::f_der(f);
    const detail::ActionTables act(alg, m);
    std::string witness;
    detail::for_each_tuple(alg.dim(), kind, [&](std::size_t, const std::vector<std::size_t>& args, std::size_t) {
        const auto inst = detail::instantiate(alg, kind, args);
        const Vector r = detail::residual<detail::ConcreteOps>(inst, args, act, alg.dim(), [&](const Element& x) { return d(x); });
        if (biderlab::is_zero(r)) return true;
        witness = "fails at (" + detail::tuple_label(alg, args) + ")";
        return false;
    });
    return Verdict::of("f_derivation", witness.empty(), witness);
}

/// Solution space of a map-kind constraint system, vectorized row-major over
/// (i, j, component) for bilinear kinds and (i, component) for linear ones.
struct MapSpace {
    KindSpec kind;
    std::size_t dim = 0;
    std::size_t mdim = 0;
    Subspace space;
    std::size_t rows = 0; ///< scalar rows assembled

    std::size_t size() const { return space.dim(); }

    BilinearMap bilinear(std::size_t k) const { return BilinearMap::devectorize(dim, mdim, space.basis().at(k)); }

    LinearMap linear(std::size_t k) const {
        const Vector& flat = space.basis().at(k);
        std::vector<Vector> values;
        for (std::size_t i = 0; i < dim; ++i)
            values.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(i * mdim),
                                flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * mdim));
        return LinearMap(mdim, std::move(values));
    }

    std::vector<BilinearMap> bilinear_maps() const {
        std::vector<BilinearMap> out;
        for (std::size_t k = 0; k < size(); ++k) out.push_back(bilinear(k));
        return out;
    }
};

/// Assembles one scalar row per (basis tuple, target component) and returns
/// the canonical nullspace.
inline MapSpace solve_space(const Algebra& alg, const Bimodule& m, const KindSpec& kind,
                            const SolveLimits& limits = SolveLimits::from_env()) {
    if ((kind.kind == MapKind::f_biderivation || kind.kind == MapKind::f_derivation) != kind.poly.has_value())
        throw Error("polynomial must be given exactly for the f-kinds");
    if (kind.arity() > limits.max_arity)
        throw LimitExceeded("polynomial arity " + std::to_string(kind.arity()) + " exceeds cap " +
                            std::to_string(limits.max_arity));
    const std::size_t d = alg.dim(), md = m.mdim;
    const std::size_t rows = constraint_rows(d, md, kind);
    const std::size_t cols = unknown_count(d, md, kind);
    if (rows > limits.max_rows)
        throw LimitExceeded("constraint system would have " + std::to_string(rows) + " rows x " + std::to_string(cols) +
                            " columns, exceeding the limit of " + std::to_string(limits.max_rows) + " rows");
    const detail::ActionTables act(alg, m);
    RowReducer red(cols);
    detail::for_each_tuple(d, kind, [&](std::size_t slot, const std::vector<std::size_t>& args, std::size_t z) {
        const auto inst = detail::instantiate(alg, kind, args);
        // G(x) as linear forms over the unknowns
        auto g = [&](const Element& x) {
            detail::SymbolicOps::Value v(md);
            for (std::size_t i = 0; i < d; ++i) {
                if (sgn(x[i]) == 0) continue;
                for (std::size_t c = 0; c < md; ++c) {
                    const std::size_t idx = !kind.bilinear() ? i * md + c
                                            : slot == 0      ? (i * d + z) * md + c
                                                             : (z * d + i) * md + c;
                    detail::add_scaled(v[c], x[i], SparseRow{{idx, Rational(1)}});
                }
            }
            return v;
        };
        for (auto& row : detail::residual<detail::SymbolicOps>(inst, args, act, d, g)) red.add_row(row);
        return true;
    });
    return MapSpace{kind, d, md, kernel_basis(red), rows};
}

// ---------------------------------------------------------------------------
// Extremal biderivations

struct ExtremalWitness {
    enum class Kind { extremal, zero, not_extremal };
    Kind kind = Kind::not_extremal;
    Element a; ///< set when kind == extremal

    const char* label() const {
        switch (kind) {
        case Kind::extremal: return "extremal";
        case Kind::zero: return "zero";
        case Kind::not_extremal: return "not_extremal";
        }
        return "?";
    }
};

/// Solves [u_i, [u_j, a]] = B(u_i, u_j) together with [[A, A], a] = 0.
inline ExtremalWitness find_extremal_witness(const Algebra& alg, const BilinearMap& b) {
    require_same_size(b.dim(), alg.dim(), "bilinear map domain");
    require_same_size(b.mdim(), alg.dim(), "extremal maps take values in the algebra");
    if (b.is_zero()) return {ExtremalWitness::Kind::zero, {}};
    const std::size_t d = alg.dim();
    std::vector<MatrixQ> ad;
    for (std::size_t i = 0; i < d; ++i) ad.push_back(alg.ad_matrix(alg.basis(i)));
    RowReducer red(d + 1);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const MatrixQ m = ad[i] * ad[j];
            const MatrixQ c = alg.ad_matrix(alg.commutator(alg.basis(i), alg.basis(j)));
            for (std::size_t k = 0; k < d; ++k) {
                SparseRow row = to_sparse(m.row(k));
                if (sgn(b.at(i, j)[k]) != 0) row.push_back({d, b.at(i, j)[k]});
                red.add_row(row);
                red.add_row(to_sparse(c.row(k)));
            }
        }
    auto a = particular_solution(red);
    if (!a) return {ExtremalWitness::Kind::not_extremal, {}};
    // a nonzero map [x, [y, a]] forces a outside the center
    if (center(alg).contains(*a)) return {ExtremalWitness::Kind::not_extremal, {}};
    return {ExtremalWitness::Kind::extremal, std::move(*a)};
}

} // namespace biderlab
