#pragma once
// JSON file formats for algebras, polynomials and bilinear maps. Rationals
// are always strings ("p" or "p/q"); plain JSON integers are accepted on
// input, floats are not.

#include <biderlab/algebra.hpp>
#include <biderlab/bilinear.hpp>
#include <biderlab/polynomial.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace biderlab {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string idx(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

inline const Json& field(const Json& j, const char* key, const std::string& where = {}) {
    if (!j.is_object()) throw ParseError((where.empty() ? std::string("document") : where) + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError("missing field \"" + (where.empty() ? "" : where + ".") + key + "\"");
    return *it;
}

inline const Json& array_of(const Json& j, std::size_t n, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    if (j.size() != n) throw ParseError(where + ": expected " + std::to_string(n) + " entries");
    return j;
}

inline Rational rational_at(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.dump());
    if (!j.is_string()) throw ParseError(where + ": expected a rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

inline Vector vector_at(const Json& j, std::size_t n, const std::string& where) {
    array_of(j, n, where);
    Vector v;
    for (std::size_t k = 0; k < n; ++k) v.push_back(rational_at(j[k], idx(where, k)));
    return v;
}

inline std::size_t count_at(const Json& j, const std::string& where) {
    if (!j.is_number_unsigned()) throw ParseError(where + ": expected a nonnegative integer");
    return j.get<std::size_t>();
}

} // namespace detail

inline Json to_json(const Vector& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

/// Builds the algebra without checking the algebra axioms.
inline Algebra parse_algebra_unchecked(const Json& j) {
    const Json& name = detail::field(j, "name");
    if (!name.is_string()) throw ParseError("name: expected a string");
    const std::size_t d = detail::count_at(detail::field(j, "dim"), "dim");
    if (d == 0) throw ParseError("dim: must be positive");
    const Json& basis = detail::array_of(detail::field(j, "basis"), d, "basis");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d; ++i) {
        if (!basis[i].is_string()) throw ParseError(detail::idx("basis", i) + ": expected a string");
        names.push_back(basis[i].get<std::string>());
    }
    const Vector unity = detail::vector_at(detail::field(j, "unity"), d, "unity");
    const Json& table = detail::array_of(detail::field(j, "table"), d, "table");
    std::vector<Rational> flat;
    flat.reserve(d * d * d);
    for (std::size_t a = 0; a < d; ++a) {
        const std::string row = detail::idx("table", a);
        detail::array_of(table[a], d, row);
        for (std::size_t b = 0; b < d; ++b)
            for (auto& q : detail::vector_at(table[a][b], d, detail::idx(row, b))) flat.push_back(std::move(q));
    }
    return Algebra(name.get<std::string>(), std::move(names), std::move(flat), unity);
}

inline Algebra parse_algebra(const Json& j) {
    Algebra alg = parse_algebra_unchecked(j);
    if (const auto v = validate_algebra(alg); !v.passed()) throw InvalidAlgebra(v.detail);
    return alg;
}

inline Json algebra_to_json(const Algebra& alg) {
    const std::size_t d = alg.dim();
    Json table = Json::array();
    for (std::size_t i = 0; i < d; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < d; ++k) row.push_back(to_json(alg.multiply(alg.basis(i), alg.basis(k))));
        table.push_back(std::move(row));
    }
    Json j;
    j["name"] = alg.name();
    j["dim"] = d;
    j["basis"] = alg.basis_names();
    j["unity"] = to_json(alg.unity());
    j["table"] = std::move(table);
    return j;
}

inline MultilinearPolynomial parse_polynomial(const Json& j) {
    const std::size_t n = detail::count_at(detail::field(j, "n"), "n");
    const Json& terms = detail::field(j, "terms");
    if (!terms.is_array()) throw ParseError("terms: expected an array");
    std::map<Permutation, Rational> out;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string where = detail::idx("terms", t);
        const Json& perm = detail::array_of(detail::field(terms[t], "perm", where), n, where + ".perm");
        Permutation p;
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t v = detail::count_at(perm[k], detail::idx(where + ".perm", k));
            if (v < 1 || v > n) throw ParseError(detail::idx(where + ".perm", k) + ": out of range 1.." + std::to_string(n));
            p.push_back(v - 1);
        }
        const Rational c = detail::rational_at(detail::field(terms[t], "coeff", where), where + ".coeff");
        if (out.count(p)) throw ParseError(where + ": repeated permutation");
        out.emplace(std::move(p), c);
    }
    try {
        return MultilinearPolynomial(n, std::move(out));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

inline Json polynomial_to_json(const MultilinearPolynomial& f) {
    Json terms = Json::array();
    for (const auto& [perm, coeff] : f.terms()) {
        Json p = Json::array();
        for (auto v : perm) p.push_back(v + 1);
        terms.push_back(Json{{"perm", std::move(p)}, {"coeff", to_string(coeff)}});
    }
    return Json{{"n", f.arity()}, {"terms", std::move(terms)}};
}

inline BilinearMap parse_map(const Json& j, std::size_t dim, std::size_t mdim) {
    const Json& values = detail::array_of(detail::field(j, "values"), dim, "values");
    BilinearMap b(dim, mdim);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::string row = detail::idx("values", i);
        detail::array_of(values[i], dim, row);
        for (std::size_t k = 0; k < dim; ++k) b.at(i, k) = detail::vector_at(values[i][k], mdim, detail::idx(row, k));
    }
    return b;
}

inline Json map_to_json(const BilinearMap& b) {
    Json values = Json::array();
    for (std::size_t i = 0; i < b.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < b.dim(); ++k) row.push_back(to_json(b.at(i, k)));
        values.push_back(std::move(row));
    }
    return Json{{"values", std::move(values)}};
}

inline Json linear_map_to_json(const LinearMap& m) {
    Json values = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) values.push_back(to_json(m.at(i)));
    return Json{{"values", std::move(values)}};
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(origin + ": malformed JSON (" + e.what() + ")");
    }
}

inline Algebra load_algebra(const std::string& path) { return parse_algebra(parse_json_text(read_file(path), path)); }

inline MultilinearPolynomial load_polynomial(const std::string& path) {
    return parse_polynomial(parse_json_text(read_file(path), path));
}

/// Elements and idempotents on the command line: comma-separated rationals.
inline Element parse_coordinates(const std::string& text, std::size_t dim) {
    Element x;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) x.push_back(parse_rational(item));
    if (x.size() != dim)
        throw ParseError("expected " + std::to_string(dim) + " coordinates, got " + std::to_string(x.size()));
    return x;
}

} // namespace biderlab
