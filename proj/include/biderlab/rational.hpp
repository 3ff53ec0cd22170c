#pragma once
// Exact rationals over GMP, plus the string form used by every file format:
// "p" for integers, "p/q" reduced with q > 0.

#include <gmpxx.h>

#include <cctype>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace biderlab {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

inline std::string to_string(const Rational& q) {
    Rational c = q;  // Rational(p, q) from the two-argument constructor is not reduced
    c.canonicalize();
    return c.get_str(10);
}

/// Parses "p" or "p/q" (optional leading '-', decimal digits only).
inline Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
        throw ParseError("malformed rational \"" + std::string(text) + "\"");
    if (slash != std::string_view::npos && den.find_first_not_of('0') == std::string_view::npos)
        throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    std::string s(text.front() == '+' ? text.substr(1) : text);
    Rational q(s, 10);
    q.canonicalize();
    return q;
}

inline Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v = zero_vector(n);
    v.at(i) = 1;
    return v;
}

inline bool is_zero(std::span<const Rational> v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

inline void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

inline Vector operator+(const Vector& a, const Vector& b) {
    require_same_size(a.size(), b.size(), "vector sum");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vector operator-(const Vector& a, const Vector& b) {
    require_same_size(a.size(), b.size(), "vector difference");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vector operator*(const Rational& s, const Vector& a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline Vector& operator+=(Vector& a, const Vector& b) {
    require_same_size(a.size(), b.size(), "vector sum");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vector& operator-=(Vector& a, const Vector& b) {
    require_same_size(a.size(), b.size(), "vector difference");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

/// a += s * b
inline void axpy(Vector& a, const Rational& s, const Vector& b) {
    require_same_size(a.size(), b.size(), "axpy");
    if (sgn(s) == 0) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(b[i]) != 0) a[i] += s * b[i];
}

inline std::vector<std::string> to_strings(std::span<const Rational> v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

} // namespace biderlab
