#pragma once
// Named algebras: "t<n>", "m<n>", "block:<s1>,<s2>,...", "one_dim".

#include <biderlab/algebra.hpp>

#include <string>
#include <vector>

namespace biderlab {

namespace detail {

inline std::size_t preset_size(const std::string& s, const std::string& whole) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 3)
        throw ParseError("unknown preset \"" + whole + "\"");
    return std::stoul(s);
}

} // namespace detail

inline Algebra preset_algebra(const std::string& name) {
    if (name == "one_dim") return one_dim();
    if (name.rfind("block:", 0) == 0) {
        std::vector<std::size_t> sizes;
        std::string rest = name.substr(6);
        for (std::size_t pos = 0;;) {
            const auto comma = rest.find(',', pos);
            sizes.push_back(detail::preset_size(rest.substr(pos, comma - pos), name));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return block_upper_triangular(sizes);
    }
    if (name.size() > 1 && name[0] == 't') return upper_triangular(detail::preset_size(name.substr(1), name));
    if (name.size() > 1 && name[0] == 'm') return matrix_algebra(detail::preset_size(name.substr(1), name));
    throw ParseError("unknown preset \"" + name + "\"");
}

} // namespace biderlab
