#pragma once
// Machine-readable reports. Keys appear in insertion order; every command
// inserts its sections in a fixed order, so identical inputs give
// byte-identical output.

#include <biderlab/decomposition.hpp>
#include <biderlab/io.hpp>
#include <biderlab/verdict.hpp>

#include <string>
#include <utility>
#include <vector>

namespace biderlab {

inline constexpr const char* tool_version = "0.1.0";

inline Json verdict_to_json(const Verdict& v) {
    return Json{{"name", v.name}, {"status", to_string(v.status)}, {"detail", v.detail}};
}

inline Json verdicts_to_json(const std::vector<Verdict>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(verdict_to_json(v));
    return a;
}

inline Json residual_to_json(const ResidualReport& r) {
    Json blocks = Json::array();
    for (const auto& b : r.blocks) {
        Json j{{"block", b.label()}, {"zero", b.residual_zero}};
        if (b.matches_claimed_form) j["matches_claimed_form"] = *b.matches_claimed_form;
        if (b.excess_is_bracket) j["excess_is_bracket_term"] = *b.excess_is_bracket;
        j["discrepancies"] = b.discrepancies;
        blocks.push_back(std::move(j));
    }
    return Json{{"zero", r.zero()}, {"claimed_form", r.claimed_form()}, {"blocks", std::move(blocks)}};
}

inline Json decomposition_to_json(const Algebra& alg, const DecompositionResult& r, bool with_maps) {
    Json j;
    j["mode"] = to_string(r.mode);
    j["j1"] = Json{{"kind", r.j1_witness.label()}};
    if (r.j1_witness.kind == ExtremalWitness::Kind::extremal) {
        j["j1"]["a"] = to_json(r.j1_witness.a);
        j["j1"]["a_text"] = format_element(alg, r.j1_witness.a);
    }
    j["zero_components"] = Json{{"j1", r.j1.is_zero()},
                                {"j2", r.j2.is_zero()},
                                {"delta", r.delta.is_zero()},
                                {"d_part", r.d_part.is_zero()},
                                {"residual", r.residual.zero()}};
    j["other_mode_delta_antibiderivation"] = r.other_mode_delta_antibiderivation;
    j["residual"] = residual_to_json(r.residual);
    j["hypotheses"] = verdicts_to_json(r.hypotheses);
    j["verdicts"] = verdicts_to_json(r.verdicts);
    if (with_maps)
        j["maps"] = Json{{"j1", map_to_json(r.j1)["values"]},
                         {"j2", map_to_json(r.j2)["values"]},
                         {"delta", map_to_json(r.delta)["values"]},
                         {"d_part", map_to_json(r.d_part)["values"]},
                         {"residual", map_to_json(r.residual.residual)["values"]}};
    return j;
}

class Report {
public:
    explicit Report(std::string command) {
        root_["tool"] = "biderlab";
        root_["version"] = tool_version;
        root_["command"] = std::move(command);
    }

    Json& operator[](const char* key) { return root_[key]; }

    void add(Verdict v, const std::string& prefix = {}) {
        if (!prefix.empty()) v.name = prefix + ":" + v.name;
        verdicts_.push_back(std::move(v));
    }

    void add(const std::vector<Verdict>& vs, const std::string& prefix = {}) {
        for (const auto& v : vs) add(v, prefix);
    }

    const std::vector<Verdict>& verdicts() const { return verdicts_; }

    bool ok() const { return all_acceptable(verdicts_); }

    /// The report with "verdicts" and "summary" appended; `timings` goes last
    /// when present.
    Json finish(const Json& timings = nullptr) const {
        Json out = root_;
        out["verdicts"] = verdicts_to_json(verdicts_);
        std::size_t pass = 0, fail = 0, na = 0;
        for (const auto& v : verdicts_) (v.status == Status::pass ? pass : v.status == Status::fail ? fail : na)++;
        out["summary"] = Json{{"status", fail ? "fail" : "pass"}, {"pass", pass}, {"fail", fail}, {"not_applicable", na}};
        if (!timings.is_null()) out["timings"] = timings;
        return out;
    }

private:
    Json root_;
    std::vector<Verdict> verdicts_;
};

} // namespace biderlab
