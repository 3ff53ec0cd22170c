#include "cli.hpp"

#include <biderlab/biderlab.hpp>
#include <biderlab/io.hpp>
#include <biderlab/report.hpp>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <type_traits>

namespace biderlab::cli {
namespace {

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("sha256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

struct Input {
    Json record;
    std::string text;
};

Input read_input(const std::string& path) {
    Input in;
    in.text = read_file(path);
    in.record = Json{{"path", path}, {"sha256", sha256_hex(in.text)}};
    return in;
}

class Stopwatch {
public:
    explicit Stopwatch(bool on) : on_(on) {}

    template <class F>
    auto stage(const char* name, F&& f) {
        const auto t0 = std::chrono::steady_clock::now();
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            record(name, t0);
        } else {
            auto r = f();
            record(name, t0);
            return r;
        }
    }

    Json json() const { return on_ ? times_ : Json(nullptr); }

private:
    void record(const char* name, std::chrono::steady_clock::time_point t0) {
        if (!on_) return;
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        times_[name] = dt.count();
    }

    bool on_;
    Json times_ = Json::object();
};

MapKind parse_kind(const std::string& s) {
    if (s == "bider") return MapKind::biderivation;
    if (s == "antibider") return MapKind::antibiderivation;
    if (s == "jordan-bider") return MapKind::jordan_biderivation;
    if (s == "f-bider") return MapKind::f_biderivation;
    if (s == "f-der") return MapKind::f_derivation;
    throw ParseError("unknown kind \"" + s + "\"");
}

Json algebra_summary(const Algebra& alg) {
    const Subspace z = center(alg);
    Json center_basis = Json::array();
    for (const auto& v : z.basis()) center_basis.push_back(format_element(alg, v));
    return Json{{"name", alg.name()}, {"dim", alg.dim()}, {"basis", alg.basis_names()},
                {"center_dim", z.dim()}, {"center_basis", std::move(center_basis)}};
}

Json context_summary(const PeirceContext& ctx) {
    const Algebra& A = ctx.algebra();
    Json dims;
    for (Corner c : all_corners) dims[corner_letter(c)] = ctx.corner(c).dim();
    return Json{{"idempotent", to_json(ctx.e())}, {"idempotent_text", format_element(A, ctx.e())}, {"corner_dims", std::move(dims)}};
}

Json space_json(const MapSpace& s, bool with_basis) {
    Json j{{"kind", s.kind.name()}, {"dim", s.size()}, {"rows", s.rows}};
    if (with_basis) {
        Json basis = Json::array();
        for (std::size_t k = 0; k < s.size(); ++k)
            basis.push_back(s.kind.bilinear() ? map_to_json(s.bilinear(k))["values"] : linear_map_to_json(s.linear(k))["values"]);
        j["basis"] = std::move(basis);
    }
    return j;
}

std::string map_label(std::size_t k) { return "map[" + std::to_string(k) + "]"; }

struct Options {
    std::string algebra;
    std::string out_path;
    bool timings = false;
    std::string idempotent;
    std::string kind;
    std::string poly_file;
    std::string poly_name;
    std::string hypotheses = "all";
    std::string map_file;
    bool all_basis = false;
    bool emit_maps = false;
    std::string mode = "literal";
    std::string suite = "all";
    std::size_t samples = default_samples;
    std::uint64_t seed = default_seed;
    std::string preset;
};

class Runner {
public:
    Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err), clock_(o.timings) {}

    int run(const std::string& command) {
        if (command == "preset") return emit(algebra_to_json(preset_algebra(o_.preset)));
        Report report(command);
        report["inputs"] = Json::object();
        const Algebra alg = load(report, command == "validate");
        if (command == "validate") {
            auto v = validate_algebra(alg);
            v.name = "algebra_valid";
            report["algebra"] = Json{{"name", alg.name()}, {"dim", alg.dim()}};
            report.add(v);
        } else if (command == "info") {
            report["algebra"] = clock_.stage("center", [&] { return algebra_summary(alg); });
            if (!o_.idempotent.empty()) {
                const PeirceContext ctx(alg, parse_coordinates(o_.idempotent, alg.dim()));
                report["context"] = context_summary(ctx);
                report.add(check_corner_products(ctx));
            }
        } else if (command == "spaces") {
            spaces(report, alg);
        } else if (command == "check") {
            check(report, alg);
        } else if (command == "decompose") {
            decompose_cmd(report, alg);
        } else if (command == "verify") {
            verify(report, alg);
        }
        emit(report.finish(clock_.json()));
        return report.ok() ? exit_ok : exit_verdict_failure;
    }

private:
    Algebra load(Report& report, bool unchecked) {
        const std::string& path = o_.algebra;
        if (path.empty()) throw ParseError("no algebra given (positional argument or --algebra)");
        if (path.rfind("preset:", 0) == 0) {
            report["inputs"]["algebra"] = Json{{"preset", path.substr(7)}};
            return preset_algebra(path.substr(7));
        }
        const Input in = read_input(path);
        report["inputs"]["algebra"] = in.record;
        const Json j = parse_json_text(in.text, path);
        return unchecked ? parse_algebra_unchecked(j) : parse_algebra(j);
    }

    PeirceContext context(Report& report, const Algebra& alg) {
        if (o_.idempotent.empty()) throw ParseError("--idempotent is required");
        PeirceContext ctx(alg, parse_coordinates(o_.idempotent, alg.dim()));
        report["algebra"] = clock_.stage("center", [&] { return algebra_summary(alg); });
        report["context"] = context_summary(ctx);
        return ctx;
    }

    void spaces(Report& report, const Algebra& alg) {
        const MapKind k = parse_kind(o_.kind);
        std::optional<MultilinearPolynomial> f;
        if (!o_.poly_file.empty()) {
            const Input in = read_input(o_.poly_file);
            report["inputs"]["polynomial"] = in.record;
            f = parse_polynomial(parse_json_text(in.text, o_.poly_file));
        } else if (!o_.poly_name.empty()) {
            report["inputs"]["polynomial"] = Json{{"name", o_.poly_name}};
            f = build_named_poly(o_.poly_name);
        }
        const bool needs_poly = k == MapKind::f_biderivation || k == MapKind::f_derivation;
        if (needs_poly != f.has_value())
            throw ParseError(needs_poly ? "--kind " + o_.kind + " needs --poly or --poly-name"
                                        : "--poly only applies to f-bider and f-der");
        const KindSpec spec = !f ? KindSpec::of(k) : k == MapKind::f_biderivation ? KindSpec::f_bider(*f) : KindSpec::f_der(*f);
        report["algebra"] = Json{{"name", alg.name()}, {"dim", alg.dim()}};
        if (f) {
            const PolyStats st = poly_stats(*f);
            report["polynomial"] = Json{{"arity", f->arity()},
                                        {"alpha", to_string(st.alpha)},
                                        {"beta", to_string(st.beta)},
                                        {"gamma", to_string(st.gamma)}};
        }
        const Bimodule reg = regular_bimodule(alg);
        const MapSpace s = clock_.stage("solve", [&] { return solve_space(alg, reg, spec); });
        report["spaces"] = Json::array({space_json(s, true)});
        clock_.stage("soundness", [&] {
            for (std::size_t i = 0; i < s.size(); ++i) {
                Verdict v = spec.bilinear() ? check_bilinear(alg, reg, s.bilinear(i), spec)
                                            : check_linear(alg, reg, s.linear(i), *spec.poly);
                v.name = "soundness";
                report.add(v, map_label(i));
            }
        });
    }

    void check(Report& report, const Algebra& alg) {
        const PeirceContext ctx = context(report, alg);
        std::vector<Hypothesis> which;
        if (o_.hypotheses == "all") {
            which.assign(std::begin(all_hypotheses), std::end(all_hypotheses));
        } else {
            std::istringstream in(o_.hypotheses);
            for (std::string item; std::getline(in, item, ',');) which.push_back(parse_hypothesis(item));
        }
        Json hyps = Json::array();
        clock_.stage("hypotheses", [&] {
            for (Hypothesis h : which) {
                const Verdict v = check_hypothesis(alg, ctx, h);
                hyps.push_back(verdict_to_json(v));
                report.add(v);
            }
        });
        report["context"]["hypotheses"] = std::move(hyps);
    }

    std::vector<BilinearMap> jordan_basis(Report& report, const Algebra& alg) {
        const MapSpace s = clock_.stage("solve_jordan", [&] {
            return solve_space(alg, regular_bimodule(alg), KindSpec::of(MapKind::jordan_biderivation));
        });
        report["spaces"] = Json::array({space_json(s, false)});
        return s.bilinear_maps();
    }

    void decompose_cmd(Report& report, const Algebra& alg) {
        const PeirceContext ctx = context(report, alg);
        const DeltaMode mode = parse_delta_mode(o_.mode);
        report["mode"] = to_string(mode);
        std::vector<BilinearMap> maps;
        if (!o_.map_file.empty()) {
            const Input in = read_input(o_.map_file);
            report["inputs"]["map"] = in.record;
            maps.push_back(parse_map(parse_json_text(in.text, o_.map_file), alg.dim(), alg.dim()));
        } else {
            maps = jordan_basis(report, alg);
        }
        run_decompositions(report, ctx, maps, mode);
    }

    void run_decompositions(Report& report, const PeirceContext& ctx, const std::vector<BilinearMap>& maps, DeltaMode mode) {
        const auto hyps = clock_.stage("hypotheses", [&] { return decomposition_hypotheses(ctx); });
        report["context"]["hypotheses"] = verdicts_to_json(hyps);
        Json items = Json::array();
        clock_.stage("decompose", [&] {
            for (std::size_t k = 0; k < maps.size(); ++k) {
                const DecompositionResult r = decompose(maps[k], ctx, mode, hyps);
                items.push_back(decomposition_to_json(ctx.algebra(), r, o_.emit_maps));
                report.add(r.verdicts, map_label(k));
            }
        });
        report["decompositions"] = std::move(items);
    }

    void verify(Report& report, const Algebra& alg) {
        if (o_.suite != "identities" && o_.suite != "decomposition" && o_.suite != "all")
            throw ParseError("unknown suite \"" + o_.suite + "\"");
        const PeirceContext ctx = context(report, alg);
        const DeltaMode mode = parse_delta_mode(o_.mode);
        report["mode"] = to_string(mode);
        report["seed"] = o_.seed;
        report["samples"] = o_.samples;
        const auto maps = jordan_basis(report, alg);
        const Bimodule reg = regular_bimodule(alg);
        if (o_.suite != "decomposition") {
            Xorshift64Star rng(o_.seed);
            Json ids = Json::array();
            clock_.stage("identities", [&] {
                for (std::size_t k = 0; k < maps.size(); ++k) {
                    auto vs = identity_suite(alg, maps[k], rng, o_.samples);
                    const auto split = split_extremal(maps[k], ctx);
                    for (auto& v : verify_peirce_identities(split.j2, ctx)) vs.push_back(std::move(v));
                    ids.push_back(Json{{"map", k}, {"verdicts", verdicts_to_json(vs)}});
                    report.add(vs, map_label(k));
                }
            });
            report["identities"] = std::move(ids);
            Json fspaces = Json::array();
            clock_.stage("f_biderivations", [&] {
                const MapSpace jordan = solve_space(alg, reg, KindSpec::of(MapKind::jordan_biderivation));
                for (const std::string name : {"product", "jordan", "jordan_triple"}) {
                    const MapSpace s = solve_space(alg, reg, KindSpec::f_bider(build_named_poly(name)));
                    fspaces.push_back(space_json(s, false));
                    const std::string prefix = "f-bider:" + name;
                    report.add(Verdict::of("inside_jordan_space", subspace_contains(jordan.space, s.space)), prefix);
                    for (std::size_t k = 0; k < s.size(); ++k) report.add(check_unity_vanishing(alg, s.bilinear(k)), prefix + ":" + map_label(k));
                }
            });
            report["f_biderivation_spaces"] = std::move(fspaces);
        }
        if (o_.suite != "identities") {
            run_decompositions(report, ctx, maps, mode);
            Json cors = Json::array();
            clock_.stage("corollaries", [&] {
                for (Corollary c : {Corollary::ideal_condition, Corollary::orthogonal_faithful, Corollary::triangular}) {
                    const CorollaryResult r = corollary_check(alg, ctx, c, mode);
                    Json j{{"name", to_string(c)}, {"verdict", verdict_to_json(r.verdict)}, {"hypotheses", verdicts_to_json(r.hypotheses)}};
                    if (r.space_statement) j["space_statement"] = verdict_to_json(*r.space_statement);
                    cors.push_back(std::move(j));
                    report.add(r.verdict);
                    if (r.space_statement) report.add(*r.space_statement);
                }
            });
            report["corollaries"] = std::move(cors);
        }
    }

    int emit(const Json& j) {
        const std::string text = j.dump(2) + "\n";
        if (o_.out_path.empty()) {
            out_ << text;
            return exit_ok;
        }
        std::ofstream f(o_.out_path, std::ios::binary);
        if (!f || !(f << text)) throw Error(o_.out_path + ": cannot write report");
        if (j.contains("summary"))
            out_ << j["summary"]["status"].get<std::string>() << ": " << j["summary"]["pass"] << " pass, "
                 << j["summary"]["fail"] << " fail, " << j["summary"]["not_applicable"] << " not-applicable -> "
                 << o_.out_path << "\n";
        return exit_ok;
    }

    const Options& o_;
    std::ostream& out_;
    std::ostream& err_;
    Stopwatch clock_;
};

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact biderivation spaces and decompositions for finite-dimensional algebras", "biderlab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--out", o.out_path, "write the report to this file");
    app.add_flag("--timings", o.timings, "add wall-clock seconds per stage");

    auto with_algebra = [&](CLI::App* sub) {
        sub->add_option("algebra,--algebra", o.algebra, "algebra JSON file or preset:<name>");
        return sub;
    };
    auto with_idempotent = [&](CLI::App* sub) {
        sub->add_option("--idempotent", o.idempotent, "comma-separated coordinates of e")->required();
        return sub;
    };
    with_algebra(app.add_subcommand("validate", "check the algebra axioms"));
    with_algebra(app.add_subcommand("info", "dimension, basis and center"))->add_option("--idempotent", o.idempotent);
    auto* spaces = with_algebra(app.add_subcommand("spaces", "solve for a space of maps"));
    spaces->add_option("--kind", o.kind, "bider|antibider|jordan-bider|f-bider|f-der")->required();
    spaces->add_option("--poly", o.poly_file, "polynomial JSON file");
    spaces->add_option("--poly-name", o.poly_name, "product|jordan|lie|jordan_triple|lie_triple");
    auto* check = with_idempotent(with_algebra(app.add_subcommand("check", "Peirce hypotheses")));
    check->add_option("--hypotheses", o.hypotheses, "comma-separated list or all");
    auto* dec = with_idempotent(with_algebra(app.add_subcommand("decompose", "decompose Jordan biderivations")));
    auto* map_opt = dec->add_option("--map", o.map_file, "bilinear map JSON file");
    dec->add_flag("--all-basis", o.all_basis, "every basis map of the Jordan space (default)")->excludes(map_opt);
    dec->add_option("--mode", o.mode, "literal|adjusted");
    dec->add_flag("--emit-maps", o.emit_maps, "include component maps in the report");
    auto* ver = with_idempotent(with_algebra(app.add_subcommand("verify", "identity and decomposition suites")));
    ver->add_option("--suite", o.suite, "identities|decomposition|all");
    ver->add_option("--samples", o.samples, "random samples per sampled identity");
    ver->add_option("--seed", o.seed, "64-bit seed");
    ver->add_option("--mode", o.mode, "literal|adjusted");
    app.add_subcommand("preset", "print a built-in algebra as JSON")
        ->add_option("name", o.preset, "t<n>, m<n>, block:<s1>,<s2>,..., one_dim")
        ->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return Runner(o, out, err).run(command);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace biderlab::cli
