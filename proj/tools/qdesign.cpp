// qdesign command-line front end. Reports go to stdout (or --out); progress and timing
// go to stderr so that reports are byte-identical across runs.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "qdesign/qdesign.hpp"

namespace {

using namespace qdesign;

constexpr const char* kSchema = "qdesign-report/1";

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kCapacity = 3, kInternal = 4 };

// Rows for --format csv; the first row is the header.
using Table = std::vector<std::vector<std::string>>;

struct Output {
    Json result;
    Table table;
    int exit = kOk;
    std::string text;  // raw text output (generator / block files); bypasses the envelope
    bool is_text = false;
};

struct Globals {
    unsigned threads = default_threads();
    std::string out;
    std::string format = "json";
    std::string manifest;
    bool quiet = false;
};

struct Source {
    std::string zoo, file;
    ZooParams params;

    bool given() const { return !zoo.empty() || !file.empty(); }

    LinearCode load() const {
        if (!zoo.empty() && !file.empty()) throw CLI::ValidationError("give either --zoo or --file, not both");
        if (!file.empty()) return read_generator_file(file);
        if (zoo.empty()) throw CLI::ValidationError("a code source (--zoo or --file) is required");
        const auto& e = zoo_entry(zoo);
        for (const auto& p : e.params) {
            const unsigned v = p == "q" ? params.q : p == "m" ? params.m : p == "k" ? params.k : params.n;
            if (v == 0) throw CLI::ValidationError("zoo code '" + zoo + "' needs --" + p);
        }
        return e.build(params);
    }

    unsigned zoo_transitivity() const { return zoo.empty() ? 0 : zoo_entry(zoo).transitivity; }
};

void add_source(CLI::App* sub, Source& s) {
    sub->add_option("--zoo", s.zoo, "zoo code id (see 'zoo list')");
    sub->add_option("--file", s.file, "generator matrix file ('q n k' then k rows)");
    sub->add_option("--q", s.params.q, "field order for zoo codes");
    sub->add_option("--m", s.params.m, "zoo parameter m");
    sub->add_option("--k", s.params.k, "zoo parameter k");
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) {
        if (c == '"') o += '"';
        o += c;
    }
    return o + "\"";
}

std::string cell(const Json& j) {
    if (j.is_null()) return "";
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw InternalError("SHA-256 failed");
    std::ostringstream o;
    for (unsigned i = 0; i < len; ++i) o << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return o.str();
}

// ---------------------------------------------------------------------------
// Commands

Output cmd_zoo_list() {
    Output o;
    o.result = Json::array();
    o.table = {{"id", "params", "transitivity", "summary"}};
    for (const auto& e : zoo_registry()) {
        Json j;
        j["id"] = e.id;
        j["params"] = e.params;
        j["summary"] = e.summary;
        j["transitivity"] = e.transitivity ? Json(e.transitivity) : Json(nullptr);
        if (e.transitivity) j["transitivity_basis"] = e.transitivity_basis;
        o.result.push_back(j);
        std::string ps;
        for (const auto& p : e.params) ps += (ps.empty() ? "" : " ") + p;
        o.table.push_back({e.id, ps, e.transitivity ? std::to_string(e.transitivity) : "", e.summary});
    }
    return o;
}

Output cmd_zoo_build(const Source& src) {
    Output o;
    std::ostringstream s;
    write_generator(s, src.load());
    o.text = s.str();
    o.is_text = true;
    return o;
}

Output cmd_profile(const Source& src, bool rho, const Globals& g) {
    auto code = src.load();
    auto p = code_profile(code, rho, g.threads);
    Output o;
    o.result["code"] = code.label();
    o.result["profile"] = to_json(p);
    o.result["warnings"] = code.warnings();
    if (!src.zoo.empty()) o.result["golden_mismatches"] = golden_mismatches(zoo_entry(src.zoo), src.params, code, p);
    o.table = {{"field", "value"}};
    for (auto& [k, v] : o.result["profile"].items()) o.table.push_back({k, cell(v)});
    if (o.result.contains("golden_mismatches") && !o.result["golden_mismatches"].empty()) o.exit = kCheckFailed;
    return o;
}

struct DesignArgs {
    Source src;
    std::string blocks;
    unsigned weight = 0, t = 0;
    bool max_strength = false;
    std::vector<std::string> fixed;  // a bare --fixed-coords yields one empty token
    CLI::Option* fixed_opt = nullptr;
    unsigned assert_transitive = 0;
    std::string mode = "distinct";
};

void design_rows(Table& tab, const DesignReport& r) {
    tab = {{"kind", "t", "verdict", "lambda", "implied_index", "witness_count"}};
    auto add = [&](const char* kind, const std::vector<DesignCheck>& rows) {
        for (const auto& c : rows)
            tab.push_back({kind, std::to_string(c.t), to_string(c.verdict), c.lambda ? std::to_string(*c.lambda) : "",
                           to_string(c.implied_index), c.witness_count ? std::to_string(*c.witness_count) : ""});
    };
    add("qary", r.qary);
    add("classical", r.classical);
}

Output cmd_design(const DesignArgs& a, const Globals& g) {
    BlockFamily fam;
    unsigned transitivity = a.assert_transitive;
    if (!a.blocks.empty()) {
        if (a.src.given()) throw CLI::ValidationError("give either a code source or --blocks");
        fam = read_family_file(a.blocks);
    } else {
        if (a.weight == 0) throw CLI::ValidationError("--weight is required with a code source");
        auto code = a.src.load();
        if (a.weight > code.n()) throw CLI::ValidationError("--weight exceeds the code length");
        fam = family_of_weight(code, a.weight, g.threads);
        transitivity = std::max(transitivity, a.src.zoo_transitivity());
    }
    const SupportMode mode = a.mode == "multiset" ? SupportMode::multiset : SupportMode::distinct;
    Output o;
    const bool fixed = a.fixed_opt && a.fixed_opt->count() > 0;
    if (fixed) {
        if (a.t == 0) throw CLI::ValidationError("--fixed-coords needs --t");
        std::vector<unsigned> coords;
        for (const auto& tok : a.fixed) {
            if (tok.empty()) continue;
            unsigned v = 0;
            if (!CLI::detail::lexical_cast(tok, v)) throw CLI::ValidationError("--fixed-coords: '" + tok + "' is not a coordinate");
            coords.push_back(v);
        }
        if (coords.empty())
            for (unsigned i = 0; i < a.t; ++i) coords.push_back(i);
        if (coords.size() != a.t) throw CLI::ValidationError("--fixed-coords must list exactly t coordinates");
        if (transitivity < a.t)
            throw CLI::ValidationError("--fixed-coords needs a transitivity >= t: pass --assert-transitive or use a zoo code with a transitivity flag");
        auto c = fixed_coordinate_lambda(fam, coords, transitivity);
        o.result["source"] = fam.source;
        o.result["q"] = fam.q();
        o.result["n"] = fam.n;
        o.result["w"] = fam.w;
        o.result["blocks"] = fam.size();
        o.result["asserted_transitivity"] = transitivity;
        o.result["fixed_coordinate"] = to_json(c);
        o.table = {{"t", "coords", "verdict", "lambda", "witness_count"},
                   {std::to_string(c.t), cell(Json(c.coords)), to_string(c.verdict), c.lambda ? std::to_string(*c.lambda) : "",
                    c.witness_count ? std::to_string(*c.witness_count) : ""}};
        if (c.verdict == Verdict::fails) o.exit = kCheckFailed;
        return o;
    }
    DesignReport r;
    if (a.max_strength) {
        r = strengths(fam, mode, g.threads);
    } else {
        if (a.t == 0 || a.t > fam.w) throw CLI::ValidationError("--t must satisfy 1 <= t <= w");
        r = design_report_at(fam, a.t, mode, g.threads);
        if (r.qary.front().verdict == Verdict::fails) o.exit = kCheckFailed;
    }
    o.result = to_json(r);
    design_rows(o.table, r);
    return o;
}

struct CriteriaArgs {
    Source src;
    bool confirm = true;
    std::size_t coordinate = 0;
    std::optional<unsigned> regular;
};

Output cmd_criteria(const CriteriaArgs& a, const Globals& g) {
    auto code = a.src.load();
    auto p = code_profile(code, true, g.threads);
    Output o;
    o.result["code"] = code.label();
    o.result["profile"] = to_json(p);
    o.result["criteria"] = Json::array();
    o.table = {{"criterion", "target", "n", "w", "t", "kind", "lambda", "status"}};
    for (const auto& rep : {standard_criterion(p), puncturing_shortening_predict(p), assmus_mattson(p)}) {
        Json j = to_json(rep);
        if (a.confirm && rep.applies) {
            j["confirmations"] = Json::array();
            for (const auto& c : confirm_predictions(code, rep, a.coordinate, g.threads)) {
                j["confirmations"].push_back(to_json(c));
                const auto& pr = c.prediction;
                const std::string status = !c.skipped.empty() ? "skipped" : c.confirmed ? "confirmed" : "refuted";
                if (status == "refuted") o.exit = kCheckFailed;
                o.table.push_back({rep.criterion, to_string(pr.target), std::to_string(pr.n), std::to_string(pr.w), std::to_string(pr.t),
                                   pr.classical ? "classical" : "qary", pr.lambda ? to_string(*pr.lambda) : "", status});
            }
        } else {
            for (const auto& pr : rep.predictions)
                o.table.push_back({rep.criterion, to_string(pr.target), std::to_string(pr.n), std::to_string(pr.w), std::to_string(pr.t),
                                   pr.classical ? "classical" : "qary", pr.lambda ? to_string(*pr.lambda) : "", "predicted"});
        }
        if (rep.applies && (rep.criterion == "puncturing-shortening")) j["coordinate"] = a.coordinate;
        o.result["criteria"].push_back(j);
    }
    auto characterize = [&](const char* key, auto&& fn) {
        try {
            auto r = fn();
            o.result[key] = to_json(r);
            if (r.holds && !r.confirmed) o.exit = kCheckFailed;
        } catch (const CapacityError& e) {
            o.result[key] = {{"skipped", e.what()}};
        }
    };
    characterize("mds", [&] { return mds_test(code, p, g.threads); });
    characterize("perfect", [&] { return perfect_test(code, p, g.threads); });
    if (a.regular) {
        try {
            o.result["regularity"] = to_json(t_regular(code, *a.regular));
        } catch (const CapacityError& e) {
            o.result["regularity"] = {{"skipped", e.what()}};
        }
    }
    return o;
}

struct BlockSetArgs {
    unsigned m = 5, k = 6, l = 3;
    std::string variant = "plain";
};

Output cmd_blocksets(const BlockSetArgs& a) {
    if (a.m < 1 || a.m > 7) throw CLI::ValidationError("--m must be in 1..7");
    QuadraticExtension ext(std::uint64_t{1} << a.m);
    auto sets = block_sets(ext, a.k, a.l, a.variant == "based" ? BlockSetVariant::based : BlockSetVariant::plain);
    auto fam = block_family_from_sets(sets, ext.q() + 1, a.k, "block-sets");
    Output o;
    std::ostringstream s;
    write_family(s, fam);
    o.text = s.str();
    o.is_text = true;
    return o;
}

struct ReproduceArgs {
    std::string suite;
    unsigned m = 5;
    bool no_enumerate = false;
};

Output cmd_reproduce(const ReproduceArgs& a, const Globals& g) {
    SuiteOptions opt;
    opt.threads = g.threads;
    opt.trace_m = a.m;
    opt.trace_enumerate = !a.no_enumerate;
    auto start = std::chrono::steady_clock::now();
    if (!g.quiet)
        opt.progress = [start](const std::string& s) {
            std::cerr << "[" << std::fixed << std::setprecision(1)
                      << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << "s] " << s << "\n";
        };
    std::vector<std::string> names = a.suite == "all" ? suite_names() : std::vector<std::string>{a.suite};
    Output o;
    o.result["suites"] = Json::array();
    o.table = {{"suite", "id", "status", "statement", "detail"}};
    bool ok = true;
    for (const auto& n : names) {
        auto r = run_suite(n, opt);
        ok = ok && r.passed();
        o.result["suites"].push_back(to_json(r));
        for (const auto& c : r.claims) {
            o.table.push_back({r.suite, c.id, to_string(c.status), c.statement, c.detail});
        }
        if (!g.quiet)
            std::cerr << r.suite << ": " << r.count(ClaimStatus::pass) << " passed, " << r.count(ClaimStatus::fail) << " failed, "
                      << r.count(ClaimStatus::skipped) << " skipped\n";
    }
    o.result["passed"] = ok;
    if (!ok) o.exit = kCheckFailed;
    return o;
}

// ---------------------------------------------------------------------------

void emit(const Output& o, const std::string& command, const std::vector<std::string>& args, const Globals& g, double seconds) {
    std::string body;
    if (o.is_text) {
        body = o.text;
    } else if (g.format == "csv") {
        std::ostringstream s;
        for (const auto& row : o.table) {
            for (std::size_t i = 0; i < row.size(); ++i) s << (i ? "," : "") << csv_field(row[i]);
            s << "\n";
        }
        body = s.str();
    } else {
        Json env;
        env["schema"] = kSchema;
        env["command"] = command;
        env["result"] = o.result;
        body = env.dump(2) + "\n";
    }
    if (g.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(g.out, std::ios::binary);
        if (!f) throw ParseError("cannot write '" + g.out + "'", 0);
        f << body;
    }
    if (!g.manifest.empty()) {
        Json m;
        m["schema"] = "qdesign-manifest/1";
        m["command"] = command;
        m["parameters"] = args;
        m["determinism"] = "no randomness; identical inputs give byte-identical reports";
        m["threads"] = g.threads;
        m["wall_time_seconds"] = seconds;
        m["results_sha256"] = sha256_hex(body);
        m["exit_code"] = o.exit;
        std::ofstream f(g.manifest, std::ios::binary);
        if (!f) throw ParseError("cannot write '" + g.manifest + "'", 0);
        f << m.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Build linear codes and verify the q-ary and classical t-designs they hold, by exact counting."};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--threads", g.threads, "worker threads (default: available parallelism)")->check(CLI::Range(1u, 1024u));
    app.add_option("--out", g.out, "write the report to this file instead of stdout");
    app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--manifest", g.manifest, "write a run manifest (parameters, wall time, report digest)");
    app.add_flag("--quiet", g.quiet, "no progress on stderr");

    auto* zoo = app.add_subcommand("zoo", "list or build the built-in codes");
    zoo->require_subcommand(1);
    auto* zoo_list = zoo->add_subcommand("list", "list the built-in codes");
    auto* zoo_build = zoo->add_subcommand("build", "write a generator matrix");
    Source build_src;
    zoo_build->add_option("id", build_src.zoo, "zoo code id")->required();
    zoo_build->add_option("--q", build_src.params.q, "field order");
    zoo_build->add_option("--m", build_src.params.m, "parameter m");
    zoo_build->add_option("--k", build_src.params.k, "parameter k");

    auto* profile = app.add_subcommand("profile", "fundamental parameters of a code");
    Source profile_src;
    bool no_rho = false;
    add_source(profile, profile_src);
    profile->add_flag("--no-rho", no_rho, "skip the covering-radius sweep");

    auto* design = app.add_subcommand("design", "check q-ary and classical t-designs on a block family");
    DesignArgs da;
    add_source(design, da.src);
    design->add_option("--blocks", da.blocks, "block family file ('q n w B' then B rows)");
    design->add_option("--weight", da.weight, "codeword weight w");
    auto* t_opt = design->add_option("--t", da.t, "design strength to check");
    auto* ms = design->add_flag("--max-strength", da.max_strength, "report (T_qary, T_classical)");
    t_opt->excludes(ms);
    da.fixed_opt = design->add_option("--fixed-coords", da.fixed, "count only on these coordinates (default 0..t-1)")
                       ->expected(0, CLI::detail::expected_max_vector_size);
    design->add_option("--assert-transitive", da.assert_transitive, "asserted t-transitivity of the automorphism group");
    design->add_option("--support-mode", da.mode, "classical supports")->check(CLI::IsMember({"distinct", "multiset"}));

    auto* criteria = app.add_subcommand("criteria", "design criteria predictions and their confirmation");
    CriteriaArgs ca;
    bool no_confirm = false;
    add_source(criteria, ca.src);
    criteria->add_flag("--no-confirm", no_confirm, "predictions only");
    criteria->add_option("--coordinate", ca.coordinate, "0-based coordinate for puncturing and shortening");
    auto* reg = criteria->add_option("--regular", "also test t-regularity at this t");

    auto* blocksets = app.add_subcommand("blocksets", "write a block-set family over U in the block file format");
    BlockSetArgs ba;
    blocksets->add_option("--m", ba.m, "q = 2^m");
    blocksets->add_option("--k", ba.k, "set size");
    blocksets->add_option("--l", ba.l, "ESP degree");
    blocksets->add_option("--variant", ba.variant, "plain or based")->check(CLI::IsMember({"plain", "based"}));

    auto* reproduce = app.add_subcommand("reproduce", "run a reproduction suite and print PASS/FAIL per claim");
    ReproduceArgs ra;
    std::vector<std::string> choices = suite_names();
    choices.push_back("all");
    reproduce->add_option("suite", ra.suite, "suite")->required()->check(CLI::IsMember(choices));
    reproduce->add_option("--m", ra.m, "trace suite: q = 2^m");
    reproduce->add_flag("--no-enumerate", ra.no_enumerate, "trace suite: skip the q^6 enumeration route");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    std::vector<std::string> args(argv + 1, argv + argc);
    std::string command;
    for (auto* s : app.get_subcommands()) {
        command = s->get_name();
        for (auto* ss : s->get_subcommands()) command += " " + ss->get_name();
    }
    const auto start = std::chrono::steady_clock::now();
    try {
        Output o;
        if (zoo_list->parsed()) o = cmd_zoo_list();
        else if (zoo_build->parsed()) o = cmd_zoo_build(build_src);
        else if (profile->parsed()) o = cmd_profile(profile_src, !no_rho, g);
        else if (design->parsed()) o = cmd_design(da, g);
        else if (criteria->parsed()) {
            ca.confirm = !no_confirm;
            if (reg->count()) ca.regular = reg->as<unsigned>();
            o = cmd_criteria(ca, g);
        } else if (blocksets->parsed()) o = cmd_blocksets(ba);
        else if (reproduce->parsed()) o = cmd_reproduce(ra, g);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        emit(o, command, args, g, secs);
        if (!g.quiet) std::cerr << command << ": " << std::fixed << std::setprecision(2) << secs << " s\n";
        return o.exit;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kUsage;
    } catch (const RankError& e) {
        std::cerr << "rank error: " << e.what() << "\n";
        return kUsage;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n"
                  << "hint: raise QDESIGN_BUDGET (e.g. QDESIGN_BUDGET=2^34) or choose a smaller instance\n";
        return kCapacity;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}
