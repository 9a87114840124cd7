#pragma once

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "criteria.hpp"
#include "regularity.hpp"
#include "trace.hpp"

namespace qdesign {

using Json = nlohmann::ordered_json;

// Text formats. Generator: "q n k" then k rows of n element indices. Block family:
// "q n w B" then B rows. Blank lines and lines starting with '#' are ignored.

namespace detail {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-blank, non-comment line split into integer tokens; false at end of input.
    bool next(std::vector<std::uint64_t>& out) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ss(line);
            out.clear();
            std::string tok;
            while (ss >> tok) {
                std::size_t used = 0;
                std::uint64_t v = 0;
                try {
                    if (tok[0] == '-' || tok[0] == '+') throw std::invalid_argument(tok);
                    v = std::stoull(tok, &used);
                } catch (const std::logic_error&) {
                    throw ParseError("expected a non-negative integer, got '" + tok + "'", line_no_);
                }
                if (used != tok.size()) throw ParseError("expected a non-negative integer, got '" + tok + "'", line_no_);
                out.push_back(v);
            }
            if (!out.empty()) return true;
        }
        return false;
    }
    std::size_t line() const { return line_no_; }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

inline FieldSpec parse_field(std::uint64_t q, std::size_t line) {
    if (q < 2 || q > 65536) throw ParseError("field order " + std::to_string(q) + " is out of range", line);
    try {
        return make_field(q);
    } catch (const ParameterError& e) {
        throw ParseError(e.what(), line);
    }
}

inline Matrix read_rows(LineReader& r, std::size_t count, std::size_t n, unsigned q, const char* what) {
    Matrix rows;
    std::vector<std::uint64_t> tok;
    for (std::size_t i = 0; i < count; ++i) {
        if (!r.next(tok))
            throw ParseError("expected " + std::to_string(count) + " " + what + " rows, found " + std::to_string(i), r.line());
        if (tok.size() != n)
            throw ParseError(std::string(what) + " row has " + std::to_string(tok.size()) + " entries, expected " + std::to_string(n),
                             r.line());
        Vector v(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (tok[j] >= q) throw ParseError("entry " + std::to_string(tok[j]) + " is not an element of F_" + std::to_string(q), r.line());
            v[j] = static_cast<Symbol>(tok[j]);
        }
        rows.push_back(std::move(v));
    }
    if (r.next(tok)) throw ParseError("unexpected data after the last row", r.line());
    return rows;
}

}  // namespace detail

inline LinearCode read_generator(std::istream& in, std::string label = {}) {
    detail::LineReader r(in);
    std::vector<std::uint64_t> head;
    if (!r.next(head)) throw ParseError("empty generator file", r.line());
    if (head.size() != 3) throw ParseError("header must be 'q n k'", r.line());
    const std::size_t header_line = r.line();
    FieldSpec f = detail::parse_field(head[0], header_line);
    const std::size_t n = head[1], k = head[2];
    if (n == 0 || n > kMaxZooLength) throw ParseError("length n out of range", header_line);
    if (k > n) throw ParseError("dimension k exceeds n", header_line);
    Matrix rows = detail::read_rows(r, k, n, f.q(), "generator");
    if (k == 0) return zero_code(f, n, std::move(label));
    try {
        return code_from_generator(f, std::move(rows), RankPolicy::strict, std::move(label));
    } catch (const RankError& e) {
        throw ParseError(e.what(), header_line);
    }
}

inline LinearCode read_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    return read_generator(in, path);
}

inline void write_generator(std::ostream& out, const LinearCode& code) {
    out << code.q() << ' ' << code.n() << ' ' << code.k() << '\n';
    for (const auto& row : code.generator()) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
        out << '\n';
    }
}

inline BlockFamily read_family(std::istream& in, std::string source = {}) {
    detail::LineReader r(in);
    std::vector<std::uint64_t> head;
    if (!r.next(head)) throw ParseError("empty block file", r.line());
    if (head.size() != 4) throw ParseError("header must be 'q n w B'", r.line());
    const std::size_t header_line = r.line();
    BlockFamily f{detail::parse_field(head[0], header_line), head[1], static_cast<unsigned>(head[2]), {}, std::move(source)};
    if (f.n == 0 || f.n > kMaxZooLength || head[2] > f.n) throw ParseError("need 1 <= n and w <= n", header_line);
    f.blocks = detail::read_rows(r, head[3], f.n, f.q(), "block");
    for (std::size_t i = 0; i < f.blocks.size(); ++i)
        if (hamming_weight(f.blocks[i]) != f.w)
            throw ParseError("block " + std::to_string(i + 1) + " does not have weight " + std::to_string(f.w), header_line + i + 1);
    return f;
}

inline BlockFamily read_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    return read_family(in, path);
}

inline void write_family(std::ostream& out, const BlockFamily& f) {
    out << f.q() << ' ' << f.n << ' ' << f.w << ' ' << f.size() << '\n';
    for (const auto& b : f.blocks) {
        for (std::size_t j = 0; j < b.size(); ++j) out << (j ? " " : "") << b[j];
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// JSON. Counts that fit in 64 bits are numbers, larger ones decimal strings; rational
// indices are always strings ("702", "91/3") so that exactness survives any reader.

inline Json json_count(const BigInt& x) {
    if (x >= 0 && x <= BigInt(std::numeric_limits<std::uint64_t>::max())) return static_cast<std::uint64_t>(x);
    return x.str();
}

inline Json json_rational(const Rational& r) { return to_string(r); }

template <class T>
Json json_opt(const std::optional<T>& x) {
    if (!x) return nullptr;
    return Json(*x);
}

inline Json json_vector(const Vector& v) {
    Json a = Json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

inline Json to_json(const WeightProfile& w) {
    Json o = Json::object();
    for (std::size_t i = 0; i < w.counts.size(); ++i)
        if (w.counts[i] != 0) o[std::to_string(i)] = json_count(w.counts[i]);
    return o;
}

inline Json to_json(const CodeProfile& p) {
    Json j;
    j["q"] = p.q;
    j["n"] = p.n;
    j["k"] = p.k;
    j["d"] = p.d;
    j["d_dual"] = p.d_dual;
    j["s"] = p.s;
    j["s_dual"] = p.s_dual;
    j["e"] = p.e;
    j["rho"] = json_opt(p.rho);
    j["rho_volume"] = p.rho_volume;
    j["rho_divergent"] = p.rho ? Json(*p.rho != p.rho_volume) : Json(nullptr);
    j["divisor"] = p.divisor;
    j["h"] = p.h;
    j["h_dual"] = p.h_dual;
    j["mds"] = p.mds();
    j["perfect"] = json_opt(p.perfect());
    j["weights"] = p.weights;
    j["dual_weights"] = p.dual_weights;
    j["distribution"] = to_json(p.distribution);
    j["dual_distribution"] = to_json(p.dual_distribution);
    return j;
}

inline Json to_json(const DesignCheck& c) {
    Json j;
    j["t"] = c.t;
    j["verdict"] = to_string(c.verdict);
    j["lambda"] = json_opt(c.lambda);
    j["implied_index"] = json_rational(c.implied_index);
    j["witness"] = c.witness ? json_vector(*c.witness) : Json(nullptr);
    j["witness_count"] = json_opt(c.witness_count);
    if (!c.reason.empty()) j["reason"] = c.reason;
    return j;
}

inline Json to_json(const DesignReport& r) {
    Json j;
    j["source"] = r.source;
    j["q"] = r.q;
    j["n"] = r.n;
    j["w"] = r.w;
    j["blocks"] = r.blocks;
    j["distinct_supports"] = r.distinct_supports;
    j["support_mode"] = to_string(r.mode);
    j["vacuous"] = r.vacuous;
    j["T_qary"] = r.T_qary;
    j["T_classical"] = r.T_classical;
    j["qary"] = Json::array();
    for (const auto& c : r.qary) j["qary"].push_back(to_json(c));
    j["classical"] = Json::array();
    for (const auto& c : r.classical) j["classical"].push_back(to_json(c));
    j["provisos"] = r.provisos;
    return j;
}

inline Json to_json(const FixedCoordinateCheck& c) {
    Json j;
    j["t"] = c.t;
    j["coords"] = c.coords;
    j["verdict"] = to_string(c.verdict);
    j["lambda"] = json_opt(c.lambda);
    j["patterns"] = c.patterns;
    j["witness"] = c.witness ? json_vector(*c.witness) : Json(nullptr);
    j["witness_count"] = json_opt(c.witness_count);
    j["proviso"] = c.proviso;
    return j;
}

inline Json to_json(const Prediction& p) {
    Json j;
    j["target"] = to_string(p.target);
    j["n"] = p.n;
    j["w"] = p.w;
    j["t"] = p.t;
    j["kind"] = p.classical ? "classical" : "qary";
    j["lambda"] = p.lambda ? json_rational(*p.lambda) : Json(nullptr);
    j["integral"] = p.integral;
    return j;
}

inline Json to_json(const CriterionReport& r) {
    Json j;
    j["criterion"] = r.criterion;
    j["applies"] = r.applies;
    j["t"] = r.t;
    j["predictions"] = Json::array();
    for (const auto& p : r.predictions) j["predictions"].push_back(to_json(p));
    j["provisos"] = r.provisos;
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

inline Json to_json(const Confirmation& c) {
    Json j;
    j["prediction"] = to_json(c.prediction);
    if (!c.skipped.empty()) {
        j["status"] = "skipped";
        j["skipped"] = c.skipped;
    } else {
        j["status"] = c.confirmed ? "confirmed" : "refuted";
        j["check"] = to_json(c.check);
    }
    return j;
}

inline Json to_json(const CharacterizationReport& r) {
    Json j;
    j["name"] = r.name;
    j["holds"] = r.holds;
    j["confirmed"] = r.confirmed;
    j["expected_lambda"] = r.expected_lambda ? json_rational(*r.expected_lambda) : Json(nullptr);
    j["expected_count"] = r.expected_count ? json_count(*r.expected_count) : Json(nullptr);
    j["minimum_weight_check"] = r.minimum_weight_check ? to_json(*r.minimum_weight_check) : Json(nullptr);
    j["other_weights"] = Json::array();
    for (const auto& c : r.other_weights) j["other_weights"].push_back(to_json(c));
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline Json to_json(const RegularityReport& r) {
    Json j;
    j["t"] = r.t;
    j["regular"] = r.regular;
    j["exhaustive"] = r.exhaustive;
    j["cosets_checked"] = r.cosets_checked;
    j["rho"] = r.rho;
    j["witness_a"] = r.witness_a ? json_vector(*r.witness_a) : Json(nullptr);
    j["witness_b"] = r.witness_b ? json_vector(*r.witness_b) : Json(nullptr);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline Json to_json(const TraceWeightResult& r) {
    Json j;
    j["w"] = r.w;
    j["lambda_formula"] = json_rational(r.lambda_formula);
    j["block_sets"] = r.sets;
    j["parameter_pairs"] = r.pairs;
    j["parametrized_codewords"] = r.param_codewords;
    j["parametrized_fixed"] = to_json(r.param_fixed);
    j["enumerated_codewords"] = json_opt(r.enum_codewords);
    j["enumerated_fixed"] = r.enum_fixed ? to_json(*r.enum_fixed) : Json(nullptr);
    j["zero_sets_match"] = json_opt(r.zero_sets_match);
    if (r.enum_skipped) j["enumeration_skipped"] = *r.enum_skipped;
    return j;
}

inline Json to_json(const TraceSuiteReport& r) {
    Json j;
    j["m"] = r.m;
    j["q"] = r.q;
    j["n"] = r.n;
    j["coords"] = r.coords;
    j["asserted_transitivity"] = r.asserted_transitivity;
    j["lighter_codewords"] = json_opt(r.lighter_codewords);
    j["weights"] = Json::array({to_json(r.d), to_json(r.d1)});
    return j;
}

inline Json to_json(const TypeIVCheck& r) {
    Json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["d"] = r.d;
    j["s"] = r.s;
    j["total_ok"] = r.total_ok;
    j["macwilliams_fixed"] = r.macwilliams_fixed;
    j["bound_ok"] = r.bound_ok;
    j["t"] = r.t;
    j["lambda_min"] = json_rational(r.lambda_min);
    j["passed"] = r.passed();
    return j;
}

}  // namespace qdesign
