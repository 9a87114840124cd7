// Acceptance criteria 1-13. One PASS/FAIL line per criterion; sub-checks are listed below it.
// Usage: acceptance [--criterion N] [--threads T] [--verbose]

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "qdesign/qdesign.hpp"

namespace {

using namespace qdesign;

struct Criterion {
    unsigned id;
    const char* title;
    double limit_seconds;
    std::function<void(ClaimRunner&)> run;
};

// Brute-force oracle for lambda_scale and lambda_xyz on one family. Every weight-t vector
// alpha and every split of its support into X (agree), Y (nonzero, differ), Z (zero) and
// free coordinates is counted directly against the closed forms.
void lambda_oracle(ClaimRunner& run, const std::string& id, const LinearCode& code, unsigned w, unsigned t, std::uint64_t lambda) {
    const std::string st = "lambda_scale and lambda_xyz equal brute-force counts on A_" + std::to_string(w) + "(" + code.label() + ")";
    run.guarded(id, st, "q-ary index formulas", [&] {
        const auto& fam = run.family(code, w);
        const std::size_t n = code.n();
        const unsigned q = code.q();
        std::size_t scale_cases = 0, xyz_cases = 0, bad = 0;
        std::string first_bad;

        // lambda_i: every weight-i vector, 0 <= i <= t.
        for (unsigned i = 0; i <= t; ++i) {
            const Rational want = lambda_scale(Rational(lambda), t, i, n, w, q);
            detail::for_each_subset(static_cast<unsigned>(n), i, [&](const std::vector<unsigned>& sup) {
                std::vector<Symbol> vals(i, 1);
                while (true) {
                    Vector v(n, 0);
                    for (unsigned j = 0; j < i; ++j) v[sup[j]] = vals[j];
                    std::uint64_t got = 0;
                    for (const auto& b : fam.blocks) got += covers(b, v);
                    ++scale_cases;
                    if (Rational(got) != want && bad++ == 0) first_bad = "lambda_" + std::to_string(i);
                    unsigned j = 0;
                    while (j < i && ++vals[j] == q) vals[j++] = 1;
                    if (j == i) break;
                }
            });
        }

        // (x, y, z): a label in {X, Y, Z, free} per support coordinate of alpha.
        detail::for_each_subset(static_cast<unsigned>(n), t, [&](const std::vector<unsigned>& sup) {
            std::vector<Symbol> vals(t, 1);
            while (true) {
                std::vector<unsigned> label(t, 0);
                while (true) {
                    unsigned x = 0, y = 0, z = 0;
                    for (auto l : label) x += l == 0, y += l == 1, z += l == 2;
                    std::uint64_t got = 0;
                    for (const auto& b : fam.blocks) {
                        bool ok = true;
                        for (unsigned j = 0; j < t && ok; ++j) {
                            const Symbol s = b[sup[j]];
                            switch (label[j]) {
                                case 0: ok = s == vals[j]; break;
                                case 1: ok = s != 0 && s != vals[j]; break;
                                case 2: ok = s == 0; break;
                                default: break;
                            }
                        }
                        got += ok;
                    }
                    ++xyz_cases;
                    if (Rational(got) != lambda_xyz(Rational(lambda), t, n, w, q, x, y, z) && bad++ == 0)
                        first_bad = "(x,y,z)=(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
                    unsigned j = 0;
                    while (j < t && ++label[j] == 4) label[j++] = 0;
                    if (j == t) break;
                }
                unsigned j = 0;
                while (j < t && ++vals[j] == q) vals[j++] = 1;
                if (j == t) break;
            }
        });
        run.record(id, st, "q-ary index formulas", bad == 0 && scale_cases > 0 && xyz_cases > 0,
                   std::to_string(scale_cases) + " lambda_i cases, " + std::to_string(xyz_cases) + " (x,y,z) cases, " +
                       std::to_string(bad) + " mismatches" + (first_bad.empty() ? "" : " (first: " + first_bad + ")"));
    });
}

// t-regularity against "every nonempty A_w is a q-ary t-design" on random small codes.
void regularity_equivalence(ClaimRunner& run) {
    std::mt19937_64 rng(20261016);
    unsigned codes = 0, pairs = 0, agree = 0, regular = 0, partial = 0;
    std::string first_bad;
    while (codes < 20) {
        const unsigned q = codes % 2 ? 4 : 3;
        auto F = make_field(q);
        const unsigned n = std::uniform_int_distribution<unsigned>(4, 8)(rng);
        const unsigned k = std::uniform_int_distribution<unsigned>(1, std::min(4u, n - 1))(rng);
        Matrix g(k, Vector(n));
        for (auto& row : g)
            for (auto& s : row) s = static_cast<Symbol>(std::uniform_int_distribution<unsigned>(0, q - 1)(rng));
        std::optional<LinearCode> built;
        try {
            built = code_from_generator(F, g, RankPolicy::strict, "random" + std::to_string(codes));
        } catch (const RankError&) {
            continue;
        }
        const LinearCode& code = *built;
        auto p = code_profile(code, false, run.options().threads, run.options().budget);
        if (p.d < 2) continue;
        ++codes;
        for (unsigned t = 1; 2 * t <= p.d; ++t) {
            auto reg = t_regular(code, t, run.options().budget);
            if (!reg.exhaustive) ++partial;
            bool all_designs = true;
            for (auto w : p.weights)
                all_designs = all_designs && qary_design_lambda(run.family(code, w), t, 1, run.options().budget).holds();
            ++pairs;
            regular += reg.regular;
            if (reg.regular == all_designs) ++agree;
            else if (first_bad.empty()) first_bad = code.label() + " t=" + std::to_string(t);
        }
    }
    run.record("regularity.equivalence", "t-regular iff every nonempty A_w is a q-ary t-design, 20 random codes, d >= 2t",
               "regularity equivalence", agree == pairs && partial == 0,
               std::to_string(pairs) + " (code, t) pairs, " + std::to_string(regular) + " regular, " + std::to_string(pairs - agree) +
                   " disagreements, " + std::to_string(partial) + " partial" + (first_bad.empty() ? "" : " (first: " + first_bad + ")"));

    // Random codes are rarely regular; these structured codes exercise the regular side.
    unsigned s_pairs = 0, s_agree = 0, s_regular = 0;
    std::string s_bad;
    for (const auto& code : {simplex(3, 2), hamming(4, 2), drs(4, 2), drs(5, 3), reed_solomon(7, 3), ternary_golay(), rt6(), tf1(4)}) {
        auto p = code_profile(code, false, run.options().threads, run.options().budget);
        for (unsigned t = 1; 2 * t <= p.d; ++t) {
            auto reg = t_regular(code, t, run.options().budget);
            bool all_designs = reg.exhaustive;
            for (auto w : p.weights)
                all_designs = all_designs && qary_design_lambda(run.family(code, w), t, 1, run.options().budget).holds();
            ++s_pairs;
            s_regular += reg.regular;
            if (reg.exhaustive && reg.regular == all_designs) ++s_agree;
            else if (s_bad.empty()) s_bad = code.label() + " t=" + std::to_string(t);
        }
    }
    run.record("regularity.structured", "t-regular iff every nonempty A_w is a q-ary t-design, structured codes, d >= 2t",
               "regularity equivalence", s_agree == s_pairs && s_regular > 0,
               std::to_string(s_pairs) + " (code, t) pairs, " + std::to_string(s_regular) + " regular, " +
                   std::to_string(s_pairs - s_agree) + " disagreements" + (s_bad.empty() ? "" : " (first: " + s_bad + ")"));
}

const std::vector<Criterion>& criteria() {
    using namespace suites;
    static const std::vector<Criterion> all = {
        {1, "Hamming [13,10,3]_3: every nonempty A_w is a ternary 2-design, A_3 is 2-(13,3,1)_3", 5, hamming_perfect},
        {2, "ternary Golay: A_5 is 3-(11,5,1)_3, B_5 is 4-(11,5,1), all nonempty A_w are 3-designs", 5, golay},
        {3, "RT6 [11,5,6]_3: A_6 3-(11,6,2)_3, B_6 4-(11,6,3), A_9 3-(11,9,7)_3, B_9 complete", 5, rt6_rows},
        {4, "simplex(3,3): A_9 is 2-(13,9,3)_3 with T_qary = 2", 1, simplex_rows},
        {5, "TF1 at q = 4, 8 with punctured and shortened duals", 30,
         [](ClaimRunner& r) {
             for (unsigned q : {4u, 8u}) {
                 tf1_rows(r, q);
                 tf1_puncture_shorten(r, q);
             }
         }},
        {6, "TF3 at q = 4", 60, [](ClaimRunner& r) { tf3_rows(r, 4); }},
        {7, "Pless P12 and P24: enumerators and designs", 120, pless},
        {8, "DRS (8,3), (9,4), (16,4): A_d is a q-ary 2-design; RS [15,4,12]_16 has T_qary = 1", 120, drs_suite},
        {9, "subset counts M(k,b) and N(k,c)", 30, counts_suite},
        {10, "block sets at q = 32: B_{6,3} is 4-(33,6,12), B^b_{5,3} is 4-(33,5,5)", 120, block_set_claims},
        {11, "trace code [33,6,27]_32: lambda = 702 at weight 27, 945 at weight 28", 300, trace_code_claims},
        {12, "lambda_scale and lambda_xyz against brute force", 30,
         [](ClaimRunner& r) {
             lambda_oracle(r, "lambda.golay.A5", ternary_golay(), 5, 3, 1);
             lambda_oracle(r, "lambda.simplex33.A9", simplex(3, 3), 9, 2, 3);
         }},
        {13, "t-regularity equivalence on random codes", 120, regularity_equivalence},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    unsigned only = 0;
    unsigned threads = default_threads();
    bool verbose = false;
    app.add_option("--criterion", only, "run a single criterion (1-13)")->check(CLI::Range(1u, 13u));
    app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 1024u));
    app.add_flag("--verbose", verbose, "print every sub-check");
    CLI11_PARSE(app, argc, argv);

    bool all_pass = true;
    for (const auto& c : criteria()) {
        if (only && c.id != only) continue;
        SuiteReport rep;
        rep.suite = "criterion " + std::to_string(c.id);
        SuiteOptions opt;
        opt.threads = threads;
        const auto start = std::chrono::steady_clock::now();
        {
            ClaimRunner run(rep, opt);
            try {
                c.run(run);
            } catch (const Error& e) {
                run.record("error", "criterion ran to completion", "", false, e.what());
            }
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.limit_seconds;
        const bool pass = rep.passed() && rep.count(ClaimStatus::pass) > 0 && in_time;
        all_pass = all_pass && pass;
        std::printf("criterion %2u: %s  %s  [%.2fs / %.0fs limit; %zu passed, %zu failed, %zu skipped]\n", c.id, pass ? "PASS" : "FAIL",
                    c.title, secs, c.limit_seconds, rep.count(ClaimStatus::pass), rep.count(ClaimStatus::fail),
                    rep.count(ClaimStatus::skipped));
        if (!in_time) std::printf("    time limit exceeded\n");
        for (const auto& cl : rep.claims)
            if (verbose || cl.status != ClaimStatus::pass)
                std::printf("    %-7s %s: %s%s%s\n", to_string(cl.status), cl.id.c_str(), cl.statement.c_str(), cl.detail.empty() ? "" : "  [",
                            cl.detail.empty() ? "" : (cl.detail + "]").c_str());
    }
    return all_pass ? 0 : 1;
}
