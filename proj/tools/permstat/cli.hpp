#pragma once

// Command-line front end. `run` does all the work so tests can drive it with
// string streams; main() only forwards argv and the standard streams.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permstat/permstat.hpp"

namespace permstat::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitVerified = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kDefaultMaxN = 8;
inline constexpr int kHardMaxN = 10;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Parsing

/// Positive integers separated by commas and/or blanks.
inline std::vector<int> parse_letters(const std::string& text) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ',' || text[i] == ' ' || text[i] == '\t') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < text.size() && text[i] != ',' && text[i] != ' ' && text[i] != '\t') ++i;
        const std::string tok = text.substr(start, i - start);
        const bool digits = !tok.empty() && tok.size() <= 6 && tok.find_first_not_of("0123456789") == std::string::npos;
        if (!digits || std::stoi(tok) < 1)
            throw UsageError("parse error at position " + std::to_string(start + 1) + ": '" + tok +
                             "' is not a letter between 1 and 999999 (separate letters with commas)");
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw UsageError("parse error: empty input");
    return out;
}

inline DescentSet parse_set(const std::string& text, int n) {
    DescentSet j(n);
    if (text == "none" || text.empty()) return j;
    for (int x : parse_letters(text)) {
        if (x >= n) throw UsageError("set element " + std::to_string(x) + " is outside [1," + std::to_string(n - 1) + "]");
        j.insert(x);
    }
    return j;
}

// ---------------------------------------------------------------------------
// Document rendering

inline Json poly_json(const IntPoly& p) {
    Json doc;
    doc["vars"] = p.variables();
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e;
        for (int i = 0; i < p.nvars(); ++i) e.push_back(m.exponent(i));
        terms.push_back(Json{{"exp", e}, {"coef", c.str()}});
    }
    doc["terms"] = std::move(terms);
    return doc;
}

inline bool is_poly_json(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("vars") && j.contains("terms"); }

inline std::string poly_text(const Json& j) {
    const auto names = make_symbols(j.at("vars").get<std::vector<std::string>>());
    std::vector<IntPoly::Term> terms;
    for (const auto& t : j.at("terms")) terms.emplace_back(Monomial::from_exponents(t.at("exp").get<std::vector<int>>()), Integer(t.at("coef").get<std::string>()));
    return IntPoly::from_terms(names, std::move(terms)).to_string();
}

inline std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (is_poly_json(v)) return poly_text(v);
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_number_integer(); })) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i].get<long long>());
        return s + "}";
    }
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + scalar_text(v[i]);
        return s;
    }
    if (v.is_object()) {
        std::string s;
        for (auto it = v.begin(); it != v.end(); ++it) s += (s.empty() ? "" : ", ") + it.key() + "=" + scalar_text(it.value());
        return s;
    }
    return v.dump();
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

inline void render_text(const Json& doc, std::ostream& os) {
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (it.key() == "rows") {
            for (const auto& row : it.value()) {
                std::string line;
                for (auto c = row.begin(); c != row.end(); ++c) line += (line.empty() ? "" : "  ") + c.key() + "=" + scalar_text(c.value());
                os << line << '\n';
            }
        } else if (it.value().is_object() && !is_poly_json(it.value())) {
            os << it.key() << ":\n";
            for (auto c = it.value().begin(); c != it.value().end(); ++c) os << "  " << c.key() << " = " << scalar_text(c.value()) << '\n';
        } else if (it.value().is_array() && !it.value().empty() && it.value()[0].is_string()) {
            os << it.key() << ":\n";
            for (const auto& x : it.value()) os << "  " << x.get<std::string>() << '\n';
        } else {
            os << it.key() << ": " << scalar_text(it.value()) << '\n';
        }
    }
}

inline void render_csv(const Json& doc, std::ostream& os) {
    if (doc.contains("rows") && !doc["rows"].empty()) {
        const auto& rows = doc["rows"];
        std::string header;
        for (auto c = rows[0].begin(); c != rows[0].end(); ++c) header += (header.empty() ? "" : ",") + csv_field(c.key());
        os << header << '\n';
        for (const auto& row : rows) {
            std::string line;
            bool first = true;
            for (auto c = row.begin(); c != row.end(); ++c) {
                line += (first ? "" : ",") + csv_field(scalar_text(c.value()));
                first = false;
            }
            os << line << '\n';
        }
        return;
    }
    os << "key,value\n";
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (it.value().is_object() && !is_poly_json(it.value())) {
            for (auto c = it.value().begin(); c != it.value().end(); ++c)
                os << csv_field(it.key() + "." + c.key()) << ',' << csv_field(scalar_text(c.value())) << '\n';
        } else {
            os << csv_field(it.key()) << ',' << csv_field(scalar_text(it.value())) << '\n';
        }
    }
}

inline void render(const Json& doc, const std::string& format, std::ostream& os) {
    if (format == "json") os << doc.dump(2) << '\n';
    else if (format == "csv") render_csv(doc, os);
    else render_text(doc, os);
}

inline Json report_json(const Report& r) {
    Json doc;
    doc["target"] = r.target;
    doc["status"] = r.ok ? "verified" : "falsified";
    doc["checks"] = r.checks;
    if (!r.failures.empty()) doc["failures"] = r.failures;
    if (!r.facts.empty()) {
        Json facts = Json::object();
        for (const auto& [k, v] : r.facts) facts[k] = v;
        doc["facts"] = std::move(facts);
    }
    if (!r.polynomials.empty()) {
        Json polys = Json::object();
        for (const auto& [k, p] : r.polynomials) polys[k] = poly_json(p);
        doc["polynomials"] = std::move(polys);
    }
    return doc;
}

// ---------------------------------------------------------------------------
// Commands

struct Options {
    std::string format = "text";
    std::string out_path;
    unsigned threads = 1;
    int max_n = kDefaultMaxN;
    bool allow_large = false;
    bool timings = false;

    // stats
    std::vector<std::string> input;
    bool want_des = false, want_dez = false, want_ides = false, want_exc = false, want_iexc = false, want_fix = false;
    bool want_desmaj = false, want_inv = false, want_lec = false, want_pix = false, want_hooks = false, want_class = false;
    bool want_all = false;

    // verify / table
    std::string target;
    std::optional<int> n, N, total;
    std::optional<std::string> J, m;
    std::string left, right;
};

inline int bound(const Options& o) {
    if (o.max_n > kHardMaxN) throw UsageError("--max-n cannot exceed " + std::to_string(kHardMaxN));
    if (o.max_n > kDefaultMaxN && !o.allow_large) throw UsageError("--max-n above " + std::to_string(kDefaultMaxN) + " needs --allow-large");
    return o.max_n;
}

inline int need_n(const Options& o, int minimum = 0) {
    if (!o.n) throw UsageError("verify/table target '" + o.target + "' needs --n");
    if (*o.n < minimum) throw UsageError("--n must be at least " + std::to_string(minimum));
    if (*o.n > bound(o)) throw UsageError("--n " + std::to_string(*o.n) + " exceeds --max-n " + std::to_string(bound(o)));
    return *o.n;
}

inline void need_size(const Options& o, int size, const std::string& what) {
    if (size > bound(o)) throw UsageError(what + " " + std::to_string(size) + " exceeds --max-n " + std::to_string(bound(o)));
}

inline std::string hook_string(const HookFactorization& f) {
    std::string s = "|";
    if (!f.prefix.empty()) s += one_line(f.prefix) + "|";
    for (const auto& h : f.hooks) s += one_line(h) + "|";
    return s;
}

inline Json set_json(const DescentSet& d) { return Json(d.members()); }

inline Json cmd_stats(const Options& o) {
    std::string joined;
    for (const auto& s : o.input) joined += (joined.empty() ? "" : " ") + s;
    const std::vector<int> letters = parse_letters(joined);
    const int n = static_cast<int>(letters.size());
    std::vector<int> sorted = letters;
    std::sort(sorted.begin(), sorted.end());
    bool is_perm = true;
    for (int i = 0; i < n; ++i) is_perm = is_perm && sorted[static_cast<std::size_t>(i)] == i + 1;
    bool gapless = sorted.front() == 1;
    for (std::size_t i = 1; i < sorted.size(); ++i) gapless = gapless && sorted[i] - sorted[i - 1] <= 1;

    const bool all = o.want_all || !(o.want_des || o.want_dez || o.want_ides || o.want_exc || o.want_iexc || o.want_fix ||
                                     o.want_desmaj || o.want_inv || o.want_lec || o.want_pix || o.want_hooks || o.want_class);
    auto need_perm = [&](bool wanted, const char* stat) {
        if (wanted && !is_perm && !all) throw UsageError(std::string(stat) + " needs a permutation of [n]");
        return wanted || all;
    };
    const std::span<const int> w(letters);
    Json doc;
    doc["command"] = "stats";
    doc["input"] = one_line(w);
    doc["n"] = n;
    doc["permutation"] = is_perm;
    if (o.want_des || all) doc["DES"] = set_json(descent_set(w));
    if (need_perm(o.want_dez, "--dez") && is_perm) doc["DEZ"] = set_json(dez(w));
    if (o.want_ides || all) {
        if (!gapless) throw UsageError("--ides needs the letters to form an interval 1..m");
        doc["IDES"] = set_json(ides(w));
    }
    if (need_perm(o.want_exc, "--exc") && is_perm) doc["exc"] = exc_count(w);
    if (need_perm(o.want_iexc, "--iexc") && is_perm) doc["iexc"] = iexc(w);
    if (need_perm(o.want_fix, "--fix") && is_perm) doc["fix"] = fix_count(w);
    if (o.want_desmaj || all) {
        const auto dm = des_maj(w);
        doc["des"] = dm.des;
        doc["maj"] = dm.maj;
    }
    if (o.want_inv || all) doc["inv"] = inv_count(w);
    const auto f = hook_factorize(w);
    if (o.want_lec || all) doc["lec"] = lec(f);
    if (o.want_pix || all) doc["pix"] = static_cast<int>(f.prefix.size());
    if (o.want_hooks || all) doc["hooks"] = hook_string(f);
    if (o.want_class || all) {
        doc["desarrangement"] = is_desarrangement(w);
        doc["class"] = std::string(to_string(classify(w)));
    }
    return doc;
}

inline std::pair<Json, bool> cmd_verify(const Options& o) {
    const unsigned th = o.threads;
    const std::string& t = o.target;
    auto single = [](Report r, Json extra = Json::object()) {
        Json doc{{"command", "verify"}};
        for (auto it = extra.begin(); it != extra.end(); ++it) doc[it.key()] = it.value();
        const Json body = report_json(r);
        for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
        return std::pair<Json, bool>(doc, r.ok);
    };
    auto suite = [](const std::string& target, const std::vector<Report>& parts) {
        Json doc{{"command", "verify"}, {"target", target}};
        bool ok = true;
        std::int64_t checks = 0;
        Json list = Json::array();
        for (const auto& r : parts) {
            ok = ok && r.ok;
            checks += r.checks;
            list.push_back(report_json(r));
        }
        doc["status"] = ok ? "verified" : "falsified";
        doc["checks"] = checks;
        doc["parts"] = std::move(list);
        return std::pair<Json, bool>(doc, ok);
    };

    if (t == "thm1") {
        const int n = need_n(o, 1);
        if (o.J) {
            auto r = verify_thm1(n, parse_set(*o.J, n), bound(o));
            Json extra;
            Json f = Json::array(), g = Json::array(), fp = Json::array();
            for (const auto& p : r.F) f.push_back(one_line(p));
            for (const auto& p : r.F_prime) fp.push_back(one_line(p));
            for (const auto& p : r.G) g.push_back(one_line(p));
            extra["F"] = f;
            extra["F_prime"] = fp;
            extra["G"] = g;
            return single(r.report, extra);
        }
        return single(verify_thm1_all(n, th, bound(o)));
    }
    if (t == "thm2" || t == "thm11") {
        const int n = need_n(o, 1);
        const ExcVariant v = t == "thm2" ? ExcVariant::exc : ExcVariant::iexc;
        if (o.J) {
            const DescentSet j = parse_set(*o.J, n);
            if (j.is_full()) throw UsageError("J must be a proper subset of [n-1]");
            return single(verify_thm2(n, j, v, bound(o)).report);
        }
        return single(verify_thm2_all(n, v, th, nullptr, bound(o)));
    }
    if (t == "thm2chain") {
        if (o.m) {
            const Composition m(parse_letters(*o.m));
            need_size(o, m.total(), "composition total");
            return single(verify_rearrangement_classes(m, bound(o)));
        }
        const int n = need_n(o, 1);
        return single(verify_thm2_chain(n, th, bound(o)));
    }
    if (t == "cor3") {
        const int n = need_n(o, 2);
        need_size(o, 2 * n + 2, "size 2n+2 =");
        return single(verify_cor3(n));
    }
    if (t == "cor4") return single(verify_cor4(need_n(o, 2)));
    if (t == "prop7") {
        const int n = need_n(o, 1);
        need_size(o, 2 * n, "size 2n =");
        return single(verify_prop7(n));
    }
    if (t == "fixbound") return single(verify_alternating_fix_bound(need_n(o, 1)));
    if (t == "lecdrop") return single(verify_lec_drop(need_n(o, 1), th));
    if (t == "prop8") return single(verify_prop8(need_n(o, 1), th));
    if (t == "prop13") return single(verify_prop13(need_n(o, 1), th));
    if (t == "dw") return single(verify_dw(need_n(o, 1), th));
    if (t == "equidist") {
        const int n = need_n(o, 0);
        auto stats = [](const std::string& list) {
            std::vector<Stat> out;
            std::stringstream ss(list);
            for (std::string name; std::getline(ss, name, ',');) out.push_back(stat_from_string(name));
            return out;
        };
        const auto l = stats(o.left), r = stats(o.right);
        if (l.empty() || l.size() != r.size()) throw UsageError("--left and --right need the same number of statistics");
        return single(equidistribution_report("(" + o.left + ") vs (" + o.right + ")", n, l, r, th));
    }
    if (t == "thm5") {
        const int total = o.total.value_or(8);
        need_size(o, total, "--total");
        return single(verify_thm5(total));
    }
    if (t == "thm13") {
        const int n = need_n(o, 1);
        return single(verify_thm13(n, th, bound(o)).report);
    }
    if (t == "thm16") {
        const int n = need_n(o, 1);
        return single(verify_thm16(n, th));
    }
    if (t == "cor15") {
        const int N = o.N.value_or(6);
        if (N < 0 || N > 20) throw UsageError("--N must lie in 0..20");
        return single(verify_cor15(N, std::min(N, bound(o)), th));
    }
    if (t == "fourvar") {
        const int N = o.N.value_or(o.n.value_or(5));
        if (N < 0 || N > kMaxANExtract) throw UsageError("--N must lie in 0.." + std::to_string(kMaxANExtract));
        return single(verify_four_variable_extraction(N, th));
    }
    if (t == "all") {
        const int n = need_n(o, 3);
        std::vector<Report> parts{verify_thm1_all(n, th),         verify_thm2_all(n, ExcVariant::exc, th),
                                  verify_thm2_all(n, ExcVariant::iexc, th), verify_thm2_chain(std::min(n, 7), th),
                                  verify_rearrangement_classes_all(std::min(n, 7)), verify_lec_drop(n, th),
                                  verify_prop8(n, th),            verify_prop13(n, th),
                                  verify_dw(n, th),               verify_thm16(n, th),
                                  verify_thm13(n, th).report,     verify_cor15(12, n, th)};
        return suite("all", parts);
    }
    throw UsageError("unknown verify target '" + t + "'");
}

inline Json cmd_table(const Options& o) {
    const std::string& t = o.target;
    Json doc{{"command", "table"}, {"target", t}};
    Json rows = Json::array();
    if (t == "M") {
        const int total = o.total.value_or(o.n.value_or(4));
        if (total < 1 || total > 12) throw UsageError("--total must lie in 1..12");
        for (const auto& a : compositions(total)) rows.push_back(Json{{"composition", composition_string(a)}, {"M", M_series(a).str()}});
    } else if (t == "alternating") {
        const int n = need_n(o, 1);
        const auto c = alternating_counts(n, bound(o));
        for (int k = 0; k <= n; ++k)
            rows.push_back(Json{{"k", k}, {"d", c.d[static_cast<std::size_t>(k)]}, {"d_star", c.d_star[static_cast<std::size_t>(k)]}});
    } else if (t == "Q") {
        const int N = o.N.value_or(o.n.value_or(6));
        if (N < 0 || N > 20) throw UsageError("--N must lie in 0..20");
        const auto qs = H_expand(N);
        for (int n = 0; n <= N; ++n) rows.push_back(Json{{"n", n}, {"Q", poly_json(qs[static_cast<std::size_t>(n)])}});
    } else if (t == "An") {
        const int n = need_n(o, 0);
        if (n > kMaxANExtract) throw UsageError("--n must be at most " + std::to_string(kMaxANExtract));
        rows.push_back(Json{{"n", n}, {"A", poly_json(A_n_extract(n))}});
    } else if (t == "derangements") {
        const int n = need_n(o, 0);
        for (int k = 0; k <= n; ++k) rows.push_back(Json{{"n", k}, {"D", derangement_number(k).str()}});
    } else {
        throw UsageError("unknown table target '" + t + "'");
    }
    doc["rows"] = std::move(rows);
    return doc;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Permutation statistics, descent classes and their generating functions"};
    app.name("permstat");
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", o.out_path, "Write the document to this file instead of stdout");
    app.add_option("--threads", o.threads, "Worker threads for enumeration (0 = hardware)");
    app.add_option("--max-n", o.max_n, "Largest permutation size accepted");
    app.add_flag("--allow-large", o.allow_large, "Permit --max-n up to 10");
    app.add_flag("--timings", o.timings, "Include elapsed time in the output");
    app.require_subcommand(1);

    auto* stats = app.add_subcommand("stats", "Statistics of one permutation or word");
    stats->add_option("input", o.input, "Letters, comma or space separated")->required();
    stats->add_flag("--des", o.want_des);
    stats->add_flag("--dez", o.want_dez);
    stats->add_flag("--ides", o.want_ides);
    stats->add_flag("--exc", o.want_exc);
    stats->add_flag("--iexc", o.want_iexc);
    stats->add_flag("--fix", o.want_fix);
    stats->add_flag("--maj", o.want_desmaj, "des and maj");
    stats->add_flag("--inv", o.want_inv);
    stats->add_flag("--lec", o.want_lec);
    stats->add_flag("--pix", o.want_pix);
    stats->add_flag("--hooks", o.want_hooks);
    stats->add_flag("--class", o.want_class);
    stats->add_flag("--all", o.want_all);

    auto* verify = app.add_subcommand("verify", "Check an identity exhaustively");
    verify->add_option("target", o.target,
                       "thm1|thm2|thm2chain|thm11|cor3|cor4|prop7|prop8|prop13|thm5|thm13|thm16|cor15|dw|fourvar|fixbound|lecdrop|equidist|all")
        ->required();
    verify->add_option("--n", o.n);
    verify->add_option("--N", o.N);
    verify->add_option("--J", o.J, "Comma-separated subset of [n-1], or 'none'");
    verify->add_option("--m", o.m, "Composition, comma separated");
    verify->add_option("--total", o.total);
    verify->add_option("--left", o.left, "Statistics for equidist, comma separated");
    verify->add_option("--right", o.right, "Statistics for equidist, comma separated");

    auto* table = app.add_subcommand("table", "Tabulate values");
    table->add_option("target", o.target, "M|alternating|Q|An|derangements")->required();
    table->add_option("--n", o.n);
    table->add_option("--N", o.N);
    table->add_option("--total", o.total);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "permstat: " << e.what() << '\n';
        return kExitUsage;
    }
    if (o.threads == 0) o.threads = std::max(1u, std::thread::hardware_concurrency());

    const auto start = std::chrono::steady_clock::now();
    Json doc;
    bool ok = true;
    try {
        bound(o);
        if (*stats) {
            doc = cmd_stats(o);
        } else if (*verify) {
            std::tie(doc, ok) = cmd_verify(o);
        } else {
            doc = cmd_table(o);
        }
    } catch (const UsageError& e) {
        err << "permstat: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "permstat: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "permstat: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "permstat: " << e.what() << '\n';
        return kExitUsage;
    }
    if (o.timings)
        doc["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

    if (o.out_path.empty()) {
        render(doc, o.format, out);
    } else {
        std::ofstream file(o.out_path, std::ios::binary);
        if (!file) {
            err << "permstat: cannot open " << o.out_path << '\n';
            return kExitUsage;
        }
        render(doc, o.format, file);
    }
    if (!ok && doc.contains("failures")) err << "permstat: first counterexample: " << doc["failures"][0].get<std::string>() << '\n';
    return ok ? kExitVerified : kExitFalsified;
}

}  // namespace permstat::cli
