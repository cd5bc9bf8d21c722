// qtcodes: construct and analyze 2-generator quasi-twisted two-weight codes.
//
// Subcommands: construct, analyze, table1, catalog, verify-paper.
// Exit codes: 0 success, 1 verification failure, 2 usage/parameter error,
// 3 enumeration cap exceeded.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtc/record.hpp"
#include "qtc/verify.hpp"

namespace {

using namespace qtc;

void emit(const std::string& out_file, const std::string& text) {
    if (out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_file, std::ios::binary);
    if (!os) throw Error("cannot open output file " + out_file);
    os << text;
}

int cmd_construct(unsigned q, unsigned t, unsigned p, const std::string& h_text,
                  const std::string& format, const std::string& out_file) {
    Field f = make_field(q);
    std::optional<Polynomial> h;
    if (!h_text.empty()) h = poly_from_text(f, h_text);
    AnyQTCode code = construct_code(f, t, p, std::move(h));
    CodeRecord rec = make_record(code);
    if (format == "matrix")
        emit(out_file, matrix_to_text(generator_of(code)));
    else
        emit(out_file, code_to_json(code, rec) + "\n");
    return 0;
}

int cmd_analyze(const std::string& in_file, const std::string& out_file) {
    std::string text;
    if (in_file.empty() || in_file == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream is(in_file, std::ios::binary);
        if (!is) throw ParseError("cannot open input file " + in_file);
        std::ostringstream buf;
        buf << is.rdbuf();
        text = buf.str();
    }
    ParsedCode pc = code_from_json(text);
    LinearCode lc = make_linear_code(std::move(pc.generator));

    std::ostringstream os;
    os << "n: " << lc.n << "\n";
    os << "k: " << lc.k << "\n";
    auto wd = weight_distribution(lc);
    os << "weight_distribution:";
    for (const auto& [w, cnt] : wd.counts) os << ' ' << w << ':' << cnt;
    os << "\n";
    unsigned d = min_distance(lc);
    os << "min_distance: " << d << "\n";
    if (auto tw = is_two_weight(lc))
        os << "two_weight: " << tw->first << ',' << tw->second << "\n";
    else
        os << "two_weight: no\n";
    if (auto eq = is_equidistant(lc))
        os << "equidistant: " << *eq << "\n";
    else
        os << "equidistant: no\n";
    os << "projective: " << (is_projective(lc) ? "true" : "false") << "\n";
    if (pc.p && pc.lambda && lc.n % *pc.p == 0) {
        os << "qt_closure_block: "
           << (qt_closure(lc, *pc.p, *pc.lambda, false) ? "true" : "false") << "\n";
        LinearCode il = make_linear_code(interleave_columns(lc.generator, *pc.p));
        os << "qt_closure_interleaved: "
           << (qt_closure(il, *pc.p, *pc.lambda, true) ? "true" : "false") << "\n";
    }
    unsigned gb = griesmer_n(lc.k, d, lc.field.q());
    os << "griesmer_n: " << gb << "\n";
    os << "griesmer_slack: " << int(lc.n) - int(gb) << "\n";
    emit(out_file, os.str());
    return 0;
}

int cmd_catalog(std::vector<unsigned> q_list, std::vector<unsigned> t_list,
                const std::string& p_range, const std::string& format,
                const std::string& out_file) {
    // default grid: every code named in the source tables
    std::vector<std::pair<unsigned, unsigned>> points;
    if (q_list.empty() && t_list.empty()) {
        points = {{2, 2}, {3, 2}, {4, 2}, {5, 2}, {2, 3}, {2, 4}, {3, 3}};
    } else {
        if (q_list.empty() || t_list.empty())
            throw BadInput("--q and --t must be given together");
        for (unsigned q : q_list)
            for (unsigned t : t_list) points.emplace_back(q, t);
    }
    std::sort(points.begin(), points.end());

    auto parse_range = [&](unsigned q, unsigned t) -> std::pair<unsigned, unsigned> {
        unsigned qt = 1;
        for (unsigned i = 0; i < t; ++i) qt *= q;
        if (p_range.empty() || p_range == "all") return {2, qt + 1};
        auto colon = p_range.find(':');
        if (colon == std::string::npos) {
            unsigned p = unsigned(std::stoul(p_range));
            return {p, p};
        }
        return {unsigned(std::stoul(p_range.substr(0, colon))),
                unsigned(std::stoul(p_range.substr(colon + 1)))};
    };

    std::ostringstream os;
    nlohmann::json jrecords = nlohmann::json::array();
    if (format == "csv") os << record_csv_header() << "\n";
    for (auto [q, t] : points) {
        Field f = make_field(q);
        auto [p_lo, p_hi] = parse_range(q, t);
        for (unsigned p = p_lo; p <= p_hi; ++p) {
            try {
                AnyQTCode code = construct_code(f, t, p);
                CodeRecord rec = make_record(code);
                if (format == "csv") {
                    os << record_csv_line(rec) << "\n";
                } else {
                    nlohmann::json j;
                    j["q"] = rec.q; j["t"] = rec.t; j["p"] = rec.p;
                    j["n"] = rec.n; j["k"] = rec.k; j["lambda"] = rec.lambda;
                    j["w1"] = rec.w1; j["w2"] = rec.w2; j["d"] = rec.d;
                    j["griesmer_n"] = rec.griesmer_n; j["gap"] = rec.gap;
                    j["i"] = rec.i; j["r"] = rec.r;
                    j["length_optimal"] = rec.length_optimal;
                    j["paper_d_optimal"] = rec.paper_d_optimal;
                    jrecords.push_back(std::move(j));
                }
            } catch (const TooLarge&) {
                throw;  // cap violations abort; parameter errors do not
            } catch (const Error& e) {
                if (format == "csv")
                    os << "# error q=" << q << " t=" << t << " p=" << p << ": " << e.what()
                       << "\n";
                else
                    jrecords.push_back({{"q", q}, {"t", t}, {"p", p}, {"error", e.what()}});
            }
        }
    }
    if (format == "csv")
        emit(out_file, os.str());
    else
        emit(out_file, jrecords.dump(2) + "\n");
    return 0;
}

int cmd_verify_paper(const std::vector<std::string>& only, bool mutate,
                     const std::string& out_file) {
    for (const auto& name : only) {
        const auto& names = paper_check_names();
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw BadInput("unknown check '" + name + "'");
    }
    auto results = run_paper_checks(only, mutate);
    std::ostringstream os;
    bool all_pass = true;
    for (const auto& r : results) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
        all_pass = all_pass && r.pass;
    }
    emit(out_file, os.str());
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-generator quasi-twisted two-weight code constructor"};
    app.require_subcommand(1);

    std::string out_file;
    app.add_option("--output", out_file, "Write output to FILE instead of stdout");

    auto* construct = app.add_subcommand("construct", "Construct a code from (q, t, p)");
    unsigned q = 0, t = 0, p = 0;
    std::string h_text, format = "json";
    construct->add_option("--q", q, "Field size (prime power)")->required();
    construct->add_option("--t", t, "Simplex dimension t > 1")->required();
    construct->add_option("--p", p, "Block count, 2..q^t (q^t+1 gives the simplex form)")
        ->required();
    construct->add_option("--h-poly", h_text,
                          "Primitive polynomial, comma-separated ascending coefficients");
    construct->add_option("--format", format, "json or matrix")
        ->check(CLI::IsMember({"json", "matrix"}));

    auto* analyze = app.add_subcommand("analyze", "Analyze a serialized code");
    std::string in_file;
    analyze->add_option("file", in_file, "JSON code file ('-' or omitted for stdin)");

    auto* table1_cmd = app.add_subcommand("table1", "Emit the p=17..28, q=t=3 table as CSV");

    auto* catalog = app.add_subcommand("catalog", "Emit verified code records");
    std::vector<unsigned> q_list, t_list;
    std::string p_range, cat_format = "csv";
    catalog->add_option("--q", q_list, "Field sizes");
    catalog->add_option("--t", t_list, "Dimensions t");
    catalog->add_option("--p-range", p_range, "Inclusive range lo:hi, single p, or 'all'");
    catalog->add_option("--format", cat_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* verify = app.add_subcommand("verify-paper", "Run the full reproduction suite");
    std::vector<std::string> only;
    bool mutate = false;
    verify->add_option("--only", only, "Run only the named checks");
    verify->add_flag("--mutate", mutate, "Fault-injection mode: corrupt one symbol");

    try {
        app.parse(argc, argv);
        if (*construct) return cmd_construct(q, t, p, h_text, format, out_file);
        if (*analyze) return cmd_analyze(in_file, out_file);
        if (*table1_cmd) {
            emit(out_file, qtc::table1_csv());
            return 0;
        }
        if (*catalog) return cmd_catalog(q_list, t_list, p_range, cat_format, out_file);
        if (*verify) return cmd_verify_paper(only, mutate, out_file);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const qtc::TooLarge& e) {
        std::cerr << "error: " << e.what() << " (" << e.size << ")\n";
        return 3;
    } catch (const qtc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
