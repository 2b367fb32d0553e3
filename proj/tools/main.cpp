#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerkind/combinatorics.hpp"
#include "eulerkind/errata.hpp"
#include "eulerkind/euler.hpp"
#include "eulerkind/families.hpp"
#include "eulerkind/identities.hpp"
#include "eulerkind/rooks.hpp"
#include "eulerkind/table.hpp"
#include "eulerkind/wfamily.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using eulerkind::Rational;

std::size_t default_order() {
    if (const char* env = std::getenv("EULERKIND_ORDER")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw CLI::ValidationError("EULERKIND_ORDER must be a positive integer");
    }
    return 12;
}

struct Params {
    std::string lambda = "1";
    std::string a = "1";
    std::string b = "0";
    std::string x = "0";

    eulerkind::FamilyParams parsed() const {
        return {Rational::from_string(lambda), Rational::from_string(a),
                Rational::from_string(b), Rational::from_string(x)};
    }
};

void add_param_flags(CLI::App* cmd, Params& p) {
    cmd->add_option("--lambda", p.lambda, "lambda as p/q (default 1)");
    cmd->add_option("--a", p.a, "a as p/q (default 1)");
    cmd->add_option("--b", p.b, "b as p/q (default 0)");
    cmd->add_option("--x", p.x, "x as p/q (default 0)");
}

Rational value_of(const std::string& family, unsigned n, unsigned k,
                  const eulerkind::FamilyParams& p) {
    using namespace eulerkind;
    if (family == "y1") return y1(n, k, p.lambda);
    if (family == "y2") return y2(n, k, p.lambda);
    if (family == "y3") return y3(n, k, p.lambda, p.a, p.b);
    if (family == "B") return big_B(n, k);
    if (family == "S2") return stirling2(n, k);
    if (family == "S2L") return lambda_stirling2(n, k, p.lambda);
    if (family == "array") return array_poly(n, k, p.x, p.lambda);
    if (family == "T") return central_T(n, k);
    if (family == "bernstein") return bernstein(k, n, p.x);
    if (family == "E1neg") return euler1_neg(n, k, p.lambda);
    if (family == "E2neg") return euler2_neg_num(n, k, p.lambda);
    if (family == "E2negPoly") return euler2_neg_poly(n, k, p.x, p.lambda);
    if (family == "W") return w_n(n, p.lambda);
    if (family == "Wk") return w_order_k(n, k, p.lambda);
    if (family == "Wnegk") return w_neg_k(n, k, p.lambda);
    if (family == "Wpoly") return w_poly(n, k, p.x, p.lambda);
    throw CLI::ValidationError("unknown family: " + family);
}

const std::vector<std::string> kValueFamilies = {
    "y1", "y2", "y3", "B", "S2", "S2L", "array", "T", "bernstein",
    "E1neg", "E2neg", "E2negPoly", "W", "Wk", "Wnegk", "Wpoly"};

const std::vector<std::string> kTableFamilies = {
    "y1", "y2", "y3", "B", "S2", "S2L", "array", "T",
    "E1neg", "E2neg", "E2negPoly", "Wk", "Wnegk", "Wpoly"};

const std::vector<std::string> kSeriesFamilies = {
    "y1", "y2", "y3", "S2L", "array", "T", "E1neg", "E2neg", "W", "Wk"};

bool family_uses_x(const std::string& family) {
    return family == "array" || family == "E2negPoly" || family == "Wpoly" ||
           family == "bernstein";
}

bool family_uses_ab(const std::string& family) { return family == "y3"; }

bool family_uses_lambda(const std::string& family) {
    return family != "B" && family != "S2" && family != "T" && family != "bernstein";
}

eulerkind::NumberTable build_table(const std::string& family, unsigned n_max, unsigned k_max,
                                   const eulerkind::FamilyParams& p) {
    eulerkind::NumberTable t;
    t.family = family;
    if (family_uses_lambda(family)) t.params.emplace_back("lambda", p.lambda.to_string());
    if (family_uses_ab(family)) {
        t.params.emplace_back("a", p.a.to_string());
        t.params.emplace_back("b", p.b.to_string());
    }
    if (family_uses_x(family)) t.params.emplace_back("x", p.x.to_string());
    t.n_min = 0;
    t.n_max = static_cast<long>(n_max);
    t.k_min = 0;
    t.k_max = static_cast<long>(k_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        std::vector<Rational> row;
        row.reserve(k_max + 1);
        for (unsigned k = 0; k <= k_max; ++k) row.push_back(value_of(family, n, k, p));
        t.cells.push_back(std::move(row));
    }
    return t;
}

eulerkind::TruncatedSeries series_of(const std::string& family, unsigned k,
                                     const eulerkind::FamilyParams& p, std::size_t order) {
    using namespace eulerkind;
    if (family == "y1") return y1_series(k, p.lambda, order);
    if (family == "y2") return y2_series(k, p.lambda, order);
    if (family == "y3") return y3_series(k, p.lambda, p.a, p.b, order);
    if (family == "S2L") return lambda_stirling2_series(k, p.lambda, order);
    if (family == "array") return array_poly_series(k, p.x, p.lambda, order);
    if (family == "T") return central_T_series(k, order);
    if (family == "E1neg") return euler1_neg_series(k, p.lambda, order);
    if (family == "E2neg") return euler2_neg_series(k, p.lambda, order);
    if (family == "W") return w_series(p.lambda, order);
    if (family == "Wk") return w_order_k_series(k, p.lambda, order);
    throw CLI::ValidationError("unknown series family: " + family);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw CLI::ValidationError("cannot open output file: " + out_path);
    f << text;
}

std::string status_word(eulerkind::CheckStatus s) {
    return s == eulerkind::CheckStatus::Verified ? "verified" : "FAILED";
}

std::string status_json(eulerkind::CheckStatus s) {
    return s == eulerkind::CheckStatus::Verified ? "verified" : "failed";
}

std::string render_reports_plain(const std::vector<eulerkind::IdentityReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << r.id << ": literal " << status_word(r.literal);
        if (r.literal_counterexample)
            os << " at " << r.literal_counterexample->point << ": lhs "
               << r.literal_counterexample->lhs << ", rhs " << r.literal_counterexample->rhs;
        os << '\n';
        if (r.corrected) {
            os << "    corrected " << status_word(*r.corrected);
            if (r.corrected_counterexample)
                os << " at " << r.corrected_counterexample->point;
            os << ": " << r.corrected_statement << '\n';
        }
        if (!r.as_expected()) os << "    UNEXPECTED OUTCOME (expected literal "
                                 << status_word(r.expected_literal) << ")\n";
    }
    return os.str();
}

nlohmann::ordered_json counterexample_json(const std::optional<eulerkind::Counterexample>& c) {
    if (!c) return nullptr;
    nlohmann::ordered_json j;
    j["point"] = c->point;
    j["lhs"] = c->lhs;
    j["rhs"] = c->rhs;
    return j;
}

std::string render_reports_json(const std::vector<eulerkind::IdentityReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["id"] = r.id;
        j["statement"] = r.statement;
        j["literal"] = status_json(r.literal);
        j["literal_counterexample"] = counterexample_json(r.literal_counterexample);
        if (r.corrected) {
            j["corrected"] = status_json(*r.corrected);
            j["corrected_statement"] = r.corrected_statement;
            j["corrected_counterexample"] = counterexample_json(r.corrected_counterexample);
        }
        j["expected_literal"] = status_json(r.expected_literal);
        j["as_expected"] = r.as_expected();
        j["grid"] = r.grid_summary;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

} // namespace

int run(int argc, char** argv) {
    CLI::App app{"eulerkind: exact computation and verification of Euler-type number families"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough(); // global --format/--out may follow the subcommand

    std::string format = "plain";
    std::string out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to FILE instead of stdout");

    // value
    auto* value_cmd = app.add_subcommand("value", "compute a single exact value");
    std::string value_family;
    unsigned value_n = 0, value_k = 0;
    Params value_params;
    value_cmd->add_option("family", value_family, "family name")
        ->required()
        ->check(CLI::IsMember(kValueFamilies));
    value_cmd->add_option("-n", value_n, "row index n")->required();
    value_cmd->add_option("-k", value_k, "column index k (index m for bernstein)");
    add_param_flags(value_cmd, value_params);

    // table
    auto* table_cmd = app.add_subcommand("table", "emit an (n, k) grid of exact values");
    std::string table_family;
    unsigned table_nmax = 0, table_kmax = 0;
    Params table_params;
    table_cmd->add_option("family", table_family, "family name")
        ->required()
        ->check(CLI::IsMember(kTableFamilies));
    table_cmd->add_option("--nmax", table_nmax, "largest n")->required();
    table_cmd->add_option("--kmax", table_kmax, "largest k")->required();
    add_param_flags(table_cmd, table_params);

    // series
    auto* series_cmd = app.add_subcommand("series", "print ordinary t^n coefficients of a "
                                                    "generating function");
    std::string series_family;
    unsigned series_k = 0;
    std::optional<std::size_t> series_order;
    Params series_params;
    series_cmd->add_option("family", series_family, "family name")
        ->required()
        ->check(CLI::IsMember(kSeriesFamilies));
    series_cmd->add_option("-k", series_k, "order index k");
    series_cmd->add_option("--order", series_order, "truncation order (default EULERKIND_ORDER or 12)");
    add_param_flags(series_cmd, series_params);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the identity suite");
    std::vector<std::string> verify_ids;
    std::optional<std::size_t> verify_order;
    verify_cmd->add_option("ids", verify_ids, "identity ids (default: all)");
    verify_cmd->add_option("--order", verify_order, "oracle order (default EULERKIND_ORDER or 12)");

    // errata
    auto* errata_cmd = app.add_subcommand("errata", "list recorded discrepancies with witnesses");
    bool only_verified = false;
    errata_cmd->add_flag("--only-verified", only_verified,
                         "print nothing (all listed entries are discrepancies)");

    // rooks
    auto* rooks_cmd = app.add_subcommand("rooks", "count non-attacking rook placements");
    std::string board;
    unsigned rooks_n = 1, rooks_m = 1, rooks_k = 0;
    rooks_cmd->add_option("board", board, "board kind")->required()->check(CLI::IsMember({"2d", "3d"}));
    rooks_cmd->add_option("-n", rooks_n, "side of the 2d board");
    rooks_cmd->add_option("-m", rooks_m, "size of the 3d triangle board");
    rooks_cmd->add_option("-k", rooks_k, "number of rooks")->required();

    // conjecture
    auto* conj_cmd = app.add_subcommand("conjecture", "fit and verify the B(d;k) coefficient shape");
    unsigned conj_d = 1, conj_kverify = 30;
    conj_cmd->add_option("-d", conj_d, "exponent d")->required()->check(CLI::PositiveNumber);
    conj_cmd->add_option("--kverify", conj_kverify, "verify the fit for all k up to this bound")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help text or the parse error
        return code == 0 ? 0 : 2;
    }

    if (*value_cmd) {
        emit(value_of(value_family, value_n, value_k, value_params.parsed()).to_string() + "\n",
             out_path);
        return 0;
    }

    if (*table_cmd) {
        const auto t = build_table(table_family, table_nmax, table_kmax, table_params.parsed());
        if (format == "json")
            emit(t.to_json(), out_path);
        else if (format == "csv")
            emit(t.to_csv(), out_path);
        else
            emit(t.to_csv(), out_path); // plain tables read fine as CSV
        return 0;
    }

    if (*series_cmd) {
        const std::size_t order = series_order.value_or(default_order());
        const auto s = series_of(series_family, series_k, series_params.parsed(), order);
        if (format == "json") {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& c : s.coeffs()) arr.push_back(c.to_string());
            emit(arr.dump() + "\n", out_path);
        } else {
            std::ostringstream os;
            for (std::size_t i = 0; i < s.coeffs().size(); ++i)
                os << (i ? " " : "") << s.coeffs()[i].to_string();
            os << '\n';
            emit(os.str(), out_path);
        }
        return 0;
    }

    if (*verify_cmd) {
        const auto grid = eulerkind::IdentityGrid::defaults(verify_order.value_or(default_order()));
        std::vector<eulerkind::IdentityReport> reports;
        if (verify_ids.empty()) {
            reports = eulerkind::verify_all(grid);
        } else {
            for (const auto& id : verify_ids) reports.push_back(eulerkind::verify_identity(id, grid));
        }
        emit(format == "json" ? render_reports_json(reports) : render_reports_plain(reports),
             out_path);
        for (const auto& r : reports)
            if (!r.as_expected()) return 1;
        return 0;
    }

    if (*errata_cmd) {
        if (only_verified) {
            emit("", out_path);
            return 0;
        }
        const auto entries = eulerkind::collect_errata();
        if (format == "json") {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& e : entries) {
                nlohmann::ordered_json j;
                j["id"] = e.id;
                j["subject"] = e.subject;
                j["claimed"] = e.claimed;
                j["computed"] = e.computed;
                arr.push_back(std::move(j));
            }
            emit(arr.dump(2) + "\n", out_path);
        } else {
            std::ostringstream os;
            for (const auto& e : entries)
                os << e.id << ": " << e.subject << "\n  stated:   " << e.claimed
                   << "\n  computed: " << e.computed << "\n";
            emit(os.str(), out_path);
        }
        return 0;
    }

    if (*rooks_cmd) {
        const eulerkind::Int count = board == "2d" ? eulerkind::rooks_2d(rooks_n, rooks_k)
                                                   : eulerkind::rooks_3d_triangle(rooks_m, rooks_k);
        emit(count.get_str() + "\n", out_path);
        return 0;
    }

    if (*conj_cmd) {
        const auto fit = eulerkind::conjecture_fit(conj_d, conj_kverify);
        std::ostringstream os;
        if (format == "json") {
            nlohmann::ordered_json j;
            j["d"] = fit.d;
            nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
            for (const auto& c : fit.coefficients) coeffs.push_back(c.to_string());
            j["coefficients"] = coeffs;
            j["verified_up_to"] = fit.verified_up_to;
            j["formula_verified"] = fit.formula_verified;
            j["all_integer"] = fit.all_integer;
            j["all_positive"] = fit.all_positive;
            j["singular"] = fit.singular;
            os << j.dump(2) << '\n';
        } else {
            os << "d=" << fit.d;
            for (std::size_t i = 0; i < fit.coefficients.size(); ++i)
                os << " x" << (i + 1) << "=" << fit.coefficients[i].to_string();
            os << " verified_up_to=" << fit.verified_up_to
               << " formula_verified=" << (fit.formula_verified ? "true" : "false")
               << " all_integer=" << (fit.all_integer ? "true" : "false")
               << " all_positive=" << (fit.all_positive ? "true" : "false");
            if (fit.singular) os << " singular=true";
            os << '\n';
        }
        emit(os.str(), out_path);
        return 0;
    }

    return 0;
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
