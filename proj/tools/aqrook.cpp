// aqrook: exact (a;q)-rook calculator and identity checker.
//
// Exit codes: 0 success (and identity holds), 1 identity verified false,
// 2 usage or validation error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "aqrook/identities.hpp"
#include "aqrook/report_json.hpp"
#include "aqrook/suite.hpp"

namespace {

using namespace aqrook;

int resolve_workers(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("AQROOK_WORKERS")) {
        int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    return 1;
}

std::string latex_poly(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (const auto& [m, c] : p.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (c < 0)
            out += '-';
        else if (!leading)
            out += '+';
        leading = false;
        bool unit_mono = m.is_unit();
        if (mag != 1 || unit_mono) {
            if (mag.get_den() == 1)
                out += mag.get_str();
            else
                out += "\\tfrac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
        }
        auto power = [&out](const char* var, int e) {
            if (e == 0) return;
            out += var;
            if (e != 1) out += "^{" + std::to_string(e) + "}";
        };
        power("b", m.eb);
        power("s", m.es);
        power("Z", m.ez);
    }
    return out;
}

std::string latex_expr(const RatExpr& x) {
    auto [num, den] = x.canonical_pair();
    if (num.is_zero()) return "0";
    if (den.is_one()) return latex_poly(num);
    return "\\frac{" + latex_poly(num) + "}{" + latex_poly(den) + "}";
}

struct BoardArgs {
    std::string board_spec;
    std::string family_spec;

    AnyBoard resolve(bool want_shifted) const {
        if (!family_spec.empty()) {
            AnyBoard b = parse_family_spec(family_spec);
            if (want_shifted && !std::holds_alternative<ShiftedBoard>(b))
                throw InvalidFamilyParams("this model needs a shifted board family");
            if (!want_shifted && !std::holds_alternative<FerrersBoard>(b))
                throw InvalidFamilyParams("this model needs a Ferrers board");
            return b;
        }
        if (!board_spec.empty()) {
            if (want_shifted)
                throw InvalidFamilyParams("use --family matchfull:n or shifted:n:... here");
            return parse_board_spec(board_spec);
        }
        throw InvalidFamilyParams("no board given: use --board or --family");
    }
};

struct ComputeOptions {
    BoardArgs board;
    std::string model = "standard";
    std::optional<int> k;
    int alpha = 2;
    bool counts = false;
    std::string format = "text";
};

RatExpr compute_value(const ComputeOptions& opt, const AnyBoard& board, int k) {
    RookModel model = opt.model == "matching" ? RookModel::matching
                      : opt.model == "alpha"  ? RookModel::alpha
                                              : RookModel::standard;
    return compute_rook_number(board, model, k, opt.alpha).value;
}

long compute_count(const ComputeOptions& opt, const AnyBoard& board, int k) {
    if (opt.model == "matching")
        return static_cast<long>(matchings(std::get<ShiftedBoard>(board), k).size());
    const auto& fb = std::get<FerrersBoard>(board);
    if (opt.model == "alpha") return static_cast<long>(file_placements(fb, k).size());
    return static_cast<long>(nonattacking(fb, k).size());
}

int board_max_k(const ComputeOptions& opt, const AnyBoard& board) {
    if (opt.model == "matching") return max_rooks(std::get<ShiftedBoard>(board));
    const auto& fb = std::get<FerrersBoard>(board);
    return max_rooks(fb, opt.model == "alpha" ? Model::file : Model::nonattacking);
}

std::string board_string(const AnyBoard& board) {
    if (std::holds_alternative<FerrersBoard>(board))
        return std::get<FerrersBoard>(board).spec_string();
    return std::get<ShiftedBoard>(board).spec_string();
}

int cmd_compute(const ComputeOptions& opt) {
    AnyBoard board = opt.board.resolve(opt.model == "matching");
    std::vector<int> ks;
    if (opt.k)
        ks.push_back(*opt.k);
    else
        for (int k = 0; k <= board_max_k(opt, board); ++k) ks.push_back(k);

    nlohmann::ordered_json j;
    j["model"] = opt.model;
    j["board"] = board_string(board);
    if (opt.model == "alpha") j["alpha"] = opt.alpha;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int k : ks) {
        nlohmann::ordered_json row;
        row["k"] = k;
        if (opt.counts)
            row["count"] = compute_count(opt, board, k);
        else
            row["value"] = compute_value(opt, board, k).to_string();
        rows.push_back(row);
    }

    if (opt.format == "json") {
        if (opt.k) {
            j["k"] = *opt.k;
            j[opt.counts ? "count" : "value"] = rows[0][opt.counts ? "count" : "value"];
        } else {
            j["values"] = rows;
        }
        std::cout << j.dump() << "\n";
        return 0;
    }
    for (const auto& row : rows) {
        std::string value = opt.counts ? row["count"].dump() : row["value"].get<std::string>();
        if (opt.format == "latex" && !opt.counts)
            value = latex_expr(compute_value(opt, board, row["k"].get<int>()));
        if (ks.size() == 1)
            std::cout << value << "\n";
        else
            std::cout << "k=" << row["k"].get<int>() << ": " << value << "\n";
    }
    return 0;
}

int cmd_table(const ComputeOptions& opt) {
    AnyBoard board = opt.board.resolve(opt.model == "matching");
    int top = board_max_k(opt, board);
    if (opt.format == "json") {
        ComputeOptions all = opt;
        all.k.reset();
        return cmd_compute(all);
    }
    if (opt.format == "latex") {
        std::cout << "\\begin{tabular}{ll}\n";
        std::cout << "$k$ & value \\\\ \\hline\n";
        for (int k = 0; k <= top; ++k)
            std::cout << k << " & $" << latex_expr(compute_value(opt, board, k)) << "$ \\\\\n";
        std::cout << "\\end{tabular}\n";
        return 0;
    }
    for (int k = 0; k <= top; ++k)
        std::cout << "k=" << k << ": " << compute_value(opt, board, k).to_string() << "\n";
    return 0;
}

struct VerifyOptions {
    std::string identity;
    BoardArgs board;
    int n = 0;
    int r = 1;
    int alpha = 2;
    std::string format = "text";
};

VerificationReport dispatch_verify(const VerifyOptions& opt) {
    const std::string& id = opt.identity;
    if (id == "product-standard")
        return verify_product_standard(std::get<FerrersBoard>(opt.board.resolve(false)));
    if (id == "product-alpha")
        return verify_product_alpha(std::get<FerrersBoard>(opt.board.resolve(false)), opt.alpha);
    if (id == "product-matching")
        return verify_product_matching(std::get<ShiftedBoard>(opt.board.resolve(true)));
    if (id == "lah-product") return verify_lah_product(opt.n, opt.r);
    if (id == "qpfaff") return verify_qpfaff(opt.n, opt.r);
    if (id == "pfaff-standard") return verify_pfaff_standard_form(opt.n, opt.r);
    if (id == "jain") return verify_jain(opt.n);
    if (id == "whipple") return verify_whipple_special(opt.n);
    if (id == "matching-saalschutz") return verify_matching_saalschutz(opt.n);
    if (id == "reversal") return verify_reversal(opt.n);
    if (id == "binomial-recursions") return verify_binomial_recursions(opt.n);
    throw InvalidFamilyParams("unknown identity: " + id);
}

int cmd_verify(const VerifyOptions& opt) {
    VerificationReport report = dispatch_verify(opt);
    if (opt.format == "json") {
        std::cout << report_to_json(report) << "\n";
    } else {
        std::cout << report.identity;
        for (const auto& [k, v] : report.params) std::cout << " " << k << "=" << v;
        std::cout << ": " << (report.holds ? "holds" : "FAILS") << " ("
                  << report.elapsed_ms << " ms)\n";
        if (report.witness) {
            std::cout << "  lhs: " << report.witness->first << "\n";
            std::cout << "  rhs: " << report.witness->second << "\n";
        }
    }
    return report.holds ? 0 : 1;
}

struct SuiteOptions {
    int max_n = 0;  // 0 = default bounds
    int workers = 0;
    std::string format = "text";
};

int cmd_suite(const SuiteOptions& opt) {
    SuiteBounds bounds;
    if (opt.max_n > 0) bounds.clamp_to(opt.max_n);
    auto results = run_suite(bounds, resolve_workers(opt.workers));
    bool all_pass = true;
    if (opt.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            nlohmann::ordered_json j;
            j["criterion"] = r.index;
            j["name"] = r.name;
            j["pass"] = r.pass;
            j["checks"] = r.checks;
            j["elapsed_ms"] = r.elapsed_ms;
            j["failures"] = r.failures;
            arr.push_back(j);
        }
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            std::cout << "criterion " << r.index << ": " << (r.pass ? "PASS" : "FAIL") << " "
                      << r.name << " (" << r.checks << " checks, " << r.elapsed_ms / 1000.0
                      << " s)\n";
            for (const auto& f : r.failures) std::cout << "  " << f << "\n";
        }
        std::cout << (all_pass ? "all criteria pass" : "SUITE FAILED") << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact (a;q)-rook theory calculator and identity checker"};
    app.require_subcommand(1);

    ComputeOptions copt;
    CLI::App* compute = app.add_subcommand("compute", "rook numbers for one board");
    compute->add_option("--model", copt.model, "standard | alpha | matching")
        ->check(CLI::IsMember({"standard", "alpha", "matching"}));
    compute->add_option("--board", copt.board.board_spec, "comma-separated column heights");
    compute->add_option("--family", copt.board.family_spec,
                        "rect:l,m | stair:n | lah:n,r | matchfull:n | shifted:n:a1,...");
    int k_value = 0;
    CLI::Option* k_opt = compute->add_option("--k", k_value, "rook count (default: all k)");
    compute->add_option("--alpha", copt.alpha, "alpha parameter (alpha model)");
    compute->add_flag("--counts", copt.counts, "print placement counts instead of weights");
    compute->add_option("--format", copt.format, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    ComputeOptions topt;
    CLI::App* table = app.add_subcommand("table", "table of rook numbers over k");
    table->add_option("--model", topt.model, "standard | alpha | matching")
        ->check(CLI::IsMember({"standard", "alpha", "matching"}));
    table->add_option("--board", topt.board.board_spec, "comma-separated column heights");
    table->add_option("--family", topt.board.family_spec, "board family spec");
    table->add_option("--alpha", topt.alpha, "alpha parameter (alpha model)");
    table->add_option("--format", topt.format, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand("verify", "verify one identity instance");
    verify
        ->add_option("--identity", vopt.identity,
                     "product-standard | product-alpha | product-matching | lah-product | "
                     "qpfaff | pfaff-standard | jain | whipple | matching-saalschutz | "
                     "reversal | binomial-recursions")
        ->required();
    verify->add_option("--board", vopt.board.board_spec, "comma-separated column heights");
    verify->add_option("--family", vopt.board.family_spec, "board family spec");
    verify->add_option("--n", vopt.n, "size parameter");
    verify->add_option("--r", vopt.r, "shift parameter (qpfaff, lah)");
    verify->add_option("--alpha", vopt.alpha, "alpha parameter");
    verify->add_option("--format", vopt.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    SuiteOptions sopt;
    CLI::App* suite = app.add_subcommand("suite", "run the full verification sweep");
    suite->add_option("--max-n", sopt.max_n, "cap every grid bound at this value");
    suite->add_option("--workers", sopt.workers, "worker threads (default AQROOK_WORKERS or 1)");
    suite->add_option("--format", sopt.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*compute) {
            if (*k_opt) copt.k = k_value;
            return cmd_compute(copt);
        }
        if (*table) return cmd_table(topt);
        if (*verify) return cmd_verify(vopt);
        if (*suite) return cmd_suite(sopt);
    } catch (const aqrook::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
