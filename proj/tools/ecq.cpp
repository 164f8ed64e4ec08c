// ecq: exact classification of rational elliptic curves by torsion and
// mod-2 Galois image, family generators, and the x^2 + 3y^2 = 4z^3
// parametrization.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "ecq/families.hpp"
#include "ecq/fermat.hpp"
#include "ecq/scan.hpp"
#include "ecq/verify.hpp"

namespace {

using namespace ecq;

constexpr int kExitUsage = 1;
constexpr int kExitInvalidCurve = 2;
constexpr int kExitVerifyFailed = 3;

std::vector<Rat> parse_rat_list(const std::string& csv, size_t expect) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        Rat q(tok);
        q.canonicalize();
        out.push_back(q);
    }
    if (out.size() != expect)
        throw CLI::ValidationError("expected " + std::to_string(expect) + " comma-separated values");
    return out;
}

std::vector<Int> parse_int_list(const std::string& csv, size_t expect) {
    std::vector<Int> out;
    for (const Rat& q : parse_rat_list(csv, expect)) {
        if (q.get_den() != 1) throw CLI::ValidationError("expected integers");
        out.push_back(q.get_num());
    }
    return out;
}

// --short A,B / --long a1,a2,a3,a4,a6 to an integral short model
ShortModel model_from_flags(const std::string& short_csv, const std::string& long_csv) {
    if (!short_csv.empty() && !long_csv.empty())
        throw CLI::ValidationError("--short and --long are mutually exclusive");
    if (!short_csv.empty()) {
        auto ab = parse_int_list(short_csv, 2);
        return ShortModel(ab[0], ab[1]);
    }
    if (!long_csv.empty()) {
        auto a = parse_rat_list(long_csv, 5);
        return long_to_short(LongModel(a[0], a[1], a[2], a[3], a[4]));
    }
    throw CLI::ValidationError("a curve is required: --short A,B or --long a1,a2,a3,a4,a6");
}

void print_report(const CurveReport& r, bool json) {
    if (json) {
        std::cout << report_json(r) << "\n";
        return;
    }
    std::cout << r.model.str() << "\n";
    std::cout << "discriminant        " << r.disc.get_str()
              << (r.disc_square ? "  (square, sqrt = " + r.sqrt_disc->get_str() + ")"
                                : "  (not a square)")
              << "\n";
    std::cout << "two-torsion order   " << r.two_torsion << "\n";
    std::cout << "mod-2 image         " << to_string(r.image) << "\n";
    std::cout << "torsion             " << r.torsion.name() << "\n";
    for (const auto& g : r.torsion.generators)
        std::cout << "  generator " << g.str() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact arithmetic for elliptic curves over Q: torsion subgroups, mod-2 Galois images,\n"
        "square-discriminant families, and the parametrization of x^2 + 3y^2 = 4z^3.\n"
        "Integer factorization is trial division plus Pollard rho: inputs whose discriminant\n"
        "or z-coordinate has a large hard factor (beyond ~120 bits) may be slow."};
    app.require_subcommand(1);

    std::string short_csv, long_csv, input_path, fixtures_dir = "fixtures";
    bool json = false;

    auto add_curve_flags = [&](CLI::App* cmd) {
        cmd->add_option("--short", short_csv, "integral short model A,B");
        cmd->add_option("--long", long_csv, "long model a1,a2,a3,a4,a6");
        cmd->add_flag("--json", json, "JSON output");
    };

    auto* classify = app.add_subcommand("classify", "mod-2 Galois image of a curve");
    add_curve_flags(classify);
    auto* torsion_cmd = app.add_subcommand("torsion", "torsion subgroup with witnesses");
    add_curve_flags(torsion_cmd);

    auto* family = app.add_subcommand("family", "generate a family member");
    std::string member;
    std::string alpha_str = "1", params_csv = "1,0,0,1", m_str = "1", beta_str = "1";
    family->add_option("which", member, "e3|e5|e7|e9|e1|e2|ealt|simplest")->required();
    family->add_option("--alpha", alpha_str, "parameter for e3/e5/e7/e9 (rational)");
    family->add_option("--beta", beta_str, "second parameter for e3 (integer)");
    family->add_option("--params", params_csv, "a,b,c,d for e1/e2/ealt");
    family->add_option("--m", m_str, "parameter for simplest");
    family->add_flag("--json", json, "JSON output");

    auto* fermat_cmd = app.add_subcommand("fermat", "the equation x^2 + 3y^2 = 4z^3");
    std::string fermat_op, xyz_csv = "2,0,1";
    long max_z = 10;
    fermat_cmd->add_option("op", fermat_op, "solve|param|decompose")->required();
    fermat_cmd->add_option("--max-z", max_z, "bound for solve");
    fermat_cmd->add_option("--params", params_csv, "a,b,c,d for param");
    fermat_cmd->add_option("--xyz", xyz_csv, "x,y,z for decompose");
    fermat_cmd->add_flag("--json", json, "JSON output");

    auto* dsearch_cmd = app.add_subcommand("dsearch", "square values of f_n up to a height");
    int dn = 5;
    long height = 100;
    dsearch_cmd->add_option("--n", dn, "5, 7 or 9")->required();
    dsearch_cmd->add_option("--height", height, "naive height bound");
    dsearch_cmd->add_flag("--json", json, "JSON output");

    auto* scan_cmd = app.add_subcommand("scan", "batch-classify a curve file");
    scan_cmd->add_option("--input", input_path, "curve file")->required();
    scan_cmd->add_flag("--json", json, "JSON output");

    auto* verify_cmd = app.add_subcommand("verify", "machine verification suites");
    std::string suite_name = "all";
    verify_cmd->add_option("--suite", suite_name, "table|families|fermat|quotient|all");
    verify_cmd->add_option("--fixtures", fixtures_dir, "fixture directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (classify->parsed() || torsion_cmd->parsed()) {
            auto report = classify_curve(model_from_flags(short_csv, long_csv));
            print_report(report, json);
            return 0;
        }
        if (family->parsed()) {
            Rat alpha(alpha_str);
            alpha.canonicalize();
            ShortModel e = [&]() -> ShortModel {
                if (member == "e3") {
                    if (alpha.get_den() != 1) throw CLI::ValidationError("e3 takes integer alpha");
                    Rat beta(beta_str);
                    beta.canonicalize();
                    return e3(alpha.get_num(), beta.get_num());
                }
                if (member == "e5") return e_n(5, alpha);
                if (member == "e7") return e_n(7, alpha);
                if (member == "e9") return e_n(9, alpha);
                if (member == "e1" || member == "e2") {
                    auto v = parse_int_list(params_csv, 4);
                    return e_sq3(member == "e1" ? 1 : 2, {v[0], v[1], v[2], v[3]});
                }
                if (member == "ealt") {
                    auto v = parse_int_list(params_csv, 4);
                    return e_alt({v[0], v[1], v[2], v[3]});
                }
                if (member == "simplest") return simplest_cubic(Int(m_str));
                throw CLI::ValidationError("unknown family: " + member);
            }();
            print_report(classify_curve(e), json);
            return 0;
        }
        if (fermat_cmd->parsed()) {
            if (fermat_op == "solve") {
                for (const auto& s : enumerate_solutions(Int(max_z)))
                    std::cout << s.str() << "\n";
                return 0;
            }
            if (fermat_op == "param") {
                auto v = parse_int_list(params_csv, 4);
                std::cout << param_forward({v[0], v[1], v[2], v[3]}).str() << "\n";
                return 0;
            }
            if (fermat_op == "decompose") {
                auto v = parse_int_list(xyz_csv, 3);
                FermatSolution s(v[0], v[1], v[2]);
                auto p = decompose(s);
                std::cout << "params " << p.str() << "\n";
                std::cout << "forward " << param_forward(p).str() << "\n";
                return 0;
            }
            throw CLI::ValidationError("unknown fermat op: " + fermat_op);
        }
        if (dsearch_cmd->parsed()) {
            for (const auto& [alpha, z] : d_search(dn, height))
                std::cout << "alpha = " << alpha.get_str() << ", z = " << z.get_str() << "\n";
            return 0;
        }
        if (scan_cmd->parsed()) {
            auto parsed = parse_curve_file(input_path);
            auto rep = run_scan(parsed.records);
            rep.diagnostics.insert(rep.diagnostics.begin(), parsed.diagnostics.begin(),
                                   parsed.diagnostics.end());
            std::cout << (json ? scan_json(rep) : scan_text(rep)) << "\n";
            return 0;
        }
        if (verify_cmd->parsed()) {
            auto suite = suite_from_name(suite_name);
            if (!suite) throw CLI::ValidationError("unknown suite: " + suite_name);
            auto rep = verify_suites(*suite, fixtures_dir);
            std::cout << rep.render();
            return rep.all_pass() ? 0 : kExitVerifyFailed;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidCurve;
    }
    return kExitUsage;
}
