#include "latcoh/cli.hpp"

#include "latcoh/errors.hpp"
#include "latcoh/json_io.hpp"
#include "latcoh/resolution.hpp"
#include "latcoh/tate.hpp"
#include "latcoh/verify.hpp"
#include "latcoh/zoo.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

namespace latcoh {

namespace {

Lattice load_lattice(const std::string& spec) {
    bool pathlike =
        spec.find('/') != std::string::npos || spec.find(".json") != std::string::npos;
    if (!pathlike) {
        try {
            return zoo_build(ZooName::parse(spec));
        } catch (const BadParameters&) {
            std::ifstream probe(spec);
            if (!probe) throw;
        }
    }
    return lattice_from_file(spec);
}

void print_table(std::ostream& os, const CohomTable& t, const std::string& format) {
    if (format == "table") {
        for (int n = t.n_min; n <= t.n_max; ++n)
            os << n << ": " << t.values.at(n).pretty() << "\n";
    } else if (format == "csv") {
        os << "n,H\n";
        for (int n = t.n_min; n <= t.n_max; ++n)
            os << n << ",\"" << t.values.at(n).to_string() << "\"\n";
    } else {
        nlohmann::ordered_json j;
        j["lattice"] = t.lattice_id;
        j["n_min"] = t.n_min;
        j["n_max"] = t.n_max;
        nlohmann::ordered_json vals = nlohmann::ordered_json::object();
        for (int n = t.n_min; n <= t.n_max; ++n) {
            nlohmann::ordered_json divs = nlohmann::ordered_json::array();
            for (const auto& d : t.values.at(n).divisors) divs.push_back(d.get_si());
            vals[std::to_string(n)] = std::move(divs);
        }
        j["values"] = std::move(vals);
        os << j.dump(2) << "\n";
    }
}

} // namespace

int cli_main(std::vector<std::string> args) {
    CLI::App app{"Tate cohomology of integral lattices over finite abelian p-groups"};
    app.require_subcommand(1);

    std::string lat_spec, lat_a, lat_b, out_path, zoo_name;
    std::string method = "both", format = "table", suite = "all";
    int n_min = -6, n_max = 6, k_max = 3, power = 0;

    CLI::App* cmd_coh = app.add_subcommand("cohomology", "Compute a cohomology table");
    cmd_coh->add_option("--lattice", lat_spec, "zoo name or lattice JSON file")->required();
    cmd_coh->add_option("--min", n_min, "lowest degree");
    cmd_coh->add_option("--max", n_max, "highest degree");
    cmd_coh->add_option("--method", method, "resolution|shift|both")
        ->check(CLI::IsMember({"resolution", "shift", "both"}));
    cmd_coh->add_option("--format", format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    CLI::App* cmd_tr = app.add_subcommand("translate", "Apply the AR translate tau^k");
    cmd_tr->add_option("--lattice", lat_spec, "zoo name or lattice JSON file")->required();
    cmd_tr->add_option("--power", power, "translate power k")->required();
    cmd_tr->add_option("--out", out_path, "output JSON file")->required();

    CLI::App* cmd_rank = app.add_subcommand("rank", "Print rank and character multiplicities");
    cmd_rank->add_option("--lattice", lat_spec, "zoo name or lattice JSON file")->required();

    CLI::App* cmd_iso = app.add_subcommand("isomorphic", "Test p-adic isomorphism");
    cmd_iso->add_option("--a", lat_a, "first lattice")->required();
    cmd_iso->add_option("--b", lat_b, "second lattice")->required();

    CLI::App* cmd_zoo = app.add_subcommand("zoo", "Named lattices");
    cmd_zoo->require_subcommand(1);
    CLI::App* cmd_zoo_list = cmd_zoo->add_subcommand("list", "List zoo names");
    CLI::App* cmd_zoo_export = cmd_zoo->add_subcommand("export", "Write a zoo lattice as JSON");
    cmd_zoo_export->add_option("name", zoo_name, "zoo name, e.g. A@-2")->required();
    cmd_zoo_export->add_option("--out", out_path, "output JSON file")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
    cmd_verify->add_option("--suite", suite,
                           "prop6|pj|prop3|lemma|shift|duality|tube_mouths|free_vanish|all");
    cmd_verify->add_option("--nmin", n_min, "lowest degree");
    cmd_verify->add_option("--nmax", n_max, "highest degree");
    cmd_verify->add_option("--kmax", k_max, "largest translate power");
    cmd_verify->add_option("--out", out_path, "write the JSON report here instead of stdout");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_coh)) {
            Lattice M = load_lattice(lat_spec);
            Method m = method == "resolution" ? Method::resolution
                       : method == "shift"    ? Method::shift
                                              : Method::both;
            CohomTable t = cohomology_table(M, n_min, n_max, m, lat_spec);
            print_table(std::cout, t, format);
            return 0;
        }
        if (app.got_subcommand(cmd_tr)) {
            Lattice M = load_lattice(lat_spec);
            Lattice T = power == 0 ? M : ar_translate(M, power);
            lattice_to_file(T, out_path);
            std::cout << "wrote " << out_path << " (rank " << T.rank << ")\n";
            return 0;
        }
        if (app.got_subcommand(cmd_rank)) {
            Lattice M = load_lattice(lat_spec);
            std::cout << "rank: " << M.rank << "\n";
            if (M.group.is_klein()) {
                auto r = r_multiplicities(M);
                std::cout << "r++: " << r[0] << "\nr+-: " << r[1] << "\nr-+: " << r[2]
                          << "\nr--: " << r[3] << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(cmd_iso)) {
            Lattice A = load_lattice(lat_a);
            Lattice B = load_lattice(lat_b);
            IsoResult r = is_isomorphic(A, B);
            if (r.verdict == Iso::yes) {
                long p = A.group.p;
                long dm = r.witness->matrix.det_mod(p);
                std::cout << "yes\n";
                if (p == 2)
                    std::cout << "witness determinant parity: odd\n";
                else
                    std::cout << "witness determinant mod " << p << ": " << dm << "\n";
                return 0;
            }
            if (r.verdict == Iso::no) {
                std::cout << "no\n";
                return 1;
            }
            std::cout << "inconclusive\n";
            return 3;
        }
        if (app.got_subcommand(cmd_zoo)) {
            if (cmd_zoo->got_subcommand(cmd_zoo_list)) {
                for (const auto& nm : zoo_base_names())
                    std::cout << nm.to_string() << "\trank " << zoo_build(nm).rank << "\n";
                return 0;
            }
            Lattice M = zoo_build(ZooName::parse(zoo_name));
            lattice_to_file(M, out_path);
            std::cout << "wrote " << out_path << " (rank " << M.rank << ")\n";
            return 0;
        }
        if (app.got_subcommand(cmd_verify)) {
            VerifyConfig cfg;
            cfg.n_min = n_min;
            cfg.n_max = n_max;
            cfg.k_max = k_max;
            SuiteReport r = verify(suite, cfg);
            std::string json = report_to_json(r);
            if (out_path.empty())
                std::cout << json;
            else {
                std::ofstream out(out_path);
                if (!out) throw BadParameters("cannot write report file: " + out_path);
                out << json;
                std::cout << (r.pass() ? "pass" : "FAIL") << " " << r.suite << ": "
                          << (r.checks.size() - static_cast<size_t>(r.failures())) << "/"
                          << r.checks.size() << " checks, report in " << out_path << "\n";
            }
            return r.pass() ? 0 : 1;
        }
    } catch (const SizeLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const MethodDisagreement& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace latcoh
