#include "latcoh/verify.hpp"

#include "latcoh/errors.hpp"
#include "latcoh/resolution.hpp"
#include "latcoh/snf.hpp"
#include "latcoh/tate.hpp"
#include "latcoh/zoo.hpp"

#include <json.hpp>

#include <chrono>

namespace latcoh {

bool SuiteReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

int SuiteReport::failures() const {
    int n = 0;
    for (const auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

std::vector<std::string> verify_suite_names() {
    return {"prop6", "pj", "prop3", "lemma", "shift", "duality", "tube_mouths", "free_vanish"};
}

std::vector<CheckResult> check_table(const Lattice& M, const std::string& label, int n_min,
                                     int n_max, const std::function<FinAbGroup(int)>& expected) {
    std::vector<CheckResult> out;
    try {
        CohomTable t = cohomology_table(M, n_min, n_max, Method::both);
        for (int n = n_min; n <= n_max; ++n) {
            CheckResult c;
            c.description = label + " n=" + std::to_string(n);
            FinAbGroup want = expected(n);
            c.expected = want.to_string();
            c.computed = t.values.at(n).to_string();
            c.pass = want == t.values.at(n);
            out.push_back(std::move(c));
        }
    } catch (const Error& e) {
        for (int n = n_min; n <= n_max; ++n) {
            CheckResult c;
            c.description = label + " n=" + std::to_string(n);
            c.expected = expected(n).to_string();
            c.computed = std::string("error: ") + e.what();
            c.pass = false;
            out.push_back(std::move(c));
        }
    }
    return out;
}

namespace {

void append(std::vector<CheckResult>& into, std::vector<CheckResult> more) {
    for (auto& c : more) into.push_back(std::move(c));
}

CheckResult flag_check(const std::string& desc, const std::string& expected,
                       const std::string& computed) {
    CheckResult c;
    c.description = desc;
    c.expected = expected;
    c.computed = computed;
    c.pass = expected == computed;
    return c;
}

std::string iso_word(Iso v) {
    return v == Iso::yes ? "yes" : v == Iso::no ? "no" : "inconclusive";
}

CheckResult iso_check(const std::string& desc, const Lattice& a, const Lattice& b,
                      const std::string& expected) {
    try {
        return flag_check(desc, expected, iso_word(is_isomorphic(a, b).verdict));
    } catch (const Error& e) {
        return flag_check(desc, expected, std::string("error: ") + e.what());
    }
}

std::vector<CheckResult> suite_prop6(const VerifyConfig& cfg) {
    std::vector<CheckResult> checks;
    for (int u : {1, -1})
        for (int v : {1, -1}) {
            ZooName nm;
            nm.kind = ZooName::Kind::luv;
            nm.u = u;
            nm.v = v;
            append(checks, check_table(zoo_build(nm), "prop6 " + nm.to_string(), cfg.n_min,
                                       cfg.n_max, [&](int n) {
                                           return predict(Prediction::prop6(u, v, n));
                                       }));
        }
    return checks;
}

std::vector<CheckResult> suite_pj(const VerifyConfig& cfg) {
    std::vector<CheckResult> checks;
    for (int k = -cfg.k_max; k <= cfg.k_max; ++k) {
        {
            ZooName nm = ZooName::parse("A");
            nm.k = k;
            append(checks, check_table(zoo_build(nm), "pj " + nm.to_string(), cfg.n_min, cfg.n_max,
                                       [&](int n) {
                                           return predict(Prediction::thmpj_overring(k, n));
                                       }));
        }
        for (int u : {1, -1})
            for (int v : {1, -1}) {
                ZooName nm;
                nm.kind = ZooName::Kind::luv;
                nm.u = u;
                nm.v = v;
                nm.k = k;
                append(checks, check_table(zoo_build(nm), "pj " + nm.to_string(), cfg.n_min,
                                           cfg.n_max, [&](int n) {
                                               return predict(Prediction::thmpj_luv(u, v, k, n));
                                           }));
            }
    }
    return checks;
}

std::vector<CheckResult> suite_prop3(const VerifyConfig& cfg) {
    std::vector<CheckResult> checks;
    const std::pair<long, int> cases[] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
    for (auto [p, s] : cases) {
        GroupSpec G(p, std::vector<long>(static_cast<size_t>(s), p));
        Lattice A = minimal_overring(G);
        std::string label =
            "prop3 p=" + std::to_string(p) + " s=" + std::to_string(s) + " overring";
        append(checks, check_table(A, label, cfg.n_min, cfg.n_max, [&, p, s](int n) {
                   return predict(Prediction::prop3(p, s, n));
               }));
    }
    return checks;
}

std::vector<CheckResult> suite_lemma(const VerifyConfig& cfg) {
    std::vector<CheckResult> checks;
    const char* bases[] = {"A", "L+-", "L-+", "L--", "radR", "Na", "Nb", "Nab"};
    for (const char* b : bases)
        for (int k = -cfg.k_max; k <= cfg.k_max; ++k) {
            ZooName nm = ZooName::parse(b);
            nm.k = k;
            std::string desc = "lemma " + nm.to_string() + " h0 = r++ copies of F2";
            try {
                Lattice M = zoo_build(nm);
                FinAbGroup want = FinAbGroup::copies(r_multiplicities(M)[0], 2);
                checks.push_back(flag_check(desc, want.to_string(), h0(M).to_string()));
            } catch (const Error& e) {
                checks.push_back(flag_check(desc, "(r++ copies)", std::string("error: ") + e.what()));
            }
        }
    return checks;
}

std::vector<CheckResult> suite_shift(const VerifyConfig& cfg) {
    std::vector<CheckResult> checks;
    for (const auto& nm : zoo_base_names()) {
        std::string desc_base = "shift " + nm.to_string();
        try {
            Lattice M = zoo_build(nm);
            Lattice OM = M.rank == 0 ? M : syzygy(M);
            for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
                std::string desc = desc_base + " n=" + std::to_string(n);
                FinAbGroup lhs = tate_resolution(M, n);
                FinAbGroup rhs = tate_resolution(OM, n + 1);
                checks.push_back(flag_check(desc, lhs.to_string(), rhs.to_string()));
            }
        } catch (const Error& e) {
            checks.push_back(
                flag_check(desc_base, "shift identity", std::string("error: ") + e.what()));
        }
    }
    return checks;
}

std::vector<CheckResult> suite_duality(const VerifyConfig&) {
    std::vector<CheckResult> checks;
    Lattice A = zoo_build(ZooName::parse("A"));
    Lattice radR = zoo_build(ZooName::parse("radR"));
    checks.push_back(iso_check("duality Omega A = dual(A)", syzygy(A), dual(A), "yes"));
    checks.push_back(iso_check("duality dual(A) = radR", dual(A), radR, "yes"));
    checks.push_back(iso_check("duality Omega A = radR", syzygy(A), radR, "yes"));
    for (const auto& nm : zoo_base_names()) {
        Lattice M = zoo_build(nm);
        checks.push_back(flag_check("duality double dual " + nm.to_string() + " bit-exact", "yes",
                                    dual(dual(M)).action == M.action ? "yes" : "no"));
    }
    return checks;
}

std::vector<CheckResult> suite_tube_mouths(const VerifyConfig& cfg) {
    std::vector<CheckResult> checks;
    const char* names[] = {"Na", "Nb", "Nab"};
    for (const char* s : names) {
        Lattice N = zoo_build(ZooName::parse(s));
        std::string label(s);
        // mouth table matches the odd-level i=2 row at level 1
        append(checks, check_table(N, "tube_mouths " + label, cfg.n_min, cfg.n_max, [&](int n) {
                   return predict(Prediction::tube_special(2, 1, n));
               }));
        // its syzygy matches the i=1 row
        Lattice ON = syzygy(N);
        append(checks,
               check_table(ON, "tube_mouths Omega " + label, cfg.n_min, cfg.n_max, [&](int n) {
                   return predict(Prediction::tube_special(1, 1, n));
               }));
        // tau period 2
        checks.push_back(
            iso_check("tube_mouths tau^2 " + label + " = " + label, ar_translate(N, 2), N, "yes"));
        // r++ data at the mouths
        checks.push_back(flag_check("tube_mouths r++ " + label, "0",
                                    std::to_string(r_multiplicities(N)[0])));
        checks.push_back(flag_check("tube_mouths r++ Omega " + label, "1",
                                    std::to_string(r_multiplicities(ON)[0])));
    }
    return checks;
}

std::vector<CheckResult> suite_free_vanish(const VerifyConfig& cfg) {
    std::vector<CheckResult> checks;
    GroupSpec K = GroupSpec::klein();
    for (int d : {1, 2}) {
        Lattice F = free_lattice(K, d);
        append(checks, check_table(F, "free_vanish R^" + std::to_string(d), cfg.n_min, cfg.n_max,
                                   [](int) { return FinAbGroup::trivial(); }));
    }
    return checks;
}

} // namespace

SuiteReport verify(const std::string& suite, const VerifyConfig& cfg) {
    if (cfg.n_min > cfg.n_max) throw BadParameters("verify: n_min exceeds n_max");
    if (cfg.k_max < 0) throw BadParameters("verify: k_max must be nonnegative");
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport r;
    r.suite = suite;
    if (suite == "prop6")
        r.checks = suite_prop6(cfg);
    else if (suite == "pj")
        r.checks = suite_pj(cfg);
    else if (suite == "prop3")
        r.checks = suite_prop3(cfg);
    else if (suite == "lemma")
        r.checks = suite_lemma(cfg);
    else if (suite == "shift")
        r.checks = suite_shift(cfg);
    else if (suite == "duality")
        r.checks = suite_duality(cfg);
    else if (suite == "tube_mouths")
        r.checks = suite_tube_mouths(cfg);
    else if (suite == "free_vanish")
        r.checks = suite_free_vanish(cfg);
    else if (suite == "all") {
        for (const auto& name : verify_suite_names()) {
            SuiteReport sub = verify(name, cfg);
            append(r.checks, std::move(sub.checks));
        }
    } else {
        throw BadParameters("unknown verify suite: \"" + suite + "\"");
    }
    auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

std::string report_to_json(const SuiteReport& r, bool include_elapsed) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["pass"] = r.pass();
    j["total"] = r.checks.size();
    j["failures"] = r.failures();
    if (include_elapsed) j["elapsed_ms"] = r.elapsed_ms;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["description"] = c.description;
        jc["expected"] = c.expected;
        jc["computed"] = c.computed;
        jc["pass"] = c.pass;
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    return j.dump(2) + "\n";
}

} // namespace latcoh
