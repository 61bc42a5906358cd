#include "latcoh/json_io.hpp"

#include "latcoh/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace latcoh {

using nlohmann::ordered_json;

std::string lattice_to_json(const Lattice& L) {
    ordered_json j;
    j["group"]["p"] = L.group.p;
    j["group"]["orders"] = L.group.orders;
    j["rank"] = L.rank;
    ordered_json act = ordered_json::array();
    for (const auto& A : L.action) {
        ordered_json flat = ordered_json::array();
        for (int i = 0; i < A.rows(); ++i)
            for (int k = 0; k < A.cols(); ++k) {
                const mpz_class& x = A.at(i, k);
                if (!x.fits_slong_p())
                    throw BadParameters("lattice_to_json: matrix entry too large for JSON");
                flat.push_back(x.get_si());
            }
        act.push_back(std::move(flat));
    }
    j["action"] = std::move(act);
    return j.dump(2) + "\n";
}

namespace {

long expect_int(const ordered_json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw BadParameters("lattice JSON: " + where + " must be an integer");
    return j.get<long>();
}

} // namespace

Lattice lattice_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw BadParameters(std::string("lattice JSON: parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("group") || !j.contains("rank") || !j.contains("action"))
        throw BadParameters("lattice JSON: expected object with group, rank, action");
    const auto& jg = j["group"];
    if (!jg.is_object() || !jg.contains("p") || !jg.contains("orders"))
        throw BadParameters("lattice JSON: group must contain p and orders");
    long p = expect_int(jg["p"], "group.p");
    if (!jg["orders"].is_array() || jg["orders"].empty())
        throw BadParameters("lattice JSON: group.orders must be a nonempty array");
    std::vector<long> orders;
    for (const auto& o : jg["orders"]) orders.push_back(expect_int(o, "group.orders entry"));
    GroupSpec G;
    try {
        G = GroupSpec(p, orders); // validates primality and p-power orders
    } catch (const std::invalid_argument& e) {
        throw BadParameters(std::string("lattice JSON: ") + e.what());
    }

    long rank = expect_int(j["rank"], "rank");
    if (rank < 0) throw BadParameters("lattice JSON: rank must be nonnegative");
    const auto& ja = j["action"];
    if (!ja.is_array() || ja.size() != orders.size())
        throw BadParameters("lattice JSON: action must list one matrix per generator (" +
                            std::to_string(orders.size()) + " expected, " +
                            std::to_string(ja.size()) + " given)");
    std::vector<IntMatrix> act;
    for (size_t i = 0; i < ja.size(); ++i) {
        const auto& jm = ja[i];
        if (!jm.is_array() || jm.size() != static_cast<size_t>(rank) * rank)
            throw BadParameters("lattice JSON: action[" + std::to_string(i) + "] must be a flat " +
                                "row-major array of " + std::to_string(rank * rank) + " integers");
        IntMatrix A(static_cast<int>(rank), static_cast<int>(rank));
        for (long r = 0; r < rank; ++r)
            for (long c = 0; c < rank; ++c)
                A.at(static_cast<int>(r), static_cast<int>(c)) = expect_int(
                    jm[static_cast<size_t>(r * rank + c)],
                    "action[" + std::to_string(i) + "] entry");
        act.push_back(std::move(A));
    }
    Lattice L(G, static_cast<int>(rank), std::move(act));
    validate(L);
    return L;
}

Lattice lattice_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadParameters("cannot open lattice file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return lattice_from_json(buf.str());
}

void lattice_to_file(const Lattice& L, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw BadParameters("cannot write lattice file: " + path);
    out << lattice_to_json(L);
}

} // namespace latcoh
