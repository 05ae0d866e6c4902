#include "weilrep/serialize.hpp"

#include <nlohmann/json.hpp>

namespace weilrep {

Json cyclotomic_to_json(const Cyclotomic& c) {
    Json coeffs = Json::array();
    for (const Rat& r : c.coeffs()) coeffs.push_back(Json::array({rat_num(r).str(), rat_den(r).str()}));
    Json out;
    out["conductor"] = c.conductor();
    out["coeffs"] = std::move(coeffs);
    return out;
}

Cyclotomic cyclotomic_from_json(const Json& j) {
    const long long n = j.at("conductor").get<long long>();
    std::vector<Rat> coeffs;
    for (const auto& e : j.at("coeffs")) {
        const BigInt num(e.at(0).get<std::string>());
        const BigInt den(e.at(1).get<std::string>());
        coeffs.emplace_back(num, den);
    }
    return Cyclotomic::from_parts(n, std::move(coeffs));
}

Json matrix_to_json(const CycMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(cyclotomic_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    Json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = std::move(rows);
    return out;
}

CycMatrix matrix_from_json(const Json& j) {
    CycMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    const auto& rows = j.at("entries");
    for (int i = 0; i < m.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c) m.at(i, c) = cyclotomic_from_json(rows.at(i).at(c));
    return m;
}

Json artifact(const std::string& object, Json params, Json data) {
    Json out;
    out["schema"] = "weilrep/1";
    out["object"] = object;
    out["params"] = std::move(params);
    out["data"] = std::move(data);
    return out;
}

std::string dump_deterministic(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace weilrep
