#include "exring/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace exring {

namespace {

std::vector<std::vector<int>> int_rows(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw std::invalid_argument(std::string(what) + " row must be an array");
        std::vector<int> row;
        for (const auto& v : r) {
            if (!v.is_number_integer()) throw std::invalid_argument(std::string(what) + " entries must be integers");
            row.push_back(v.get<int>());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

nlohmann::json ssyt_to_json(const SSYT& t) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : t.rows()) j.push_back(row);
    return j;
}

SSYT ssyt_from_json(const nlohmann::json& j, int bound) { return SSYT(int_rows(j, "tableau"), bound); }

nlohmann::json pp_to_json(const PlanePartition& b) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& row : b.to_rows()) entries.push_back(row);
    return {{"entries", entries}, {"bound", b.bound()}};
}

PlanePartition pp_from_json(const nlohmann::json& j, int cols_hint) {
    const nlohmann::json& entries = j.is_object() ? j.at("entries") : j;
    auto rows = int_rows(entries, "plane partition");
    int bound = 0;
    for (const auto& r : rows)
        for (int v : r) bound = std::max(bound, v);
    if (j.is_object() && j.contains("bound")) bound = j.at("bound").get<int>();
    if (rows.empty()) return PlanePartition::zero(0, cols_hint < 0 ? 0 : cols_hint, bound);
    return PlanePartition::from_rows(rows, bound);
}

nlohmann::json dyck_to_json(const DyckWord& w) { return w.str(); }

DyckWord dyck_from_json(const nlohmann::json& j) {
    if (!j.is_string()) throw std::invalid_argument("Dyck word must be a string over {u,d}");
    return DyckWord(j.get<std::string>());
}

nlohmann::json dyck_stats_to_json(const DyckStats& s) {
    return {{"valleys", s.valleys}, {"central", s.central}, {"up", s.up}, {"down", s.down}};
}

nlohmann::json state_to_json(const StateVector& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [mask, c] : v.amplitudes()) {
        nlohmann::json orbitals = nlohmann::json::array();
        for (const auto& o : SlaterBasisVector(mask).orbitals())
            orbitals.push_back({o.position, o.spin == Spin::up ? "up" : "down"});
        out.push_back({{"orbitals", orbitals}, {"coeff", to_fraction_string(c)}});
    }
    return out;
}

StateVector state_from_json(const nlohmann::json& j, int m, int d) {
    if (!j.is_array()) throw std::invalid_argument("state must be an array of terms");
    std::vector<std::pair<SlaterBasisVector, Rational>> terms;
    for (const auto& t : j) {
        std::vector<SpinOrbital> orbitals;
        for (const auto& o : t.at("orbitals")) {
            int pos = o.at(0).get<int>();
            std::string spin = o.at(1).get<std::string>();
            if (spin != "up" && spin != "down") throw std::invalid_argument("spin must be \"up\" or \"down\"");
            if (pos < 1 || pos > m) throw std::invalid_argument("orbital position outside [1,m]");
            orbitals.push_back({pos, spin == "up" ? Spin::up : Spin::down});
        }
        terms.emplace_back(SlaterBasisVector::from_orbitals(orbitals), parse_rational(t.at("coeff").get<std::string>()));
    }
    if (!terms.empty()) d = terms.front().first.degree();
    StateVector v(m, d);
    for (const auto& [e, c] : terms) {
        if (e.degree() != d) throw std::invalid_argument("state mixes degrees");
        v.add(e.mask(), c);
    }
    return v;
}

}  // namespace exring
