#include "eulerkind/table.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace eulerkind {

const Rational& NumberTable::at(long n, long k) const {
    if (n < n_min || n > n_max || k < k_min || k > k_max)
        throw IndexOutOfRangeError("table cell out of range");
    return cells[static_cast<std::size_t>(n - n_min)][static_cast<std::size_t>(k - k_min)];
}

std::string NumberTable::to_csv() const {
    std::ostringstream os;
    os << "n\\k";
    for (long k = k_min; k <= k_max; ++k) os << ',' << (k == 0 ? 0 : -k);
    os << '\n';
    for (long n = n_min; n <= n_max; ++n) {
        os << n;
        for (long k = k_min; k <= k_max; ++k) os << ',' << at(n, k).to_string();
        os << '\n';
    }
    return os.str();
}

std::string NumberTable::to_json() const {
    nlohmann::ordered_json j;
    j["family"] = family;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [key, value] : params) p[key] = value;
    j["params"] = p;
    j["n_range"] = {n_min, n_max};
    j["k_range"] = {k_min, k_max};
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : cells) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& c : row) r.push_back(c.to_string());
        rows.push_back(std::move(r));
    }
    j["cells"] = rows;
    j["version"] = "0.1.0";
    return j.dump(2) + "\n";
}

NumberTable NumberTable::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    NumberTable t;
    t.family = j.at("family").get<std::string>();
    for (const auto& [key, value] : j.at("params").items())
        t.params.emplace_back(key, value.get<std::string>());
    t.n_min = j.at("n_range").at(0).get<long>();
    t.n_max = j.at("n_range").at(1).get<long>();
    t.k_min = j.at("k_range").at(0).get<long>();
    t.k_max = j.at("k_range").at(1).get<long>();
    for (const auto& row : j.at("cells")) {
        std::vector<Rational> r;
        r.reserve(row.size());
        for (const auto& c : row) r.push_back(Rational::from_string(c.get<std::string>()));
        t.cells.push_back(std::move(r));
    }
    return t;
}

} // namespace eulerkind
