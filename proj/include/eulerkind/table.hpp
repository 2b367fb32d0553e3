#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eulerkind/rational.hpp"

namespace eulerkind {

/// Rectangular grid of exact values plus metadata. CSV and JSON emission are
/// byte-deterministic: canonical "p/q" cells, fixed key and row order.
struct NumberTable {
    std::string family;
    std::vector<std::pair<std::string, std::string>> params; // insertion-ordered
    long n_min = 0, n_max = 0;
    long k_min = 0, k_max = 0;
    std::vector<std::vector<Rational>> cells; // cells[n - n_min][k - k_min]

    const Rational& at(long n, long k) const;

    /// Header "n\k,0,-1,...": column labels use negative-order notation.
    std::string to_csv() const;
    std::string to_json() const;
    static NumberTable from_json(const std::string& text);
};

} // namespace eulerkind
