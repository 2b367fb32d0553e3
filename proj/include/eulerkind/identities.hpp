#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulerkind/rational.hpp"

namespace eulerkind {

enum class CheckStatus { Verified, Failed };

struct Counterexample {
    std::string point; // "(n=0, k=1, lambda=2, a=1, b=0)"
    std::string lhs;
    std::string rhs;
};

/// Outcome of checking one identity over a parameter grid. The stated form is
/// always checked and reported first; a corrected form, when registered, is
/// checked over the full grid after the stated form fails.
struct IdentityReport {
    std::string id;
    std::string statement;
    CheckStatus literal = CheckStatus::Verified;
    std::optional<Counterexample> literal_counterexample;
    std::string corrected_statement; // empty when no corrected form is registered
    std::optional<CheckStatus> corrected;
    std::optional<Counterexample> corrected_counterexample;
    CheckStatus expected_literal = CheckStatus::Verified;
    std::string grid_summary;

    /// True when the outcome matches the registered expectation and every
    /// engaged corrected form verified.
    bool as_expected() const {
        if (literal != expected_literal) return false;
        if (corrected && *corrected != CheckStatus::Verified) return false;
        return true;
    }
};

struct IdentityGrid {
    unsigned n_max = 10;
    unsigned k_max = 5;
    std::vector<Rational> lambdas;
    std::vector<std::pair<Rational, Rational>> ab;
    std::vector<Rational> xs;
    std::size_t order = 12;

    static IdentityGrid defaults(std::size_t order = 12);
};

std::vector<std::string> identity_ids();

/// Checks one registered identity; throws UnknownIdentityError for bad ids.
/// Counterexamples are minimal in lexicographic (n, k, ...) scan order.
IdentityReport verify_identity(const std::string& id, const IdentityGrid& grid);
inline IdentityReport verify_identity(const std::string& id) {
    return verify_identity(id, IdentityGrid::defaults());
}

/// One report per registered case, in id order I1..I19.
std::vector<IdentityReport> verify_all(const IdentityGrid& grid);
inline std::vector<IdentityReport> verify_all() { return verify_all(IdentityGrid::defaults()); }

} // namespace eulerkind
