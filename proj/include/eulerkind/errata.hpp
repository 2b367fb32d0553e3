#pragma once

#include <string>
#include <vector>

#include "eulerkind/identities.hpp"

namespace eulerkind {

/// One recorded discrepancy between a stated value or formula and the value
/// this library computes, with a concrete witness.
struct ErratumEntry {
    std::string id;      // "E1neg.row0", "I9", "Wnegk.cell(0,1)", "note.I5", ...
    std::string subject;
    std::string claimed;
    std::string computed;
};

/// Every registered discrepancy: table rows that disagree with the stated
/// cells, cells of the W order -k table, identity forms that fail with their
/// counterexamples, and notation notes for statements the suite repaired
/// before verifying.
std::vector<ErratumEntry> collect_errata(const IdentityGrid& grid);
std::vector<ErratumEntry> collect_errata(const IdentityGrid& grid,
                                         const std::vector<IdentityReport>& reports);
inline std::vector<ErratumEntry> collect_errata() {
    return collect_errata(IdentityGrid::defaults());
}

} // namespace eulerkind
