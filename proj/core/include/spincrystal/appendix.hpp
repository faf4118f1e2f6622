#pragma once

#include <map>
#include <string>
#include <vector>

#include "spincrystal/cartan.hpp"
#include "spincrystal/characters.hpp"

namespace spincrystal {

/// One irreducible from the character tables: its word label and its
/// formal character.
struct AppendixEntry {
    ResidueWord label;
    Character character;
    /// non-empty when another table row produced the same label with a
    /// different character (conservative instantiation kept the first)
    std::string flag;
};

/// The checked-in transcription of the character tables; see
/// appendix_tables.cpp for the row syntax.
extern const char* const kAppendixFixture;

struct AppendixParseError : std::runtime_error {
    AppendixParseError(int line, const std::string& what)
        : std::runtime_error("fixture line " + std::to_string(line) + ": " + what),
          line(line) {}
    int line;
};

/// Instantiate the generic tables (degrees 2..4) at the given finite ell,
/// plus the explicit degree 5-6 tables when ell = 1. Letter families in
/// one row take pairwise non-neighbouring values; identical duplicate
/// instantiations are merged, conflicting ones flagged.
std::vector<AppendixEntry> load_appendix(const CartanType& ct);

struct CrossCheckReport {
    int entries = 0;
    int survivors = 0;
    std::map<int, int> survivors_per_degree;
    std::map<int, int> expected_per_degree;  // |restricted h-strict of n|
    std::vector<std::string> failures;
    std::vector<std::string> flagged;
    bool ok() const { return failures.empty(); }
};

/// For each entry whose character is compatible with the highest weight
/// (survives_lambda0): the label must be a valid path from the empty
/// partition, the character eps must match the crystal eps of the path
/// image at every residue, and the content-parity type must match the
/// b-parity type; per degree, the survivor count must equal the number of
/// restricted h-strict partitions.
CrossCheckReport cross_check(const std::vector<AppendixEntry>& entries, const CartanType& ct);

}  // namespace spincrystal
