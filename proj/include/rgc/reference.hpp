#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rgc/methods.hpp"
#include "rgc/scaled_real.hpp"

namespace rgc {

enum class SourceTable { table1, table2 };

/// One row of embedded ground truth: the exact coefficient and the two
/// published approximation columns, kept digit-for-digit as printed.
/// The *_digits fields record how many significant digits the source
/// carries, so comparisons can account for print rounding.
struct ReferenceRecord {
    int n;
    ScaledReal exact;
    ScaledReal theorem_col;
    ScaledReal hayman_col;
    int exact_digits;
    int theorem_digits;
    int hayman_digits;
    SourceTable source;
    const char* note;  // nullptr unless the printed entry needed repair
};

/// The full immutable store (19 rows for n = 2..20, 9 high-n rows).
std::span<const ReferenceRecord> reference_table();

/// Row for n; NotFoundError when n is not tabulated.
const ReferenceRecord& reference_lookup(int n);

bool reference_contains(int n);

struct ComparisonRow {
    int n;
    Method method;
    double relative_error;
    bool sign_match;
};

/// Relative errors of estimates against the exact column, ordered by
/// (n, method).  Propagates NotFoundError for untabulated n.
std::vector<ComparisonRow> comparison_report(std::span<const CoefficientEstimate> estimates);

/// Write the store as CSV: n, exact, theorem, hayman, source
/// (10 significant digits, explicit decimal exponent).
void export_reference_csv(std::ostream& out);

/// FNV-1a hash of the canonical CSV export; pinned by tests.
std::uint64_t reference_checksum();

/// Relative tolerance slack from a value printed with `digits`
/// significant digits (covers round-or-truncate ambiguity in the source).
double printed_rounding_slack(const ScaledReal& printed, int digits);

}  // namespace rgc
