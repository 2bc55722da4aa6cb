#pragma once

#include "eqlines/rational.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eqlines {

enum class RefKind { lower, upper, exact };
std::string to_string(RefKind k);

struct ReferenceRow {
    long long n = 0;
    std::optional<Rational> alpha;
    Rational value;
    RefKind kind = RefKind::upper;
    std::string source;
};

/// Rows of a CSV with header `n,alpha,value,kind,source`; `#` lines are comments.
struct ReferenceTable {
    std::string name;
    std::vector<ReferenceRow> rows;

    std::optional<Rational> find(long long n, const std::optional<Rational>& alpha) const;
};

/// Throws std::runtime_error with file and line on malformed input. Rows tagged
/// `table2` are checked on load: value = (a^2-2)(a^2-1)/2 and n is an endpoint
/// a^2-2 or 3a^2-16.
ReferenceTable parse_reference(std::istream& in, const std::string& name);
ReferenceTable load_reference(const std::filesystem::path& path);

/// Directory holding the shipped CSVs: $EQLINES_DATA if set, else the source tree's data/.
std::filesystem::path default_data_dir();

/// floor(value) per dimension for upper and exact rows.
std::map<long long, long long> m_bound_map(const ReferenceTable& t);

/// Valid range of one closed-form angle as stored in table2 (the two endpoints).
struct Table2Entry {
    Rational alpha;
    long long a = 0;
    long long value = 0;
    long long lo = 0;
    long long hi = 0;
};
std::vector<Table2Entry> table2_entries(const ReferenceTable& t);

void write_reference_csv(std::ostream& out, const std::vector<ReferenceRow>& rows);

}  // namespace eqlines
