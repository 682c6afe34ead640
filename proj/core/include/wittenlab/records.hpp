#pragma once

#include "wittenlab/psi.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace wittenlab {

inline constexpr const char* kCacheHeader = "wittenlab-cache v1";

// One line per record, fields tab-separated:
//   kind <TAB> key fields... <TAB> value <TAB> provenance
struct TableRecord {
    std::string kind;  // "psi", "hurwitz", "hodge", "series", "report"
    std::vector<std::string> keys;
    std::string value;  // exact rational "n/d" or decimal string
    std::string provenance = "computed";

    std::string to_line() const;
};

void write_records(std::ostream& os, const std::vector<TableRecord>& records);

// Parses a full cache stream (header + records); throws std::runtime_error
// naming the offending line number.
std::vector<TableRecord> read_records(std::istream& is);

std::vector<TableRecord> psi_cache_records(const CorrelatorCache& cache);
// Returns the number of imported entries; rejects malformed input.
size_t import_psi_records(const std::vector<TableRecord>& records, CorrelatorCache& cache);

}  // namespace wittenlab
