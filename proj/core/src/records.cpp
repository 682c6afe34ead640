#include "wittenlab/records.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wittenlab {

std::string TableRecord::to_line() const {
    std::ostringstream os;
    os << kind;
    for (const auto& k : keys) os << '\t' << k;
    os << '\t' << value << '\t' << provenance;
    return os.str();
}

void write_records(std::ostream& os, const std::vector<TableRecord>& records) {
    os << kCacheHeader << '\n';
    for (const auto& r : records) os << r.to_line() << '\n';
}

std::vector<TableRecord> read_records(std::istream& is) {
    std::string line;
    size_t lineno = 1;
    if (!std::getline(is, line) || line != kCacheHeader)
        throw std::runtime_error("cache line 1: missing header '" +
                                 std::string(kCacheHeader) + "'");
    std::vector<TableRecord> out;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        size_t pos = 0;
        while (true) {
            size_t tab = line.find('\t', pos);
            fields.push_back(line.substr(pos, tab == std::string::npos ? tab : tab - pos));
            if (tab == std::string::npos) break;
            pos = tab + 1;
        }
        if (fields.size() < 3)
            throw std::runtime_error("cache line " + std::to_string(lineno) +
                                     ": expected at least kind, value, provenance");
        TableRecord r;
        r.kind = fields.front();
        r.provenance = fields.back();
        r.value = fields[fields.size() - 2];
        r.keys.assign(fields.begin() + 1, fields.end() - 2);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<TableRecord> psi_cache_records(const CorrelatorCache& cache) {
    std::vector<TableRecord> out;
    for (const auto& [key, value] : cache.snapshot_sorted()) {
        TableRecord r;
        r.kind = "psi";
        r.keys.push_back(std::to_string(key.genus));
        std::ostringstream ks;
        for (size_t i = 0; i < key.exponents.size(); ++i) {
            if (i) ks << ',';
            ks << key.exponents[i];
        }
        r.keys.push_back(ks.str());
        r.value = value.to_string();
        r.provenance = "cached";
        out.push_back(std::move(r));
    }
    return out;
}

size_t import_psi_records(const std::vector<TableRecord>& records, CorrelatorCache& cache) {
    size_t count = 0;
    for (size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (r.kind != "psi") continue;
        if (r.keys.size() != 2)
            throw std::runtime_error("psi record " + std::to_string(i + 1) +
                                     ": expected genus and exponent fields");
        try {
            int g = std::stoi(r.keys[0]);
            std::vector<int> ks;
            if (!r.keys[1].empty() && r.keys[1] != "-") {
                std::istringstream ss(r.keys[1]);
                std::string tok;
                while (std::getline(ss, tok, ',')) ks.push_back(std::stoi(tok));
            }
            cache.store(CorrelatorKey(g, std::move(ks)), Rational::from_string(r.value));
            ++count;
        } catch (const std::exception& e) {
            throw std::runtime_error("psi record " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return count;
}

}  // namespace wittenlab
