#include "wittenlab/records.hpp"

#include <doctest.h>

#include <sstream>

using namespace wittenlab;

TEST_CASE("empty cache writes just the header") {
    CorrelatorCache cache;
    std::ostringstream os;
    write_records(os, psi_cache_records(cache));
    CHECK(os.str() == std::string(kCacheHeader) + "\n");
    std::istringstream is(os.str());
    CHECK(read_records(is).empty());
}

TEST_CASE("round trip is bit exact") {
    CorrelatorCache cache;
    for (int g = 0; g <= 2; ++g)
        psi_correlator(CorrelatorKey(g, {3 * g - 2 > 0 ? 3 * g - 2 : 0, 0, 0}), cache);
    psi_correlator(CorrelatorKey(2, {2, 2, 2}), cache);
    auto records = psi_cache_records(cache);
    CHECK(!records.empty());

    std::ostringstream os;
    write_records(os, records);
    std::istringstream is(os.str());
    auto back = read_records(is);
    REQUIRE(back.size() == records.size());
    for (size_t i = 0; i < records.size(); ++i) {
        CHECK(back[i].kind == records[i].kind);
        CHECK(back[i].keys == records[i].keys);
        CHECK(back[i].value == records[i].value);
        CHECK(back[i].provenance == records[i].provenance);
    }
    CorrelatorCache imported;
    CHECK(import_psi_records(back, imported) == records.size());
    for (const auto& [key, value] : cache.snapshot_sorted()) {
        Rational v;
        REQUIRE(imported.lookup(key, v));
        CHECK(v == value);
    }
}

TEST_CASE("the base value appears verbatim") {
    CorrelatorCache cache;
    // <tau_1 tau_1>_1 forces <tau_1>_1 = 1/24 into the memo
    psi_correlator(CorrelatorKey(1, {1, 1}), cache);
    std::ostringstream os;
    write_records(os, psi_cache_records(cache));
    CHECK(os.str().find("1/24") != std::string::npos);
}

TEST_CASE("corrupted input is rejected with a line number") {
    std::istringstream bad_header("not-a-header\n");
    CHECK_THROWS_WITH_AS(read_records(bad_header),
                         doctest::Contains("line 1"), std::runtime_error);

    std::istringstream bad_line(std::string(kCacheHeader) + "\npsi\tonly-two-fields\n");
    CHECK_THROWS_WITH_AS(read_records(bad_line), doctest::Contains("line 2"),
                         std::runtime_error);

    std::istringstream bad_value(std::string(kCacheHeader) + "\npsi\t1\t1\tnot-a-number\tcached\n");
    auto records = read_records(bad_value);
    CorrelatorCache cache;
    CHECK_THROWS_AS(import_psi_records(records, cache), std::runtime_error);
}
