#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "cycsf/fixtures.hpp"

using namespace cycsf;

#ifndef CYCSF_DATA_DIR
#error "CYCSF_DATA_DIR must point at the repository data directory"
#endif

TEST_CASE("builtin appendix table") {
    const AppendixTable& t = builtin_appendix();
    CHECK(t.size() == 104);
    for (int n : {13, 17, 18, 19}) CHECK(t.count(n));
    for (int n = 23; n <= 122; ++n) CHECK(t.count(n));
    for (int n : {14, 15, 16, 20, 21, 22}) CHECK_FALSE(t.count(n));
    for (const auto& [n, seed] : t) {
        CHECK(seed.size() == static_cast<std::size_t>(n));
        CHECK(seed[0] == '2');
    }
    CHECK(t.at(13) == Word("2101201021012"));
}

TEST_CASE("appendix transcription checksum") {
    CHECK(appendix_checksum(builtin_appendix()) == 0x0a182ec7538f8f20ull);
}

TEST_CASE("appendix data file matches the builtin table") {
    std::ifstream in(std::string(CYCSF_DATA_DIR) + "/appendix.txt");
    REQUIRE(in.good());
    AppendixTable loaded = load_appendix(in);
    CHECK(loaded == builtin_appendix());
}

TEST_CASE("muller data file matches the builtin morphisms") {
    std::ifstream in(std::string(CYCSF_DATA_DIR) + "/muller.txt");
    REQUIRE(in.good());
    auto loaded = load_muller(in);
    REQUIRE(loaded.size() == 3);
    for (int n : {20, 21, 22}) CHECK(loaded.at(n) == builtin_muller(n));
}

TEST_CASE("load_appendix parsing") {
    std::istringstream ok("# comment\n13 2101201021012\n\n17 21020102120102012\n");
    AppendixTable t = load_appendix(ok);
    CHECK(t.size() == 2);
    CHECK(t.at(13).size() == 13);

    std::istringstream short_seed("13 210120\n");
    CHECK_THROWS_AS(load_appendix(short_seed), std::runtime_error);

    std::istringstream dup("13 2101201021012\n13 2101201021012\n");
    CHECK_THROWS_AS(load_appendix(dup), std::runtime_error);
}

TEST_CASE("muller image lengths are multiples of n") {
    for (int n : {20, 21, 22})
        for (char c : {'0', '1', '2'})
            CHECK(builtin_muller(n).image(c).size() % static_cast<std::size_t>(n) == 0);
}
