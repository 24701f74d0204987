#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "cycsf/constructor.hpp"

#ifndef CYCSF_CLI_PATH
#error "CYCSF_CLI_PATH must point at the cycsf binary"
#endif

namespace {

int run(const std::string& args, std::string* output = nullptr) {
    std::string cmd = std::string(CYCSF_CLI_PATH) + " " + args;
    if (output) {
        std::string tmp = "cli_out.tmp";
        int rc = std::system((cmd + " > " + tmp + " 2>/dev/null").c_str());
        std::ifstream in(tmp);
        output->assign(std::istreambuf_iterator<char>(in), {});
        std::remove(tmp.c_str());
        return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    }
    int rc = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("construct subcommand") {
    std::string out;
    CHECK(run("construct --n 13 --format json", &out) == 0);
    CHECK(out.find("2101201021012") != std::string::npos);
    CHECK(out.find("berstel-3") != std::string::npos);

    // nonexistence is its own exit code
    CHECK(run("construct --n 14") == 2);
    // usage errors are another
    CHECK(run("construct") == 64);
    CHECK(run("frobnicate") == 64);
}

TEST_CASE("identical invocations produce identical reports") {
    std::string a, b;
    run("construct --n 123 --format json", &a);
    run("construct --n 123 --format json", &b);
    CHECK(a == b);
    CHECK_FALSE(a.empty());
}

TEST_CASE("text and json modes carry the same verdict") {
    std::string text, js;
    run("construct --n 17 --format text", &text);
    run("construct --n 17 --format json", &js);
    CHECK(text.find("verdict: true") != std::string::npos);
    CHECK(js.find("\"verdict\": true") != std::string::npos);
}

TEST_CASE("search subcommand") {
    CHECK(run("search --n 13 --first") == 0);
    CHECK(run("search --n 14") == 2);  // exhaustive, no solutions
    std::string out;
    run("search --n 13 --all --jobs 2 --format json", &out);
    CHECK(out.find("\"exhaustive\": true") != std::string::npos);
}

TEST_CASE("make-x subcommand") {
    std::string out;
    CHECK(run("make-x --k 6 --format json", &out) == 0);
    CHECK(out.find("21020121012021012102012") != std::string::npos);
    CHECK(run("make-x --k 5") == 64);
}

TEST_CASE("stream and verify-stem round trip") {
    std::string out;
    CHECK(run("stream --n 13 --length 130 --certificate stream_cert.tmp --format json", &out) == 0);
    CHECK(out.find("\"blocks\": 10") != std::string::npos);
    std::remove("stream_cert.tmp");

    // verify-stem on a hand-made file
    {
        std::ofstream f("stem_input.tmp");
        cycsf::CertifiedMorphism cm = cycsf::construct(13);
        f << cm.morphism.apply(cycsf::Word("0120")).str();
    }
    CHECK(run("verify-stem --stem " + cycsf::builtin_appendix().at(13).str() +
              " --input stem_input.tmp") == 0);
    CHECK(run("verify-stem --stem 210 --input stem_input.tmp") == 1);
    std::remove("stem_input.tmp");
}

TEST_CASE("verify-morphism subcommand") {
    CHECK(run("verify-morphism --seed 2101201021012") == 0);
    CHECK(run("verify-morphism --seed 012") == 1);
    CHECK(run("verify-morphism --images 0 1 2") == 0);
    CHECK(run("verify-morphism") == 64);
}

TEST_CASE("check-appendix subcommand") {
    std::string out;
    CHECK(run("check-appendix --search-ceiling 13 --format json", &out) == 0);
    CHECK(out.find("\"entries\": 104") != std::string::npos);
    CHECK(out.find("\"all_pass\": true") != std::string::npos);
}

TEST_CASE("check-appendix honors --data-dir") {
    std::filesystem::create_directory("cli_data_tmp");
    {
        std::ofstream f("cli_data_tmp/appendix.txt");
        f << "13 2101201021012\n";
    }
    std::string out;
    CHECK(run("check-appendix --data-dir cli_data_tmp --search-ceiling 0 --format json", &out) == 0);
    CHECK(out.find("\"entries\": 1") != std::string::npos);
    std::filesystem::remove_all("cli_data_tmp");
}

TEST_CASE("check-alpha reports the failing census item honestly") {
    std::string out;
    int rc = run("check-alpha --format json", &out);
    CHECK(rc == 1);  // the length-10 palindrome census fails as stated
    CHECK(out.find("palindrome_centers_10") != std::string::npos);
    CHECK(out.find("\"lemma_aa\": true") != std::string::npos);
}
