#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "fixtures.hpp"
#include "hooktab/serialize.hpp"

using namespace hooktab;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string command = env + (env.empty() ? "" : " ") + std::string(HOOKTAB_CLI_PATH) + " " +
                          args + " 2>&1";
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe)) result.output += buffer.data();
    int status = pclose(pipe);
    result.exit_code = WEXITSTATUS(status);
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("cli word prints the reading word") {
    auto path = write_temp("word.json", to_json(fixtures::column_reading_example()).dump());
    auto r = run_cli("word --in " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "432113543344445\n");
}

TEST_CASE("cli crystal annihilation is not an error") {
    auto path = write_temp("crystal.json", to_json(fixtures::crystal_example()).dump());
    auto r = run_cli("crystal --in " + path + " --op e --index 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("annihilated") != std::string::npos);

    auto f1 = run_cli("crystal --in " + path + " --op f --index 1");
    CHECK(f1.exit_code == 0);
    CHECK(hvt_from_json(json::parse(f1.output)) == fixtures::crystal_example_f1());
}

TEST_CASE("cli uncrowd then crowd round trips byte-identically") {
    auto t = fixtures::uncrowding_example();
    auto path = write_temp("roundtrip.json", to_json(t).dump());
    auto validated = run_cli("validate --in " + path);
    CHECK(validated.exit_code == 0);

    auto uncrowded = run_cli("uncrowd --in " + path);
    CHECK(uncrowded.exit_code == 0);
    auto pair_path = write_temp("pair.json", uncrowded.output);
    auto crowded = run_cli("crowd --in " + pair_path);
    CHECK(crowded.exit_code == 0);
    auto final_tableau = json::parse(crowded.output).at("T");
    CHECK(final_tableau.dump(2) == json::parse(validated.output).dump(2));
}

TEST_CASE("cli uncrowd of the empty tableau") {
    auto path = write_temp("empty.json", to_json(HookValuedTableau()).dump());
    auto r = run_cli("uncrowd --in " + path);
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.output);
    CHECK(j.at("P").at("cells").empty());
    CHECK(j.at("Q").at("entries").empty());
}

TEST_CASE("cli crowd rejects non-members with exit 1 and structured detail") {
    json pair{{"S", to_json(fixtures::social_distancing_S())},
              {"F", to_json(fixtures::social_distancing_flagged())}};
    auto path = write_temp("notmember.json", pair.dump());
    auto r = run_cli("crowd --in " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("NotInKLambda") != std::string::npos);
}

TEST_CASE("cli usage errors exit with 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("word").exit_code == 2);
    CHECK(run_cli("crystal --in x.json --op g").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli domain errors exit with 1") {
    auto path = write_temp("bad.json", R"({"shape":[1],"cells":[{"row":1,"col":1,"hook":2,"leg":[2]}]})");
    auto r = run_cli("validate --in " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("TableauError") != std::string::npos);
}

TEST_CASE("cli verify reports instance counts") {
    auto r = run_cli("verify roundtrip --shape 2,1 --max-entry 3 --arm 1 --leg 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("roundtrip\t(2,1)\t3\t232\t0") != std::string::npos);

    auto jobs = run_cli("verify knuth --shape 2,1 --max-entry 3 --arm 1 --leg 1 --jobs 3");
    CHECK(jobs.exit_code == 0);
    CHECK(jobs.output.find("\t0\n") != std::string::npos);
}

TEST_CASE("cli expand emits the basis table") {
    auto r = run_cli("expand --shape 2 --basis schur --bound 4 --format tsv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("(2)\t0\t0\t1") != std::string::npos);
    CHECK(r.output.find("(2,1)\t0\t1\t1") != std::string::npos);
    CHECK(r.output.find("(3)\t1\t0\t2") != std::string::npos);
    CHECK(r.output.find("(3,1)\t1\t1\t2") != std::string::npos);
}

TEST_CASE("cli seed flag is inert") {
    auto path = write_temp("seeded.json", to_json(fixtures::column_reading_example()).dump());
    auto a = run_cli("word --in " + path);
    auto b = run_cli("--seed 12345 word --in " + path);
    CHECK(a.output == b.output);
    CHECK(b.exit_code == 0);
}

TEST_CASE("cli honors the HOOKTAB_FORMAT environment default") {
    auto path = write_temp("envfmt.json", to_json(fixtures::column_reading_example()).dump());
    auto r = run_cli("word --in " + path, "HOOKTAB_FORMAT=json");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.output).at("word").size() == 15);
    // An explicit flag overrides the environment.
    auto ascii = run_cli("word --in " + path + " --format ascii", "HOOKTAB_FORMAT=json");
    CHECK(ascii.output == "432113543344445\n");
}

TEST_CASE("cli rpp word variant") {
    json rpp{{"shape", {3, 2}},
             {"entries",
              {{{"row", 1}, {"col", 1}, {"value", 1}},
               {{"row", 1}, {"col", 2}, {"value", 1}},
               {{"row", 1}, {"col", 3}, {"value", 3}},
               {{"row", 2}, {"col", 1}, {"value", 1}},
               {{"row", 2}, {"col", 2}, {"value", 2}}}}};
    auto path = write_temp("rpp.json", rpp.dump());
    auto r = run_cli("word --in " + path + " --variant rpp --format tsv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("ev\t211") != std::string::npos);
    CHECK(r.output.find("word\t2113") != std::string::npos);
}

TEST_CASE("cli graph export") {
    auto dot = run_cli("graph --shape 1 --max-entry 2");
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.find("digraph crystal") != std::string::npos);
    auto j = run_cli("graph --shape 1 --max-entry 2 --format json");
    CHECK(j.exit_code == 0);
    auto parsed = json::parse(j.output);
    CHECK(parsed.at("vertices").size() == 2);
    CHECK(parsed.at("edges").size() == 1);
}
