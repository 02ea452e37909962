#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

#include "polar/duality.hpp"
#include "polar/hilbert.hpp"
#include "polar/json_io.hpp"
#include "polar/partitions.hpp"
#include "polar/trees.hpp"
#include "util.hpp"

using namespace polar;
using nlohmann::json;
using testutil::mk;
using testutil::mkIdeal;

namespace {

struct CliResult {
    int exitCode = -1;
    json report;
};

CliResult runCli(const std::string& args) {
    std::string command = std::string(POLAR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (size_t got = fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, got);
    int status = pclose(pipe);
    CliResult result;
    result.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (!output.empty()) result.report = json::parse(output, nullptr, false);
    return result;
}

std::filesystem::path scratchDir() {
    auto dir = std::filesystem::temp_directory_path() / "polar_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string writeFile(const std::string& name, const json& payload) {
    auto path = scratchDir() / name;
    std::ofstream out(path);
    out << payload.dump();
    return path.string();
}

std::string writeRaw(const std::string& name, const std::string& text) {
    auto path = scratchDir() / name;
    std::ofstream out(path);
    out << text;
    return path.string();
}

}  // namespace

TEST_CASE("hilbert reports the numerator") {
    auto input = writeFile("i23.json", ideal_to_json(squarefree_power_ideal(3, 2)));
    auto result = runCli("hilbert --input " + input);
    CHECK(result.exitCode == 0);
    CHECK(result.report["ok"] == true);
    CHECK(result.report["numerator"]["coefficients"] == json::array({1, 0, -3, 2}));
}

TEST_CASE("dual of the self-dual ideal returns itself") {
    auto input = writeFile("selfdual.json", ideal_to_json(squarefree_power_ideal(3, 2)));
    auto result = runCli("dual --input " + input);
    REQUIRE(result.exitCode == 0);
    CHECK(ideal_from_json(result.report["dual"]) == squarefree_power_ideal(3, 2));
}

TEST_CASE("dual --partition dualizes a family") {
    auto input = writeFile("box.json", partition_to_json(box_partition(4, 2)));
    auto result = runCli("dual --partition --input " + input);
    REQUIRE(result.exitCode == 0);
    CHECK(same_family(partition_from_json(result.report["dual"]), box_partition(4, 3)));
}

TEST_CASE("tree builds polarizations and duals from an edge list") {
    LabeledTree path{3, {{1, 2}, {2, 3}}};
    auto result = runCli("tree --n 3 --edges 1-2,2-3");
    REQUIRE(result.exitCode == 0);
    CHECK(ideal_from_json(result.report["ideal"]) == tree_polarization(path));
    auto dual = runCli("tree --n 3 --edges 1-2,2-3 --dual");
    REQUIRE(dual.exitCode == 0);
    CHECK(ideal_from_json(dual.report["ideal"]) == tree_dual(path));
    CHECK(runCli("tree --n 3 --edges 1-2").exitCode == 1);
}

TEST_CASE("check polarization distinguishes good from bad candidates") {
    auto target = writeFile("m22.json",
                            ideal_to_json(mkIdeal(2, {mk({{1, 1, 2}}), mk({{1, 1, 1}, {2, 1, 1}}),
                                                      mk({{2, 1, 2}})})));
    auto good = writeFile("b22.json",
                          ideal_to_json(mkIdeal(2, {mk({{1, 1, 1}, {1, 2, 1}}),
                                                    mk({{1, 1, 1}, {2, 2, 1}}),
                                                    mk({{2, 1, 1}, {2, 2, 1}})})));
    auto goodRun = runCli("check polarization --candidate " + good + " --target " + target);
    CHECK(goodRun.exitCode == 0);
    CHECK(goodRun.report["ok"] == true);

    // splitting the two occurrences of x across xy and x^2 breaks
    // regularity of the difference sequence
    auto badTarget = writeFile("xyxz.json",
                               ideal_to_json(mkIdeal(3, {mk({{1, 1, 1}, {2, 1, 1}}),
                                                         mk({{1, 1, 1}, {3, 1, 1}})})));
    auto bad = writeFile("bad.json",
                         ideal_to_json(mkIdeal(3, {mk({{1, 1, 1}, {2, 1, 1}}),
                                                   mk({{1, 2, 1}, {3, 1, 1}})})));
    auto badRun = runCli("check polarization --candidate " + bad + " --target " + badTarget);
    CHECK(badRun.exitCode == 1);
    CHECK(badRun.report["ok"] == false);
    CHECK(badRun.report["reason"].get<std::string>().size() > 0);
}

TEST_CASE("check partition --verify agrees with the oracle") {
    auto input = writeFile("trivial.json", partition_to_json(trivial_partition(4, 2)));
    auto result = runCli("check partition --verify --input " + input);
    CHECK(result.exitCode == 0);
    CHECK(result.report["criterion"] == true);
    CHECK(result.report["oracle"] == true);

    PartitionFamily bad = trivial_partition(4, 2);
    bad.parts[0] = {{bad.parts[0][0][0]}, {bad.parts[0][0][1], bad.parts[0][0][2]}};
    bad.parts[1] = {{bad.parts[1][0][0]}, {bad.parts[1][0][1], bad.parts[1][0][2]}};
    auto badInput = writeFile("doublesplit.json", partition_to_json(bad));
    auto badRun = runCli("check partition --verify --input " + badInput);
    CHECK(badRun.exitCode == 1);
    CHECK(badRun.report["criterion"] == false);
    CHECK(badRun.report.contains("witness"));
}

TEST_CASE("enumerate partitions reports sweep counts") {
    auto result = runCli("enumerate partitions --n 3 --d 2");
    REQUIRE(result.exitCode == 0);
    CHECK(result.report["families_total"] == 8);
    long long expectedPass = 0;
    for_each_partition_family(3, 2, [&](const PartitionFamily& family) {
        if (satisfies_criterion(family).ok) ++expectedPass;
    });
    CHECK(result.report["criterion_pass"] == expectedPass);
}

TEST_CASE("triangle --verify certifies a choice and emits artifacts") {
    auto svgPath = (scratchDir() / "grid.svg").string();
    auto emitPath = (scratchDir() / "triangle_ideal.json").string();
    auto result = runCli("triangle --d 2 --choices z --verify --emit-svg " + svgPath +
                         " --emit " + emitPath);
    CHECK(result.exitCode == 0);
    CHECK(result.report["verify"]["is_polarization"] == true);
    CHECK(result.report["verify"]["is_minimal"] == true);
    CHECK(result.report["face_counts"] == json::array({6, 8, 3}));
    std::ifstream svg(svgPath);
    std::string text((std::istreambuf_iterator<char>(svg)), std::istreambuf_iterator<char>());
    CHECK(text.find("<svg") != std::string::npos);
    std::ifstream emitted(emitPath);
    json ideal;
    emitted >> ideal;
    CHECK(ideal_from_json(ideal).gens.size() == 6);

    CHECK(runCli("triangle --d 3 --choices x,y").exitCode == 1);  // wrong count
}

TEST_CASE("sweep duality finds no disagreements on (3,2)") {
    auto result = runCli("sweep duality --n 3 --d 2");
    REQUIRE(result.exitCode == 0);
    CHECK(result.report["families_checked"] == 8);
    CHECK(result.report["disagreements"] == 0);
    CHECK(result.report["criterion_pass"] == result.report["duality_ok"]);
}

TEST_CASE("sweep trees certifies all labeled trees") {
    auto result = runCli("sweep trees --n 4");
    REQUIRE(result.exitCode == 0);
    CHECK(result.report["trees_checked"] == 16);
    CHECK(result.report["failures"] == 0);
}

TEST_CASE("graph splits and split round-trip through files") {
    auto input = writeFile("k3.json", graph_to_json(complete_graph(3)));
    auto splits = runCli("graph splits --input " + input + " --at 0");
    REQUIRE(splits.exitCode == 0);
    CHECK(splits.report["splits"].size() == 1);
    auto split = runCli("graph split --input " + input + " --at 0 --parts '1|2'");
    REQUIRE(split.exitCode == 0);
    CHECK(graph_from_json(split.report["graph"]).vertices.size() == 4);
}

TEST_CASE("malformed input exits with code 1") {
    CHECK(runCli("hilbert --input " + writeRaw("garbage.json", "not json {")).exitCode == 1);
    CHECK(runCli("hilbert --input /nonexistent/path.json").exitCode == 1);
    CHECK(runCli("dual --input " + writeRaw("halfideal.json", "{\"n\": 2}")).exitCode == 1);
}

TEST_CASE("dual --emit writes a loadable ideal") {
    auto emitPath = (scratchDir() / "dual_out.json").string();
    auto input = writeFile("path_pol.json",
                           ideal_to_json(tree_polarization(LabeledTree{3, {{1, 2}, {2, 3}}})));
    auto result = runCli("dual --input " + input + " --emit " + emitPath);
    REQUIRE(result.exitCode == 0);
    std::ifstream emitted(emitPath);
    json j;
    emitted >> j;
    CHECK(ideal_from_json(j) == tree_dual(LabeledTree{3, {{1, 2}, {2, 3}}}));
}
