#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "zagreb/families.hpp"
#include "zagreb/graph6.hpp"
#include "zagreb/serialize.hpp"

#include "support.hpp"

using Catch::Matchers::ContainsSubstring;
using testsupport::run_cli;

TEST_CASE("cli usage errors exit with status 2") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("compute").code == 2);                    // missing --input
    CHECK(run_cli("compute --input /nonexistent/f").code == 2);
    CHECK(run_cli("family").code == 2);
    CHECK(run_cli("family cycle 2").code == 2);             // domain error
    CHECK(run_cli("family cycle x").code == 2);             // not an integer
    CHECK(run_cli("family cycle").code == 2);               // missing parameter
    CHECK(run_cli("family nosuch 3").code == 2);
    CHECK(run_cli("compute --input /dev/null --format dot").code == 2);
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("cli family emits graph6") {
    const auto star = run_cli("family star 6");
    CHECK(star.code == 0);
    CHECK(star.output == "Esa?\n");

    CHECK(run_cli("family xi 1").output == "MgCKcaOc@GC_H?H??\n");
    CHECK(run_cli("family disjoint 1 1").output == "J]rE??@?WB_\n");
    CHECK(run_cli("family kbipartite 2 5").output == "F]rE?\n");
    CHECK(run_cli("family path 4").output == "Ch\n");
    CHECK(run_cli("family complete 4").output == "C~\n");
    CHECK(run_cli("family cycle 5").output == "Dhc\n");
    CHECK(run_cli("family cubic prism 8").output == "Gl`HGs\n");

    const auto m106 = run_cli("family cubic moebius 106");
    CHECK(m106.code == 0);
    const auto g = zagreb::decode_graph6(m106.output);
    CHECK(g.order() == 106);
    CHECK(g.size() == 159);

    const auto joined = run_cli("family bridge-join 15 moebius 106");
    CHECK(joined.code == 0);
    CHECK(zagreb::decode_graph6(joined.output) ==
          zagreb::bridge_join(zagreb::xi(15), zagreb::moebius_ladder(106)));

    const std::string out_path = testsupport::temp_path("family.g6");
    CHECK(run_cli("family star 6 --out " + out_path).code == 0);
    CHECK(testsupport::slurp(out_path) == "Esa?\n");
    std::remove(out_path.c_str());
}

TEST_CASE("cli compute reports exact indices") {
    const std::string path = testsupport::temp_path("input.g6");
    testsupport::write_file(path, "Hsa??CB\nCh\n");
    const auto result = run_cli("compute --input " + path);
    CHECK(result.code == 0);

    std::istringstream lines(result.output);
    std::string line;
    REQUIRE(std::getline(lines, line));
    const auto first = zagreb::json::parse(line);
    CHECK(first["n"] == 9);
    CHECK(first["m"] == 8);
    CHECK(first["m1"] == 42);
    CHECK(first["m2"] == 37);
    CHECK(first["gap"] == 3);
    CHECK(first["graph6"] == "Hsa??CB");
    REQUIRE(std::getline(lines, line));
    const auto second = zagreb::json::parse(line);
    CHECK(second["gap"] == -2);
    std::remove(path.c_str());
}

TEST_CASE("cli compute accepts edge lists") {
    const std::string path = testsupport::temp_path("input.edges");
    testsupport::write_file(path, "n 4\n0 1\n1 2\n2 3\n");
    const auto result = run_cli("compute --input " + path + " --format edges");
    CHECK(result.code == 0);
    const auto j = zagreb::json::parse(result.output);
    CHECK(j["m1"] == 10);
    CHECK(j["m2"] == 8);
    std::remove(path.c_str());
}

TEST_CASE("cli check classifies the violating union with exit 0") {
    const std::string path = testsupport::temp_path("violating.g6");
    testsupport::write_file(path, "Hsa??CB\n");
    const auto result = run_cli("check --input " + path);
    CHECK(result.code == 0);
    const auto j = zagreb::json::parse(result.output);
    CHECK(j["status"] == "violated");
    CHECK(j["report"]["gap"] == 3);
    std::remove(path.c_str());
}

TEST_CASE("cli check names equality patterns") {
    const std::string path = testsupport::temp_path("equality.g6");
    testsupport::write_file(path, zagreb::encode_graph6(zagreb::cycle_graph(9)) + "\n" +
                                      zagreb::encode_graph6(zagreb::disjoint_union(
                                          zagreb::star_graph(5), zagreb::cycle_graph(3))) +
                                      "\n");
    const auto result = run_cli("check --input " + path);
    CHECK(result.code == 0);
    std::istringstream lines(result.output);
    std::string line;
    REQUIRE(std::getline(lines, line));
    const auto cycle = zagreb::json::parse(line);
    CHECK(cycle["status"] == "equality");
    CHECK(cycle["equality_pattern"] == "single-class");
    REQUIRE(std::getline(lines, line));
    const auto star_cycle = zagreb::json::parse(line);
    CHECK(star_cycle["status"] == "equality");
    CHECK(star_cycle["equality_pattern"] == "{{1,4},{2,2}}");
    std::remove(path.c_str());
}

TEST_CASE("cli verify-table reports full agreement") {
    const auto result = run_cli("verify-table --delta-max 50");
    CHECK(result.code == 0);
    CHECK_THAT(result.output, ContainsSubstring("55/55 rows verified, 0 mismatches"));

    const std::string json_path = testsupport::temp_path("table.json");
    CHECK(run_cli("verify-table --delta-max 10 --out " + json_path).code == 0);
    const auto j = zagreb::json::parse(testsupport::slurp(json_path));
    CHECK(j["mismatches"] == 0);
    CHECK(j["rows"] == 55);
    std::remove(json_path.c_str());
}

TEST_CASE("cli scan-prop2 reports the minimum order") {
    const auto result = run_cli("scan-prop2");
    CHECK(result.code == 0);
    CHECK_THAT(result.output, ContainsSubstring("minimum order 218 at k=15"));
    CHECK_THAT(result.output, ContainsSubstring("cubic order 106"));

    const auto narrow = run_cli("scan-prop2 --k-min 16 --k-max 16");
    CHECK(narrow.code == 0);
    CHECK_THAT(narrow.output, ContainsSubstring("minimum order 219 at k=16"));

    CHECK(run_cli("scan-prop2 --k-min 7").code == 2);
}

TEST_CASE("cli search finds and certifies the minimum-order violation") {
    const std::string cert_path = testsupport::temp_path("certs.jsonl");
    const auto result = run_cli(
        "search --window 2 5 --order-max 11 --budget 2000 --restarts 2 --seed 5 --out " +
        cert_path);
    CHECK(result.code == 0);
    const auto summary = zagreb::json::parse(result.output);
    CHECK(summary["smallest_violation_order"] == 11);
    CHECK(summary["distinct_found"].get<long long>() >= 1);
    REQUIRE(summary["certificates"].is_array());
    REQUIRE(!summary["certificates"].empty());
    CHECK(summary["certificates"][0]["n"] == 11);

    // determinism: identical invocation, identical stdout
    const auto again = run_cli(
        "search --window 2 5 --order-max 11 --budget 2000 --restarts 2 --seed 5");
    CHECK(again.output == result.output);

    // the certificate file is JSON lines, re-verifiable through certify
    const auto certify = run_cli("certify --input " + cert_path);
    CHECK(certify.code == 0);
    CHECK_THAT(certify.output, ContainsSubstring("accepted"));

    // the manifest exists and echoes the configuration
    const auto manifest = zagreb::json::parse(testsupport::slurp(cert_path + ".manifest.json"));
    CHECK(manifest["config"]["degree_lo"] == 2);
    CHECK(manifest["config"]["degree_hi"] == 5);
    std::remove(cert_path.c_str());
    std::remove((cert_path + ".manifest.json").c_str());
}

TEST_CASE("cli certify rejects corrupted certificates with exit 1") {
    const zagreb::Certificate good = zagreb::make_certificate(
        zagreb::disjoint_union(zagreb::star_graph(6), zagreb::cycle_graph(3)), "test");
    zagreb::Certificate bad = good;
    bad.gap = 4;

    const std::string path = testsupport::temp_path("mixed.jsonl");
    testsupport::write_file(path, zagreb::certificate_json(good).dump() + "\n" +
                                      zagreb::certificate_json(bad).dump() + "\n");
    const auto result = run_cli("certify --input " + path);
    CHECK(result.code == 1);
    CHECK_THAT(result.output, ContainsSubstring("mismatched-claim"));

    testsupport::write_file(path, "this is not json\n");
    const auto garbled = run_cli("certify --input " + path);
    CHECK(garbled.code == 1);
    CHECK_THAT(garbled.output, ContainsSubstring("parse-failure"));
    std::remove(path.c_str());
}
