#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "brcover/commands.hpp"
#include "brcover/report_io.hpp"
#include "oracles.hpp"

using namespace brcover;

namespace {

RunConfig grid(Command c, long g1, long g2, long m1, long m2, long d)
{
    RunConfig cfg;
    cfg.command = c;
    cfg.g1 = g1;
    cfg.g2 = g2;
    cfg.m1 = m1;
    cfg.m2 = m2;
    cfg.d = d;
    cfg.format = OutputFormat::json;
    return cfg;
}

Json run_json(const RunConfig& cfg)
{
    const auto r = run(cfg);
    REQUIRE(r.error.empty());
    return Json::parse(r.output);
}

bool verdict(const Json& report, const std::string& name)
{
    for (const auto& v : report.at("verdicts"))
        if (v.at("name") == name) return v.at("pass").get<bool>();
    FAIL("missing verdict " << name);
    return false;
}

std::filesystem::path scratch(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("brcover_test_" + name);
}

}  // namespace

TEST_CASE("example2 minimal grid")
{
    const auto cfg = grid(Command::example2, 1, 1, 1, 1, 2);
    const auto r = run(cfg);
    CHECK(r.exit_code == kExitPass);
    const Json j = Json::parse(r.output);
    CHECK(j.at("family") == "example2");
    CHECK(j.at("invariants").at("pi_lower_bound").at("value") == 4);
    CHECK(j.at("invariants").at("euler_characteristic").at("value") == 8);
    CHECK(j.at("invariants").at("b1").at("value") == 4);
    CHECK(j.at("invariants").at("omega_vanishes_on_pi").at("value") == true);
    CHECK(j.at("invariants").at("c1_vanishes_on_pi").at("value") == true);
    for (const auto& p : j.at("pairings")) {
        CHECK(p.at("omega") == "0/1");
        CHECK(p.at("c1") == 0);
    }
}

TEST_CASE("example2 larger grids")
{
    const Json j = run_json(grid(Command::example2, 1, 1, 2, 2, 3));
    // k = 2*2*9 = 36 double points, each contributing d-1 = 2 spheres
    CHECK(j.at("invariants").at("pi_lower_bound").at("value") == 72);
    CHECK(j.at("pairings").size() == 72);

    for (long g1 = 1; g1 <= 2; ++g1)
        for (long d = 2; d <= 4; ++d) {
            const Json k = run_json(grid(Command::example2, g1, 2, 1, 2, d));
            const long nv = d, nh = 2 * d, kk = nv * nh;
            const long chi_x = (2 - 2 * g1) * (2 - 4);
            const long chi_b = nv * (2 - 4) + nh * (2 - 2 * g1) - 2 * kk;
            CHECK(k.at("invariants").at("euler_characteristic").at("value").get<long>() ==
                  oracle::complement_euler(d, chi_x, chi_b, {chi_b}));
            CHECK(k.at("invariants").at("b1").at("value") == 2 * g1 + 4);
            CHECK(k.at("invariants").at("pi_lower_bound").at("value") == kk * (d - 1));
        }
}

TEST_CASE("example2 Kaehler variant")
{
    auto cfg = grid(Command::example2, 1, 1, 1, 1, 2);
    cfg.kaehler = true;
    const Json j = run_json(cfg);
    CHECK(j.at("family") == "example2-kaehler");
    CHECK(j.at("invariants").at("kaehler").at("value") == true);
    CHECK(j.at("invariants").at("omega_vanishes_on_pi").at("value") == true);
}

TEST_CASE("example2 usage errors")
{
    CHECK(run(grid(Command::example2, 1, 1, 1, 1, 1)).exit_code == kExitUsage);
    CHECK(run(grid(Command::example2, 0, 1, 1, 1, 2)).exit_code == kExitUsage);
    CHECK(run(grid(Command::example2, 1, 1, 0, 1, 2)).exit_code == kExitUsage);
    const auto big = run(grid(Command::example2, 1, 1, 1000, 1000, 3));
    CHECK(big.exit_code == kExitUsage);
    CHECK(big.output.empty());
    CHECK_FALSE(big.error.empty());
    auto zero_area = grid(Command::example2, 1, 1, 1, 1, 2);
    zero_area.area1 = 0;
    CHECK(run(zero_area).exit_code == kExitUsage);
}

TEST_CASE("Kodaira-Thurston covers")
{
    for (auto [m1, m2, d] : {std::tuple{1L, 1L, 2L}, {3L, 2L, 5L}, {2L, 1L, 3L}}) {
        const auto cfg = grid(Command::kodaira_thurston, 1, 1, m1, m2, d);
        const auto r = run(cfg);
        CHECK(r.exit_code == kExitPass);
        const Json j = Json::parse(r.output);
        CHECK(j.at("invariants").at("b1").at("value") == 3);
        CHECK(j.at("invariants").at("kaehler").at("value") == false);
        CHECK(verdict(j, "b1_odd_hence_not_kaehler"));
        CHECK(verdict(j, "monodromy_relation_present"));
    }
    CHECK(run(grid(Command::kodaira_thurston, 2, 1, 1, 1, 2)).exit_code == kExitUsage);
    auto k = grid(Command::kodaira_thurston, 1, 1, 1, 1, 2);
    k.kaehler = true;
    CHECK(run(k).exit_code == kExitUsage);
}

TEST_CASE("a wrong H1 presentation is reported as a verification failure")
{
    auto cfg = grid(Command::kodaira_thurston, 1, 1, 1, 1, 2);
    cfg.test_relators = std::vector<std::vector<long>>{{1, 0, 0, 0}, {0, 1, 0, 0}};
    const auto r = run(cfg);
    CHECK(r.exit_code == kExitVerificationFailure);
    const Json j = Json::parse(r.output);
    CHECK(j.at("invariants").at("b1").at("value") == 2);
    CHECK_FALSE(verdict(j, "cover_b1_is_3"));

    cfg.test_relators = std::vector<std::vector<long>>{};
    CHECK(run(cfg).exit_code == kExitVerificationFailure);  // b1 = 4 is even
    cfg.test_relators = std::vector<std::vector<long>>{{1, 0}};
    CHECK(run(cfg).exit_code == kExitUsage);
}

TEST_CASE("tower7")
{
    for (long d : {2L, 3L, 4L, 7L}) {
        auto cfg = grid(Command::tower7, 1, 1, 1, 1, d);
        const auto r = run(cfg);
        CHECK(r.exit_code == kExitPass);
        const Json j = Json::parse(r.output);
        REQUIRE(j.at("stages").size() == 2);
        const Json& s2 = j.at("stages").at(1);
        CHECK(s2.at("invariants").at("omega_vanishes_on_pi").at("value") == true);
        CHECK(s2.at("invariants").at("c1_vanishes_on_pi").at("value") == false);
        CHECK(s2.at("invariants").at("b1").at("value").is_null());
        REQUIRE(s2.at("pairings").size() == 1);
        CHECK(s2.at("pairings").at(0).at("c1") == 2 * (1 - d));
        CHECK(s2.at("pairings").at(0).at("omega") == "0/1");
        const Json& s1 = j.at("stages").at(0);
        CHECK(s1.at("invariants").at("c1_vanishes_on_pi").at("value") == true);
        CHECK(s1.at("invariants").at("pi_lower_bound").at("value") == 4);
    }
    CHECK(cmd_tower7(2).stage2_report.chern_pairings.at(0).c1 == -2);
    CHECK(cmd_tower7(4).stage2_report.chern_pairings.at(0).c1 == -6);
    CHECK(run(grid(Command::tower7, 1, 1, 1, 1, 1)).exit_code == kExitUsage);
}

TEST_CASE("independence catalog")
{
    const Catalog c = cmd_catalog(2);
    REQUIRE(c.entries.size() == 4);
    CHECK(c.all_pass());
    CHECK(c.entries[0].live);
    CHECK(c.entries[3].live);
    CHECK(c.entries[0].omega_on_pi == Pairing::zero);
    CHECK(c.entries[0].c1_on_pi == Pairing::zero);
    CHECK(c.entries[3].omega_on_pi == Pairing::zero);
    CHECK(c.entries[3].c1_on_pi == Pairing::nonzero);
    CHECK(run(grid(Command::catalog, 1, 1, 1, 1, 2)).exit_code == kExitPass);
    CHECK(run(grid(Command::catalog, 1, 1, 1, 1, 1)).exit_code == kExitUsage);
}

TEST_CASE("kollar criterion")
{
    const auto both = cmd_kollar(true, true);
    CHECK(both.concluded);
    CHECK(both.conclusion == "omega|Pi(X) = 0");
    CHECK(both.failed_hypotheses.empty());

    const auto no_pi2 = cmd_kollar(true, false);
    CHECK_FALSE(no_pi2.concluded);
    CHECK(no_pi2.conclusion == "no conclusion");
    REQUIRE(no_pi2.failed_hypotheses.size() == 1);
    CHECK(no_pi2.failed_hypotheses[0] == "pi_2(Y) = 0");

    const auto no_pullback = cmd_kollar(false, true);
    CHECK_FALSE(no_pullback.concluded);
    CHECK(no_pullback.failed_hypotheses.size() == 1);

    RunConfig cfg;
    cfg.command = Command::kollar;
    CHECK(run(cfg).exit_code == kExitPass);
}

TEST_CASE("JSON output is deterministic and agrees with the table")
{
    const auto cfg = grid(Command::example2, 1, 2, 1, 1, 3);
    const auto a = run(cfg), b = run(cfg);
    CHECK(a.output == b.output);

    auto tcfg = cfg;
    tcfg.format = OutputFormat::table;
    const std::string table = run(tcfg).output;
    const Json j = Json::parse(a.output);
    for (const char* key : {"euler_characteristic", "b1", "pi_lower_bound"}) {
        const std::string value = j.at("invariants").at(key).at("value").dump();
        CHECK(table.find(std::string(key)) != std::string::npos);
        const auto line_start = table.find("  " + std::string(key));
        REQUIRE(line_start != std::string::npos);
        const auto line = table.substr(line_start, table.find('\n', line_start) - line_start);
        CHECK(line.find(" " + value + " ") != std::string::npos);
    }
    for (const auto& v : j.at("verdicts"))
        CHECK(table.find("PASS  " + v.at("name").get<std::string>()) != std::string::npos);
}

TEST_CASE("integers outside the double-safe range serialize as strings")
{
    CHECK(integer_to_json(Integer("9007199254740991")) == 9007199254740991LL);
    CHECK(integer_to_json(Integer("9007199254740992")) == "9007199254740992");
    CHECK(integer_to_json(Integer("-9007199254740992")) == "-9007199254740992");
    CHECK(integer_from_json(Json("123456789012345678901234567890")) == Integer("123456789012345678901234567890"));
    CHECK(integer_from_json(Json(-5)) == -5);
    CHECK_THROWS(integer_from_json(Json(1.5)));

    const auto path = scratch("big.json");
    {
        std::ofstream out(path);
        out << R"({"rows": 2, "cols": 2, "entries": ["123456789012345678901", 0, 0, "98765432109876543210"]})";
    }
    RunConfig cfg;
    cfg.command = Command::snf;
    cfg.format = OutputFormat::json;
    cfg.matrix_path = path.string();
    const auto r = run(cfg);
    REQUIRE(r.exit_code == kExitPass);
    const Json j = Json::parse(r.output);
    CHECK(j.at("rank") == 2);
    CHECK(j.at("divisors").at(1).is_string());  // the first is their gcd, which is small
    Integer product = 1;
    for (const auto& x : j.at("divisors")) product *= integer_from_json(x);
    CHECK(product == Integer("123456789012345678901") * Integer("98765432109876543210"));
    std::filesystem::remove(path);
}

TEST_CASE("snf command errors")
{
    RunConfig cfg;
    cfg.command = Command::snf;
    cfg.matrix_path = scratch("does_not_exist.json").string();
    CHECK(run(cfg).exit_code == kExitUsage);

    const auto path = scratch("ragged.json");
    {
        std::ofstream out(path);
        out << R"({"rows": 2, "cols": 2, "entries": [1, 2, 3]})";
    }
    cfg.matrix_path = path.string();
    CHECK(run(cfg).exit_code == kExitUsage);
    std::filesystem::remove(path);
}

TEST_CASE("batch runs keep input order")
{
    const Json spec = Json::parse(R"([
        {"command": "tower7", "d": 3},
        {"command": "example2", "m1": 2, "d": 2},
        {"command": "kollar", "omega_pullback": true, "target_pi2_trivial": true},
        {"command": "kodaira-thurston", "d": 3}
    ])");
    auto configs = batch_from_json(spec);
    REQUIRE(configs.size() == 4);
    for (auto& c : configs) c.format = OutputFormat::json;
    const auto results = run_batch(configs);
    REQUIRE(results.size() == 4);
    for (std::size_t i = 0; i < results.size(); ++i) CHECK(results[i].output == run(configs[i]).output);
    CHECK(Json::parse(results[0].output).at("family") == "tower7");
    CHECK(Json::parse(results[1].output).at("invariants").at("pi_lower_bound").at("value") == 8);
    CHECK(Json::parse(results[2].output).at("concluded") == true);
    CHECK(batch_exit_code(results) == kExitPass);
}

TEST_CASE("batch exit codes")
{
    RunResult ok, fail{kExitVerificationFailure, "x", ""}, usage{kExitUsage, "", "bad"};
    CHECK(batch_exit_code({}) == kExitPass);
    CHECK(batch_exit_code({ok, ok}) == kExitPass);
    CHECK(batch_exit_code({ok, fail}) == kExitVerificationFailure);
    CHECK(batch_exit_code({fail, usage, ok}) == kExitUsage);
}

TEST_CASE("batch JSON is strict")
{
    CHECK_THROWS_AS(batch_from_json(Json::parse(R"({"command": "tower7"})")), DomainError);
    CHECK_THROWS_AS(batch_from_json(Json::parse(R"([{"d": 3}])")), DomainError);
    CHECK_THROWS_AS(batch_from_json(Json::parse(R"([{"command": "tower7", "degree": 3}])")), DomainError);
    CHECK_THROWS_AS(batch_from_json(Json::parse(R"([{"command": "tower7", "format": "json"}])")), DomainError);
    CHECK_THROWS_AS(batch_from_json(Json::parse(R"([{"command": "nope"}])")), DomainError);
    CHECK_THROWS_AS(batch_from_json(Json::parse(R"([{"command": "tower7", "d": "3"}])")), DomainError);
    CHECK_THROWS_AS(batch_from_json(Json::parse(R"([{"command": "example2", "kaehler": 1}])")), DomainError);

    const auto cfgs = batch_from_json(Json::parse(R"([{"command": "example2", "area1": "3/2", "area2": 2}])"));
    CHECK(cfgs.at(0).area1 == Rational(3, 2));
    CHECK(cfgs.at(0).area2 == 2);
}

TEST_CASE("command names round-trip")
{
    for (auto c : {Command::example2, Command::kodaira_thurston, Command::tower7, Command::catalog, Command::kollar,
                   Command::snf})
        CHECK(parse_command(command_name(c)) == c);
    CHECK(command_name(Command::kodaira_thurston) == "kodaira-thurston");
    CHECK_THROWS_AS(parse_command("example3"), DomainError);
}
