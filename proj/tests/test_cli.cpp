#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "support.hpp"
#include "thetalat/cli.hpp"
#include "thetalat/io.hpp"

using namespace thetalat;

#ifndef FIXTURE_DIR
#define FIXTURE_DIR "tests/fixtures"
#endif

namespace {

std::string fixture(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze the d = 2 fixture") {
    CliResult r = run({"analyze", fixture("e2_gram.json"), "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["divisors"] == nlohmann::json::array({"2"}));
    CHECK(j["jordan_constant"] == "2");
    CHECK(j["g0"] == 0);
    CHECK(j["is_pic0"] == false);
    CHECK(j["k_group"]["component_order"] == "4");
    CHECK(j["pairing_table"][1][2] == "1/2");

    CliResult human = run({"analyze", fixture("e2_gram.json")});
    CHECK(human.code == 0);
    CHECK(human.out.find("jordan constant = 2") != std::string::npos);
}

TEST_CASE("analyze the pic0 fixture") {
    CliResult r = run({"analyze", fixture("pic0.json"), "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["is_pic0"] == true);
    CHECK(j["jordan_constant"] == "1");
    CHECK(j["g0"] == 1);
}

TEST_CASE("analyze error paths") {
    CliResult bad = run({"analyze", fixture("bad_rational.json")});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("alpha_t[0]") != std::string::npos);

    CliResult invalid = run({"analyze", fixture("nonintegral.json")});
    CHECK(invalid.code == 2);

    CliResult missing = run({"analyze", fixture("no_such_file.json")});
    CHECK(missing.code == 1);

    CliResult usage = run({"frobnicate"});
    CHECK(usage.code == 1);
}

TEST_CASE("pencil command") {
    CliResult refuse = run({"pencil", fixture("pencil_linear.json"), "--range", "5"});
    CHECK(refuse.code == 2);  // gram mode needs the waiver

    CliResult r = run({"pencil", fixture("pencil_linear.json"), "--range", "5",
                       "--assume-semipositive", "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["doubled"] == true);
    REQUIRE(j["growth_table"].size() == 5);
    CHECK(j["growth_table"][0]["jordan"] == "2");
    CHECK(j["growth_table"][4]["jordan"] == "10");

    // even dominating form: no doubling, rows 2n + 3
    CliResult p3 = run({"pencil", fixture("pencil_plus3.json"), "--range", "3",
                        "--assume-semipositive", "--json"});
    REQUIRE(p3.code == 0);
    auto j3 = nlohmann::json::parse(p3.out);
    CHECK(j3["doubled"] == false);
    CHECK(j3["growth_table"][0]["jordan"] == "5");
    CHECK(j3["growth_table"][1]["jordan"] == "7");
    CHECK(j3["growth_table"][2]["jordan"] == "9");

    CliResult miss = run({"pencil", fixture("pencil_missing.json"), "--range", "3"});
    CHECK(miss.code == 1);
}

TEST_CASE("heisenberg command") {
    CliResult r = run({"heisenberg", "--type", "2", "--brute-force", "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["closed_form"] == "2");
    CHECK(j["brute_force"]["constant"] == "2");
    CHECK(j["brute_force"]["verdict"] == "AGREE");

    CliResult one = run({"heisenberg", "--type", "1"});
    CHECK(one.code == 0);
    CHECK(one.out.find("closed-form jordan constant = 1") != std::string::npos);

    // closed form only: the order is far over any enumeration bound
    CliResult big = run({"heisenberg", "--type", "16,16"});
    CHECK(big.code == 0);
    CHECK(big.out.find("closed-form jordan constant = 256") != std::string::npos);
    CHECK(big.out.find("skipped") != std::string::npos);

    CliResult toobig = run({"heisenberg", "--type", "16,16", "--brute-force"});
    CHECK(toobig.code == 2);
    CHECK(toobig.err.find("bound") != std::string::npos);
}

TEST_CASE("verify command") {
    CliResult r = run({"verify", fixture("e2_gram.json"), "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["ok"] == true);
    bool saw_comm = false;
    for (const auto& c : j["checks"]) {
        CHECK(c["pass"] == true);
        if (c["name"] == "commutator-identity")
            saw_comm = true;
    }
    CHECK(saw_comm);

    CliResult bad = run({"verify", fixture("nonintegral.json")});
    CHECK(bad.code == 2);
    CHECK(bad.out.find("FAIL  integrality") != std::string::npos);

    // the pic0 fixture exercises the commutativity check
    CliResult p0 = run({"verify", fixture("pic0.json"), "--json"});
    REQUIRE(p0.code == 0);
    auto jp = nlohmann::json::parse(p0.out);
    bool saw_pic0 = false;
    for (const auto& c : jp["checks"])
        if (c["name"] == "pic0-commutative") {
            saw_pic0 = true;
            CHECK(c["pass"] == true);
        }
    CHECK(saw_pic0);
}

TEST_CASE("reports are deterministic across runs") {
    CliResult a = run({"analyze", fixture("period_e2.json"), "--json"});
    CliResult b = run({"analyze", fixture("period_e2.json"), "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    CliResult v1 = run({"verify", fixture("period_e2.json"), "--json"});
    CliResult v2 = run({"verify", fixture("period_e2.json"), "--json"});
    CHECK(v1.out == v2.out);
}

TEST_CASE("serialization round trip is byte identical") {
    testsupport::Rng rng(4321);
    for (int iter = 0; iter < 20; ++iter) {
        InputDocument doc;
        doc.main = from_ah_data(testsupport::random_period_data(rng, 2, iter % 2));
        doc.pencil_base = from_ah_data(testsupport::gram_from_e(testsupport::e_block(3)));
        doc.pencil_dominating =
            from_ah_data(testsupport::gram_from_e(testsupport::e_block(1)));
        std::string s1 = serialize_document(doc);
        InputDocument parsed = parse_document(s1);
        std::string s2 = serialize_document(parsed);
        CHECK(s1 == s2);

        AHData d1 = to_ah_data(*doc.main);
        AHData d2 = to_ah_data(*parsed.main);
        CHECK(d1.gram == d2.gram);
        CHECK(d1.alpha_t == d2.alpha_t);
        CHECK(d1.period->periods == d2.period->periods);
    }
}

TEST_CASE("stdin input") {
    // piping a document through stdin via the "-" path
    std::istringstream fake_in(
        "{\"schema\":1,\"mode\":\"gram\",\"g\":1,"
        "\"gram\":[[{\"re\":\"0\",\"im\":\"0\"},{\"re\":\"0\",\"im\":\"1\"}],"
        "[{\"re\":\"0\",\"im\":\"-1\"},{\"re\":\"0\",\"im\":\"0\"}]],"
        "\"alpha_t\":[\"0\",\"0\"]}");
    auto* old = std::cin.rdbuf(fake_in.rdbuf());
    CliResult r = run({"analyze", "-", "--json"});
    std::cin.rdbuf(old);
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["jordan_constant"] == "1");
}
