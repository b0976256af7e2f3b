#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gelmod/cli.hpp"
#include "gelmod/errors.hpp"

#include "json.hpp"

#include <string>

using namespace gelmod;
using cli::Format;
using cli::Options;
using nlohmann::ordered_json;

namespace {

Options json_opts() {
    Options opt;
    opt.format = Format::Json;
    return opt;
}

ordered_json parsed(const std::string& out) { return ordered_json::parse(out); }

} // namespace

TEST_CASE("group expression parsing") {
    const ProductDescriptor p = cli::parse_group("A2xD6xE7");
    REQUIRE(p.factors.size() == 3);
    CHECK(p.factors[0].family == Family::A);
    CHECK(p.factors[0].parameter == 2);
    CHECK(p.factors[1].family == Family::D);
    CHECK(p.factors[1].parameter == 6);
    CHECK(p.factors[2].family == Family::E7);
    CHECK(p.name() == "A2xD6xE7");
    CHECK(!p.all_computable());

    const ProductDescriptor d = cli::parse_group("I2(7)");
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].family == Family::Dihedral);
    CHECK(d.factors[0].parameter == 7);

    CHECK(cli::parse_group("H3").factors[0].family == Family::H3);
    CHECK(cli::parse_group("B3xB3").name() == "B3xB3");
    CHECK(cli::parse_group("F4xH4xE6xE8").factors.size() == 4);

    SUBCASE("rejections") {
        CHECK_THROWS_AS(cli::parse_group(""), ParseError);
        CHECK_THROWS_AS(cli::parse_group("A"), ParseError);
        CHECK_THROWS_AS(cli::parse_group("A2x"), ParseError);
        CHECK_THROWS_AS(cli::parse_group("I2(7"), ParseError);
        CHECK_THROWS_AS(cli::parse_group("I2()"), ParseError);
        CHECK_THROWS_AS(cli::parse_group("A2 B3"), ParseError);
        CHECK_THROWS_AS(cli::parse_group("Q5"), UnknownType);
        CHECK_THROWS_AS(cli::parse_group("H2"), UnknownType);
        CHECK_THROWS_AS(cli::parse_group("D3"), ParameterOutOfRange);
        CHECK_THROWS_AS(cli::parse_group("B1"), ParameterOutOfRange);
        CHECK_THROWS_AS(cli::parse_group("I2(2)"), ParameterOutOfRange);
    }

    SUBCASE("format names") {
        CHECK(cli::parse_format("text") == Format::Text);
        CHECK(cli::parse_format("json") == Format::Json);
        CHECK(cli::parse_format("csv") == Format::Csv);
        CHECK_THROWS_AS(cli::parse_format("yaml"), Error);
    }
}

TEST_CASE("fake-degrees reports") {
    const auto res = cli::run_fake_degrees("A2", json_opts());
    CHECK(res.exitCode == 0);
    const auto j = parsed(res.output);
    CHECK(j["group"] == "A2");
    CHECK(j["method"] == "computed");
    CHECK(j["isGelfand"] == true);
    CHECK(j["witnesses"].empty());
    REQUIRE(j["labels"].size() == 3);
    CHECK(j["labels"][0]["label"] == "[3]");
    CHECK(j["labels"][0]["fakeDegree"] == ordered_json::array({1}));
    CHECK(j["labels"][1]["label"] == "[2,1]");
    CHECK(j["labels"][1]["fakeDegree"] == ordered_json::array({0, 1, 1}));
    CHECK(j["labels"][1]["p"] == 1);
    CHECK(j["labels"][1]["firstMultiplicity"] == 1);
    CHECK(j["labels"][1]["dim"] == 2);
    CHECK(j["labels"][2]["fakeDegree"] == ordered_json::array({0, 0, 0, 1}));

    SUBCASE("factors are tagged in products") {
        const auto two = cli::run_fake_degrees("A1xA2", json_opts());
        const auto jj = parsed(two.output);
        REQUIRE(jj["labels"].size() == 5);
        CHECK(jj["labels"][0]["factor"] == "A1");
        CHECK(jj["labels"][2]["factor"] == "A2");
    }

    SUBCASE("classification-only factors cannot be expanded") {
        const auto bad = cli::run_command("fake-degrees", "A2xE7", json_opts());
        CHECK(bad.exitCode == 2);
        const auto jj = parsed(bad.output);
        CHECK(jj["error"]["type"] == "UnsupportedFamily");
        CHECK(!jj["error"]["message"].get<std::string>().empty());
    }
}

TEST_CASE("verdict reports") {
    const auto yes = cli::run_verdict("B4xD5xH3", json_opts());
    CHECK(yes.exitCode == 0);
    const auto jy = parsed(yes.output);
    CHECK(jy["isGelfand"] == true);
    CHECK(jy["method"] == "computed");

    // a negative verdict is still a successful computation
    const auto no = cli::run_verdict("D4", json_opts());
    CHECK(no.exitCode == 0);
    const auto jn = parsed(no.output);
    CHECK(jn["isGelfand"] == false);
    CHECK(jn["method"] == "computed");
    REQUIRE(!jn["witnesses"].empty());
    CHECK(jn["witnesses"][0]["factor"] == "D4");
    CHECK(jn["witnesses"][0]["firstMultiplicity"].get<long long>() >= 2);

    const auto tag = cli::run_verdict("A2xE7", json_opts());
    CHECK(tag.exitCode == 0);
    const auto jt = parsed(tag.output);
    CHECK(jt["isGelfand"] == false);
    CHECK(jt["method"] == "classified");
    CHECK(jt["witnesses"][0]["factor"] == "E7");
}

TEST_CASE("model and dihedral-model reports") {
    const auto res = cli::run_model("A1xA2", json_opts());
    CHECK(res.exitCode == 0);
    const auto j = parsed(res.output);
    CHECK(j["totalDimension"] == 8);
    CHECK(j["gradedDimension"]["0"] == 1);
    CHECK(j["gradedDimension"]["1"] == 3);
    CHECK(j["gradedDimension"]["4"] == 1);

    SUBCASE("degree window") {
        Options opt = json_opts();
        opt.maxDegree = 1;
        const auto cut = cli::run_model("A1xA2", opt);
        const auto jj = parsed(cut.output);
        CHECK(jj["gradedDimension"].size() == 2);
        CHECK(jj["totalDimension"] == 4); // the total follows the window
    }

    SUBCASE("dihedral basis with certificate") {
        const auto dm = cli::run_dihedral_model("I2(5)", json_opts());
        CHECK(dm.exitCode == 0);
        const auto jj = parsed(dm.output);
        CHECK(jj["dimension"] == 6);
        CHECK(jj["annihilationCertified"] == true);
        CHECK(jj["matchesKernel"] == true);
        REQUIRE(jj["annihilators"].size() == 2);
        CHECK(jj["basis"]["0"].size() == 1);
        CHECK(jj["basis"]["1"].size() == 2);
        CHECK(jj["basis"]["2"].size() == 2);
        CHECK(jj["basis"]["5"].size() == 1);

        const auto text = cli::run_dihedral_model("I2(8)", Options{});
        CHECK(text.exitCode == 0);
    }
}

TEST_CASE("oracle and check reports") {
    const auto res = cli::run_oracle("B2xI2(5)", json_opts());
    CHECK(res.exitCode == 0);
    const auto j = parsed(res.output);
    CHECK(j["pass"] == true);
    REQUIRE(j["factors"].size() == 2);
    for (const auto& f : j["factors"]) {
        CHECK(f["allEqual"] == true);
        CHECK(f["poincare"] == true);
        CHECK(f["failures"].empty());
    }
    CHECK(j["factors"][0]["labelsCompared"] == 5);

    const auto chk = cli::run_check("A2xB2", json_opts());
    CHECK(chk.exitCode == 0);
    const auto jc = parsed(chk.output);
    CHECK(jc["pass"] == true);
    for (const auto& f : jc["factors"]) {
        CHECK(f["orthogonality"] == "pass");
        CHECK(f["oracle"] == "pass");
        CHECK(f["gelfandDimension"] == "pass");
        CHECK(f["verdictConsistent"] == "pass");
        CHECK(f["model"] == "match");
    }
}

TEST_CASE("json output round-trips byte-identically") {
    const Options opt = json_opts();
    const std::pair<const char*, const char*> runs[] = {
        {"fake-degrees", "B2"},   {"fake-degrees", "H3"}, {"verdict", "A2xE7"},
        {"verdict", "D4"},        {"model", "A1xA2"},     {"oracle", "I2(6)"},
        {"dihedral-model", "I2(4)"}, {"check", "I2(3)"},
    };
    for (const auto& [sub, expr] : runs) {
        CAPTURE(sub);
        CAPTURE(expr);
        const auto res = cli::run_command(sub, expr, opt);
        const std::string reEmitted = parsed(res.output).dump(2) + "\n";
        CHECK(res.output == reEmitted);
    }
}

TEST_CASE("error rendering and exit codes") {
    const auto unknown = cli::run_command("frobenicate", "A2", json_opts());
    CHECK(unknown.exitCode == 2);
    const auto ju = parsed(unknown.output);
    CHECK(ju["error"]["type"] == "ParseError");

    const auto bad = cli::run_command("model", "A2yB3", json_opts());
    CHECK(bad.exitCode == 2);
    CHECK(parsed(bad.output)["error"]["type"] == "ParseError");

    const auto range = cli::run_command("fake-degrees", "D2", json_opts());
    CHECK(range.exitCode == 2);
    CHECK(parsed(range.output)["error"]["type"] == "ParameterOutOfRange");

    SUBCASE("enumeration honors the cap") {
        Options opt = json_opts();
        opt.cap = 100;
        const auto res = cli::run_command("check", "B4", opt); // order 384
        // the check subcommand needs elements only for the involution count,
        // which reports itself as skipped over the cap; nothing should fail
        CHECK(res.exitCode == 0);
        const auto j = parsed(res.output);
        CHECK(j["factors"][0]["gelfandDimension"] == "skipped");
    }

    SUBCASE("text errors carry the position") {
        Options opt; // text format
        const auto res = cli::run_command("model", "A2xxB3", opt);
        CHECK(res.exitCode == 2);
        CHECK(res.output.find("position") != std::string::npos);
    }
}

TEST_CASE("csv output") {
    Options opt;
    opt.format = Format::Csv;
    const auto res = cli::run_fake_degrees("B2", opt);
    CHECK(res.exitCode == 0);
    CHECK(res.output.rfind("group,factor,label,p,firstMultiplicity,dim,fakeDegree\n", 0) == 0);
    // bipartition labels contain commas, so they must be quoted
    CHECK(res.output.find("\"([1],[1])\"") != std::string::npos);

    const auto model = cli::run_model("A1xA2", opt);
    CHECK(model.output.rfind("group,degree,dimension\n", 0) == 0);
    CHECK(model.output.find("A1xA2,0,1\n") != std::string::npos);
}
