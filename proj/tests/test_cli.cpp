#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ringlab/cli.hpp"
#include "ringlab/fixtures.hpp"

using namespace ringlab;
using nlohmann::json;

namespace {
struct Run {
    int code;
    std::string out, err;
};
Run cli(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    int code = cli_execute(std::vector<std::string>(args), out, err);
    return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("ideal classify") {
    auto r = cli({"ideal", "classify", "--ring", "Z12", "--gens", "<4>", "--format", "json"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["semi_r"] == true);
    CHECK(j["semi_n"] == false);
    CHECK(j["semiprime"] == false);
    CHECK(j["r"] == true);
    CHECK(j["witnesses"]["semi_n"] == "2");
}

TEST_CASE("symbolic ideal classify") {
    auto r = cli({"ideal", "classify", "--ring", "ZZ", "--gens", "<8>", "--format", "json"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["semi_r"] == false);
    CHECK(j["witnesses"]["semi_r"] == "4");
    CHECK(j["mode"] == "exact");

    auto p = cli({"ideal", "classify", "--ring", "ZZ x ZZ", "--gens", "<(4,6)>", "--format",
                  "json"});
    auto jp = json::parse(p.out);
    CHECK(jp["semi_r"] == false);
    CHECK(jp["witnesses"]["semi_r"] == "(2,6)");
}

TEST_CASE("module classify, table and symbolic") {
    auto r = cli({"module", "classify", "--ring", "Z12", "--module", "self", "--gens", "<4>",
                  "--format", "json"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["semi_r"] == true);
    CHECK(j["semiprime"] == false);

    auto s = cli({"module", "classify", "--ring", "ZZ", "--module", "ZZ x ZZ", "--gens",
                  "<(6,0)>", "--format", "json"});
    CHECK(s.code == 0);
    auto js = json::parse(s.out);
    CHECK(js["semi_r"] == true);
    CHECK(js["r"] == false);
    CHECK(js["sr"] == false);
    CHECK(js["witnesses"]["r"] == "(2,(3,0))");

    auto t = cli({"module", "classify", "--ring", "ZZ", "--module", "Z8 x ZZ", "--gens",
                  "<(4,0)>", "--format", "json"});
    auto jt = json::parse(t.out);
    CHECK(jt["semi_r"] == true);
    CHECK(jt["semiprime"] == false);
    CHECK(jt["witnesses"]["semiprime"] == "(2,(1,0))");
}

TEST_CASE("exit codes") {
    CHECK(cli({"ring", "info", "--ring", "Zx"}).code == 3);          // parse error
    CHECK(cli({"ring", "info", "--ring", "Z1"}).code == 3);          // elaboration error
    CHECK(cli({"bogus"}).code == 2);                                 // usage
    CHECK(cli({"ideal", "list", "--ring", "ZZ"}).code == 2);         // symbolic unsupported
    CHECK(cli({"ring", "info", "--ring", "Z12"}).code == 0);
    auto pe = cli({"ring", "info", "--ring", "Zx"});
    CHECK(pe.err.find("offset") != std::string::npos);
}

TEST_CASE("ideal list with filter") {
    auto r = cli({"ideal", "list", "--ring", "Z12", "--format", "json"});
    auto j = json::parse(r.out);
    CHECK(j.size() == 6);
    auto f = cli({"ideal", "list", "--ring", "Z12", "--filter", "semi_r & !semi_n", "--format",
                  "json"});
    auto jf = json::parse(f.out);
    REQUIRE(jf.size() == 1);
    CHECK(jf[0]["members"] == "0,4,8");
}

TEST_CASE("construct") {
    auto r = cli({"construct", "--expr", "idz(Z2, Z2)", "--show", "flags", "--format", "json"});
    auto j = json::parse(r.out);
    CHECK(j["order"] == 4);
    CHECK(j["axioms_ok"] == true);
    auto t = cli({"construct", "--expr", "Z4", "--show", "table"});
    CHECK(t.out.find("mul:") != std::string::npos);
}

TEST_CASE("verify on a small corpus file") {
    std::string path = "cli_corpus_tmp.txt";
    {
        std::ofstream f(path);
        f << "Z12\nZ2 x Z2\nidz(Z4, Z2)\n";
    }
    auto r = cli({"verify", "--suite", "T_char,T_every,P_ide", "--corpus", path, "--format",
                  "json"});
    std::remove(path.c_str());
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    REQUIRE(j["checks"].size() == 3);
    for (auto& c : j["checks"]) {
        CHECK(c["status"] == "proved");
        CHECK(c["millis"] == 0);
        CHECK(c.size() == 8);
    }
}

TEST_CASE("verify json byte determinism on a reduced suite") {
    auto a = cli({"verify", "--suite", "T_char,T_cchar,P_inters", "--format", "json"});
    auto b = cli({"verify", "--suite", "T_char,T_cchar,P_inters", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("fixtures list matches the shipped data file") {
    auto r = cli({"fixtures", "list", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out == fixtures_json());
    std::ifstream f("../data/fixtures.json");
    if (f) {
        std::stringstream ss;
        ss << f.rdbuf();
        CHECK(ss.str() == fixtures_json());
    }
    auto t = cli({"fixtures", "list"});
    CHECK(t.out.find("z_8Z") != std::string::npos);
}

TEST_CASE("fixtures run") {
    auto one = cli({"fixtures", "run", "--id", "z_8Z", "--format", "json"});
    CHECK(one.code == 0);
    auto j = json::parse(one.out);
    CHECK(j[0]["status"] == "refuted");
    CHECK(j[0]["witness"] == "4");
    CHECK(j[0]["matches_expected"] == true);

    auto all = cli({"fixtures", "run", "--all"});
    CHECK(all.code == 0);
    CHECK(all.out.find("[FAIL]") == std::string::npos);

    CHECK(cli({"fixtures", "run"}).code == 2);
    CHECK(cli({"fixtures", "run", "--id", "nope"}).code == 2);
}

TEST_CASE("search with fail-on-hit") {
    std::string path = "cli_corpus_tmp2.txt";
    {
        std::ofstream f(path);
        f << "Z12\n";
    }
    auto hit = cli({"search", "--property", "semi_r & !semi_n", "--corpus", path,
                    "--fail-on-hit"});
    CHECK(hit.code == 1);
    CHECK(hit.out.find("<4>") != std::string::npos);
    auto miss = cli({"search", "--property", "r & !semi_r", "--corpus", path, "--fail-on-hit"});
    CHECK(miss.code == 0);
    std::remove(path.c_str());
}
