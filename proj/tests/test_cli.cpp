#include "orbicurve/cli.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace orbicurve;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "orbicurve");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ORBICURVE_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
}

Json json_of(const Run& r) { return Json::parse(r.out); }

} // namespace

TEST_CASE("cohomology of O(3) on P(1,2)")
{
    auto r = cli({"cohomology", "--json", data("o3_p12.json")});
    REQUIRE(r.code == kExitOk);
    auto j = json_of(r);
    CHECK(j["command"] == "cohomology");
    CHECK(j["h0"] == 2);
    CHECK(j["h1"] == 0);
    CHECK(j["euler_char"] == "2");
}

TEST_CASE("global flags before or after the command")
{
    auto a = cli({"--json", "cohomology", data("o3_p12.json")});
    auto b = cli({"cohomology", data("o3_p12.json"), "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("sign with an empty first sector")
{
    auto r = cli({"sign", "--json", "--beta-detE", "1/2", "--g1", "", "--g2", "1/2"});
    REQUIRE(r.code == kExitOk);
    auto j = json_of(r);
    CHECK(j["exponent"] == "1");
    CHECK(j["sign"] == -1);
    CHECK(j["phase"] == "e^{i*pi*1}");
    CHECK_FALSE(j.contains("warning"));
}

TEST_CASE("sign with a fractional exponent has no integer sign")
{
    auto r = cli({"sign", "--json", "--beta-detE", "1/3", "--g1", "", "--g2", "0"});
    REQUIRE(r.code == kExitOk);
    auto j = json_of(r);
    CHECK(j["exponent"] == "1/3");
    CHECK(j["sign"].is_null());
    CHECK(j.contains("warning"));
}

TEST_CASE("rank from flags and from a bundle")
{
    auto r = cli({"rank", "--json", "--beta-detE", "1/2", "--g1", "0", "--g2", "1/2"});
    REQUIRE(r.code == kExitOk);
    CHECK(json_of(r)["rank"] == "1");

    auto mismatch = cli({"rank", "--beta-detE", "1", "--g1", "0,0", "--g2", "1/2"});
    CHECK(mismatch.code == kExitInput);

    auto b = cli({"rank", "--json", data("chain3.json")});
    REQUIRE(b.code == kExitOk);
    auto j = json_of(b);
    CHECK(j["weakly_convex"] == true);
    CHECK(j["agrees"] == true);
    CHECK(j["rank"] == std::to_string(j["h1_dual_direct"].get<int>()));
}

TEST_CASE("convexity on a chain that is convex but not semipositive")
{
    auto r = cli({"convexity", "--json", data("chain3.json")});
    REQUIRE(r.code == kExitOk);
    auto j = json_of(r);
    CHECK(j["weakly_semipositive"] == false);
    CHECK(j["weakly_convex"] == true);
    CHECK(j["weakly_concave_dual"] == true);
    CHECK(j["witnesses"].size() == 2);
    CHECK(j["log_canonical_certificate"]["passed"] == true);
    CHECK(j["log_canonical_certificate"]["log_canonical"]["h0"] == 1);
}

TEST_CASE("wps commands on P(1,1,2,2) with O(1)")
{
    auto s = cli({"wps", "sectors", "--json", data("p1122_o1.json")});
    REQUIRE(s.code == kExitOk);
    auto sj = json_of(s);
    REQUIRE(sj["sectors"].size() == 2);
    CHECK(sj["sectors"][1]["f"] == "1/2");
    CHECK(sj["sectors"][1]["age"] == "1/2");

    auto p = cli({"wps", "pairing", "--json", data("p1122_o1.json")});
    REQUIRE(p.code == kExitOk);
    auto pj = json_of(p);
    CHECK(pj["basis"].size() == 5);
    CHECK(pj["compact_type_gram"].size() == 5);

    auto v = cli({"wps", "verify", "--json", data("p1122_o1.json")});
    CHECK(v.code == kExitOk);
    CHECK(json_of(v)["passed"] == true);

    CHECK(cli({"wps", "nonsense", data("p1122_o1.json")}).code == kExitInput);
    CHECK(cli({"wps", "sectors", data("o3_p12.json")}).code == kExitInput);
}

TEST_CASE("series-verify on a small table")
{
    auto r = cli({"series-verify", "--json", "--order", "3", data("p1122_table.json")});
    REQUIRE(r.code == kExitOk);
    auto j = json_of(r);
    CHECK(j["passed"] == true);
    CHECK(j["violation"].is_null());
    CHECK(j["coefficients_checked"].get<int>() > 0);
}

TEST_CASE("input errors exit 2 and name the pointer")
{
    auto r = cli({"cohomology", data("bad_gcd.json")});
    CHECK(r.code == kExitInput);
    CHECK(r.err.find("/chain/0") != std::string::npos);
    CHECK(r.err.find("gcd(a,b)=2 ≠ 1") != std::string::npos);

    auto j = cli({"cohomology", "--json", data("bad_gcd.json")});
    CHECK(j.code == kExitInput);
    CHECK(json_of(j)["error"]["kind"] == "input");

    CHECK(cli({"cohomology", data("does_not_exist.json")}).code == kExitInput);
    CHECK(cli({"cohomology", data("p1122_o1.json")}).code == kExitInput);
    CHECK(cli({"sign", "--beta-detE", "x"}).code == kExitInput);
    CHECK(cli({"sign", "--beta-detE", "1", "--g1", "3/2"}).code == kExitInput);
    CHECK(cli({"verify", "--suite", "no-such-suite"}).code == kExitInput);
    CHECK(cli({"verify", "--suite", "age-sum", "--trials", "0"}).code == kExitInput);
    CHECK(cli({"verify", "--suite", "log-canonical", "--max-len", "9"}).code == kExitInput);
    CHECK(cli({}).code == kExitInput);
    CHECK(cli({"frobnicate"}).code == kExitInput);
}

TEST_CASE("verify passes on a small grid and fails where the hypothesis is dropped")
{
    auto ok = cli({"verify", "--json", "--suite", "thm-weak-convexity", "--max-a", "2", "--max-l", "2", "--max-d",
                   "2", "--max-len", "2"});
    REQUIRE(ok.code == kExitOk);
    auto j = json_of(ok);
    CHECK(j["passed"] == true);
    CHECK(j["suites"][0]["counterexamples"] == 0);
    CHECK_FALSE(j["suites"][0].contains("seconds"));

    auto bad = cli({"verify", "--json", "--suite", "h1-vanishing", "--max-a", "2", "--max-l", "2", "--min-d", "-2"});
    CHECK(bad.code == kExitFailure);
    auto bj = json_of(bad);
    CHECK(bj["passed"] == false);
    CHECK(bj["suites"][0]["first_counterexample"].is_string());
}

TEST_CASE("timing only with --timing, text always shows it")
{
    auto t = cli({"verify", "--json", "--timing", "--suite", "age-sum", "--trials", "50"});
    CHECK(json_of(t)["suites"][0].contains("seconds"));
    auto text = cli({"verify", "--suite", "age-sum", "--trials", "50"});
    CHECK(text.out.find("seconds") != std::string::npos);
    CHECK(text.out.find("counterexamples") != std::string::npos);
}

TEST_CASE("JSON reports are byte-identical for a fixed input and seed")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"verify", "--json", "--seed", "7", "--suite", "operator-identity", "--trials", "20"},
             {"verify", "--json", "--seed", "7", "--suite", "age-sum", "--trials", "200"},
             {"wps", "pairing", "--json", data("p1122_o1.json")},
             {"convexity", "--json", data("chain3.json")}}) {
        auto a = cli(args), b = cli(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    auto s1 = cli({"verify", "--json", "--seed", "1", "--suite", "age-sum", "--trials", "20"});
    auto s2 = cli({"verify", "--json", "--seed", "2", "--suite", "age-sum", "--trials", "20"});
    CHECK(json_of(s1)["seed"] == 1);
    CHECK(json_of(s2)["seed"] == 2);
}

TEST_CASE("serialize after parse is idempotent")
{
    for (const char* name : {"o3_p12.json", "present_4_6.json", "chain3.json", "p1122_o1.json", "p1122_table.json"}) {
        CAPTURE(name);
        auto once = serialize_input(parse_input(std::string_view(slurp(data(name)))));
        auto twice = serialize_input(parse_input(once));
        CHECK(once == twice);
    }
}

TEST_CASE("both component forms parse to the same chain")
{
    auto cd = std::get<CurveInput>(parse_input(std::string_view(R"({"chain":[{"c":4,"d":6}]})")));
    auto canon = serialize_input(cd);
    auto abl = std::get<CurveInput>(parse_input(canon));
    CHECK(cd.chain == abl.chain);
    CHECK(canon["chain"][0]["l1"].get<int>() * canon["chain"][0]["l2"].get<int>() == 2);
}

TEST_CASE("schema violations report JSON pointers")
{
    auto pointer_of = [](std::string_view text) {
        try {
            parse_input(text);
        } catch (const InputError& e) {
            return e.pointer();
        }
        return std::string("<none>");
    };
    CHECK(pointer_of(R"({"chain":[{"c":4}]})") == "/chain/0/d");
    CHECK(pointer_of(R"({"chain":[{"c":4,"d":6,"a":1}]})") == "/chain/0");
    CHECK(pointer_of(R"({"chain":[{"c":4,"d":6}],"bundle":[[{"d":"x"}]]})") == "/bundle/0/0/d");
    CHECK(pointer_of(R"({"chain":[{"c":4,"d":6}],"bundle":[[{"d":1,"q":0}]]})") == "/bundle/0/0/q");
    CHECK(pointer_of(R"({"chain":[]})") == "/chain");
    CHECK(pointer_of(R"({"wps":{"weights":[1,0]}})") == "/wps");
    CHECK(pointer_of(R"({"wps":{"weights":[1,1]},"table":[{"beta":{"theta":"1/2"}}]})") ==
          "/table/0/beta/detE");
    CHECK(pointer_of(R"({"bundle":[]})") == "/bundle");
    CHECK(pointer_of(R"({"colour":1})") == "/colour");
    CHECK(pointer_of("{not json") == "");
}

TEST_CASE("text rendering aligns keys")
{
    Json body{{"command", "x"}, {"a_longer_key", 1}, {"nested", Json{{"k", "v"}}}, {"empty", Json::array()}};
    auto text = render_text(body);
    CHECK(text.find("command       x\n") != std::string::npos);
    CHECK(text.find("nested.k      v\n") != std::string::npos);
    CHECK(text.find("empty         none\n") != std::string::npos);
}
