#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <set>
#include <sstream>

#include "fixsub/cli.hpp"
#include "fixsub/fixing.hpp"
#include "fixsub/graph.hpp"
#include "fixsub/report_json.hpp"
#include "fixsub/verify.hpp"

using namespace fixsub;
using nlohmann::json;

namespace {

struct CliRun {
    int code = -1;
    std::string out, err;
};

CliRun cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::ostringstream out, err;
    std::istringstream in(input);
    CliRun r;
    r.code = run_cli(args, out, err, in);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json parsed_rows(const std::string& text) {
    json j = json::parse(text);
    REQUIRE(j.is_array());
    return j;
}

}  // namespace

TEST_CASE("result rows derive their status", "[verify]") {
    REQUIRE(make_result("a", "3", "3").status == ClaimStatus::pass);
    REQUIRE(make_result("a", "3", "4").status == ClaimStatus::fail);
    REQUIRE(make_result("a", std::nullopt, "4").status == ClaimStatus::report_only);
    REQUIRE(std::string(status_name(ClaimStatus::pass)) == "pass");
    REQUIRE(std::string(status_name(ClaimStatus::fail)) == "fail");
    REQUIRE(std::string(status_name(ClaimStatus::report_only)) == "report-only");
}

TEST_CASE("result row serialization", "[verify]") {
    const json row = make_result("x.y", "7", "7", 31);
    const std::set<std::string> keys{"claim", "expected", "computed", "status", "runtimeMs"};
    std::set<std::string> got;
    for (const auto& [k, v] : row.items()) got.insert(k);
    REQUIRE(got == keys);
    REQUIRE(row["claim"] == "x.y");
    REQUIRE(row["expected"] == "7");
    REQUIRE(row["computed"] == "7");
    REQUIRE(row["status"] == "pass");
    REQUIRE(row["runtimeMs"] == 31);

    const json info = make_result("x.z", std::nullopt, "whatever");
    REQUIRE(info["expected"] == "unspecified");
    REQUIRE(info["status"] == "report-only");
}

TEST_CASE("orbit and fixing report serialization", "[verify]") {
    const json rep = ham_orbit_report(heawood());
    std::set<std::string> keys;
    for (const auto& [k, v] : rep.items()) keys.insert(k);
    REQUIRE(keys == std::set<std::string>{"cycles", "orbits", "fHam", "fStarHam"});
    REQUIRE(rep["cycles"] == 24);
    REQUIRE(rep["fHam"] == true);
    REQUIRE(rep["fStarHam"] == false);
    REQUIRE(rep["orbits"].size() == 1);
    const json& orbit = rep["orbits"][0];
    std::set<std::string> okeys;
    for (const auto& [k, v] : orbit.items()) okeys.insert(k);
    REQUIRE(okeys == std::set<std::string>{"size", "stab", "signature"});
    REQUIRE(orbit["size"] == 24);
    REQUIRE(orbit["stab"] == 14);
    REQUIRE(orbit["signature"].is_null());

    const Graph h = heawood();
    std::vector<int> rim(14);
    for (int i = 0; i < 14; ++i) rim[i] = i;
    const json fix = fixing_report(HamCycle(h, rim).as_spanning_subgraph(h), "heawood");
    std::set<std::string> fkeys;
    for (const auto& [k, v] : fix.items()) fkeys.insert(k);
    REQUIRE(fkeys == std::set<std::string>{"graph", "s", "s0", "x", "autG", "autU", "stab",
                                           "fixing", "strongFixing"});
    REQUIRE(fix["graph"] == "heawood");
    REQUIRE(fix["s"] == 24);
    REQUIRE(fix["x"] == 2);
    REQUIRE(fix["autG"] == 336);
    REQUIRE(fix["strongFixing"] == false);
}

TEST_CASE("text rendering quotes the violated claim", "[verify]") {
    VerificationResult bad = make_result("demo.bad", "1", "2", 5);
    bad.note = "there is exactly one of these";
    VerificationResult good = make_result("demo.good", "1", "1", 5);
    good.note = "never shown";
    VerificationResult info = make_result("demo.info", std::nullopt, "42", 5);

    const std::string text = render_text({bad, good, info});
    REQUIRE(text.find("FAIL") != std::string::npos);
    REQUIRE(text.find("^ contradicts: there is exactly one of these") != std::string::npos);
    REQUIRE(text.find("never shown") == std::string::npos);
    REQUIRE(text.find("report-only  demo.info") != std::string::npos);
    REQUIRE(text.find("expected=1 computed=2") != std::string::npos);
}

TEST_CASE("suite registry and feasibility refusals", "[verify]") {
    REQUIRE(suite_names() == std::vector<std::string>{"thm1", "thm6", "thm7", "thm8", "heawood",
                                                      "cage8", "exceptional"});
    REQUIRE_THROWS_AS(verify_suite("bogus"), UsageError);

    VerifyOptions o;
    o.range = {3, 7};
    REQUIRE_THROWS_AS(verify_suite("thm6", o), UsageError);  // n = 7 needs slow mode
    o.range = {2, 6};
    REQUIRE_THROWS_AS(verify_suite("thm7", o), UsageError);
    o.range = {7, 21};
    REQUIRE_THROWS_AS(verify_suite("thm7", o), UsageError);
    o.range = {6, 16};
    REQUIRE_THROWS_AS(verify_suite("thm8", o), UsageError);
    o.range = std::nullopt;
    o.k = 2;
    REQUIRE_THROWS_AS(verify_suite("thm8", o), UsageError);  // only thm7 takes k
    REQUIRE_THROWS_AS(verify_suite("heawood", o), UsageError);
}

TEST_CASE("single-graph suites are green", "[verify]") {
    const auto rows = verify_suite("heawood");
    REQUIRE(rows.size() == 14);
    REQUIRE(all_passed(rows));
    for (std::size_t i = 1; i < rows.size(); ++i)
        REQUIRE(rows[i - 1].claim_id < rows[i].claim_id);
    long checked = 0;
    for (const auto& r : rows) {
        if (r.claim_id == "heawood.cycle-count") {
            REQUIRE(r.expected == "24");
            REQUIRE(r.computed == "24");
            ++checked;
        }
        if (r.claim_id == "heawood.p-distribution") {
            REQUIRE(r.computed == "{1:2,2:7,3:7,4:7,14:1}");
            ++checked;
        }
    }
    REQUIRE(checked == 2);
}

TEST_CASE("graphgen emits both formats and validates parameters", "[cli]") {
    const CliRun g6 = cli({"graphgen", "gp", "10", "2"});
    REQUIRE(g6.code == 0);
    REQUIRE(g6.out == "ShCGGC@_K?G?GAC@@?OGA?_G@?O@OO?gG\n");

    const CliRun el = cli({"graphgen", "heawood", "--format", "edgelist"});
    REQUIRE(el.code == 0);
    REQUIRE(read_edge_list(el.out) == heawood());

    REQUIRE(cli({"graphgen", "gp", "4", "2"}).code == 2);   // needs 2k < n
    REQUIRE(cli({"graphgen", "cycle", "2"}).code == 2);     // needs n >= 3
    REQUIRE(cli({"graphgen", "nonesuch", "5"}).code == 2);  // unknown family
}

TEST_CASE("report renders orbit decompositions", "[cli]") {
    const CliRun hw = cli({"report", "heawood"});
    REQUIRE(hw.code == 0);
    const json rep = json::parse(hw.out);
    REQUIRE(rep["cycles"] == 24);
    REQUIRE(rep["fHam"] == true);
    REQUIRE(rep["fStarHam"] == false);

    const CliRun prism = cli({"report", "gp", "6", "1"});
    REQUIRE(prism.code == 0);
    const json prep = json::parse(prism.out);
    REQUIRE(prep["cycles"] == 8);
    std::set<std::string> sigs;
    for (const auto& orbit : prep["orbits"]) sigs.insert(orbit["signature"].get<std::string>());
    REQUIRE(sigs == std::set<std::string>{"5", "1,1,1"});

    const CliRun piped = cli({"report", "--input", "-"}, "C~\n");
    REQUIRE(piped.code == 0);
    const json krep = json::parse(piped.out);
    REQUIRE(krep["cycles"] == 3);
    REQUIRE(krep["fHam"] == true);

    REQUIRE(cli({"report"}).code == 2);  // needs a family or --input
}

TEST_CASE("verify maps outcomes onto exit codes", "[cli]") {
    const CliRun ok = cli({"verify", "heawood"});
    REQUIRE(ok.code == 0);
    const json rows = parsed_rows(ok.out);
    REQUIRE(rows.size() == 14);
    for (const auto& r : rows) REQUIRE(r["status"] == "pass");

    REQUIRE(cli({"verify", "bogus"}).code == 2);
    REQUIRE(cli({"verify", "thm6", "--range", "3:7"}).code == 2);
    REQUIRE(cli({"verify", "thm7", "--range", "1:25"}).code == 2);
    REQUIRE(cli({"verify", "thm7", "--k", "2", "--range", "7:9"}).code == 0);

    // an embedded expectation the computation contradicts: exit 1, not a crash
    const CliRun red = cli({"verify", "thm8", "--range", "7:7"});
    REQUIRE(red.code == 1);
    bool saw_fail = false;
    for (const auto& r : parsed_rows(red.out)) saw_fail = saw_fail || r["status"] == "fail";
    REQUIRE(saw_fail);

    const CliRun red_text = cli({"verify", "thm8", "--range", "7:7", "--format", "text"});
    REQUIRE(red_text.code == 1);
    REQUIRE(red_text.out.find("FAIL") != std::string::npos);
    REQUIRE(red_text.out.find("^ contradicts:") != std::string::npos);
}

TEST_CASE("verification output is independent of the worker count", "[cli]") {
    const CliRun lone = cli({"verify", "thm7", "--k", "2", "--range", "7:9", "--jobs", "1"});
    const CliRun wide = cli({"verify", "thm7", "--k", "2", "--range", "7:9", "--jobs", "6"});
    REQUIRE(lone.code == 0);
    REQUIRE(wide.code == 0);
    json a = parsed_rows(lone.out);
    json b = parsed_rows(wide.out);
    for (auto& r : a) r["runtimeMs"] = 0;
    for (auto& r : b) r["runtimeMs"] = 0;
    REQUIRE(a == b);
}
