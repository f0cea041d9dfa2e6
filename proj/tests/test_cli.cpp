#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <secdom/cli.hpp>

#include "oracles.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code = 0;
    std::string out, err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = secdom::cli::run(std::move(args), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << content;
    return path.string();
}

const std::string kP4 = "4 3\n0 1\n1 2\n2 3\n";
const std::string kC4 = "4 4\n0 1\n1 2\n2 3\n0 3\n";
const std::string kC11 = "11 11\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n9 10\n0 10\n";

}  // namespace

TEST_CASE("cli solve") {
    std::string p4 = write_temp("cli_p4.txt", kP4);

    CliResult r = run_cli({"solve", p4});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("gamma_s = 2") != std::string::npos);

    CliResult rg = run_cli({"solve", p4, "--variant", "gamma", "--json"});
    REQUIRE(rg.code == 0);
    json j = json::parse(rg.out);
    REQUIRE(j["status"] == "ok");
    REQUIRE(j["payload"]["variant"] == "gamma");
    REQUIRE(j["payload"]["value"] == 2);
    REQUIRE(j["payload"]["set"] == json::array({0, 2}));
    REQUIRE(j["payload"]["certificate"].is_null());

    CliResult rs = run_cli({"solve", p4, "--variant", "gamma-s", "--json"});
    json js = json::parse(rs.out);
    REQUIRE(js["payload"]["value"] == 2);
    REQUIRE(js["payload"]["certificate"]["set"] == json::array({0, 2}));

    // identical invocations give byte-identical machine output
    CliResult again = run_cli({"solve", p4, "--variant", "gamma-s", "--json"});
    REQUIRE(again.out == rs.out);

    REQUIRE(run_cli({"solve", p4, "--variant", "nonsense"}).code == 2);
    CliResult missing = run_cli({"solve", "/nonexistent/file.txt"});
    REQUIRE(missing.code == 2);
    REQUIRE(missing.err.find("cannot open") != std::string::npos);

    std::string broken = write_temp("cli_broken.txt", "2 1\n0 5\n");
    CliResult bad = run_cli({"solve", broken});
    REQUIRE(bad.code == 2);
    REQUIRE(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("cli check") {
    std::string c4 = write_temp("cli_c4.txt", kC4);

    CliResult ok = run_cli({"check", c4, "--set", "0,2", "--variant", "secure", "--json"});
    REQUIRE(ok.code == 0);
    json j = json::parse(ok.out);
    REQUIRE(j["payload"]["verdict"] == true);
    REQUIRE(j["payload"]["certificate"]["defenders"].size() == 2);

    // a false verdict is an answer, not a failure
    std::string p4 = write_temp("cli_p4b.txt", kP4);
    CliResult no = run_cli({"check", p4, "--set", "0,1", "--variant", "secure", "--json"});
    REQUIRE(no.code == 0);
    json jn = json::parse(no.out);
    REQUIRE(jn["payload"]["verdict"] == false);
    REQUIRE(jn["payload"]["failing_vertex"] == 3);
    REQUIRE(jn["payload"]["reason"] == "undominated");

    CliResult dom = run_cli({"check", p4, "--set", "1,2", "--variant", "dominating"});
    REQUIRE(dom.code == 0);
    REQUIRE(dom.out.find("dominating: yes") != std::string::npos);

    REQUIRE(run_cli({"check", c4, "--set", "0,9"}).code == 2);
    REQUIRE(run_cli({"check", c4, "--set", "0,x"}).code == 2);
    REQUIRE(run_cli({"check", c4}).code == 2);  // --set is required
}

TEST_CASE("cli outerplanar") {
    std::string k4 = write_temp("cli_k4.g6", "C~\n");
    CliResult r = run_cli({"outerplanar", k4, "--witness", "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["payload"]["outerplanar"] == false);
    REQUIRE(j["payload"]["witness"]["kind"] == "K4-subdivision");
    REQUIRE(j["payload"]["witness"]["paths"].size() == 6);

    std::string p4 = write_temp("cli_p4c.txt", kP4);
    CliResult yes = run_cli({"outerplanar", p4, "--witness"});
    REQUIRE(yes.code == 0);
    REQUIRE(yes.out.find("outerplanar: yes") != std::string::npos);
    REQUIRE(yes.out.find("no forbidden subdivision") != std::string::npos);
}

TEST_CASE("cli gen-extremal and characterize round trip") {
    auto dir = std::filesystem::temp_directory_path();
    std::string gfile = (dir / "cli_g2.txt").string();

    CliResult gen = run_cli({"gen-extremal", "2", "-o", gfile});
    REQUIRE(gen.code == 0);
    {
        std::ifstream in(gfile);
        secdom::Graph g = secdom::read_graph_stream(in);
        REQUIRE(g.vertex_count() == 11);
        REQUIRE(g.edge_count() == 14);
    }

    CliResult gen6 = run_cli({"gen-extremal", "3", "--format", "graph6", "--json"});
    REQUIRE(gen6.code == 0);
    json jg = json::parse(gen6.out);
    REQUIRE(jg["payload"]["n"] == 16);
    REQUIRE(jg["payload"]["witness"]["k"] == 3);
    REQUIRE(jg["payload"]["witness"]["hub"] == 0);

    CliResult ch = run_cli({"characterize", gfile, "--json"});
    REQUIRE(ch.code == 0);
    json jc = json::parse(ch.out);
    REQUIRE(jc["status"] == "ok");
    REQUIRE(jc["payload"]["gamma_s"] == 3);
    REQUIRE(jc["payload"]["bound"] == 3);
    REQUIRE(jc["payload"]["consistent"] == true);
    REQUIRE_FALSE(jc["payload"]["extremal_witness"].is_null());
    REQUIRE_FALSE(jc["payload"]["profile"].is_null());

    // n = 5k+1 without the structure: value above the bound, no witness,
    // still consistent
    std::string c11 = write_temp("cli_c11.txt", kC11);
    CliResult chc = run_cli({"characterize", c11, "--json"});
    REQUIRE(chc.code == 0);
    json jcc = json::parse(chc.out);
    REQUIRE(jcc["payload"]["gamma_s"] == 5);
    REQUIRE(jcc["payload"]["extremal_witness"].is_null());
    REQUIRE(jcc["payload"]["consistent"] == true);

    REQUIRE(run_cli({"gen-extremal", "1"}).code == 2);
    std::string p4 = write_temp("cli_p4d.txt", kP4);
    REQUIRE(run_cli({"characterize", p4}).code == 2);  // 4 is not 5k+1
}

TEST_CASE("cli verification commands") {
    CliResult r = run_cli({"verify-bound", "--max-n", "5", "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["status"] == "ok");
    REQUIRE(j["payload"]["ok"] == true);
    REQUIRE(j["payload"]["violations"].empty());
    REQUIRE(j["payload"]["k3"]["exception"] == true);

    CliResult again = run_cli({"verify-bound", "--max-n", "5", "--json"});
    REQUIRE(again.out == r.out);  // wall time stays out of the payload

    CliResult human = run_cli({"verify-bound", "--max-n", "5"});
    REQUIRE(human.code == 0);
    REQUIRE(human.out.find("result: OK") != std::string::npos);

    REQUIRE(run_cli({"verify-bound", "--max-n", "3"}).code == 2);
    REQUIRE(run_cli({"verify-bound", "--max-n", "10"}).code == 2);

    CliResult lemma = run_cli({"verify-lemma1", "--max-n", "6", "--json"});
    REQUIRE(lemma.code == 0);
    REQUIRE(json::parse(lemma.out)["payload"]["ok"] == true);

    CliResult thm2 = run_cli({"verify-thm2", "--max-n", "4", "--json"});
    REQUIRE(thm2.code == 0);
    REQUIRE(json::parse(thm2.out)["payload"]["ok"] == true);
}

TEST_CASE("cli surface errors") {
    REQUIRE(run_cli({}).code == 2);
    REQUIRE(run_cli({"frobnicate"}).code == 2);
    REQUIRE(run_cli({"--help"}).code == 0);
    CliResult help = run_cli({"--help"});
    REQUIRE(help.out.find("solve") != std::string::npos);

    // graph6 sizes above the supported tier are an operational error
    std::string big = write_temp("cli_big.g6", "~??~??????\n");
    REQUIRE(run_cli({"solve", big}).code == 2);
}
