#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string& args) {
    std::string cmd = std::string(CBETHE_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace

TEST_CASE("cli enum") {
    auto r = cli("--algebra C:3 enum --shape col:2");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 20);
    auto t = cli("enum --shape row:2 --format table");
    CHECK(t.code == 0);
    CHECK(t.out.find("16 tableaux") != std::string::npos);
}

TEST_CASE("cli dvf") {
    auto r = cli("dvf --spec col:1");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).size() == 6);
    CHECK(cli("dvf --spec row:5 --format table").out.find("16 terms") != std::string::npos);
}

TEST_CASE("cli verify spec") {
    auto r = cli("--samples 3 verify --spec col:2 --mode both");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "pass");
    CHECK(j["mode"] == "both");
    CHECK(!j["sites"].empty());
    auto d = cli("--samples 3 verify --spec def:7/2");
    CHECK(d.code == 0);
    CHECK(nlohmann::json::parse(d.out)["verdict"] == "pass");
}

TEST_CASE("cli verify relation") {
    auto r = cli("--samples 2 verify --relation i");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["verdict"] == "pass");
    auto v = cli("--algebra sl12 --samples 2 verify --relation dotfun2");
    CHECK(v.code == 0);
}

TEST_CASE("cli dims and counts") {
    auto r = cli("dims --labels \"0 4 0\"");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["dim"] == "209");
    CHECK(cli("dims --labels \"-2 3 0\" --format table").out == "320\n");
    auto c = cli("counts --col-max 6 --row-max 5 --format json");
    CHECK(c.code == 0);
    auto j = nlohmann::json::parse(c.out);
    CHECK(j["columns"][6]["enumerated"] == 336);
    CHECK(j["columns"][6]["formula"] == "336");
    CHECK(j["rows"][3]["terms"] == 10);
    auto t = cli("counts --algebra C:3 --col-max 6 --row-max 5");
    CHECK(t.code == 0);
    CHECK(t.out.find("  6  336  336") != std::string::npos);
}

TEST_CASE("cli strap") {
    auto r = cli("strap --spec col:1 --format dot");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("digraph", 0) == 0);
    auto j = nlohmann::json::parse(cli("strap --spec row:2").out);
    CHECK(j["edges"].size() == 20);
    CHECK(j["connected"] == true);
}

TEST_CASE("cli usage errors exit with 2") {
    CHECK(cli("verify --spec def:1").code == 2);  // atypical parameter
    CHECK(cli("verify --spec def:3").code == 2);
    CHECK(cli("enum --shape box:3").code == 2);
    CHECK(cli("--algebra B:3 enum --shape col:1").code == 2);
    CHECK(cli("verify --spec col:1 --mode fast").code == 2);
    CHECK(cli("verify --relation nope").code == 2);
    CHECK(cli("verify").code == 2);
    CHECK(cli("dims --labels \"0 -1 0\"").code == 2);
    CHECK(cli("strap --spec col:1 --format csv").code == 2);
    CHECK(cli("nosuchcommand").code == 2);
    CHECK(cli("").code == 2);
}

TEST_CASE("cli writes to --out") {
    std::string path = "cli_out_test.json";
    auto r = cli("--out " + path + " dims --labels \"1 0 0\"");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::string body((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(nlohmann::json::parse(body)["dim"] == "6");
    std::remove(path.c_str());
}
