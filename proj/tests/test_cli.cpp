#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcn/lc_core.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(LC_BIN_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t k;
    while ((k = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), k);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<json> lines_as_json(const std::string& out) {
    std::vector<json> v;
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) v.push_back(json::parse(line));
    return v;
}

} // namespace

TEST_CASE("check subcommand exit codes and record shape") {
    auto lc = run("check 399");
    CHECK(lc.exit_code == 0);
    auto recs = lines_as_json(lc.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["n"] == "399");
    CHECK(recs[0]["is_lc"] == true);
    CHECK(recs[0]["degree"] == "2");
    CHECK(recs[0]["primary"] == false);
    CHECK(recs[0]["factors"] == json::array({"3", "7", "19"}));

    auto not_lc = run("check 561");
    CHECK(not_lc.exit_code == 1);
    auto nrecs = lines_as_json(not_lc.out);
    REQUIRE(nrecs.size() == 1);
    CHECK(nrecs[0]["is_lc"] == false);
    CHECK(nrecs[0]["degree"].is_null());

    CHECK(run("check abc").exit_code == 2);
    CHECK(run("check 1").exit_code == 2);
}

TEST_CASE("enumerate subcommand") {
    auto res = run("enumerate --limit 1000");
    CHECK(res.exit_code == 0);
    auto recs = lines_as_json(res.out);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0]["n"] == "399");
    CHECK(recs[1]["n"] == "935");

    CHECK(run("enumerate --limit 1000 --compare").exit_code == 0);
    CHECK(run("enumerate --limit 2").exit_code == 2);

    // re-parse and re-check the emitted records through analyze
    for (const auto& rec : lines_as_json(run("enumerate --limit 10000 --method oracle").out)) {
        lcn::LcReport rep = lcn::analyze(lcn::Integer(rec["n"].get<std::string>()));
        REQUIRE(rep.is_lc == rec["is_lc"].get<bool>());
        REQUIRE(rep.degree->str() == rec["degree"].get<std::string>());
    }
}

TEST_CASE("family subcommand") {
    auto hit = run("family u3 --m 1..1 --require-prime --allow-inadmissible");
    CHECK(hit.exit_code == 0);
    auto recs = lines_as_json(hit.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["n"] == "935");
    CHECK(recs[0]["m"] == "1");

    CHECK(run("family u3 --verify-symbolic").exit_code == 0);
    CHECK(run("family u5 --verify-symbolic").exit_code == 0);
    CHECK(run("family u7 --verify-symbolic").exit_code == 0);

    auto sums = run("family u5 --m 156816..156816 --digit-sums");
    CHECK(sums.exit_code == 0);
    auto srecs = lines_as_json(sums.out);
    REQUIRE(srecs.size() == 1);
    auto ds = srecs[0]["digit_sums"];
    REQUIRE(ds.size() == 5);
    // S = 2p+3 for the first factor
    lcn::Integer p(ds[0]["p"].get<std::string>());
    lcn::Integer s(ds[0]["s"].get<std::string>());
    CHECK(s == 2 * p + 3);

    CHECK(run("family u3 --m 1..1 --require-prime").exit_code == 2); // inadmissible, no override
    CHECK(run("family nosuch --m 1..10").exit_code == 2);
}

TEST_CASE("family --spec file") {
    std::string path = "test_cli_family.cfg";
    {
        std::ofstream f(path);
        f << "# u3 shifted to m+1 indexing\n6 5\n12 11\n18 17\nm_divisor 1\nm_min 0\n";
    }
    auto res = run("family --spec " + path + " --m 0..0 --require-prime");
    CHECK(res.exit_code == 0);
    auto recs = lines_as_json(res.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["n"] == "935");
    std::remove(path.c_str());
}

TEST_CASE("derive-family subcommand") {
    auto d5 = run("derive-family 588455");
    CHECK(d5.exit_code == 0);
    CHECK(d5.out.find("# R = 396") != std::string::npos);
    CHECK(d5.out.find("1188 5") != std::string::npos);
    CHECK(d5.out.find("8712 43") != std::string::npos);

    auto d7 = run("derive-family 3512071871");
    CHECK(d7.exit_code == 0);
    CHECK(d7.out.find("# R = 432") != std::string::npos);
    CHECK(d7.out.find("1728 7") != std::string::npos);
    CHECK(d7.out.find("15552 71") != std::string::npos);

    auto d399 = run("derive-family 399");
    CHECK(d399.exit_code == 0);
    CHECK(d399.out.find("# k1 = 4") != std::string::npos);
    CHECK(d399.out.find("10 3") != std::string::npos);

    CHECK(run("derive-family 561").exit_code == 1);
    CHECK(run("derive-family xyz").exit_code == 2);
}

TEST_CASE("unknown subcommand exits 2") {
    CHECK(run("frobnicate").exit_code == 2);
}
