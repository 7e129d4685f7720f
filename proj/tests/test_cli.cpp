#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "adnil/cli.hpp"
#include "adnil/construct.hpp"

using namespace adnil;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "adnil");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("ideal in text form") {
    const auto r = run({"ideal", "--type", "C", "--size", "3", "--partition", "4,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("generators: e1-e3, 2e3, 2e2") != std::string::npos);
    CHECK(r.out.find("dim:        7") != std::string::npos);
    CHECK(r.out.find("m:          7") != std::string::npos);
}

TEST_CASE("type A text output includes the Ferrers diagram") {
    const auto r = run({"ideal", "-t", "A", "-n", "4", "-p", "2,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ferrers:\n") != std::string::npos);
}

TEST_CASE("ideal json matches the library") {
    const auto r = run({"ideal", "--type", "A", "--size", "6", "--partition", "4,2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["dim"] == 11);
    CHECK(j["m"] == 11);
    CHECK(j["type"] == "A");
    CHECK(j["size"] == 6);
    CHECK(j["partition"] == std::vector<int>{4, 2});
    CHECK(j["variant"].is_null());
    CHECK(j["h"] == std::vector<int>{3, 1, 1, -1, -1, -3});

    const auto label = make_label(Kind::A, 6, Partition({4, 2}));
    const auto rs = RootSystem::build(Kind::A, 6);
    const auto cons = construct(rs, label);
    std::vector<std::vector<int>> gens, roots;
    for (const auto& g : cons.generators.all_roots) gens.push_back(g.coords);
    for (auto k : members(cons.ideal.roots)) roots.push_back(rs.root(k).coords);
    CHECK(j["generators"] == gens);
    CHECK(j["roots"] == roots);
    const std::vector<std::string> keys{"type", "size", "partition", "variant", "h", "m", "dim", "generators", "roots"};
    std::vector<std::string> got;
    for (auto it = j.begin(); it != j.end(); ++it) got.push_back(it.key());
    std::sort(got.begin(), got.end());
    auto want = keys;
    std::sort(want.begin(), want.end());
    CHECK(got == want);
}

TEST_CASE("very even variant") {
    const auto r = run({"ideal", "--type", "D", "--size", "4", "--partition", "4,4", "--variant", "II", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["dim"] == 9);
    CHECK(j["variant"] == "II");
    const auto missing = run({"ideal", "--type", "D", "--size", "4", "--partition", "4,4"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("variant") != std::string::npos);
}

TEST_CASE("invalid labels exit with 1") {
    const auto r = run({"ideal", "--type", "C", "--size", "3", "--partition", "3,2,1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("odd parts") != std::string::npos);
    CHECK(run({"ideal", "--type", "A", "--size", "4", "--partition", "2,x"}).code == 1);
    CHECK(run({"ideal", "--type", "Q", "--size", "4", "--partition", "4"}).code == 1);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({}).code == 1);
}

TEST_CASE("table rows") {
    const auto a = run({"table", "--type", "A", "--size", "4", "--format", "json"});
    REQUIRE(a.code == 0);
    const auto j = nlohmann::json::parse(a.out);
    REQUIRE(j.size() == 5);
    std::vector<int> ms;
    for (const auto& row : j) {
        ms.push_back(row["m"]);
        CHECK(row["match"] == true);
    }
    CHECK(ms == std::vector<int>{6, 4, 3, 1, 0});

    const auto b = nlohmann::json::parse(run({"table", "-t", "B", "-n", "2", "-f", "json"}).out);
    std::vector<std::vector<int>> parts;
    for (const auto& row : b) parts.push_back(row["partition"]);
    CHECK(parts == std::vector<std::vector<int>>{{5}, {3, 1, 1}, {2, 2, 1}, {1, 1, 1, 1, 1}});

    const auto d = nlohmann::json::parse(run({"table", "-t", "D", "-n", "4", "-f", "json"}).out);
    std::vector<int> m44;
    for (const auto& row : d)
        if (row["partition"] == std::vector<int>{4, 4}) m44.push_back(row["m"]);
    CHECK(m44 == std::vector<int>{9, 9});
    CHECK(run({"table", "-t", "A", "-n", "13"}).code == 1);
}

TEST_CASE("verify and count") {
    CHECK(run({"verify", "--type", "A", "--size", "5", "--seed", "1"}).code == 0);
    CHECK(run({"verify", "--type", "C", "--size", "3", "--seed", "1"}).code == 0);
    const auto d = run({"verify", "--type", "D", "--size", "4", "--seed", "1", "--threads", "2"});
    CHECK(d.code == 0);
    CHECK(d.out.find("verification passed") != std::string::npos);
    CHECK(run({"verify", "--type", "A", "--size", "9"}).code == 1);

    CHECK(run({"count", "--type", "A", "--size", "4"}).out == "14\n");
    CHECK(run({"count", "--type", "B", "--size", "2"}).out == "6\n");
    CHECK(run({"count", "--type", "D", "--size", "4"}).out == "50\n");
    CHECK(run({"count", "--type", "D", "--size", "9"}).code == 1);
}

TEST_CASE("seed resolution") {
    cli::CommandOptions o;
    o.seed = 42;
    CHECK(cli::resolve_seed(o) == 42);
}

TEST_CASE("verify output is reproducible") {
    const auto a = run({"verify", "-t", "B", "-n", "2", "--seed", "9", "-f", "json"});
    const auto b = run({"verify", "-t", "B", "-n", "2", "--seed", "9", "-f", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}
