#include <doctest.h>

#include <sstream>

#include "locker/cli.hpp"
#include "locker/engine.hpp"
#include "locker/verifier.hpp"

using namespace locker;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_state") {
    CHECK(cli::parse_state("0101", 4) == LockerState::from_open(4, {2, 4}));
    CHECK_THROWS_WITH_AS(cli::parse_state("01012", 5), doctest::Contains("position 5"),
                         std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_state("01", 3), std::invalid_argument);
}

TEST_CASE("parse_moves") {
    CHECK(cli::parse_moves("2, 3 2").moves == std::vector<int>{2, 3, 2});
    CHECK(cli::parse_moves("").moves.empty());
    CHECK_THROWS_AS(cli::parse_moves("0 1"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_moves("-3"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_moves("abc"), std::invalid_argument);
    CHECK(cli::parse_moves("3..6 1").moves == std::vector<int>{3, 4, 5, 6, 1});
}

TEST_CASE("simulate subcommand") {
    auto r = invoke({"simulate", "-n", "10", "--moves", "1 2 3 4 5 6 7 8 9 10"});
    CHECK(r.code == 0);
    CHECK(r.out == "1001000010\n");

    CHECK(invoke({"simulate", "-n", "5", "--moves", ""}).out == "00000\n");
    CHECK(invoke({"simulate", "-n", "100", "--moves", "1..100", "--as-indices"}).out ==
          "1 4 9 16 25 36 49 64 81 100\n");
    CHECK(invoke({"simulate", "-n", "5", "--initial", "10100", "--moves", "1"}).out ==
          "01011\n");
}

TEST_CASE("invert / forward / solve / basis subcommands") {
    CHECK(invoke({"invert", "-n", "10", "--state", "1000000000"}).out == "1 2 3 5 6 7 10\n");
    CHECK(invoke({"forward", "-n", "10", "--students", "2 3"}).out == "0111000111\n");
    auto traced = invoke({"forward", "-n", "10", "--students", "2 3", "--trace"});
    CHECK(traced.out == "2\n3\n4\n8\n9\n10\n0111000111\n");
    CHECK(invoke({"solve", "-n", "5", "--initial", "10100", "--target", "01011"}).out == "1\n");
    CHECK(invoke({"basis", "-n", "10", "-k", "2"}).out == "2 4 6 10\n");
}

TEST_CASE("closed-form subcommand") {
    CHECK(invoke({"closed-form", "-n", "10", "all"}).out == "1001000010\n");
    CHECK(invoke({"closed-form", "-n", "10", "single", "3"}).out == "0010010010\n");
    CHECK(invoke({"closed-form", "-n", "10", "all-but", "2"}).out == "1100010111\n");
    CHECK(invoke({"closed-form", "-n", "100", "prefix", "51"}).out == "53\n");
    CHECK(invoke({"closed-form", "-n", "100", "prefix", "10"}).code == 1);
}

TEST_CASE("reduce subcommand") {
    CHECK(invoke({"reduce", "-n", "10", "--moves", "2 3 2 150"}).out == "3\n");
}

TEST_CASE("forward equals simulate on the same student set") {
    SplitMix64 rng(5);
    for (int t = 0; t < 10; ++t) {
        int n = rng.index(60);
        IndexSet u = rng.subset(n);
        std::string members = cli::render_set(u);
        CHECK(invoke({"forward", "-n", std::to_string(n), "--students", members}).out ==
              invoke({"simulate", "-n", std::to_string(n), "--moves", members}).out);
    }
}

TEST_CASE("state round trip through the text encoding") {
    SplitMix64 rng(17);
    for (int t = 0; t < 20; ++t) {
        int n = rng.index(150);
        LockerState v = rng.state_of(n);
        CHECK(cli::parse_state(v.to_string(), n) == v);
    }
}

TEST_CASE("error handling and exit codes") {
    auto bad_sub = invoke({"frobnicate"});
    CHECK(bad_sub.code == 1);
    CHECK_FALSE(bad_sub.err.empty());

    auto bad_state = invoke({"invert", "-n", "4", "--state", "01x1"});
    CHECK(bad_state.code == 1);
    CHECK(bad_state.err.find("position 3") != std::string::npos);

    auto verify = invoke({"verify", "--n", "30", "--trials", "20", "--seed", "1",
                          "--theorem8", "2"});
    CHECK(verify.code == 0);
    CHECK(verify.out.find("claim=forward-equivalence") != std::string::npos);
    CHECK(verify.out.find("claim=group-and-homomorphism") != std::string::npos);
    CHECK(verify.out.find("claim=closed-forms") != std::string::npos);
    CHECK(verify.out.find("claim=theorem8-signature-family") != std::string::npos);
    CHECK(verify.out.find("counterexample") == std::string::npos);
}
