#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_sh(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int rc = pclose(pipe);
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

RunResult run_cli(const std::string& args) { return run_sh(std::string(Z3Q_CLI_PATH) + " " + args); }

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t nl = s.find('\n', pos);
        if (nl == std::string::npos) nl = s.size();
        lines.push_back(s.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

}  // namespace

TEST_CASE("one shot evaluation") {
    RunResult r = run_cli("--algebra plane 'th*x'");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "q^-1*x*th\n");
}

TEST_CASE("one shot evaluation as json") {
    RunResult r = run_cli("--algebra plane --json 'th*x'");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"expr\":\"th*x\",\"algebra\":\"plane\",\"normal_form\":\"q^-1*x*th\"}\n");
}

TEST_CASE("parse errors exit with the usage code") {
    CHECK(run_cli("--algebra plane 'x^'").exit_code == 2);
    CHECK(run_cli("--algebra plane 'd(x)'").exit_code == 2);
    CHECK(run_cli("--algebra nowhere 'x'").exit_code == 2);
    CHECK(run_cli("--check bogus").exit_code == 2);
}

TEST_CASE("check suite as json") {
    RunResult r = run_cli("--check scalars --json");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    CHECK(lines.size() == 8);
    for (const auto& line : lines) {
        CAPTURE(line);
        // field order is part of the output contract
        CHECK(line.rfind("{\"suite\":\"scalars\",\"id\":\"scalars:", 0) == 0);
        auto obj = nlohmann::ordered_json::parse(line);
        CHECK(obj["status"] == "pass");
        std::vector<std::string> keys;
        for (auto& item : obj.items()) keys.push_back(item.key());
        CHECK(keys == std::vector<std::string>{"suite", "id", "paper_ref", "status", "ms"});
        CHECK(obj["ms"].is_number());
    }
}

TEST_CASE("failures flip the exit code") {
    RunResult r = run_cli("--check scalars --inject-failure");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("[fail]") != std::string::npos);
    CHECK(r.out.find(" 1 failed") != std::string::npos);

    RunResult j = run_cli("--check scalars --inject-failure --json");
    CHECK(j.exit_code == 1);
    auto lines = lines_of(j.out);
    REQUIRE(!lines.empty());
    auto last = nlohmann::ordered_json::parse(lines.back());
    CHECK(last["status"] == "fail");
    CHECK(last["residual"] == "1");
}

TEST_CASE("expected nonzero results do not fail the run") {
    RunResult r = run_cli("--check partial");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[expected-nonzero]") != std::string::npos);
    CHECK(r.out.find(" 0 failed") != std::string::npos);
}

TEST_CASE("reading expressions from a pipe") {
    RunResult r = run_sh(std::string("echo 'nf(x*xi)' | ") + Z3Q_CLI_PATH + " --algebra plane");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");

    RunResult quit = run_sh(std::string("printf 'th*th*th\\nquit\\n' | ") + Z3Q_CLI_PATH);
    CHECK(quit.exit_code == 0);
    CHECK(quit.out == "0\n");
}
