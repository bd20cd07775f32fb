#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "framecomp/cli.hpp"
#include "framecomp/errors.hpp"

using namespace framecomp;
using nlohmann::json;

namespace {

int run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"framecomp"};
    argv.insert(argv.end(), args.begin(), args.end());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("framecomp_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
    void write(const std::string& content) const {
        std::ofstream f(path);
        f << content;
    }
    std::string read() const {
        std::ifstream f(path);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
};

json solve_json(const cli::Options& opts) {
    std::ostringstream out, err;
    cli::Options o = opts;
    o.format = "json";
    REQUIRE(cli::cmd_solve(o, out, err) == 0);
    return json::parse(out.str());
}

} // namespace

TEST_CASE("solve reports the worked instance") {
    cli::Options opts;
    opts.lambda = {0, 0, 10};
    opts.norms = {6, 1, 1};
    const json j = solve_json(opts);
    CHECK(j.at("feasible").get<bool>() == false);
    CHECK(j.at("min_feasible_index").get<int>() == 1);
    CHECK(j.at("block_count").get<int>() == 2);
    CHECK(j.at("nu_descending") == json::array({10.0, 6.0, 2.0}));
    CHECK(j.at("block_constants") == json::array({6.0, 2.0}));
    CHECK(j.at("mu") == json::array({6.0, 2.0, 0.0}));
}

TEST_CASE("solve reports a feasible instance") {
    cli::Options opts;
    opts.lambda = {1, 5};
    opts.norms = {2, 2};
    const json j = solve_json(opts);
    CHECK(j.at("feasible").get<bool>() == true);
    CHECK(j.at("nu_ascending") == json::array({5.0, 5.0}));
}

TEST_CASE("exit codes through the argv entry point") {
    CHECK(run({"solve", "--lambda", "0", "--norms", "-1"}) == 1);
    CHECK(run({"solve", "--lambda", "1,2", "--norms", "abc"}) == 1);
    CHECK(run({"potential", "--potential", "fp"}) == 1);  // no vectors
    CHECK(run({"bogus-subcommand"}) == 1);
}

TEST_CASE("verify caps the dimension unless overridden") {
    std::ostringstream out, err;
    cli::Options opts;
    opts.lambda.assign(12, 0.0);
    opts.norms.assign(12, 1.0);
    opts.budget = 50;
    CHECK(cli::cmd_verify(opts, out, err) == 1);
    CHECK(err.str().find("--allow-large") != std::string::npos);
}

TEST_CASE("solve output round-trips into verify") {
    TempFile file("roundtrip.json");
    cli::Options solve_opts;
    solve_opts.lambda = {0, 0, 10};
    solve_opts.norms = {6, 1, 1};
    solve_opts.format = "json";
    solve_opts.output_path = file.path;
    std::ostringstream out, err;
    REQUIRE(cli::cmd_solve(solve_opts, out, err) == 0);

    // field-for-field: the document reparses to exactly the values written
    const json j1 = json::parse(file.read());
    const json j2 = json::parse(j1.dump());
    CHECK(j1 == j2);
    for (const char* field : {"lambda", "norms", "nu_blocks", "mu"}) {
        for (const auto& v : j1.at(field)) {
            const double x = v.get<double>();
            CHECK(cli::round_sig(x, 12) == x);
        }
    }

    cli::Options verify_opts;
    verify_opts.input_path = file.path;
    verify_opts.budget = 300;
    std::ostringstream vout, verr;
    CHECK(cli::cmd_verify(verify_opts, vout, verr) == 0);
    CHECK(vout.str().find("all checks passed") != std::string::npos);
}

TEST_CASE("verify rejects a corrupted solution") {
    TempFile file("corrupted.json");
    file.write(R"({"lambda": [0, 0, 10], "norms": [6, 1, 1],
                   "nu_blocks": [7, 1, 10], "budget": 300})");
    cli::Options opts;
    opts.input_path = file.path;
    std::ostringstream out, err;
    CHECK(cli::cmd_verify(opts, out, err) == 2);
    CHECK(out.str().find("FAIL") != std::string::npos);
}

TEST_CASE("complete writes a completion that passes its own audit") {
    cli::Options opts;
    opts.lambda = {0, 0};
    opts.norms = {1, 1, 1, 1};
    opts.format = "json";
    std::ostringstream out, err;
    REQUIRE(cli::cmd_complete(opts, out, err) == 0);
    const json j = json::parse(out.str());
    CHECK(j.at("audit").at("passed").get<bool>());
    CHECK(j.at("completion_vectors").size() == 4);
    CHECK(j.at("achieved_spectrum_descending") == json::array({2.0, 2.0}));
    for (const auto& n : j.at("completion_norms")) {
        CHECK(n.get<double>() == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("complete emits csv rows") {
    cli::Options opts;
    opts.lambda = {0, 0};
    opts.norms = {2, 2};
    opts.format = "csv";
    std::ostringstream out, err;
    REQUIRE(cli::cmd_complete(opts, out, err) == 0);
    // two completion vectors in dimension 2, one per row
    std::istringstream rows(out.str());
    std::string line;
    int nrows = 0;
    while (std::getline(rows, line)) {
        if (!line.empty()) ++nrows;
    }
    CHECK(nrows == 2);
}

TEST_CASE("complete accepts an initial sequence as vectors") {
    TempFile file("vectors.json");
    file.write(R"({"vectors": [[0, 0, 3.16227766016838]], "norms": [6, 1, 1]})");
    cli::Options opts;
    opts.input_path = file.path;
    opts.format = "json";
    std::ostringstream out, err;
    REQUIRE(cli::cmd_complete(opts, out, err) == 0);
    const json j = json::parse(out.str());
    CHECK(j.at("nu_descending") == json::array({10.0, 6.0, 2.0}));
}

TEST_CASE("mismatched vector rows are a validation error") {
    TempFile file("badrows.json");
    file.write(R"({"vectors": [[1, 0], [1]], "norms": [1]})");
    cli::Options opts;
    opts.input_path = file.path;
    std::ostringstream out, err;
    CHECK_THROWS_AS(cli::cmd_complete(opts, out, err), validation_error);
}

TEST_CASE("potential command") {
    TempFile file("tight.json");
    const double s2 = 1.4142135623730951;
    std::ostringstream doc;
    doc << std::setprecision(17) << R"({"vectors": [[)" << s2 << R"(, 0, 0], [0, )" << s2
        << R"(, 0], [0, 0, )" << s2 << "]]}";
    file.write(doc.str());

    cli::Options opts;
    opts.input_path = file.path;
    opts.potentials = {"fp"};
    std::ostringstream out, err;
    REQUIRE(cli::cmd_potential(opts, out, err) == 0);
    CHECK(out.str().find("12") != std::string::npos);

    TempFile rank("rankdef.json");
    rank.write(R"({"vectors": [[1, 0], [1, 0]]})");
    cli::Options mopts;
    mopts.input_path = rank.path;
    mopts.potentials = {"mse"};
    std::ostringstream mout, merr;
    REQUIRE(cli::cmd_potential(mopts, mout, merr) == 0);
    CHECK(mout.str().find("inf") != std::string::npos);

    cli::Options popts;
    popts.input_path = file.path;
    popts.potentials = {"pow:unknown"};
    std::ostringstream pout, perr;
    CHECK_THROWS_AS(cli::cmd_potential(popts, pout, perr), validation_error);
}

TEST_CASE("number list parsing") {
    CHECK(cli::parse_number_list("0,0,10") == std::vector<double>{0, 0, 10});
    CHECK(cli::parse_number_list("2.5") == std::vector<double>{2.5});
    CHECK_THROWS_AS(cli::parse_number_list("1,,2"), validation_error);
    CHECK_THROWS_AS(cli::parse_number_list("1,x"), validation_error);
}

TEST_CASE("significant digit rounding") {
    CHECK(cli::round_sig(1.0 / 3.0, 12) == doctest::Approx(0.333333333333).epsilon(1e-13));
    CHECK(cli::round_sig(0.0, 12) == 0.0);
    const double once = cli::round_sig(123.456789123456789, 12);
    CHECK(cli::round_sig(once, 12) == once);  // idempotent
}
