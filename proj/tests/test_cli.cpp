#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "transurf/cli.hpp"

using namespace transurf;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run_job(JobConfig c) {
    std::ostringstream out, err;
    int code = run(c, out, err);
    return {code, out.str(), err.str()};
}

std::string job_path(const char *name) { return std::string(TRANSURF_JOBS_DIR) + "/" + name; }

std::string temp_job(const std::string &name, const std::string &text) {
    auto p = fs::temp_directory_path() / ("transurf_test_" + name + ".json");
    std::ofstream(p) << text;
    return p.string();
}

} // namespace

TEST_CASE("text report of the planar job") {
    JobConfig c;
    c.input_path = job_path("planar_cubic.json");
    auto r = run_job(c);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("method: planar\n") != std::string::npos);
    CHECK(r.out.find("F = 2*w*x^2 - 4*y^3 + w^2*z\n") != std::string::npos);
    CHECK(r.err.empty());
}

TEST_CASE("json report of the twisted cubic job") {
    JobConfig c;
    c.input_path = job_path("twisted_cubic.json");
    c.format = OutputFormat::json;
    c.show_intermediates = true;
    c.verify_samples = 3;
    auto r = run_job(c);
    REQUIRE(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "1");
    CHECK(j["method"] == "general");
    CHECK(j["unit"] == "8");
    CHECK(j["verification"]["samples_checked"] == 3);
    CHECK(j["matrices"][2]["rows"] == 6);
    CHECK(j["extraneous"][0][0] == "w");
    CHECK(j["extraneous"][0][1] == 5);
    CHECK(j.contains("intermediates"));
}

TEST_CASE("latex, check and mubasis commands") {
    JobConfig c;
    c.input_path = job_path("planar_cubic.json");
    c.format = OutputFormat::latex;
    auto r = run_job(c);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("\\begin{align*}") != std::string::npos);
    c.format = OutputFormat::text;
    c.command = Command::check;
    CHECK(run_job(c).code == kExitOk);
    c.command = Command::mubasis;
    r = run_job(c);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("c = (0, 0, -u^2, s^2)") != std::string::npos);
}

TEST_CASE("exit codes") {
    JobConfig c;
    c.input_path = "/nonexistent/job.json";
    CHECK(run_job(c).code == kExitInvalid);

    c.input_path = temp_job("syntax", R"({"f":["s^3","s*","u^3","u^3"],"g":["t","v","t","v"]})");
    c.format = OutputFormat::json;
    auto r = run_job(c);
    CHECK(r.code == kExitInvalid);
    auto e = nlohmann::json::parse(r.err);
    CHECK(e["error"]["code"] == "SyntaxError");
    CHECK(e["error"]["position"] == 2);
    CHECK(e["exit_code"] == 2);
    CHECK(r.out.empty());

    c.format = OutputFormat::text;
    c.input_path = temp_job("common", R"({"f":["s^2","s*u","0","0"],"g":["t","v","t","v"]})");
    r = run_job(c);
    CHECK(r.code == kExitInvalid);
    CHECK(r.err.find("CommonFactor") != std::string::npos);

    c.input_path = temp_job("method", R"({"f":["s^3","s^2*u","s*u^2","u^3"],"g":["t^3","t^2*v","t*v^2","v^3"],"method":"ruled"})");
    CHECK(run_job(c).code == kExitInvalid);

    c.input_path = temp_job("degenerate", R"({"f":["0","s","u","s"],"g":["t","v","t","v"]})");
    CHECK(run_job(c).code == kExitInvalid);
}

TEST_CASE("reports are deterministic") {
    JobConfig c;
    c.input_path = job_path("twisted_cubic.json");
    c.format = OutputFormat::json;
    c.seed = 9;
    c.run_basepoint_diagnostic = true;
    CHECK(run_job(c).out == run_job(c).out);
}
