#include "lagmult/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <sstream>

using namespace lagmult;

namespace {

VerificationReport sample() {
    VerificationReport r;
    r.theorem = "demo";
    r.parameters = {{"p", 1.0}, {"alpha", 0.5}};
    r.branch = "b";
    r.table.columns = {"n", "value"};
    r.table.rows = {{1, 0.1}, {2, INFINITY}};
    r.ratio_sup = 0.1;
    r.fits.emplace_back("value", ExponentFit{0.5, -1.0, 1e-3, 32, 256, 4});
    r.notes = {{"k", 2.0}};
    r.verdict = Verdict::violated;
    r.message = "grows";
    return r;
}

}  // namespace

TEST_CASE("csv layout") {
    std::ostringstream out;
    write_csv(sample().table, out);
    CHECK(out.str() == "n,value\n1,0.10000000000000001\n2,inf\n");
}

TEST_CASE("json round trip") {
    std::ostringstream out;
    write_json(sample(), out);
    const auto j = nlohmann::json::parse(out.str());
    CHECK(j["theorem"] == "demo");
    CHECK(j["parameters"]["alpha"].get<double>() == 0.5);
    CHECK(j["columns"].size() == 2);
    CHECK(j["rows"][0][1].get<double>() == 0.1);
    CHECK(j["rows"][1][1] == "inf");
    CHECK(j["fits"]["value"]["slope"].get<double>() == 0.5);
    CHECK(j["fits"]["value"]["points"].get<int>() == 4);
    CHECK(j["notes"]["k"].get<double>() == 2.0);
    CHECK(j["verdict"] == "violated");
    CHECK(j["admissible"] == true);
    CHECK(j["message"] == "grows");
}

TEST_CASE("unwritable path") {
    CHECK_THROWS_AS(emit_report(sample(), ReportFormat::csv, "/nonexistent-dir/x.csv"), std::runtime_error);
}
