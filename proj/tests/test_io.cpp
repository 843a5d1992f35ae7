#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "heatconv/io.hpp"

using namespace heatconv;

namespace {

std::vector<ResultRecord> sample_records() {
    std::vector<ResultRecord> recs;
    ResultRecord r;
    r.n_rate = 1.0;
    r.a_sq = 9.711;
    r.method = "secular-K2";
    r.order = 2;
    r.rayleigh = 1711.11961412345;
    r.paper_value = 1711.119614;
    r.rel_deviation = 7.2e-11;
    recs.push_back(r);
    r = {};
    r.method = "first-approx";
    r.a_sq = 10.0;
    r.rayleigh = 1716.0;
    r.note = "hello, \"quoted\" world";
    recs.push_back(r);
    return recs;
}

}  // namespace

TEST_CASE("nine significant digit rounding") {
    CHECK(format_sig9(1715.0793541129901) == "1715.07935");
    CHECK(format_sig9(0.0) == "0");
    CHECK(round_sig9(1715.0793541129901) == doctest::Approx(1715.07935).epsilon(1e-12));
    CHECK(round_sig9(round_sig9(123.456789123456)) == round_sig9(123.456789123456));
}

TEST_CASE("csv layout and quoting") {
    const std::string csv = to_csv(sample_records());
    const auto first_nl = csv.find('\n');
    CHECK(csv.substr(0, first_nl) ==
          "N,a2,method,K_or_resolution,rayleigh,paper_value,rel_deviation");
    CHECK(csv.find("1,9.711,secular-K2,2,1711.11961,") != std::string::npos);
    // empty optionals serialize as empty fields; commas in a text field get
    // RFC-4180 quoting
    ResultRecord odd;
    odd.method = "a,\"b\"";
    CHECK(to_csv({odd}).find("\"a,\"\"b\"\"\"") != std::string::npos);
    CHECK(csv.find("first-approx,0,1716,,") != std::string::npos);
    CHECK(csv.back() == '\n');
}

TEST_CASE("json round trip preserves the rounded values") {
    const auto recs = sample_records();
    const auto doc = to_json(recs, "solve", "one point");
    CHECK(doc.at("meta").at("command") == "solve");
    const auto back = records_from_json(doc);
    REQUIRE(back.size() == recs.size());
    for (size_t i = 0; i < recs.size(); ++i) {
        CHECK(back[i].method == recs[i].method);
        CHECK(back[i].order == recs[i].order);
        CHECK(back[i].rayleigh == round_sig9(recs[i].rayleigh));
        CHECK(back[i].paper_value.has_value() == recs[i].paper_value.has_value());
    }
    // a second trip is exact: rounding is idempotent
    const auto doc2 = to_json(back, "solve", "one point");
    CHECK(doc == doc2);
}

TEST_CASE("plot data blocks split on N changes") {
    std::vector<NeutralPoint> pts;
    for (double n : {0.0, 1.0, 2.0})
        for (double a : {2.0, 3.0, 4.0})
            pts.push_back({a, n, 1000.0 + 10 * n + a, "secular-K2", true, ""});
    const std::string text = to_plot_data(pts);
    CHECK(text.rfind("# a N Ra method", 0) == 0);
    int blank_runs = 0;
    bool prev_blank = false;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        const bool blank = line.empty();
        if (blank && !prev_blank) ++blank_runs;
        prev_blank = blank;
    }
    CHECK(blank_runs == 2);

    CHECK_THROWS_AS(to_plot_data({}), std::domain_error);
}

TEST_CASE("atomic write") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "heatconv_io_test";
    fs::create_directories(dir);
    const fs::path good = dir / "out.csv";

    SUBCASE("success writes the full contents") {
        atomic_write(good.string(), "alpha\nbeta\n");
        std::ifstream in(good);
        std::string body((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        CHECK(body == "alpha\nbeta\n");
    }

    SUBCASE("failure leaves no file behind") {
        const fs::path bad = dir / "missing_subdir" / "out.csv";
        CHECK_THROWS_AS(atomic_write(bad.string(), "x"), IoError);
        CHECK_FALSE(fs::exists(bad));
    }

    fs::remove_all(dir);
}
