#include "ilvr/compare.hpp"
#include "ilvr/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <clocale>
#include <filesystem>
#include <random>

using namespace ilvr;

namespace fs = std::filesystem;

TEST_CASE("numbers use 17 significant digits and round-trip") {
    CHECK(io::format_number(0.1) == "0.10000000000000001");
    CHECK(io::format_number(100.0) == "100");
    CHECK(io::format_number(2.5e-7) == "2.4999999999999999e-07");

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> mant(-10.0, 10.0);
    std::uniform_int_distribution<int> expo(-300, 300);
    for (int i = 0; i < 20000; ++i) {
        const double v = std::ldexp(mant(rng), expo(rng));
        const std::string text = io::format_number(v);
        REQUIRE(std::stod(text) == v);
    }
}

TEST_CASE("formatting ignores the C locale") {
    const char* previous = std::setlocale(LC_NUMERIC, nullptr);
    const std::string saved = previous ? previous : "C";
    if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") != nullptr) {
        CHECK(io::format_number(1.5) == "1.5");
    }
    std::setlocale(LC_NUMERIC, saved.c_str());
}

TEST_CASE("path CSV round-trip") {
    WalkParams w;
    w.steps = 200;
    w.kind = StepKind::gaussian;
    const PricePath path = generate_path(w, 8);
    const std::string text = io::path_csv(path);
    CHECK(text.rfind("step,price\n0,100\n", 0) == 0);
    const PricePath back = io::parse_path_csv(text);
    CHECK(back.prices == path.prices);
    CHECK(io::path_csv(back) == text);

    CHECK_THROWS_AS(io::parse_path_csv("step,value\n0,1\n"), io::ParseError);
    CHECK_THROWS_AS(io::parse_path_csv("step,price\n0,1\n2,1\n"), io::ParseError);
    try {
        io::parse_path_csv("step,price\n0,100\n1,abc\n");
        FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("report JSON and runs CSV round-trip") {
    EnsembleConfig c;
    c.walk.steps = 300;
    c.runs = 50;
    c.histogram_bins = 7;
    const EnsembleResult r = run_ensemble(c);

    for (const EnsembleReport* rep : {&r.il, &r.lvr, &r.final_price}) {
        const std::string text = io::report_json(*rep);
        const EnsembleReport back = io::parse_report_json(text);
        CHECK(back.metric == rep->metric);
        CHECK(back.mean == rep->mean);
        CHECK(back.std_dev == rep->std_dev);
        CHECK(back.std_err == rep->std_err);
        CHECK(back.median == rep->median);
        CHECK(back.runs == rep->runs);
        CHECK(back.histogram.bin_edges == rep->histogram.bin_edges);
        CHECK(back.histogram.counts == rep->histogram.counts);
        CHECK(io::report_json(back) == text);
    }

    const std::string csv = io::runs_csv(r.runs);
    const auto runs = io::parse_runs_csv(csv);
    REQUIRE(runs.size() == r.runs.size());
    for (std::size_t i = 0; i < runs.size(); ++i) {
        CHECK(runs[i].seed == r.runs[i].seed);
        CHECK(runs[i].il_final == r.runs[i].il_final);
        CHECK(runs[i].lvr_total == r.runs[i].lvr_total);
        CHECK(runs[i].final_price == r.runs[i].final_price);
    }

    CHECK_THROWS_AS(io::parse_report_json("{\"metric\": \"il\"}"), io::ParseError);
}

TEST_CASE("curve CSV round-trip") {
    AnalyticParams a;
    const AnalyticCurve c = curve(a, CurveKind::il, 5000.0, 6);
    const std::string text = io::curve_csv(c);
    const AnalyticCurve back = io::parse_curve_csv(text, CurveKind::il);
    CHECK(back.times == c.times);
    CHECK(back.values == c.values);
}

TEST_CASE("compare JSON carries every field") {
    CompareSummary s;
    s.mc_mean_il = 0.00125;
    s.z_lvr = -1.5;
    s.runs = 10;
    const auto j = nlohmann::json::parse(compare_json(s));
    for (const char* key : {"mc_mean_il", "mc_mean_lvr", "analytic_il", "analytic_lvr",
                            "linear_approx", "z_il", "z_lvr", "mc_se_il", "mc_se_lvr", "runs"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["mc_mean_il"].get<double>() == 0.00125);
    CHECK(j["z_lvr"].get<double>() == -1.5);
}

TEST_CASE("atomic write replaces the target and leaves no temp files") {
    const fs::path dir = fs::temp_directory_path() / "ilvr_io_test";
    fs::remove_all(dir);
    const fs::path file = dir / "nested" / "out.csv";
    io::write_atomic(file, "a\n");
    io::write_atomic(file, "b\n");
    CHECK(io::read_file(file) == "b\n");
    std::size_t entries = 0;
    for (const auto& e : fs::directory_iterator(file.parent_path())) {
        (void)e;
        ++entries;
    }
    CHECK(entries == 1);
    fs::remove_all(dir);
}
