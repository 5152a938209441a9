#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "macbeath/density.hpp"
#include "macbeath/report.hpp"

using namespace macbeath;

TEST_SUITE("report") {
  TEST_CASE("json round trip") {
    for (auto [m, n, p] : std::vector<std::tuple<unsigned, unsigned, std::uint64_t>>{
             {3, 7, 43}, {3, 7, 2}, {3, 13, 5}, {3, 14, 3}, {4, 5, 17}, {3, 9, 19}, {3, 8, 7}}) {
      const auto rec = census::map_census(m, n, p);
      const auto j = report::census_to_json(rec);
      const auto back = report::census_from_json(nlohmann::json::parse(j.dump()));
      CHECK(report::same_record(rec, back));
      CHECK(report::census_to_json(back).dump() == j.dump());
    }
  }

  TEST_CASE("csv layout") {
    const auto rec = census::map_census(3, 7, 13);
    std::ostringstream out;
    report::write_census(out, rec, report::Format::Csv, {"classify", 1, 0});
    const auto text = out.str();
    CHECK(text.rfind("# macbeath-csv v1 command=classify", 0) == 0);
    CHECK(text.find(std::string(report::kCsvColumns) + "\n") != std::string::npos);
    CHECK(text.find("\n13,-1,1,13,14,1,2,yes,") != std::string::npos);
  }

  TEST_CASE("output is stable") {
    const auto spec = density::default_sweep(3, 7, 50);
    std::ostringstream a, b;
    report::write_sweep(a, density::sweep(spec, {2, std::nullopt}), report::Format::Json, {"sweep", 2, 7});
    report::write_sweep(b, density::sweep(spec, {2, std::nullopt}), report::Format::Json, {"sweep", 2, 7});
    CHECK(a.str() == b.str());
  }

  TEST_CASE("cache reuse") {
    const auto path = (std::filesystem::temp_directory_path() / "macbeath_unit_cache.jsonl").string();
    std::remove(path.c_str());
    auto spec = density::default_sweep(3, 7, 40);
    const auto first = density::sweep(spec, {1, path});
    const auto cache = report::load_cache(path);
    CHECK(cache.size() == 40);
    const auto second = density::sweep(spec, {1, path});
    CHECK(second.tally.counts == first.tally.counts);
    std::ifstream in(path);
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    CHECK(lines == 40);
    std::remove(path.c_str());
  }

  TEST_CASE("error code names") {
    CHECK(report::parse_error_code("bad_reduction") == ErrorCode::BadReduction);
    CHECK(report::parse_format("json") == report::Format::Json);
    CHECK_THROWS(report::parse_format("xml"));
  }
}
