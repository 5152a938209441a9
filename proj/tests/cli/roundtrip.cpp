// Reads classify --format json output and checks that it re-parses to the
// record computed directly.
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "macbeath/census.hpp"
#include "macbeath/report.hpp"

int main(int argc, char** argv) {
  if (argc != 5) {
    std::cerr << "usage: cli_roundtrip file m n p\n";
    return 1;
  }
  std::ifstream in(argv[1]);
  const auto j = nlohmann::json::parse(in);
  const auto rec = macbeath::report::census_from_json(j);
  const auto direct = macbeath::census::map_census(std::stoul(argv[2]), std::stoul(argv[3]), std::stoull(argv[4]));
  if (!macbeath::report::same_record(rec, direct)) {
    std::cerr << "round trip differs\n";
    return 1;
  }
  if (macbeath::report::census_to_json(rec).dump(2) + "\n" != j.dump(2) + "\n") {
    std::cerr << "re-serialization differs\n";
    return 1;
  }
  return 0;
}
