#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "xxz/serialize.hpp"

TEST_CASE("decimal17 round-trips doubles exactly") {
  for (double x : {0.1, -3.14159265358979323846, 1e-300, 6.02214076e23,
                   0.6597341313471195, 0.0, -0.0, 1.0 / 3.0}) {
    const std::string s = xxz::decimal17(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
  CHECK(xxz::decimal17(std::nan("")) == "nan");
}

TEST_CASE("CSV uses LF line endings and a header row") {
  const std::string csv =
      xxz::dump_csv({"a", "b"}, {{"1", "2"}, {"3", "4"}});
  CHECK(csv == "a,b\n1,2\n3,4\n");
  CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("JSON dump is deterministic and ordered") {
  xxz::ojson doc;
  doc["z_first"] = "1";
  doc["a_second"] = xxz::decimal17_array({0.5, 0.25});
  const std::string once = xxz::dump_json(doc);
  CHECK(once == xxz::dump_json(doc));
  // Insertion order preserved (ordered_json), so reruns are byte-identical.
  CHECK(once.find("z_first") < once.find("a_second"));
  CHECK(once.back() == '\n');
}
