#include "doctest.h"

#include "nrt/io.hpp"

#include <sstream>

using namespace nrt;

TEST_CASE("array files") {
  std::istringstream in("# two rows\n2 1 2\n0 0\n\n1 1\n");
  const auto t = io::read_array(in);
  CHECK(t.params == SpaceParams{2, 1, 2});
  REQUIRE(t.size() == 2);
  CHECK(t.rows[1] == OrderedVector(t.params, {1, 1}));
  std::ostringstream out;
  io::write_array(out, t);
  CHECK(out.str() == "2 1 2\n0 0\n1 1\n");

  std::istringstream short_row("2 1 2\n0\n");
  CHECK_THROWS_AS(io::read_array(short_row), io::FormatError);
  std::istringstream bad_symbol("2 1 2\n0 2\n");
  CHECK_THROWS_AS(io::read_array(bad_symbol), io::FormatError);
  std::istringstream no_header("# nothing\n");
  CHECK_THROWS_AS(io::read_array(no_header), io::FormatError);
  std::istringstream junk("2 1 x\n");
  CHECK_THROWS_AS(io::read_array(junk), io::FormatError);
}

TEST_CASE("certificate json round trip") {
  const SpaceParams p{2, 2, 2};
  const auto cert = plotkin_certificate(p, 4);
  const auto j = io::certificate_to_json(cert);
  CHECK(j.at("F0").get<std::string>() == io::format_rational(cert.F0));
  const auto back = io::certificate_from_json(io::Json::parse(j.dump()));
  CHECK(back.params == cert.params);
  CHECK(back.d == cert.d);
  CHECK(back.F0 == cert.F0);
  CHECK(back.F == cert.F);
  CHECK(check_certificate(back).code_bound == Rational(8, 3));

  auto broken = j;
  broken["F"]["9,9"] = "1";
  CHECK_THROWS_AS(io::certificate_from_json(broken), io::FormatError);
  auto bad_number = j;
  bad_number["F0"] = "one";
  CHECK_THROWS_AS(io::certificate_from_json(bad_number), io::FormatError);
}

TEST_CASE("enumerator json round trip") {
  const SpaceParams p{3, 2, 2};
  const LinearCode c(p, {OrderedVector(p, {1, 2, 0, 1})});
  const auto A = enumerator_of(c, Reading::Left);
  const auto back = io::enumerator_from_json(io::Json::parse(io::enumerator_to_json(A).dump()));
  CHECK(back == A);
  CHECK(io::enumerator_to_json(A).at("reading") == "left");
}

TEST_CASE("bound table json") {
  const auto table = best_bounds(SpaceParams{2, 2, 2}, 4);
  const auto j = io::bound_table_to_json(table);
  CHECK(j.at("d") == 4);
  CHECK(j.at("params").at("q") == 2);
  CHECK(j.at("bounds").size() == table.bounds.size());
  for (const auto& b : j.at("bounds")) {
    CHECK(b.contains("name"));
    CHECK(b.contains("side"));
    CHECK(b.contains("value"));
    CHECK(b.contains("floor"));
    CHECK(b.contains("applicable"));
    CHECK(b.contains("witness"));
    if (!b.at("applicable").get<bool>()) {
      CHECK(b.at("value").is_null());
      CHECK(b.at("floor").is_null());
    } else {
      CHECK((b.at("value").is_string() || b.at("value").is_number_float()));
      CHECK(b.at("floor").is_number_integer());
    }
    if (b.at("name") == "plotkin") {
      CHECK(b.at("value") == "8/3");
      CHECK(b.at("floor") == 2);
    }
  }
  CHECK(j.at("best").at("upper-on-code-size") == "singleton");
}

TEST_CASE("curve csv") {
  std::ostringstream out;
  io::write_curve_csv(out, "psi", 2, 1, {asym::evaluate_curve("psi", 2, 1, 1.0)});
  std::string header, row;
  std::istringstream in(out.str());
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header == "delta,rate,curve,q,r,alpha");
  CHECK(row.rfind("1,2.54310660633,psi,2,1,0.414213562373", 0) == 0);
  CHECK(io::format_double(1.0 / 3.0) == "0.333333333333");
}
