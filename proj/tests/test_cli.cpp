#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "oscoh/arrangement_file.hpp"
#include "oscoh/catalog.hpp"
#include "oscoh/commands.hpp"
#include "oscoh/errors.hpp"
#include "oscoh/lattice.hpp"
#include "oscoh/orlik_solomon.hpp"

using namespace oscoh;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome oscoh_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& piece) { return text.find(piece) != std::string::npos; }

std::string repeat(const std::string& value, int count) {
  std::string s;
  for (int i = 0; i < count; ++i) s += (i ? "," : "") + value;
  return s;
}

// Scratch file removed on scope exit.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& text, const char* name = "arrangement.json")
      : path(std::string("oscoh_test_") + name) {
    std::ofstream(path) << text;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::string error_of(const std::string& text) {
  try {
    parse_arrangement(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("round trip through the file format") {
  for (const auto& entry : catalog()) {
    const auto arr = entry.build();
    const auto back = parse_arrangement(write_arrangement(arr));
    CHECK_MESSAGE(intersection_lattice(back) == intersection_lattice(arr), entry.name);
    CHECK(back.cone() == arr.cone());
    CHECK(back.labels() == arr.labels());
    CHECK(back.realization().has_value() == arr.realization().has_value());
    for (int q = 0; q <= arr.rank(); ++q) CHECK(aomoto_matrix(back, q).dump() == aomoto_matrix(arr, q).dump());
    CHECK(write_arrangement(back) == write_arrangement(arr));
  }
}

TEST_CASE("realized input") {
  const auto arr = parse_arrangement(R"({
    "field": "Q",
    "hyperplanes": [["1", "0", "0"], [0, 1, "-1/2"], ["1", "-1", "0"]],
    "labels": ["x", "y - 1/2", "x - y"]
  })");
  CHECK(arr.size() == 3);
  CHECK_FALSE(arr.central());
  CHECK(betti_numbers(arr) == std::vector<std::int64_t>{1, 3, 3});
  const auto w = parse_arrangement(R"({
    "field": {"min_poly": [1, 1, 1]},
    "hyperplanes": [[1, ["0", "-1"], 0], [1, -1, 0], [0, 1, 0]]
  })");
  CHECK(w.central());
  CHECK(w.realization()->field->degree() == 2);
  CHECK(betti_numbers(w) == std::vector<std::int64_t>{1, 3, 2});
}

TEST_CASE("matroid input") {
  const auto mac = parse_arrangement(R"({"n": 8, "rank": 3, "central": true,
    "circuits": [[1,2,3],[1,4,7],[1,6,8],[2,4,6],[2,5,7],[3,5,6],[3,7,8],[4,5,8]]})");
  CHECK(intersection_lattice(mac) == intersection_lattice(maclane()));
  // Two parallel lines and a transversal.
  const auto par = parse_arrangement(R"({"n": 3, "rank": 2, "central": false, "circuits": [[0, 1, 2]]})");
  CHECK_FALSE(par.central());
  CHECK(betti_numbers(par) == std::vector<std::int64_t>{1, 3, 2});
}

TEST_CASE("parse errors name the problem and its line") {
  const std::string bad_row = "{\n  \"hyperplanes\": [\n    [\"1\", \"0\", \"0\"],\n    [\"0\", \"1\"],\n    [\"1\", \"1\", \"0\"]\n  ]\n}\n";
  const auto msg = error_of(bad_row);
  CHECK(has(msg, "hyperplane row 2"));
  CHECK(has(msg, "line 4"));
  CHECK_THROWS_AS(parse_arrangement(bad_row), LengthMismatchError);
  const auto syntax = error_of("{\n  \"hyperplanes\": [\n    [1, 0,, 0]\n  ]\n}");
  CHECK(has(syntax, "line 3"));
  CHECK(has(error_of("{\"hyperplanes\": [[\"1\", \"0.5\", \"0\"], [0, 1, 0]]}"), "hyperplane row 1"));
  CHECK(has(error_of("{\"hyperplanes\": [[1, 0, 0], [0, 0, 0]]}"), "row 2"));
  CHECK(has(error_of("{\"hyperplanes\": [[1, 0, 0]], \"circuits\": []}"), "exactly one"));
  CHECK(has(error_of("{}"), "exactly one"));
  CHECK(has(error_of("{\"field\": \"R\", \"hyperplanes\": [[1, 0]]}"), "field"));
  CHECK(has(error_of("{\"n\": 3, \"rank\": 2, \"circuits\": [[1, 2, 4]]}"), "circuit 1"));
  CHECK(has(error_of("{\"n\": 3, \"rank\": 2, \"circuits\": [[0, 1, 2]]}"), "1..3"));
  CHECK(has(error_of("{\"hyperplanes\": [[1, 0, 0], [0, 1, 0]], \"labels\": [\"a\"]}"), "labels"));
  CHECK_THROWS_AS(parse_arrangement("{\"hyperplanes\": [[1, 0, 0], [2, 0, 0]]}"), NotEssentialError);
}

TEST_CASE("essentialize flag") {
  const std::string text = "{\"hyperplanes\": [[1, 0, 0, 0], [0, 1, 0, 0], [1, -1, 0, 0]]}";
  CHECK_THROWS_AS(parse_arrangement(text), NotEssentialError);
  CHECK(betti_numbers(parse_arrangement(text, true)) == std::vector<std::int64_t>{1, 3, 2});
  TempFile file(text);
  CHECK(oscoh_cli({"lattice", file.path}).code == kExitInputError);
  const auto ok = oscoh_cli({"lattice", file.path, "--essentialize"});
  CHECK(ok.code == kExitOk);
  CHECK(has(ok.out, "betti: 1 3 2"));
}

TEST_CASE("lattice command") {
  const auto b = oscoh_cli({"lattice", "boolean(3)"});
  CHECK(b.code == kExitOk);
  CHECK(has(b.out, "flats: 8"));
  const auto c = oscoh_cli({"lattice", "ceva3", "--format", "json"});
  CHECK(c.code == kExitOk);
  std::size_t triples = 0;
  for (std::size_t pos = 0; (pos = c.out.find("\"codim\": 2", pos)) != std::string::npos; ++pos) ++triples;
  CHECK(triples == 12);
  CHECK(oscoh_cli({"lattice", "ceva3"}).out == oscoh_cli({"lattice", "ceva3"}).out);
}

TEST_CASE("cohomology commands") {
  const std::string lambda = repeat("1/3", 6) + "," + repeat("-2/3", 3);
  const auto sec = oscoh_cli({"oscohom", "ceva3-section", "--weights", lambda});
  CHECK(sec.code == kExitOk);
  CHECK(has(sec.out, "poincare: t + 17*t^2"));
  CHECK(has(oscoh_cli({"oscohom", "ceva3", "--weights", lambda}).out, "H^1: 1"));
  CHECK(has(oscoh_cli({"oscohom", "maclane-section", "--weights", repeat("0", 8)}).out, "poincare: 1 + 8*t + 20*t^2"));
  const auto mac = oscoh_cli({"modn", "maclane", "--k", "1,0,2,1,2,2,1,0", "--N", "3"});
  CHECK(mac.code == kExitOk);
  CHECK(has(mac.out, "H^1: 1"));
  CHECK(has(oscoh_cli({"modn", "maclane", "--k", "1,0,2,1,2,2,1,0", "--N", "6"}).out, "composite N"));
  const auto mismatch = oscoh_cli({"oscohom", "ceva3", "--weights", "1/3,1/3"});
  CHECK(mismatch.code == kExitInputError);
  CHECK(has(mismatch.err, "expected 9 weights"));
  CHECK(oscoh_cli({"oscohom", "ceva3", "--weights", repeat("0.5", 9)}).code == kExitInputError);
}

TEST_CASE("bounds command") {
  const std::string w = repeat("1/3", 6) + "," + repeat("-2/3", 3) + ",1/3,0,-1/3,1/3,-1/3,-1/3,1/3,0";
  const auto r = oscoh_cli({"bounds", "product-example", "--weights", w, "--box", "1"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "3  13     46     no"));
  CHECK(has(r.out, "best found over integer translates"));
  const auto j = oscoh_cli({"bounds", "maclane", "--weights", "1/3,0,2/3,1/3,2/3,2/3,1/3,0", "--format", "json"});
  CHECK(j.code == kExitOk);
  const auto degree = j.out.find("\"degree\": 1");
  REQUIRE(degree != std::string::npos);
  // Documented field order.
  std::size_t last = degree;
  for (const char* key : {"\"lower\": 0", "\"upper\": 1", "\"exact\": false", "\"box\": 1", "\"N\": \"3\"", "\"convention_notes\""}) {
    const auto pos = j.out.find(key, degree);
    CHECK_MESSAGE(pos != std::string::npos, key);
    CHECK(pos > last);
    last = pos;
  }
  const auto a = oscoh_cli({"bounds", "example-lstrict", "--weights", "1/2,0,0,1/2,1/2,0,1/2", "--jobs", "2"});
  const auto b = oscoh_cli({"bounds", "example-lstrict", "--weights", "1/2,0,0,1/2,1/2,0,1/2"});
  CHECK(a.out == b.out);
}

TEST_CASE("nonres and resonance commands") {
  const auto ok = oscoh_cli({"nonres", "ceva3-section", "--weights", repeat("1/11", 9)});
  CHECK(ok.code == kExitOk);
  CHECK(has(ok.out, "certificate: holds"));
  CHECK(has(ok.out, "verified: yes"));
  CHECK(has(ok.out, "0 0 16"));
  const auto fail = oscoh_cli({"nonres", "maclane-section", "--weights", "1/3,0,-1/3,1/3,-1/3,-1/3,1/3,0"});
  CHECK(fail.code == kExitCertificateFails);
  CHECK(has(fail.out, "witness"));
  CHECK(oscoh_cli({"nonres", "maclane", "--weights", repeat("1/9", 8)}).code == kExitInputError);
  const std::string lambda = repeat("1/3", 6) + "," + repeat("-2/3", 3);
  const auto in = oscoh_cli({"resonance", "ceva3", "--weights", lambda, "--q", "1", "--m", "1"});
  CHECK(in.code == kExitOk);
  CHECK(has(in.out, "lies in R^1_1"));
  CHECK(has(oscoh_cli({"resonance", "ceva3", "--weights", lambda, "--q", "1", "--m", "2"}).out, "does not lie"));
}

TEST_CASE("aomoto, export and catalog commands") {
  const auto a = oscoh_cli({"aomoto", "three-lines", "--q", "1"});
  CHECK(a.out == "mu^1 rows=3 cols=2\n-y2, -y3\ny1 + y3, -y3\n-y2, y1 + y2\n");
  const auto e = oscoh_cli({"export", "maclane"});
  CHECK(e.code == kExitOk);
  TempFile file(e.out, "maclane.json");
  CHECK(oscoh_cli({"lattice", file.path}).out.substr(0, 40) == oscoh_cli({"lattice", "maclane"}).out.substr(0, 40));
  CHECK(oscoh_cli({"aomoto", file.path}).out == oscoh_cli({"aomoto", "maclane"}).out);
  const auto c = oscoh_cli({"catalog"});
  for (const auto& entry : catalog()) CHECK(has(c.out, entry.name));
  CHECK(oscoh_cli({"lattice", "boolean(5)"}).code == kExitOk);
}

TEST_CASE("usage errors") {
  CHECK(oscoh_cli({}).code == kExitInputError);
  CHECK(oscoh_cli({"frobnicate"}).code == kExitInputError);
  CHECK(oscoh_cli({"lattice", "no-such-thing"}).code == kExitInputError);
  CHECK(oscoh_cli({"lattice", "ceva3", "--format", "xml"}).code == kExitInputError);
  CHECK(oscoh_cli({"modn", "maclane", "--k", "1,0,2,1,2,2,1,0", "--N", "1"}).code == kExitInputError);
  CHECK(oscoh_cli({"--help"}).code == kExitOk);
  TempFile broken("{\n  \"hyperplanes\": [\n    [1, 0,\n", "broken.json");
  const auto r = oscoh_cli({"lattice", broken.path});
  CHECK(r.code == kExitInputError);
  CHECK(has(r.err, "line"));
}
