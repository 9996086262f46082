#include <doctest.h>

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "schmidt/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = schmidt::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("map") {
  auto mork = run({"map", "--bijection", "mork", "--partition", "7,5,4,4,2,1"});
  CHECK(mork.code == 0);
  CHECK(mork.out == "12,10,7,5,3,2,1\n");
  CHECK(run({"map", "--bijection", "mork", "--inverse", "--partition", "12,10,7,5,3,2,1"}).out == "7,5,4,4,2,1\n");

  auto psi = run({"map", "--bijection", "psi", "--m", "5", "--s", "1,2,3", "--partition", "5,5,4,4,4,4,4,4,3,2,1"});
  CHECK(psi.out == "7_1,6_5,6_4,6_3,2_2\n");
  CHECK(run({"map", "--bijection", "psi", "--m", "5", "--s", "1,2,3", "--inverse", "--partition",
             "7_1,6_5,6_4,6_3,2_2"})
            .out == "5,5,4,4,4,4,4,4,3,2,1\n");

  CHECK(run({"map", "--bijection", "glaisher", "--m", "2", "--partition", "4,4,3,1"}).out ==
        "reduced=2,2,1,1 removed=6\n");
  CHECK(run({"map", "--bijection", "glaisher", "--m", "2", "--inverse", "--partition", "2,2,1,1", "--removed", "6"})
            .out == "4,4,3,1\n");
  CHECK(run({"map", "--bijection", "decompose", "--m", "2", "--partition", "2,1,1"}).out ==
        "restricted=2 repeated=1,1\n");
  CHECK(run({"map", "--bijection", "decompose", "--inverse", "--partition", "2", "--removed", "1,1"}).out ==
        "2,1,1\n");
  CHECK(run({"map", "--bijection", "mork", "--partition", ""}).out == "\n");
}

TEST_CASE("coeff and witness") {
  auto c = run({"coeff", "--identity", "overpartition", "--side", "product", "--mono", "q=6,t1=1,t2=2"});
  CHECK(c.code == 0);
  CHECK(c.out == "6\n");
  for (const char* side : {"sum", "enum"}) {
    CHECK(run({"coeff", "--identity", "overpartition", "--side", side, "--mono", "q=6,t1=1,t2=2"}).out == "6\n");
  }
  CHECK(run({"coeff", "--identity", "cor22", "--side", "enum", "--mono", "q=6,t1=1,t2=2"}).out == "6\n");
  CHECK(run({"coeff", "--identity", "ak_trivariate", "--side", "sum", "--mono", "q=3,t1=1,t2=1"}).out == "2\n");
  CHECK(run({"coeff", "--identity", "mork_odd", "--side", "product", "--mono", "s=3,q=2"}).out == "1\n");

  auto j = nlohmann::json::parse(
      run({"coeff", "--identity", "overpartition", "--side", "sum", "--mono", "q=6,t1=1,t2=2", "--json"}).out);
  CHECK(j["coefficient"] == "6");
  CHECK(j["monomial"] == "q^6*t1*t2^2");

  auto w = run({"witness", "--identity", "cor22", "--mono", "q=6,t1=1,t2=2"});
  CHECK(w.code == 0);
  CHECK(w.out.find("schmidt: 4,4,2\n") != std::string::npos);
  CHECK(w.out.find("overpartition: 2',2,2\n") != std::string::npos);
  auto wj = nlohmann::json::parse(run({"witness", "--identity", "cor22", "--mono", "q=6,t1=1,t2=2", "--json"}).out);
  CHECK(wj["witnesses"].size() == 12);

  auto bad = run({"coeff", "--identity", "overpartition", "--side", "sum", "--mono", "s=1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "overpartition", "--q-cap", "12"}).code == 0);
  CHECK(run({"verify", "mork_even", "--s-cap", "8"}).code == 0);
  CHECK(run({"verify", "psi_dm", "--m", "3", "--i", "2", "--s-cap", "8"}).code == 0);
  CHECK(run({"verify", "cauchy", "--n", "6"}).code == 0);
  CHECK(run({"verify", "t1_slice", "--n", "1", "--q-cap", "8"}).code == 0);
  CHECK(run({"verify", "ln", "--n", "4", "--q-cap", "6"}).code == 0);
  CHECK(run({"verify", "schmidt", "--n", "6"}).code == 0);
  CHECK(run({"verify", "ak_main", "--m", "3", "--s", "1,2", "--n", "4"}).code == 0);

  auto fibre = run({"verify", "franklin_ext", "--n", "5"});
  CHECK(fibre.code == 0);
  auto literal = run({"verify", "franklin_ext", "--n", "5", "--literal"});
  CHECK(literal.code == 1);
  CHECK(literal.out.find("FAIL") != std::string::npos);
  CHECK(literal.out.find("first mismatch at bucket") != std::string::npos);

  auto j = nlohmann::json::parse(run({"verify", "franklin_ext", "--n", "5", "--literal", "--json"}).out);
  CHECK(j["status"] == "fail");
  CHECK(j["mismatch"]["lhs"] == "1");
  CHECK(j["mismatch"]["rhs"] == "2");
  CHECK(j["params"]["mode"] == "literal");
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "--class", "P", "--n", "3"}).out == "3\n2,1\n1,1,1\n");
  CHECK(run({"enumerate", "--class", "D", "--m", "2", "--n", "3"}).out == "3\n2,1\n");
  CHECK(run({"enumerate", "--class", "D", "--m", "2", "--n", "3", "--schmidt-weight"}).out == "3,2\n3,1\n3\n");
  CHECK(run({"enumerate", "--class", "over", "--n", "0"}).out == "\n");
  auto cs = run({"enumerate", "--class", "cs", "--m", "2", "--n", "3"});
  CHECK(std::count(cs.out.begin(), cs.out.end(), '\n') == 10);
  auto single = run({"enumerate", "--class", "cs", "--m", "2", "--top", "2", "--n", "3"});
  CHECK(std::count(single.out.begin(), single.out.end(), '\n') == 3);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "no_such_identity"}).code == 2);
  CHECK(run({"verify", "overpartition", "--bogus"}).code == 2);
  CHECK(run({"map", "--bijection", "mork"}).code == 2);
  CHECK(run({"map", "--bijection", "hook", "--partition", "1"}).code == 2);
  CHECK(run({"map", "--bijection", "mork", "--partition", "1,2"}).code == 2);
  CHECK(run({"map", "--bijection", "mork", "--inverse", "--partition", "2,2"}).code == 2);
  CHECK(run({"enumerate", "--class", "Q", "--n", "3"}).code == 2);
  CHECK(run({"verify", "schmidt", "--m", "3"}).code == 2);
  CHECK(run({"coeff", "--identity", "overpartition", "--side", "quotient", "--mono", "q=1"}).code == 2);
  auto usage = run({"verify"});
  CHECK(usage.code == 2);
  CHECK(usage.err.find("Usage") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"verify", "cor22", "--q-cap", "8", "--json"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> e{"enumerate", "--class", "over", "--n", "5"};
  CHECK(run(e).out == run(e).out);
}
