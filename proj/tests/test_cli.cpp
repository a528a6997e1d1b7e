#include <sstream>

#include "doctest.h"

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = bpc::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kExample1 = "3 12 4 11 1 10 2 9 8 5 7 6";
const std::string kExample3 =
    "2 25 8 32 3 26 7 29 4 28 6 30 1 27 5 31 11 17 16 22 10 20 13 23 12 19 14 21 9 18 15 24";
const std::string kExample4 = "3 4 13 16 20 19 8 7 21 22 1 2 18 17 23 24 6 5 9 10 14 15 12 11";

}  // namespace

TEST_CASE("documented command lines") {
  const auto enc = run({"encode", "d1", "--n", "12", "--gamma1", "3,4,1,2,5,6", "--gamma2", "6,5,4,3,2,1"});
  CHECK(enc.code == 0);
  CHECK(enc.out == kExample1 + "\n");

  const auto ver = run({"verify", "--preset", "d1", "--perm", kExample1});
  CHECK(ver.code == 0);
  CHECK(ver.out == "{\"valid\":true,\"violations\":[]}\n");

  const auto odd = run({"decode", "d1", "--perm", "1 2 3"});
  CHECK(odd.code == 2);
  CHECK(odd.out.empty());
  CHECK(odd.err.find("OddLength") != std::string::npos);
}

TEST_CASE("encode d1 variants") {
  CHECK(run({"encode", "d1", "--n", "12", "--gamma1", "3 4 1 2 5 6", "--gamma2", "6 5 4 3 2 1", "--streaming"}).out ==
        kExample1 + "\n");
  const auto trace = run({"encode", "d1", "--n", "12", "--gamma1", "3,4,1,2,5,6", "--gamma2", "6,5,4,3,2,1",
                          "--streaming", "--trace"});
  CHECK(trace.code == 0);
  CHECK(trace.out ==
        "{\"permutation\":\"3 12 4 11 1 10 2 9 8 5 7 6\",\"interleaved\":\"3 12 4 11 1 10 2 9 5 8 6 7\","
        "\"initial_deviation\":\"-7/2\",\"trace\":[{\"position\":9,\"moved_symbol\":8},"
        "{\"position\":11,\"moved_symbol\":7}]}\n");

  CHECK(run({"encode", "d1", "--n", "4", "--i1", "0", "--i2", "0"}).out == "1 3 4 2\n");
  const auto idx = run({"decode", "d1", "--perm", kExample1, "--index"});
  CHECK(idx.out == "288\n719\n");
  CHECK(run({"encode", "d1", "--n", "12", "--i1", "288", "--i2", "719"}).out == kExample1 + "\n");
  // 50! - 1 needs more than 64 bits.
  const std::string big = "30414093201713378043612608166064768844377641568960511999999999999";
  const auto wide = run({"encode", "d1", "--n", "100", "--i1", big, "--i2", "0"});
  CHECK(wide.code == 0);
  CHECK(run({"decode", "d1", "--perm", wide.out.substr(0, wide.out.size() - 1), "--index"}).out ==
        big + "\n0\n");

  CHECK(run({"encode", "d1", "--n", "4", "--i1", "2", "--i2", "0"}).code == 2);
  CHECK(run({"encode", "d1", "--n", "4", "--gamma1", "1,2", "--gamma2", "1,2", "--i1", "0", "--i2", "0"}).code ==
        2);
  CHECK(run({"encode", "d1", "--n", "4", "--gamma1", "1,2"}).code == 2);
  CHECK(run({"encode", "d1", "--n", "6", "--gamma1", "1,2", "--gamma2", "1,2"}).code == 2);
  CHECK(run({"encode", "d1", "--n", "4", "--gamma1", "1,1", "--gamma2", "1,2"}).code == 2);
}

TEST_CASE("decode d1 prints both halves") {
  CHECK(run({"decode", "d1", "--perm", kExample1}).out == "3 4 1 2 5 6\n6 5 4 3 2 1\n");
  CHECK(run({"decode", "d1", "--perm", "-"}, kExample1 + "\n").out == "3 4 1 2 5 6\n6 5 4 3 2 1\n");
}

TEST_CASE("d2 roundtrip through JSON") {
  const auto dec = run({"decode", "d2", "--perm", kExample3, "--n", "32", "--N", "8"});
  CHECK(dec.code == 0);
  CHECK(dec.out ==
        "{\"n\":32,\"N\":8,\"sigmas\":[[2,3,4,1],[4,3,2,1],[3,2,4,1],[4,1,2,3],[1,4,3,2],[2,3,1,4],"
        "[1,2,4,3],[4,1,2,3]]}\n");
  const auto enc = run({"encode", "d2", "--input", "-"}, dec.out);
  CHECK(enc.code == 0);
  CHECK(enc.out == kExample3 + "\n");
  CHECK(run({"encode", "d2", "--input", "-"}, "{\"n\":30,\"N\":8,\"sigmas\":[]}").code == 2);
  CHECK(run({"encode", "d2", "--input", "-"}, "not json").code == 2);
  CHECK(run({"decode", "d2", "--perm", kExample3, "--n", "32", "--N", "6"}).code == 2);
}

TEST_CASE("tn roundtrip and error exits") {
  const auto dec = run({"decode", "tn", "--perm", kExample4, "--n", "24", "--k", "4"});
  CHECK(dec.code == 0);
  CHECK(dec.out ==
        "{\"n\":24,\"k\":4,\"sigmas\":[[3,4,1,2],[4,3,2,1],[1,2,4,3],[1,4,2,3],[4,3,2,1],[1,2,3,4]],"
        "\"selector\":[1,4,5,2,6,1,5,6,2,3,4,3]}\n");
  CHECK(run({"encode", "tn", "--input", "-"}, dec.out).out == kExample4 + "\n");

  // Not a codeword: a pair straddles two sets.
  CHECK(run({"decode", "tn", "--perm", "1 3 2 4", "--n", "4", "--k", "2"}).code == 1);
  // Selector starts in the upper half.
  const std::string bad =
      "{\"n\":8,\"k\":2,\"sigmas\":[[1,2],[1,2],[1,2],[1,2]],\"selector\":[4,1,2,3]}";
  const auto sel = run({"encode", "tn", "--input", "-"}, bad);
  CHECK(sel.code == 2);
  CHECK(sel.err.find("SelectorViolation") != std::string::npos);
}

TEST_CASE("verify and disc") {
  const auto bad = run({"verify", "--preset", "d1", "--perm", "1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20"});
  CHECK(bad.code == 1);
  CHECK(bad.out.rfind("{\"valid\":false,\"violations\":[{\"b\":", 0) == 0);

  const auto nb = run({"verify", "--preset", "tn-neighbor", "--k", "1", "--perm", "1 4 2 3"});
  CHECK(nb.code == 1);
  CHECK(nb.out == "{\"valid\":false,\"violations\":[{\"i\":2,\"left\":3,\"right\":2,\"k\":1}]}\n");
  CHECK(run({"verify", "--preset", "tn-neighbor", "--perm", "1 4 2 3"}).code == 2);
  CHECK(run({"verify", "--preset", "d2", "--N", "4", "--perm", "1 5 3 7 4 8 2 6"}).code == 0);
  CHECK(run({"verify", "--preset", "d9", "--perm", "1"}).code == 2);
  CHECK(run({"verify", "--preset", "d1", "--perm", "1 1"}).code == 2);

  CHECK(run({"disc", "--perm", "1 3 2 4", "--b", "2"}).out == "{\"b\":2,\"disc\":\"1/1\"}\n");
  CHECK(run({"disc", "--perm", "1 3 2 4", "--b", "7"}).code == 2);
}

TEST_CASE("analyze") {
  const auto c = run({"analyze", "census", "--n", "4", "--preset", "custom", "--blocks", "2", "--dev", "1"});
  CHECK(c.code == 0);
  CHECK(c.out ==
        "{\"n\":4,\"blocks\":[2],\"dev_max\":[\"1/1\"],\"k\":null,\"count\":\"8\",\"achievers\":[\"1 3 2 4\","
        "\"1 4 2 3\",\"2 3 1 4\",\"2 4 1 3\",\"3 1 4 2\",\"3 2 4 1\",\"4 1 3 2\",\"4 2 3 1\"]}\n");
  CHECK(run({"analyze", "census", "--n", "4", "--preset", "custom", "--blocks", "2", "--dev", "0.5"}).out.find(
            "\"count\":\"0\"") != std::string::npos);
  CHECK(run({"analyze", "census", "--n", "12", "--preset", "d1"}).code == 2);
  // Output does not depend on the worker count.
  CHECK(run({"analyze", "census", "--n", "8", "--preset", "d1", "--k", "2", "--threads", "4"}).out ==
        run({"analyze", "census", "--n", "8", "--preset", "d1", "--k", "2"}).out);

  CHECK(run({"analyze", "min-disc", "--n", "4", "--b", "2"}).out ==
        "{\"n\":4,\"b\":2,\"min_disc\":\"1/1\",\"achiever_count\":\"8\"}\n");

  const auto r = run({"analyze", "rate", "--codec", "d1", "--n", "12"});
  CHECK(r.out.rfind("[{\"n\":12,\"config\":\"d1\",\"code_size\":\"518400\",", 0) == 0);
  const auto csv = run({"analyze", "rate", "--codec", "d1", "--n", "10,12", "--format", "csv"});
  CHECK(csv.out.rfind("n,config,code_size,code_log2,rate,perm_log2,target\n10,\"d1\",14400,13.8137", 0) == 0);
  CHECK(run({"analyze", "rate", "--codec", "d2", "--n", "64", "--epsilon", "1/2"}).code == 0);
  CHECK(run({"analyze", "rate", "--codec", "d2", "--n", "30", "--epsilon", "0.5"}).code == 2);
  CHECK(run({"analyze", "rate", "--codec", "tn", "--n", "24", "--k", "4"}).out.find("\"not computed\"") !=
        std::string::npos);

  const auto ok = run({"analyze", "claims", "--codec", "d2", "--N", "8", "--perm", kExample3});
  CHECK(ok.code == 0);
  const auto fail = run({"analyze", "claims", "--codec", "d1", "--input", "-"},
                        kExample1 + "\n12 7 8 9 10 2 11 3 1 4 5 6\n");
  CHECK(fail.code == 1);
  CHECK(fail.out.find("\"detail\":\"j=5 deviation=27/2 bound=13\"") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"encode"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"disc", "--perm", "1 2", "--b", "x"}).code == 2);
  CHECK(run({"disc", "--perm", "1,,2", "--b", "2"}).code == 2);
}
