#include "bstar/certificate.hpp"

#include <algorithm>
#include <sstream>

#include <gtest/gtest.h>

#include "bstar/checker.hpp"
#include "test_util.hpp"

namespace bstar {
namespace {

using testing::C;
using testing::E;

TEST(CertificateTest, RoundTrip) {
  const auto c = C({"1234", "1243", "2143", "2134"});
  const auto line = to_jsonl(make_certificate(E("1234", "1243"), c));
  EXPECT_EQ(line, R"({"n":4,"length":4,"edge":["1234","1243"],"vertices":["1234","1243","2143","2134"]})");
  const auto back = parse_certificate(line);
  EXPECT_EQ(back.n, 4);
  EXPECT_EQ(back.length, 4U);
  EXPECT_EQ(back.edge_u, testing::P("1234"));
  EXPECT_EQ(back.cycle, c);
}

TEST(CertificateTest, ParsesOnlyShape) {
  // A well-formed line describing a non-cycle parses; validation is separate.
  const auto cert = parse_certificate(R"({"n":4,"length":4,"edge":["1234","1243"],"vertices":["1234","4321","2143","2134"]})");
  EXPECT_TRUE(validate(cert.cycle).has_value());
}

TEST(CertificateTest, RejectsMalformedLines) {
  for (const char* bad : {"", "{", "[]", R"({"n":4})",
                          R"({"n":4,"length":4,"edge":["1234"],"vertices":["1234","1243","2143","2134"]})",
                          R"({"n":4,"length":4,"edge":["1234","1243"],"vertices":"1234"})",
                          R"({"n":4,"length":4,"edge":["1234","1243"],"vertices":["1234","12x3","2143","2134"]})",
                          R"({"n":"4","length":4,"edge":["1234","1243"],"vertices":["1234","1243","2143","2134"]})"}) {
    EXPECT_THROW(parse_certificate(bad), std::invalid_argument) << bad;
  }
}

TEST(CertificateTest, EdgeList) {
  std::ostringstream out;
  write_edge_list(out, 3);
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "# bs n=3 vertices=6 edges=9");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 10);
  EXPECT_NE(text.find("123\t213\n"), std::string::npos);

  std::ostringstream two;
  write_edge_list(two, 2);
  EXPECT_EQ(two.str(), "# bs n=2 vertices=2 edges=1\n12\t21\n");

  std::ostringstream jsonl;
  write_edge_jsonl(jsonl, 4);
  const std::string lines = jsonl.str();
  EXPECT_EQ(std::count(lines.begin(), lines.end(), '\n'), 60);
}

}  // namespace
}  // namespace bstar
