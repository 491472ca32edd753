#include "sepfft/signal_io.hpp"

#include <gtest/gtest.h>

#include <cstring>
#include <random>
#include <sstream>

#include "sepfft/error.hpp"
#include "test_util.hpp"

namespace sepfft::io {
namespace {

TEST(Csv, ReadsWithAndWithoutHeader) {
  std::istringstream plain("1,2\n-3.5,4e-3\n");
  const auto a = read_csv(plain);
  EXPECT_EQ(a.re, (std::vector<double>{1, -3.5}));
  EXPECT_EQ(a.im, (std::vector<double>{2, 4e-3}));

  std::istringstream header("re,im\r\n 1 , 2 \r\n\n-3.5,0.004\n\n");
  EXPECT_EQ(read_csv(header), a);
}

TEST(Csv, RejectsMalformedLines) {
  std::istringstream one_field("1\n");
  EXPECT_THROW(read_csv(one_field), ParseError);
  std::istringstream three_fields("1,2,3\n");
  EXPECT_THROW(read_csv(three_fields), ParseError);
  std::istringstream garbage("1,abc\n");
  EXPECT_THROW(read_csv(garbage), ParseError);
  std::istringstream late_header("1,2\nre,im\n");
  EXPECT_THROW(read_csv(late_header), ParseError);
}

TEST(Csv, WritesSeventeenDigitsWithoutNegativeZero) {
  std::ostringstream os;
  write_csv(os, SplitSignal{{1.0, 0.1, -0.0}, {-2.0, 1.0 / 3.0, 0.0}});
  EXPECT_EQ(os.str(),
            "1,-2\n"
            "0.10000000000000001,0.33333333333333331\n"
            "0,0\n");
}

TEST(Csv, TextRoundTripIsExact) {
  std::mt19937_64 rng(41);
  const auto s = testing::random_signal(64, rng);
  std::stringstream ss;
  write_csv(ss, s);
  EXPECT_EQ(read_csv(ss), s);
}

TEST(Bin, LittleEndianPairs) {
  std::ostringstream os;
  const std::vector<double> v{1.0, -2.0};
  write_bin(os, v);
  const std::string bytes = os.str();
  ASSERT_EQ(bytes.size(), 16u);
  // 1.0 = 0x3FF0000000000000, little-endian puts 0xF0 0x3F last.
  EXPECT_EQ(static_cast<unsigned char>(bytes[6]), 0xF0);
  EXPECT_EQ(static_cast<unsigned char>(bytes[7]), 0x3F);
  std::istringstream is(bytes);
  EXPECT_EQ(read_bin(is), v);
}

TEST(Bin, RejectsPartialPairs) {
  std::istringstream is(std::string(24, '\0'));
  EXPECT_THROW(read_bin(is), ParseError);
}

TEST(Format, FromPathAndName) {
  EXPECT_EQ(format_from_path("a/b.csv"), SignalFormat::CsvSplit);
  EXPECT_EQ(format_from_path("x.bin"), SignalFormat::BinInterleaved);
  EXPECT_THROW(format_from_path("x.txt"), InvalidInput);
  EXPECT_EQ(parse_format_name("bin"), SignalFormat::BinInterleaved);
  EXPECT_THROW(parse_format_name("wav"), InvalidInput);
}

}  // namespace
}  // namespace sepfft::io
