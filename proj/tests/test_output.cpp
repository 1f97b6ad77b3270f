#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "skeleton/output.hpp"
#include "skeleton/parallel.hpp"

using namespace skeleton;

TEST(Output, SeventeenDigits) {
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(0.3749034774700059), "0.37490347747000591");
    EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
    EXPECT_EQ(format_double(-std::numeric_limits<double>::infinity()), "-inf");
    EXPECT_EQ(json_number(std::numeric_limits<double>::infinity()), "inf");
    EXPECT_EQ(json_number(2.5), 2.5);
}

TEST(Output, CsvQuoting) {
    std::ostringstream out;
    CsvWriter csv(out);
    csv.comment("meta");
    csv.header({"a", "b"});
    csv.row({"1,5", "say \"hi\""});
    EXPECT_EQ(out.str(), "# meta\na,b\n\"1,5\",\"say \"\"hi\"\"\"\n");
}

TEST(Output, SvgHasSinglePolyline) {
    const auto svg = svg_line_plot({{1.6, 2.0, 2.4}, {0.37, 0.2, 0.0}}, {"t", "x", "y <z>"});
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    std::size_t count = 0;
    for (auto pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) ++count;
    EXPECT_EQ(count, 1u);
    EXPECT_NE(svg.find("y &lt;z&gt;"), std::string::npos);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Output, MetadataLine) { EXPECT_EQ(metadata_line("solve").rfind("skeleton ", 0), 0u); }

TEST(Parallel, EachIndexOnceAndExceptionsPropagate) {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; }, 8);
    for (int h : hits) EXPECT_EQ(h, 1);
    EXPECT_THROW(parallel_for(10, [](std::size_t i) { if (i == 3) throw std::runtime_error("x"); }, 4), std::runtime_error);
    parallel_for(0, [](std::size_t) { FAIL(); }, 4);
}
