#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "dodson/csv.hpp"
#include "dodson/errors.hpp"
#include "dodson/solutions.hpp"

using namespace dodson;

namespace {

std::string render(const CsvTable& t) {
    std::ostringstream os;
    t.write(os);
    return os.str();
}

}  // namespace

TEST(Csv, NumberFormatRoundTrips) {
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_EQ(format_number(-3.0), "-3");
    for (double v : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-300}) EXPECT_EQ(std::stod(format_number(v)), v);
}

TEST(Csv, Layout) {
    CsvTable t;
    t.meta = {{"generator", "test"}};
    t.columns = {"x", "c"};
    t.rows = {{0.0, 1.0}, {0.5, 0.25}};
    EXPECT_EQ(render(t), "# generator: test\nx,c\n0,1\n0.5,0.25\n");
}

TEST(Csv, RowWidthMismatch) {
    CsvTable t;
    t.columns = {"x", "c"};
    t.rows = {{0.0}};
    std::ostringstream os;
    EXPECT_THROW(t.write(os), InvalidArgument);
}

TEST(Csv, ProfileIsDeterministic) {
    const auto p = fundamental_profile(OperatorOrder(0.7), DodsonClock(1.0, 1.0), linspace(-3, 3, 61), 1.0);
    const auto a = render(CsvTable::from_profile(p));
    const auto b = render(CsvTable::from_profile(p));
    EXPECT_EQ(a, b);
    EXPECT_NE(a.find("# generator: fundamental\n"), std::string::npos);
    EXPECT_NE(a.find("# nu: 0.69999999999999996\n"), std::string::npos);
    EXPECT_NE(a.find("\nx,c\n"), std::string::npos);
}

TEST(Csv, WriteFile) {
    const auto dir = std::filesystem::temp_directory_path() / "dodson_csv_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "p.csv").string();
    CsvTable t;
    t.columns = {"x"};
    t.rows = {{1.0}};
    t.write_file(path);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), "x\n1\n");
    std::filesystem::remove_all(dir);
}

TEST(Csv, UnwritablePathIsIoError) {
    CsvTable t;
    t.columns = {"x"};
    EXPECT_THROW(t.write_file("/nonexistent-dir/for/sure/out.csv"), IoError);
}
