#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.h"
#include "sadt/metrics.h"
#include "sadt/pgm.h"
#include "synthetic.h"

using namespace sadt;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / (std::string("sadt_cli_") + info->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        cover_ = dir_ / "cover.pgm";
        save_pgm(cover_, synthetic::generate(5, 96, 96));
    }
    void TearDown() override { fs::remove_all(dir_); }

    int run(std::vector<std::string> args) {
        args.insert(args.begin(), "sadt");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        out_.str("");
        err_.str("");
        return cli::run(static_cast<int>(argv.size()), argv.data(), out_, err_);
    }

    fs::path path(const std::string& name) const { return dir_ / name; }

    static std::string slurp(const fs::path& p) {
        std::ifstream f(p, std::ios::binary);
        return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
    }

    fs::path dir_;
    fs::path cover_;
    std::ostringstream out_;
    std::ostringstream err_;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);
    return parts;
}

}  // namespace

TEST_F(CliTest, EmbedWritesStegoAndReport) {
    ASSERT_EQ(run({"embed", cover_.string(), path("stego.pgm").string(), "--mode", "set1", "--report",
                   path("r.csv").string()}),
              cli::kExitOk)
        << err_.str();
    const Image stego = load_pgm(path("stego.pgm"));
    EXPECT_EQ(stego.width, 96);
    EXPECT_EQ(stego.height, 96);
    EXPECT_NE(out_.str().find("PSNR"), std::string::npos);

    const auto lines = split(slurp(path("r.csv")), '\n');
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(lines[0], cli::kCsvHeader);
    const auto fields = split(lines[1], ',');
    ASSERT_EQ(fields.size(), 6u);
    EXPECT_EQ(fields[0], "cover.pgm");
    EXPECT_EQ(fields[1], "set1");
    EXPECT_GE(std::stod(fields[3]), 45.0);
    EXPECT_EQ(fields[5], "1");

    // metrics on the same pair prints identical numbers
    ASSERT_EQ(run({"metrics", cover_.string(), path("stego.pgm").string()}), cli::kExitOk);
    const auto mlines = split(out_.str(), '\n');
    ASSERT_EQ(mlines.size(), 2u);
    EXPECT_EQ(mlines[0], "name,mse,psnr,if");
    const auto mf = split(mlines[1], ',');
    EXPECT_EQ(mf[1], fields[2]);
    EXPECT_EQ(mf[2], fields[3]);
    EXPECT_EQ(mf[3], fields[4]);
}

TEST_F(CliTest, EmbedConstantImage) {
    save_pgm(path("flat.pgm"), Image(32, 32, 77));
    ASSERT_EQ(run({"embed", path("flat.pgm").string(), path("flat_s.pgm").string(), "--report",
                   path("r.csv").string()}),
              cli::kExitOk);
    const auto fields = split(split(slurp(path("r.csv")), '\n')[1], ',');
    for (int i = 2; i < 6; ++i) EXPECT_TRUE(std::isfinite(std::stod(fields[i]))) << fields[i];
}

TEST_F(CliTest, EmbedMissingInputFails) {
    EXPECT_EQ(run({"embed", path("nope.pgm").string(), path("out.pgm").string()}), cli::kExitError);
    EXPECT_FALSE(fs::exists(path("out.pgm")));
    EXPECT_NE(err_.str().find("error"), std::string::npos);
}

TEST_F(CliTest, VerifyExitCodesAndTamperMap) {
    ASSERT_EQ(run({"embed", cover_.string(), path("s.pgm").string(), "--mode", "set1set2"}), cli::kExitOk);
    EXPECT_EQ(run({"verify", path("s.pgm").string(), "--mode", "set1set2"}), cli::kExitOk);
    EXPECT_NE(out_.str().find("Authentic"), std::string::npos);

    ASSERT_EQ(run({"attack", path("s.pgm").string(), path("t.pgm").string(), "--kind", "zero-region", "--x",
                   "32", "--y", "16", "--width", "32", "--height", "32"}),
              cli::kExitOk);
    EXPECT_EQ(run({"verify", path("t.pgm").string(), "--mode", "set1set2", "--tamper-map",
                   path("map.pgm").string()}),
              cli::kExitTampered);
    EXPECT_NE(out_.str().find("Tampered"), std::string::npos);

    const Image map = load_pgm(path("map.pgm"));
    ASSERT_EQ(map.width, 24);
    ASSERT_EQ(map.height, 24);
    int white = 0;
    for (int r = 4; r < 12; ++r)
        for (int c = 8; c < 16; ++c) white += map.at(r, c) == 255;
    EXPECT_GE(white, 52);
    for (int r = 0; r < 24; ++r)
        for (int c = 0; c < 24; ++c)
            if (r < 4 || r >= 12 || c < 8 || c >= 16) {
                EXPECT_EQ(map.at(r, c), 0);
            }
}

TEST_F(CliTest, VerifyWithWrongModeIsTampered) {
    ASSERT_EQ(run({"embed", cover_.string(), path("s.pgm").string(), "--mode", "set1"}), cli::kExitOk);
    EXPECT_EQ(run({"verify", path("s.pgm").string(), "--mode", "set1set2"}), cli::kExitTampered);
}

TEST_F(CliTest, VerifyHonoursThresholdAndTolerance) {
    ASSERT_EQ(run({"embed", cover_.string(), path("s.pgm").string()}), cli::kExitOk);
    ASSERT_EQ(run({"attack", path("s.pgm").string(), path("t.pgm").string(), "--x", "0", "--y", "0", "--width",
                   "16", "--height", "16"}),
              cli::kExitOk);
    EXPECT_EQ(run({"verify", path("t.pgm").string()}), cli::kExitOk);  // 16 of 576 masks lost
    EXPECT_EQ(run({"verify", path("t.pgm").string(), "--threshold", "0.99"}), cli::kExitTampered);
    EXPECT_EQ(run({"verify", path("t.pgm").string(), "--tolerance", "255"}), cli::kExitOk);
    EXPECT_NE(out_.str().find("match_fraction 1\n"), std::string::npos);
}

TEST_F(CliTest, MetricsIdenticalAndOracleFixture) {
    ASSERT_EQ(run({"metrics", cover_.string(), cover_.string()}), cli::kExitOk);
    EXPECT_EQ(split(out_.str(), '\n')[1], "cover.pgm,0,inf,1");

    save_pgm(path("a.pgm"), Image(1, 2, std::vector<std::uint8_t>{0, 0}), PgmEncoding::Ascii);
    save_pgm(path("b.pgm"), Image(1, 2, std::vector<std::uint8_t>{3, 4}), PgmEncoding::Ascii);
    ASSERT_EQ(run({"metrics", path("b.pgm").string(), path("a.pgm").string()}), cli::kExitOk);
    EXPECT_EQ(split(split(out_.str(), '\n')[1], ',')[1], "12.5");

    save_pgm(path("c.pgm"), Image(2, 1, 0));
    EXPECT_EQ(run({"metrics", path("a.pgm").string(), path("c.pgm").string()}), cli::kExitError);
}

TEST_F(CliTest, BenchWritesRowsAverageAndBaselines) {
    const fs::path corpus = path("corpus");
    fs::create_directories(corpus);
    save_pgm(corpus / "b_img.pgm", synthetic::generate(1, 64, 64));
    save_pgm(corpus / "a_img.pgm", synthetic::generate(2, 64, 64));
    save_pgm(corpus / "c_img.pgm", synthetic::generate(4, 64, 64));
    std::ofstream(corpus / "notes.txt") << "ignored";

    ASSERT_EQ(run({"bench", corpus.string(), path("bench.csv").string(), "--mode", "set1"}), cli::kExitOk)
        << err_.str();
    const std::string csv = slurp(path("bench.csv"));
    const auto lines = split(csv, '\n');
    ASSERT_GE(lines.size(), 5u);
    EXPECT_EQ(lines[0], cli::kCsvHeader);
    EXPECT_EQ(split(lines[1], ',')[0], "a_img.pgm");
    EXPECT_EQ(split(lines[2], ',')[0], "b_img.pgm");
    EXPECT_EQ(split(lines[3], ',')[0], "c_img.pgm");
    const auto avg = split(lines[4], ',');
    EXPECT_EQ(avg[0], "Average");
    for (int col = 2; col < 6; ++col) {
        double sum = 0;
        for (int r = 1; r <= 3; ++r) sum += std::stod(split(lines[static_cast<std::size_t>(r)], ',')[static_cast<std::size_t>(col)]);
        EXPECT_NEAR(std::stod(avg[static_cast<std::size_t>(col)]), sum / 3.0, 1e-9);
    }
    EXPECT_NE(csv.find("technique,capacity_bytes,cover_size,bpb,psnr_db"), std::string::npos);
    EXPECT_NE(csv.find("Region-Based,16384,512x512,0.5,40.79"), std::string::npos);
    EXPECT_NE(csv.find("SAWT,131072,512x512,1.3,36.62"), std::string::npos);
    EXPECT_NE(csv.find("SADT set1 (measured),256,per-image mean,0.5,"), std::string::npos);

    ASSERT_EQ(run({"bench", corpus.string(), path("bench2.csv").string(), "--mode", "set1"}), cli::kExitOk);
    EXPECT_EQ(slurp(path("bench2.csv")), csv);
}

TEST_F(CliTest, BenchEmptyCorpusFails) {
    fs::create_directories(path("empty"));
    EXPECT_EQ(run({"bench", path("empty").string(), path("x.csv").string()}), cli::kExitError);
    EXPECT_EQ(run({"bench", path("missing").string(), path("x.csv").string()}), cli::kExitError);
}

TEST_F(CliTest, AttackZeroRegionCountsChangedPixels) {
    Image img(128, 128, 50);
    for (int c = 64; c < 96; ++c) img.at(64, c) = 0;  // 32 already zero
    save_pgm(path("in.pgm"), img);
    ASSERT_EQ(run({"attack", path("in.pgm").string(), path("out.pgm").string(), "--kind", "zero-region", "--x",
                   "64", "--y", "64", "--width", "32", "--height", "32"}),
              cli::kExitOk);
    EXPECT_EQ(out_.str(), "changed 992 pixels\n");
    const Image out = load_pgm(path("out.pgm"));
    int diff = 0;
    for (std::size_t i = 0; i < out.size(); ++i) diff += out.pixels[i] != img.pixels[i];
    EXPECT_EQ(diff, 992);
}

TEST_F(CliTest, AttackNoiseIsSeededAndBounded) {
    const std::vector<std::string> base = {"attack", cover_.string(), "", "--kind", "noise", "--x", "8",
                                           "--y", "8", "--width", "40", "--height", "20", "--seed", "99"};
    auto a = base, b = base, c = base;
    a[2] = path("n1.pgm").string();
    b[2] = path("n2.pgm").string();
    c[2] = path("n3.pgm").string();
    c.back() = "100";
    ASSERT_EQ(run(a), cli::kExitOk);
    ASSERT_EQ(run(b), cli::kExitOk);
    ASSERT_EQ(run(c), cli::kExitOk);
    EXPECT_EQ(slurp(path("n1.pgm")), slurp(path("n2.pgm")));
    EXPECT_NE(slurp(path("n1.pgm")), slurp(path("n3.pgm")));

    const Image in = load_pgm(cover_);
    const Image out = load_pgm(path("n1.pgm"));
    for (int r = 0; r < 96; ++r)
        for (int col = 0; col < 96; ++col) {
            const int d = int(out.at(r, col)) - int(in.at(r, col));
            const bool inside = r >= 8 && r < 28 && col >= 8 && col < 48;
            if (!inside) {
                EXPECT_EQ(d, 0);
            }
            EXPECT_LE(std::abs(d), 8);
        }
}

TEST_F(CliTest, AttackEmptyRegionAndBounds) {
    ASSERT_EQ(run({"attack", cover_.string(), path("same.pgm").string(), "--x", "10", "--y", "10", "--width",
                   "0", "--height", "5"}),
              cli::kExitOk);
    EXPECT_EQ(load_pgm(path("same.pgm")), load_pgm(cover_));
    EXPECT_EQ(run({"attack", cover_.string(), path("bad.pgm").string(), "--x", "80", "--y", "0", "--width",
                   "32", "--height", "4"}),
              cli::kExitError);
    EXPECT_FALSE(fs::exists(path("bad.pgm")));
}

TEST_F(CliTest, ParseErrors) {
    EXPECT_EQ(run({"--help"}), cli::kExitOk);
    EXPECT_EQ(run({}), cli::kExitError);
    EXPECT_EQ(run({"embed", cover_.string(), path("o.pgm").string(), "--mode", "set3"}), cli::kExitError);
    EXPECT_EQ(run({"verify", cover_.string(), "--threshold", "2"}), cli::kExitError);
    // 3 positions cannot hold 4 bits per band
    EXPECT_EQ(run({"embed", cover_.string(), path("o.pgm").string(), "--mode", "set1set2", "--max-lsb", "3"}),
              cli::kExitError);
}

TEST(FormatReal, ShortestRoundTrip) {
    EXPECT_EQ(cli::format_real(0.0), "0");
    EXPECT_EQ(cli::format_real(12.5), "12.5");
    EXPECT_EQ(cli::format_real(kInfinitePsnr), "inf");
    EXPECT_EQ(std::stod(cli::format_real(0.1 + 0.2)), 0.1 + 0.2);
}

TEST(Baselines, FixedRows) {
    const auto& table = cli::baselines();
    ASSERT_EQ(table.size(), 7u);
    EXPECT_STREQ(table[0].technique, "Li's method");
    EXPECT_EQ(table[0].capacityBytes, 1089);
    EXPECT_DOUBLE_EQ(table[2].psnrDb, 56.63);
    EXPECT_DOUBLE_EQ(table[6].bpB, 1.3);
}
