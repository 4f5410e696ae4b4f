#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "fockport/error.hpp"
#include "fockport/grid_io.hpp"

using namespace fockport;

namespace {

FidelityGrid sample_grid() {
  FidelityGrid g;
  g.total = 4;
  g.beta_axis = {0.5, 1.0, 2.0};
  g.twice_m_axis = {0, 1};
  g.values = {0.0, 0.25, 1.2, std::nan(""), std::nan(""), std::nan("")};
  return g;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("beta and m axes") {
  const auto b = interior_beta_axis(101);
  CHECK(b.size() == 101);
  CHECK(b.front() > 0.0);
  CHECK(b.back() < std::numbers::pi);
  CHECK(b[50] == std::numbers::pi / 2);
  CHECK_THROWS_AS(interior_beta_axis(1), Error);

  CHECK(twice_m_range(0, 100) == std::vector<int>(
                                     [] { std::vector<int> v; for (int i = 0; i <= 100; i += 2) v.push_back(i); return v; }()));
  CHECK(twice_m_range(-3, 3, 3) == std::vector<int>{-3, 0, 3});
  CHECK_THROWS_AS(twice_m_range(2, 0), Error);
}

TEST_CASE("CSV layout") {
  const auto csv = grid_to_csv(sample_grid());
  CHECK(csv ==
        "beta,m,value\n"
        "0.5,0,0\n"
        "1,0,0.25\n"
        "2,0,1.2\n"
        "0.5,0.5,NaN\n"
        "1,0.5,NaN\n"
        "2,0.5,NaN\n");
  FidelityGrid g = sample_grid();
  g.values[1] = 0.1;
  CHECK(grid_to_csv(g).find("1,0,0.10000000000000001\n") != std::string::npos);
}

TEST_CASE("PGM rendering") {
  const auto pgm = grid_to_pgm(sample_grid());
  const std::string header = "P5\n3 2\n255\n";
  REQUIRE(pgm.size() == header.size() + 6);
  CHECK(pgm.substr(0, header.size()) == header);
  const auto px = [&](int i) { return static_cast<unsigned char>(pgm[header.size() + i]); };
  CHECK(px(0) == 0);
  CHECK(px(1) == 64);   // round(255 * 0.25)
  CHECK(px(2) == 255);  // clamped
  CHECK(px(3) == 0);    // invalid cell

  FidelityGrid phase = sample_grid();
  phase.quantity = GridQuantity::ArgmaxPhase;
  phase.values = {std::numbers::pi / 2, std::numbers::pi / 4, 0.0, 0.0, 0.0, 3.0};
  const auto p2 = grid_to_pgm(phase);
  CHECK(static_cast<unsigned char>(p2[header.size()]) == 255);
  CHECK(static_cast<unsigned char>(p2[header.size() + 1]) == 128);
  CHECK(static_cast<unsigned char>(p2[header.size() + 5]) == 255);
}

TEST_CASE("atomic write and output directory override") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "fockport_grid_io_test";
  fs::remove_all(dir);
  write_file_atomic(dir / "a.csv", "hello\n");
  CHECK(slurp(dir / "a.csv") == "hello\n");
  write_file_atomic(dir / "a.csv", "replaced\n");
  CHECK(slurp(dir / "a.csv") == "replaced\n");
  for (const auto& entry : fs::directory_iterator(dir)) {
    CHECK(entry.path().filename() == "a.csv");
  }

  ::setenv("FOCKPORT_OUTPUT_DIR", dir.c_str(), 1);
  CHECK(resolve_output_path("x.pgm") == dir / "x.pgm");
  CHECK(resolve_output_path("/abs/x.pgm") == fs::path("/abs/x.pgm"));
  ::unsetenv("FOCKPORT_OUTPUT_DIR");
  CHECK(resolve_output_path("x.pgm") == fs::path("x.pgm"));

  CHECK_THROWS_AS(write_file_atomic("/proc/fockport/nope.csv", "x"), Error);
  fs::remove_all(dir);
}

TEST_CASE("coefficient CSV") {
  CHECK(coeffs_to_csv({{1.0, 0.0}, {0.0, -0.5}}) ==
        "index,real,imag\n0,1,0\n1,0,-0.5\n");
}
