#pragma once

#include <cstdint>
#include <istream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ncvif/data.hpp"

namespace ncvif {

// The 20-observation Belsley data set: columns y, X1 (ones), X2, X3, X4.
DataMatrix belsley();

// Strict CSV: header of unique names, then rows of decimal numerals.
DataMatrix load_csv(std::istream& in);
DataMatrix load_csv_text(std::string_view text);
DataMatrix load_csv_file(const std::string& path);

// Canonical serialization: shortest round-trip decimal per value, '\n' line ends.
std::string to_csv(const DataMatrix& data);

// Shortest decimal string that parses back to exactly `value`.
std::string format_shortest(double value);

struct GeneratorSpec {
  std::size_t n = 0;
  double mean = 0.0;
  double variance = 1.0;
  std::uint64_t seed = 0;
};

// Standard normal deviates from a seeded std::mt19937_64 via Box–Muller.
// Each pair of 64-bit draws (a, b) gives u1 = ((a >> 11) + 1)·2⁻⁵³ in (0, 1]
// and u2 = (b >> 11)·2⁻⁵³ in [0, 1); the generator emits
// √(−2 ln u1)·cos(2π u2) and then √(−2 ln u1)·sin(2π u2).
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}
  double next();
  double next(double mean, double sd) { return mean + sd * next(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

std::vector<double> generate_normal_column(const GeneratorSpec& spec);

// splitmix64 finalizer applied to seed + (index + 1)·0x9E3779B97F4A7C15.
std::uint64_t child_seed(std::uint64_t master_seed, std::uint64_t index);

}  // namespace ncvif
