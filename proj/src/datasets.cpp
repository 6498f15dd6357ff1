#include "ncvif/datasets.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "ncvif/errors.hpp"

namespace ncvif {

DataMatrix belsley() {
  return DataMatrix(
      {"y", "X1", "X2", "X3", "X4"},
      {
          {2.69385, 2.69402, 2.70052, 2.68559, 2.7072, 2.6955, 2.70417, 2.69699, 2.69327, 2.68999,
           2.70003, 2.702, 2.70938, 2.70094, 2.70536, 2.70754, 2.69519, 2.7017, 2.70451, 2.69532},
          std::vector<double>(20, 1.0),
          {0.996926, 0.997091, 0.9973, 0.997813, 0.997898, 0.99814, 0.998556, 0.998737, 0.999414, 0.999678,
           0.999926, 0.999995, 1.00063, 1.00095, 1.00118, 1.00177, 1.00231, 1.00306, 1.00394, 1.00469},
          {1.00006, 0.998779, 1.00068, 1.00242, 1.00065, 1.0005, 0.999596, 1.00262, 1.00321, 1.0013,
           0.997579, 0.998597, 0.995316, 0.995966, 0.997125, 0.998951, 1.00102, 1.00186, 1.00353, 1.00021},
          {8.883976, 6.432483, -1.612356, 1.781762, 2.16682, 4.045509, 4.858077, 4.9045, 8.631162, -0.4976853,
           6.828907, 8.999921, 7.080689, 1.193665, 1.483312, -1.053813, -0.5860236, -1.371546, -2.445995, 5.731981},
      });
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string location(std::size_t row, std::size_t col) {
  return "row " + std::to_string(row) + ", column " + std::to_string(col);
}

}  // namespace

DataMatrix load_csv(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw Error(ErrorKind::ParseError, "empty input, expected a header row");

  std::vector<std::string> names;
  for (auto field : split_fields(lines.front())) {
    if (field.empty()) throw Error(ErrorKind::ParseError, "empty header name at " + location(1, names.size() + 1));
    names.emplace_back(field);
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw Error(ErrorKind::DuplicateHeader, "header '" + names[i] + "' appears twice");

  std::vector<std::vector<double>> columns(names.size());
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto fields = split_fields(lines[r]);
    if (fields.size() != names.size()) {
      throw Error(ErrorKind::RaggedRow, "row " + std::to_string(r + 1) + " has " + std::to_string(fields.size()) +
                                            " fields, header has " + std::to_string(names.size()));
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      const auto f = fields[c];
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
      if (f.empty() || ec != std::errc() || ptr != f.data() + f.size()) {
        throw Error(ErrorKind::ParseError, "cannot parse '" + std::string(f) + "' at " + location(r + 1, c + 1));
      }
      if (!std::isfinite(value)) {
        throw Error(ErrorKind::NonFiniteValue, "non-finite value '" + std::string(f) + "' at " + location(r + 1, c + 1));
      }
      columns[c].push_back(value);
    }
  }
  if (lines.size() < 3) throw Error(ErrorKind::TooFewObservations, "need at least 2 data rows");
  return DataMatrix(std::move(names), std::move(columns));
}

DataMatrix load_csv_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_csv(in);
}

DataMatrix load_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  return load_csv(in);
}

std::string format_shortest(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string to_csv(const DataMatrix& data) {
  std::string out;
  const auto& names = data.column_names();
  for (std::size_t c = 0; c < names.size(); ++c) {
    if (c) out += ',';
    out += names[c];
  }
  out += '\n';
  for (std::size_t r = 0; r < data.n(); ++r) {
    for (std::size_t c = 0; c < names.size(); ++c) {
      if (c) out += ',';
      out += format_shortest(data.column(c)[r]);
    }
    out += '\n';
  }
  return out;
}

double NormalStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  constexpr double kScale = 0x1.0p-53;
  const double u1 = static_cast<double>((engine_() >> 11) + 1) * kScale;
  const double u2 = static_cast<double>(engine_() >> 11) * kScale;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::vector<double> generate_normal_column(const GeneratorSpec& spec) {
  if (spec.n < 2) throw Error(ErrorKind::InvalidArgument, "generator needs n >= 2");
  if (!(spec.variance > 0.0)) throw Error(ErrorKind::InvalidArgument, "generator variance must be positive");
  NormalStream stream(spec.seed);
  const double sd = std::sqrt(spec.variance);
  std::vector<double> out(spec.n);
  for (auto& v : out) v = stream.next(spec.mean, sd);
  return out;
}

std::uint64_t child_seed(std::uint64_t master_seed, std::uint64_t index) {
  std::uint64_t z = master_seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace ncvif
