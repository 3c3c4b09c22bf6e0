// Tables of non-trivial zero ordinates: computed from sign changes of Hardy's Z,
// or read from a text file (one ordinate per line, '#' comments).
#pragma once

#include <string>
#include <vector>

namespace weil {

struct ZeroTable {
  enum class Source { computed, ingested };

  std::vector<double> ordinates;  // strictly increasing, positive
  double height_bound = 0.0;
  double precision = 1e-6;        // absolute error per ordinate
  Source source = Source::computed;
  std::string path;               // for ingested tables
  long predicted_count = -1;      // round(theta(T)/pi + 1), computed tables only

  std::size_t size() const { return ordinates.size(); }
  ZeroTable below(double T) const;  // entries <= T, height_bound T
};

// precision may be as fine as 1e-13; T <= 120
ZeroTable find_zeros(double T, double precision = 1e-12, double step = 0.05);
ZeroTable load_zeros(const std::string& path);
void save_zeros(const ZeroTable& table, const std::string& path);

// Riemann-von Mangoldt main term theta(T)/pi + 1
double zero_count_estimate(double T);

}  // namespace weil
