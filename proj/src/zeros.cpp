#include "weil/zeros.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "weil/error.hpp"
#include "weil/special_functions.hpp"

namespace weil {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

// sign changes of Z on [a, b) at the given step, refined by bisection
std::vector<double> scan(double a, double b, double step, double precision) {
  std::vector<double> out;
  double t0 = a, z0 = hardy_Z(a);
  for (long j = 1;; ++j) {
    double t1 = std::min(a + step * double(j), b);
    double z1 = hardy_Z(t1);
    if ((z0 < 0) != (z1 < 0) && z0 != 0.0) {
      double lo = t0, hi = t1, zlo = z0;
      while (hi - lo > precision) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double zm = hardy_Z(mid);
        if ((zm < 0) == (zlo < 0)) {
          lo = mid;
          zlo = zm;
        } else {
          hi = mid;
        }
      }
      out.push_back(0.5 * (lo + hi));
    }
    if (t1 >= b) break;
    t0 = t1;
    z0 = z1;
  }
  return out;
}

}  // namespace

double zero_count_estimate(double T) { return theta(T) / std::numbers::pi + 1.0; }

ZeroTable ZeroTable::below(double T) const {
  ZeroTable z = *this;
  z.ordinates.clear();
  for (double g : ordinates)
    if (g <= T) z.ordinates.push_back(g);
  z.height_bound = std::min(T, height_bound);
  return z;
}

ZeroTable find_zeros(double T, double precision, double step) {
  if (!(T >= 0) || T > 120) fail(ErrorKind::config, "find_zeros supports 0 <= T <= 120");
  if (!(precision >= 1e-13)) fail(ErrorKind::config, "zero precision must be >= 1e-13");
  if (!(step > 0)) fail(ErrorKind::config, "scan step must be positive");
  ZeroTable z;
  z.height_bound = T;
  z.precision = precision;
  z.source = ZeroTable::Source::computed;
  // the first zero is above 14; splitting on grid multiples keeps results
  // independent of the chunking
  const int chunks = 4;
  long nsteps = long(std::ceil(T / step));
  std::vector<std::future<std::vector<double>>> parts;
  for (int c = 0; c < chunks; ++c) {
    long j0 = nsteps * c / chunks, j1 = nsteps * (c + 1) / chunks;
    double a = step * double(j0), b = std::min(T, step * double(j1));
    if (!(a < b)) continue;
    parts.push_back(std::async(std::launch::async, scan, a, b, step, precision));
  }
  for (auto& p : parts)
    for (double g : p.get()) z.ordinates.push_back(g);
  z.predicted_count = std::lround(zero_count_estimate(T));
  if (T < 14) z.predicted_count = 0;  // the estimate is meaningless below the first zero
  long diff = long(z.ordinates.size()) - z.predicted_count;
  if (std::labs(diff) > 1)
    fail(ErrorKind::count_mismatch, "found " + std::to_string(z.ordinates.size()) + " zeros below " +
                                        std::to_string(T) + " but the counting estimate predicts " +
                                        std::to_string(z.predicted_count) + "; reduce the scan step");
  return z;
}

ZeroTable load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::config, "cannot open zero table " + path);
  ZeroTable z;
  z.source = ZeroTable::Source::ingested;
  z.path = path;
  double declared_height = -1, declared_precision = -1;
  int min_decimals = 1000;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    std::string body = line;
    auto hash = body.find('#');
    if (hash != std::string::npos) {
      std::istringstream hs(body.substr(hash + 1));
      std::string key;
      double v;
      if (hs >> key >> v) {
        if (key == "height_bound") declared_height = v;
        if (key == "precision") declared_precision = v;
      }
      body = body.substr(0, hash);
    }
    body = trim(body);
    if (body.empty()) continue;
    double g;
    if (!parse_double(body, g) || !std::isfinite(g))
      fail(ErrorKind::parse_error, path + ":" + std::to_string(lineno) + ": not a number: '" + body + "'");
    if (!(g > 0)) fail(ErrorKind::parse_error, path + ":" + std::to_string(lineno) + ": ordinate must be positive");
    if (!z.ordinates.empty() && !(g > z.ordinates.back()))
      fail(ErrorKind::order_violation, path + ":" + std::to_string(lineno) + ": ordinates must be strictly increasing");
    auto dot = body.find('.');
    int dec = (dot == std::string::npos) ? 0 : int(body.find_first_of("eE") == std::string::npos
                                                       ? body.size() - dot - 1
                                                       : body.find_first_of("eE") - dot - 1);
    min_decimals = std::min(min_decimals, dec);
    z.ordinates.push_back(g);
  }
  double top = z.ordinates.empty() ? 0.0 : z.ordinates.back();
  if (declared_height >= 0) {
    if (top > declared_height) fail(ErrorKind::parse_error, path + ": ordinate above the declared height bound");
    z.height_bound = declared_height;
  } else {
    z.height_bound = top;
  }
  if (declared_precision > 0)
    z.precision = declared_precision;
  else if (!z.ordinates.empty())
    z.precision = std::pow(10.0, -min_decimals);
  return z;
}

void save_zeros(const ZeroTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::config, "cannot write zero table " + path);
  out << "# zeros of zeta on the critical line, from sign changes of Hardy's Z\n";
  out << "# height_bound " << std::setprecision(17) << table.height_bound << "\n";
  out << "# precision " << table.precision << "\n";
  for (double g : table.ordinates) out << std::setprecision(16) << g << "\n";
}

}  // namespace weil
