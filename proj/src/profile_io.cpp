#include "emdenlab/profile_io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace emdenlab {

namespace fs = std::filesystem;

void write_profile_csv(const fs::path& path, const RadialProfile& f) {
  if (!f.grid) throw std::invalid_argument("write_profile_csv: profile has no grid");
  const Grid& g = *f.grid;
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("write_profile_csv: cannot open " + tmp.string());
    char line[256];
    std::snprintf(line, sizeof line, "# head=%.17g tail=%.17g\n", f.head_exponent,
                  f.tail_exponent);
    out << line << "s,r,value,derivative\n";
    for (Eigen::Index i = 0; i < g.count; ++i) {
      std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", g.s[i], g.r[i], f.values[i],
                    f.derivative[i]);
      out << line;
    }
    if (!out) throw std::runtime_error("write_profile_csv: write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

RadialProfile read_profile_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_profile_csv: cannot open " + path.string());

  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_profile_csv: empty file");
  double head = 0, tail = 0;
  if (std::sscanf(line.c_str(), "# head=%lf tail=%lf", &head, &tail) != 2)
    throw std::runtime_error("read_profile_csv: missing exponent header");
  if (!std::getline(in, line) || line != "s,r,value,derivative")
    throw std::runtime_error("read_profile_csv: missing column header");

  std::vector<double> s, value, derivative;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double si, ri, vi, di;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &si, &ri, &vi, &di) != 4)
      throw std::runtime_error("read_profile_csv: malformed row in " + path.string());
    s.push_back(si);
    value.push_back(vi);
    derivative.push_back(di);
  }
  const Eigen::Index n = Eigen::Index(s.size());
  if (n < 64) throw std::runtime_error("read_profile_csv: too few rows in " + path.string());

  GridPtr grid = build_grid(s.front(), s.back(), n);
  for (Eigen::Index i = 0; i < n; ++i)
    if (std::abs(s[size_t(i)] - grid->s[i]) > 1e-12 * std::max(1.0, std::abs(grid->s[i])))
      throw std::runtime_error("read_profile_csv: nonuniform s column in " + path.string());

  Eigen::ArrayXd v = Eigen::Map<Eigen::ArrayXd>(value.data(), n);
  Eigen::ArrayXd d = Eigen::Map<Eigen::ArrayXd>(derivative.data(), n);
  return make_profile(grid, std::move(v), std::move(d), head, tail);
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

fs::path cache_root(const std::string& explicit_dir) {
  if (!explicit_dir.empty()) return explicit_dir;
  if (const char* env = std::getenv("EMDENLAB_CACHE_DIR"); env && *env) return env;
  return ".emdenlab_cache";
}

RadialProfile cached_profile(const fs::path& dir, const std::string& key,
                             const std::function<RadialProfile()>& build) {
  const fs::path file = dir / (fnv1a_hex(key) + ".csv");
  if (fs::exists(file)) {
    try {
      return read_profile_csv(file);
    } catch (const std::exception&) {
      // fall through and rebuild
    }
  }
  RadialProfile fresh = build();
  fs::create_directories(dir);
  write_profile_csv(file, fresh);
  return fresh;
}

}  // namespace emdenlab
