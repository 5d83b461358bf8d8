#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <cmath>
#include <filesystem>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace racer {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Quat = Eigen::Quaterniond;

inline constexpr double kPi = 3.14159265358979323846;

/// Thrown on contract violations (bad inputs, malformed files, divergence).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double clamp(double x, double lo, double hi) {
  return x < lo ? lo : (x > hi ? hi : x);
}

inline bool finite(double x) { return std::isfinite(x); }

inline bool finite(const Vec3& v) {
  return finite(v.x()) && finite(v.y()) && finite(v.z());
}

inline bool finite(const Quat& q) {
  return finite(q.w()) && finite(q.x()) && finite(q.y()) && finite(q.z());
}

inline double wrap_angle(double a) {
  a = std::fmod(a + kPi, 2.0 * kPi);
  if (a < 0) a += 2.0 * kPi;
  return a - kPi;
}

// Writes `content` to `path` atomically (temp file + rename), creating parent
// directories as needed.
void write_file_atomic(const std::filesystem::path& path,
                       const void* data, size_t size);
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

std::string read_file(const std::filesystem::path& path);

// Fixed-format float for reproducible CSV output.
std::string fmt_g(double v);

// Minimal CSV emitter with deterministic formatting.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> columns);
  void row(const std::vector<std::string>& cells);
  const std::string& str() const { return buf_; }
  void save(const std::filesystem::path& path) const;

 private:
  size_t ncols_;
  std::string buf_;
};

// Deterministic parallel map: runs fn(i) for i in [0, n). Work is split into
// a fixed number of chunks so results never depend on the thread count.
void parallel_for(size_t n, const std::function<void(size_t)>& fn,
                  int n_threads);

int default_threads();

}  // namespace racer
