#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>

#include "bq/error.hpp"

namespace bq {

// w + x i + y j + z k with integer coefficients; i^2 = j^2 = k^2 = -1, ij = k.
struct Quaternion {
  std::int64_t w = 0, x = 0, y = 0, z = 0;

  static constexpr Quaternion one() noexcept { return {1, 0, 0, 0}; }
  static constexpr Quaternion i() noexcept { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() noexcept { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() noexcept { return {0, 0, 0, 1}; }

  constexpr bool is_zero() const noexcept { return w == 0 && x == 0 && y == 0 && z == 0; }

  constexpr std::array<std::int64_t, 4> coords() const noexcept { return {w, x, y, z}; }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;

  friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) noexcept {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) noexcept {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Quaternion operator-(const Quaternion& a) noexcept { return {-a.w, -a.x, -a.y, -a.z}; }

  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) noexcept {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend constexpr Quaternion operator*(std::int64_t c, const Quaternion& q) noexcept {
    return {c * q.w, c * q.x, c * q.y, c * q.z};
  }

  Quaternion& operator+=(const Quaternion& o) noexcept { return *this = *this + o; }
  Quaternion& operator-=(const Quaternion& o) noexcept { return *this = *this - o; }

  constexpr Quaternion conjugate() const noexcept { return {w, -x, -y, -z}; }
};

inline constexpr std::int64_t norm(const Quaternion& q) noexcept {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline constexpr std::int64_t mod_p(std::int64_t v, std::int64_t p) noexcept {
  auto r = v % p;
  return r < 0 ? r + p : r;
}

// Coefficients reduced into 0..p-1.
inline constexpr Quaternion reduce_mod_p(const Quaternion& q, std::int64_t p) noexcept {
  return {mod_p(q.w, p), mod_p(q.x, p), mod_p(q.y, p), mod_p(q.z, p)};
}

inline bool is_prime(std::int64_t p) noexcept {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// "w + x i + y j + z k", zero terms elided, unit coefficients elided on i, j, k.
inline std::string format_quaternion(const Quaternion& q) {
  static constexpr const char* units[] = {"", "i", "j", "k"};
  const auto c = q.coords();
  std::string out;
  for (int u = 0; u < 4; ++u) {
    auto v = c[static_cast<std::size_t>(u)];
    if (v == 0) continue;
    const bool neg = v < 0;
    const auto mag = neg ? -v : v;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (u == 0)
      out += std::to_string(mag);
    else
      out += (mag == 1 ? std::string() : std::to_string(mag) + " ") + units[u];
  }
  return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << format_quaternion(q); }

} // namespace bq
