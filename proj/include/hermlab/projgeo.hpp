#pragma once

// Points of P^1 and P^3 and lines of P^3 over a finite field.

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hermlab/gf.hpp"

namespace hermlab::projgeo {

using gf::Elem;
using gf::Field;

/// Canonical representative of a point of P^{N-1}: the first nonzero
/// coordinate is 1. Ordering is lexicographic in the serialized elements.
template <std::size_t N>
struct Point {
  std::array<Elem, N> c{};

  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;
};

using ProjPoint = Point<4>;
using P1Point = Point<2>;
using Vec4 = std::array<Elem, 4>;

/// Throws std::invalid_argument for the zero vector.
template <std::size_t N>
Point<N> normalize(const Field& f, std::array<Elem, N> raw) {
  std::size_t i = 0;
  while (i < N && raw[i] == 0) ++i;
  if (i == N) throw std::invalid_argument("zero vector has no projective point");
  const Elem s = f.inv(raw[i]);
  Point<N> p;
  for (std::size_t k = 0; k < N; ++k) p.c[k] = f.mul(raw[k], s);
  return p;
}

/// All points of P^n(F), n in {1, 3}, in lexicographic order.
std::vector<ProjPoint> enumerate_p3(const Field& f);
std::vector<P1Point> enumerate_p1(const Field& f);
/// (|F|^{n+1} - 1)/(|F| - 1).
std::uint64_t projective_count(std::uint64_t field_order, unsigned n);

/// A line of P^3 as a 4x2 frame in reduced column echelon form
/// (row-major, entry (i, j) at g[2*i + j]).
struct LineFrame {
  std::array<Elem, 8> g{};

  Elem at(std::size_t i, std::size_t j) const { return g[2 * i + j]; }

  friend auto operator<=>(const LineFrame&, const LineFrame&) = default;
  friend bool operator==(const LineFrame&, const LineFrame&) = default;
};

/// Canonical frame of the column space of a 4x2 matrix (row-major).
/// Throws std::invalid_argument when the rank is below 2.
LineFrame canonical_line(const Field& f, const std::array<Elem, 8>& raw);

/// Line through two distinct points.
LineFrame line_through(const Field& f, const Vec4& a, const Vec4& b);

/// The q'^2+1 rational points G*(s,t) for (s:t) in P^1(F), sorted.
std::vector<ProjPoint> line_points(const Field& f, const LineFrame& line);

bool line_contains(const Field& f, const LineFrame& line, const ProjPoint& p);

struct PointHash {
  std::size_t operator()(const ProjPoint& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.c) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

struct LineHash {
  std::size_t operator()(const LineFrame& l) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : l.g) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace hermlab::projgeo
