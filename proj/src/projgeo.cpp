#include "hermlab/projgeo.hpp"

#include <algorithm>
#include <stdexcept>

#include "hermlab/linalg.hpp"

namespace hermlab::projgeo {

std::uint64_t projective_count(std::uint64_t n, unsigned dim) {
  std::uint64_t s = 0, pw = 1;
  for (unsigned i = 0; i <= dim; ++i) {
    s += pw;
    pw *= n;
  }
  return s;
}

std::vector<ProjPoint> enumerate_p3(const Field& f) {
  const Elem n = f.order();
  std::vector<ProjPoint> out;
  out.reserve(projective_count(n, 3));
  // Leading coordinate 1 at position i, arbitrary after it.
  for (int lead = 0; lead < 4; ++lead) {
    const int free = 3 - lead;
    std::uint64_t total = 1;
    for (int k = 0; k < free; ++k) total *= n;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      ProjPoint p;
      p.c[lead] = 1;
      std::uint64_t v = idx;
      for (int k = 3; k > lead; --k) {
        p.c[k] = static_cast<Elem>(v % n);
        v /= n;
      }
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<P1Point> enumerate_p1(const Field& f) {
  std::vector<P1Point> out;
  out.push_back(P1Point{{0, 1}});
  for (Elem t = 0; t < f.order(); ++t) out.push_back(P1Point{{1, t}});
  std::sort(out.begin(), out.end());
  return out;
}

LineFrame canonical_line(const Field& f, const std::array<Elem, 8>& raw) {
  linalg::Matrix m(2, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j) m.at(j, i) = raw[2 * i + j];
  if (linalg::rref(f, m).size() != 2) throw std::invalid_argument("line frame has rank below 2");
  LineFrame l;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j) l.g[2 * i + j] = m.at(j, i);
  return l;
}

LineFrame line_through(const Field& f, const Vec4& a, const Vec4& b) {
  std::array<Elem, 8> raw{};
  for (std::size_t i = 0; i < 4; ++i) {
    raw[2 * i] = a[i];
    raw[2 * i + 1] = b[i];
  }
  return canonical_line(f, raw);
}

std::vector<ProjPoint> line_points(const Field& f, const LineFrame& line) {
  std::vector<ProjPoint> out;
  for (const auto& st : enumerate_p1(f)) {
    Vec4 v{};
    for (std::size_t i = 0; i < 4; ++i)
      v[i] = f.add(f.mul(line.at(i, 0), st.c[0]), f.mul(line.at(i, 1), st.c[1]));
    out.push_back(normalize(f, v));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::invalid_argument("rank-deficient line frame");
  return out;
}

bool line_contains(const Field& f, const LineFrame& line, const ProjPoint& p) {
  linalg::Matrix m(3, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    m.at(0, i) = line.at(i, 0);
    m.at(1, i) = line.at(i, 1);
    m.at(2, i) = p.c[i];
  }
  return linalg::rank(f, m) == 2;
}

}  // namespace hermlab::projgeo
