#include "hermlab/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "hermlab/parallel.hpp"

namespace hermlab::schemes {

// ---------------------------------------------------------------------------
// Scheme

bool Scheme::commutative() const {
  for (unsigned i = 0; i <= d_; ++i)
    for (unsigned j = i + 1; j <= d_; ++j)
      for (unsigned k = 0; k <= d_; ++k)
        if (p(i, j, k) != p(j, i, k)) return false;
  return true;
}

bool Scheme::symmetric() const {
  for (unsigned i = 0; i <= d_; ++i)
    if (t_[i] != i) return false;
  return true;
}

std::vector<std::string> Scheme::axiom_violations() const {
  std::vector<std::string> bad;
  if (k_[0] != 1) bad.push_back("k_0 != 1");
  if (std::accumulate(k_.begin(), k_.end(), std::uint64_t{0}) != n_) bad.push_back("valencies do not sum to |V|");
  for (unsigned i = 0; i <= d_; ++i)
    for (unsigned k = 0; k <= d_; ++k) {
      std::int64_t sum = 0;
      for (unsigned j = 0; j <= d_; ++j) sum += p(i, j, k);
      if (sum != static_cast<std::int64_t>(k_[i]))
        bad.push_back("sum_j p^" + std::to_string(k) + "_{" + std::to_string(i) + "j} != k_" + std::to_string(i));
    }
  for (unsigned i = 0; i <= d_; ++i)
    for (unsigned j = 0; j <= d_; ++j) {
      const std::int64_t want = j == t_[i] ? static_cast<std::int64_t>(k_[i]) : 0;
      if (p(i, j, 0) != want)
        bad.push_back("p^0_{" + std::to_string(i) + "," + std::to_string(j) + "} != k_i [j = i']");
    }
  return bad;
}

Scheme Scheme::from_relations(RelationMatrix rel, std::vector<std::int64_t> labels,
                              const std::vector<std::size_t>& base_rows, unsigned jobs) {
  const std::size_t n = rel.n;
  if (n == 0) throw NotASchemeError("empty vertex set");
  unsigned d = 0;
  for (auto v : rel.r) d = std::max<unsigned>(d, v);
  const unsigned D = d + 1;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if ((rel(x, y) == 0) != (x == y)) throw NotASchemeError("class 0 must be exactly the diagonal");

  Scheme s;
  s.n_ = n;
  s.d_ = d;
  s.k_.assign(D, 0);
  for (std::size_t y = 0; y < n; ++y) s.k_[rel(0, y)]++;
  for (unsigned i = 0; i < D; ++i)
    if (s.k_[i] == 0) throw NotASchemeError("class " + std::to_string(i) + " is empty in row 0");
  for (std::size_t x = 1; x < n; ++x) {
    std::vector<std::uint64_t> k(D, 0);
    for (std::size_t y = 0; y < n; ++y) k[rel(x, y)]++;
    if (k != s.k_) throw NotASchemeError("valencies differ between rows 0 and " + std::to_string(x));
  }
  s.t_.assign(D, D);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto& t = s.t_[rel(x, y)];
      if (t == D) t = rel(y, x);
      else if (t != rel(y, x)) throw NotASchemeError("transpose of a class is not a single class");
    }

  auto row_counts = [&](std::size_t x, std::size_t y, std::vector<std::int64_t>& cnt) {
    std::fill(cnt.begin(), cnt.end(), 0);
    const std::uint8_t* rx = rel.r.data() + x * n;
    for (std::size_t z = 0; z < n; ++z) cnt[rx[z] * D + rel(z, y)]++;
  };

  // Reference counts from row base[0].
  std::vector<std::size_t> base = base_rows;
  if (base.empty()) {
    base.resize(n);
    std::iota(base.begin(), base.end(), 0);
  }
  s.p_.assign(D * D * D, 0);
  std::vector<bool> seen(D, false);
  std::vector<std::int64_t> cnt(D * D);
  for (std::size_t y = 0; y < n; ++y) {
    const unsigned k = rel(base[0], y);
    if (seen[k]) continue;
    seen[k] = true;
    row_counts(base[0], y, cnt);
    for (unsigned i = 0; i < D; ++i)
      for (unsigned j = 0; j < D; ++j) s.p_[(i * D + j) * D + k] = cnt[i * D + j];
  }

  std::mutex mu;
  std::string witness;
  parallel_for(
      base.size(), jobs,
      [&](std::size_t bi) {
        const std::size_t x = base[bi];
        std::vector<std::int64_t> c(D * D);
        for (std::size_t y = 0; y < n; ++y) {
          const unsigned k = rel(x, y);
          row_counts(x, y, c);
          for (unsigned i = 0; i < D; ++i)
            for (unsigned j = 0; j < D; ++j)
              if (c[i * D + j] != s.p_[(i * D + j) * D + k]) {
                std::lock_guard<std::mutex> lock(mu);
                if (witness.empty()) {
                  std::ostringstream os;
                  os << "p^" << k << "_{" << i << "," << j << "} is not constant: pair (" << x << "," << y
                     << ") gives " << c[i * D + j] << ", expected " << s.p_[(i * D + j) * D + k];
                  witness = os.str();
                }
                return;
              }
        }
      },
      1);
  if (!witness.empty()) throw NotASchemeError(witness);
  s.labels_ = std::move(labels);
  s.rel_ = std::move(rel);
  return s;
}

Scheme Scheme::from_symmetric_rows(std::size_t n, std::vector<std::int64_t> labels,
                                   const std::map<std::size_t, std::vector<std::uint8_t>>& rows) {
  const auto it0 = rows.find(0);
  if (it0 == rows.end()) throw NotASchemeError("row 0 is required");
  const auto& r0 = it0->second;
  if (r0.size() != n || r0[0] != 0) throw NotASchemeError("row 0 has the wrong shape");
  unsigned d = 0;
  for (auto v : r0) d = std::max<unsigned>(d, v);
  const unsigned D = d + 1;

  Scheme s;
  s.n_ = n;
  s.d_ = d;
  s.k_.assign(D, 0);
  for (auto v : r0) s.k_[v]++;
  for (unsigned i = 0; i < D; ++i)
    if (s.k_[i] == 0) throw NotASchemeError("class " + std::to_string(i) + " is empty in row 0");
  if (s.k_[0] != 1) throw NotASchemeError("class 0 must be exactly the diagonal");
  s.t_.resize(D);
  std::iota(s.t_.begin(), s.t_.end(), 0u);
  s.p_.assign(D * D * D, 0);

  std::vector<bool> seen(D, false);
  std::vector<std::int64_t> cnt(D * D);
  for (const auto& [y, ry] : rows) {
    if (ry.size() != n || ry[y] != 0) throw NotASchemeError("row " + std::to_string(y) + " has the wrong shape");
    std::vector<std::uint64_t> k(D, 0);
    for (auto v : ry) {
      if (v >= D) throw NotASchemeError("row " + std::to_string(y) + " has a class missing from row 0");
      k[v]++;
    }
    if (k != s.k_) throw NotASchemeError("valencies differ between rows 0 and " + std::to_string(y));
    if (ry[0] != r0[y]) throw NotASchemeError("relation is not symmetric at (0," + std::to_string(y) + ")");
    std::fill(cnt.begin(), cnt.end(), 0);
    for (std::size_t z = 0; z < n; ++z) cnt[r0[z] * D + ry[z]]++;
    const unsigned c = r0[y];
    if (!seen[c]) {
      seen[c] = true;
      for (unsigned i = 0; i < D; ++i)
        for (unsigned j = 0; j < D; ++j) s.p_[(i * D + j) * D + c] = cnt[i * D + j];
      continue;
    }
    for (unsigned i = 0; i < D; ++i)
      for (unsigned j = 0; j < D; ++j)
        if (cnt[i * D + j] != s.p_[(i * D + j) * D + c]) {
          std::ostringstream os;
          os << "p^" << c << "_{" << i << "," << j << "} is not constant: pair (0," << y << ") gives "
             << cnt[i * D + j] << ", expected " << s.p_[(i * D + j) * D + c];
          throw NotASchemeError(os.str());
        }
  }
  for (unsigned c = 0; c < D; ++c)
    if (!seen[c]) throw NotASchemeError("no row supplied for class " + std::to_string(c));
  s.labels_ = std::move(labels);
  return s;
}

Scheme scheme_from_values(std::size_t n, const std::vector<std::vector<std::int64_t>>& upper, unsigned jobs) {
  std::set<std::int64_t> values;
  for (const auto& row : upper) values.insert(row.begin(), row.end());
  if (values.size() > 255) throw NotASchemeError("too many classes");
  std::vector<std::int64_t> labels{0};
  std::map<std::int64_t, std::uint8_t> index;
  for (auto v : values) {
    index[v] = static_cast<std::uint8_t>(labels.size());
    labels.push_back(v);
  }
  RelationMatrix rel{n, std::vector<std::uint8_t>(n * n, 0)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const auto c = index.at(upper[x][y - x - 1]);
      rel.r[x * n + y] = c;
      rel.r[y * n + x] = c;
    }
  return Scheme::from_relations(std::move(rel), std::move(labels), {}, jobs);
}

Scheme scheme_from_invariant(std::size_t n, const std::function<std::int64_t(std::size_t, std::size_t)>& invariant,
                             unsigned jobs) {
  std::vector<std::vector<std::int64_t>> upper(n);
  parallel_for(
      n, jobs,
      [&](std::size_t x) {
        upper[x].resize(n - x - 1);
        for (std::size_t y = x + 1; y < n; ++y) upper[x][y - x - 1] = invariant(x, y);
      },
      1);
  return scheme_from_values(n, upper, jobs);
}

namespace {

struct Transversal {
  std::vector<std::vector<std::uint32_t>> t, tinv;
};

Transversal transversal(const std::vector<std::vector<std::uint32_t>>& action) {
  if (action.empty()) throw std::invalid_argument("no generators");
  const std::size_t n = action[0].size();
  if (n > 4096) throw std::invalid_argument("orbital schemes are limited to 4096 vertices");
  Transversal tr;
  tr.t.assign(n, {});
  tr.t[0].resize(n);
  std::iota(tr.t[0].begin(), tr.t[0].end(), 0u);
  std::vector<std::uint32_t> queue{0};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const auto x = queue[h];
    for (const auto& g : action) {
      const auto y = g[x];
      if (!tr.t[y].empty()) continue;
      tr.t[y].resize(n);
      for (std::size_t v = 0; v < n; ++v) tr.t[y][v] = g[tr.t[x][v]];
      queue.push_back(y);
    }
  }
  if (queue.size() != n) throw NotASchemeError("group action is not transitive");
  tr.tinv.assign(n, std::vector<std::uint32_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t v = 0; v < n; ++v) tr.tinv[x][tr.t[x][v]] = static_cast<std::uint32_t>(v);
  return tr;
}

std::size_t find_root(std::vector<std::uint32_t>& parent, std::size_t v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

std::vector<std::vector<std::uint32_t>> suborbits_from(const std::vector<std::vector<std::uint32_t>>& action,
                                                       const Transversal& tr) {
  const std::size_t n = action[0].size();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& g : action) {
      const auto& back = tr.tinv[g[x]];
      const auto& fwd = tr.t[x];
      for (std::size_t v = 0; v < n; ++v) {
        const std::size_t a = find_root(parent, v), b = find_root(parent, back[g[fwd[v]]]);
        if (a != b) parent[std::max(a, b)] = static_cast<std::uint32_t>(std::min(a, b));
      }
    }
  std::map<std::size_t, std::vector<std::uint32_t>> groups;
  for (std::size_t v = 0; v < n; ++v) groups[find_root(parent, v)].push_back(static_cast<std::uint32_t>(v));
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.front() < b.front();
  });
  return out;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> suborbits(const std::vector<std::vector<std::uint32_t>>& action) {
  return suborbits_from(action, transversal(action));
}

Scheme scheme_from_orbitals(const std::vector<std::vector<std::uint32_t>>& action, unsigned jobs) {
  const auto tr = transversal(action);
  const auto subs = suborbits_from(action, tr);
  if (subs.size() > 255) throw NotASchemeError("too many orbitals");
  const std::size_t n = action[0].size();
  std::vector<std::uint8_t> cls(n);
  std::vector<std::int64_t> labels;
  for (std::size_t c = 0; c < subs.size(); ++c) {
    labels.push_back(subs[c].front());
    for (auto v : subs[c]) cls[v] = static_cast<std::uint8_t>(c);
  }
  RelationMatrix rel{n, std::vector<std::uint8_t>(n * n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rel.r[x * n + y] = cls[tr.tinv[x][y]];
  // Orbitals are invariant under a transitive group, so one row determines
  // the structure constants; large orders check a spread of rows only.
  std::vector<std::size_t> base;
  if (n > kFullCheckLimit)
    for (std::size_t k = 0; k < 16; ++k) base.push_back(k * (n - 1) / 15);
  return Scheme::from_relations(std::move(rel), std::move(labels), base, jobs);
}

std::vector<IntMatrix> intersection_matrices(const Scheme& s) {
  const unsigned D = s.classes() + 1;
  std::vector<IntMatrix> out(D, IntMatrix(D, std::vector<std::int64_t>(D)));
  for (unsigned i = 0; i < D; ++i)
    for (unsigned k = 0; k < D; ++k)
      for (unsigned j = 0; j < D; ++j) out[i][k][j] = s.p(i, j, k);
  return out;
}

IntMatrix adjacency_trace_products(const Scheme& s) {
  const unsigned D = s.classes() + 1;
  IntMatrix t(D, std::vector<std::int64_t>(D, 0));
  // Tr(A_l A_j) = |V| (A_l A_j)_0 coefficient = |V| p^0_{lj}.
  for (unsigned l = 0; l < D; ++l)
    for (unsigned j = 0; j < D; ++j) t[l][j] = static_cast<std::int64_t>(s.order()) * s.p(l, j, 0);
  return t;
}

// ---------------------------------------------------------------------------
// Character tables

namespace {

std::vector<std::vector<mpq_class>> rational_nullspace(std::vector<std::vector<mpq_class>> m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const mpq_class inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const mpq_class f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<std::vector<mpq_class>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<mpz_class> to_integer_vector(const std::vector<mpq_class>& v) {
  mpz_class l = 1;
  for (const auto& x : v) l = lcm(l, mpz_class(x.get_den()));
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpq_class y = x * l;
    out.push_back(y.get_num());
    g = gcd(g, y.get_num());
  }
  if (g != 0)
    for (auto& x : out) x /= g;
  return out;
}

template <class T>
std::vector<T> multiply_in(const Scheme& s, const std::vector<T>& a, const std::vector<T>& b, const T& zero) {
  const unsigned D = s.classes() + 1;
  std::vector<T> out(D, zero);
  for (unsigned i = 0; i < D; ++i) {
    if (a[i] == zero) continue;
    for (unsigned j = 0; j < D; ++j) {
      if (b[j] == zero) continue;
      const T ab = a[i] * b[j];
      for (unsigned k = 0; k < D; ++k) {
        const auto c = s.p(i, j, k);
        if (c) out[k] += ab * mpq_class(c);
      }
    }
  }
  return out;
}

struct Cluster {
  std::complex<double> value;
  std::size_t count = 0;
};

std::vector<Cluster> cluster(const std::vector<std::complex<double>>& ev, double tol) {
  std::vector<Cluster> out;
  for (const auto& z : ev) {
    bool placed = false;
    for (auto& c : out)
      if (std::abs(c.value - z) < tol) {
        c.value = (c.value * static_cast<double>(c.count) + z) / static_cast<double>(c.count + 1);
        ++c.count;
        placed = true;
        break;
      }
    if (!placed) out.push_back({z, 1});
  }
  return out;
}

bool near_integer(double x, double tol, long& out) {
  out = std::lround(x);
  return std::abs(x - static_cast<double>(out)) < tol;
}

/// Exact algebraic integer of degree <= 2 near z, inside Q(zeta_N).
std::optional<CycNum> recognize(const std::complex<double>& z, const std::vector<Cluster>& all, unsigned n,
                                double tol) {
  long s = 0, disc = 0, prod = 0;
  auto make = [&](long s2, long dsc) -> std::optional<CycNum> {
    auto root = CycNum::sqrt_of_integer(n, dsc);
    if (!root) return std::nullopt;
    for (int sign : {1, -1}) {
      CycNum c = (CycNum(n, s2) + *root * mpq_class(sign)) * mpq_class(1, 2);
      if (std::abs(c.to_complex() - z) < tol) return c;
    }
    return std::nullopt;
  };
  if (std::abs(z.imag()) > tol) {
    if (!near_integer(2 * z.real(), tol, s)) return std::nullopt;
    const double im2 = -4 * z.imag() * z.imag();
    if (!near_integer(im2, tol * (1 + std::abs(im2)), disc)) return std::nullopt;
    return make(s, disc);
  }
  long r = 0;
  if (near_integer(z.real(), tol, r)) return CycNum(n, r);
  for (const auto& c : all) {
    if (std::abs(c.value.imag()) > tol || std::abs(c.value - z) < tol) continue;
    if (!near_integer(z.real() + c.value.real(), tol, s)) continue;
    const double pr = z.real() * c.value.real();
    if (!near_integer(pr, tol * (1 + std::abs(pr)), prod)) continue;
    disc = s * s - 4 * prod;
    if (disc <= 0) continue;
    if (auto v = make(s, disc)) return v;
  }
  return std::nullopt;
}

bool cyc_less(const CycNum& a, const CycNum& b) {
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

bool rows_less(const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (cyc_less(a[i], b[i])) return true;
    if (cyc_less(b[i], a[i])) return false;
  }
  return false;
}

unsigned minimal_order(const CharTable& t) {
  const unsigned n = t.cyclotomic_order;
  for (unsigned m = 1; m <= n; ++m) {
    if (n % m) continue;
    bool ok = true;
    for (unsigned a = 1; a < n && ok; ++a) {
      if (std::gcd(a, n) != 1 || a % m != 1 % m) continue;
      for (const auto* mat : {&t.P, &t.Q})
        for (const auto& row : *mat)
          for (const auto& x : row)
            if (!(x.galois(a) == x)) {
              ok = false;
              break;
            }
    }
    if (ok) return m;
  }
  return n;
}

}  // namespace

std::vector<CycNum> algebra_multiply(const Scheme& s, const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
  return multiply_in<CycNum>(s, a, b, CycNum(a.at(0).order(), 0));
}

std::vector<CycNum> CharTable::central_character(const std::vector<mpq_class>& w) const {
  std::vector<CycNum> out;
  for (std::size_t i = 0; i < P.size(); ++i) {
    CycNum acc(cyclotomic_order, 0);
    for (std::size_t l = 0; l < w.size(); ++l) acc += P[i][l] * w[l];
    const mpq_class n = rep_degrees[i];
    out.push_back(acc * (1 / (n * n)));
  }
  return out;
}

CharTable character_table(const Scheme& s, unsigned n, std::uint64_t seed) {
  const unsigned D = s.classes() + 1;
  const mpq_class V = s.order();

  // Center of the adjacency algebra: x A_j = A_j x for all j.
  std::vector<std::vector<mpq_class>> eq;
  for (unsigned j = 0; j < D; ++j)
    for (unsigned k = 0; k < D; ++k) {
      std::vector<mpq_class> row(D);
      bool nonzero = false;
      for (unsigned i = 0; i < D; ++i) {
        row[i] = s.p(i, j, k) - s.p(j, i, k);
        nonzero |= row[i] != 0;
      }
      if (nonzero) eq.push_back(std::move(row));
    }
  std::vector<std::vector<mpz_class>> center;
  for (const auto& v : rational_nullspace(eq, D)) center.push_back(to_integer_vector(v));
  const std::size_t r1 = center.size();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-3, 3);
  std::vector<mpq_class> z;
  std::vector<CycNum> eig;
  for (int attempt = 0;; ++attempt) {
    if (attempt == 64) throw RecognitionError("no central element with distinct eigenvalues found");
    z.assign(D, 0);
    for (const auto& b : center) {
      const int c = pick(rng);
      for (unsigned i = 0; i < D; ++i) z[i] += c * mpq_class(b[i]);
    }
    Eigen::MatrixXd L(D, D);
    for (unsigned k = 0; k < D; ++k)
      for (unsigned j = 0; j < D; ++j) {
        double acc = 0;
        for (unsigned i = 0; i < D; ++i) acc += z[i].get_d() * static_cast<double>(s.p(i, j, k));
        L(k, j) = acc;
      }
    Eigen::EigenSolver<Eigen::MatrixXd> es(L, false);
    std::vector<std::complex<double>> ev(es.eigenvalues().begin(), es.eigenvalues().end());
    double scale = 1;
    for (auto& e : ev) scale = std::max(scale, std::abs(e));
    const double tol = 1e-6 * scale;
    const auto clusters = cluster(ev, tol);
    if (clusters.size() != r1) continue;
    eig.clear();
    for (const auto& c : clusters) {
      auto v = recognize(c.value, clusters, n, tol);
      if (!v) throw RecognitionError("eigenvalue " + std::to_string(c.value.real()) + "+" +
                                     std::to_string(c.value.imag()) + "i not found in Q(zeta_" + std::to_string(n) +
                                     ")");
      eig.push_back(*v);
    }
    bool distinct = true;
    for (std::size_t i = 0; i < eig.size() && distinct; ++i)
      for (std::size_t j = i + 1; j < eig.size(); ++j)
        if (eig[i] == eig[j]) distinct = false;
    if (distinct) break;
  }

  // Powers of z, then Lagrange interpolation at the eigenvalues.
  std::vector<std::vector<mpq_class>> zpow{std::vector<mpq_class>(D, 0)};
  zpow[0][0] = 1;
  for (std::size_t m = 1; m < r1; ++m) zpow.push_back(multiply_in<mpq_class>(s, zpow.back(), z, mpq_class(0)));

  CharTable t;
  t.cyclotomic_order = n;
  t.vertices = s.order();
  const CycNum zero(n, 0);
  struct Irr {
    std::vector<CycNum> e;
    std::uint64_t rank, deg, mult;
    std::vector<CycNum> prow, qcol;
  };
  std::vector<Irr> irr;
  for (std::size_t i = 0; i < r1; ++i) {
    std::vector<CycNum> poly{CycNum(n, 1)};
    CycNum denom(n, 1);
    for (std::size_t j = 0; j < r1; ++j) {
      if (j == i) continue;
      std::vector<CycNum> next(poly.size() + 1, zero);
      for (std::size_t m = 0; m < poly.size(); ++m) {
        next[m + 1] += poly[m];
        next[m] -= poly[m] * eig[j];
      }
      poly = std::move(next);
      denom *= eig[i] - eig[j];
    }
    const CycNum inv = denom.inverse();
    std::vector<CycNum> e(D, zero);
    for (std::size_t m = 0; m < poly.size(); ++m) {
      const CycNum c = poly[m] * inv;
      for (unsigned k = 0; k < D; ++k)
        if (zpow[m][k] != 0) e[k] += c * zpow[m][k];
    }

    CycNum n2(n, 0);
    for (unsigned j = 0; j < D; ++j)
      for (unsigned l = 0; l < D; ++l)
        if (s.p(l, j, j)) n2 += e[l] * mpq_class(s.p(l, j, j));
    if (!n2.is_rational() || n2.rational().get_den() != 1 || n2.rational() <= 0)
      throw std::logic_error("dimension of a simple component is not a positive integer");
    const mpz_class n2i = n2.rational().get_num();
    mpz_class deg = sqrt(n2i);
    if (deg * deg != n2i) throw std::logic_error("dimension of a simple component is not a square");
    const CycNum rk = e[0] * V;
    if (!rk.is_rational() || rk.rational().get_den() != 1 || rk.rational() <= 0)
      throw std::logic_error("idempotent rank is not a positive integer");
    const mpz_class rank = rk.rational().get_num();
    if (rank % deg != 0) throw std::logic_error("rank not divisible by the representation degree");
    const mpz_class mult = rank / deg;

    Irr ir{e, rank.get_ui(), deg.get_ui(), mult.get_ui(), {}, {}};
    const mpq_class f = V * mpq_class(deg) / mpq_class(mult);
    for (unsigned j = 0; j < D; ++j) ir.prow.push_back(e[s.transpose(j)] * (f * mpq_class(s.valency(j))));
    for (unsigned l = 0; l < D; ++l) ir.qcol.push_back(e[l] * V);
    irr.push_back(std::move(ir));
  }

  auto principal = [&](const Irr& a) {
    for (unsigned j = 0; j < D; ++j)
      if (!(a.prow[j] == CycNum(n, s.valency(j)))) return false;
    return true;
  };
  std::sort(irr.begin(), irr.end(), [&](const Irr& a, const Irr& b) {
    const bool pa = principal(a), pb = principal(b);
    if (pa != pb) return pa;
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.mult != b.mult) return a.mult < b.mult;
    return rows_less(a.prow, b.prow);
  });

  t.Q.assign(D, std::vector<CycNum>(r1, zero));
  for (std::size_t i = 0; i < r1; ++i) {
    t.P.push_back(irr[i].prow);
    t.idempotents.push_back(irr[i].e);
    t.ranks.push_back(irr[i].rank);
    t.rep_degrees.push_back(irr[i].deg);
    t.multiplicities.push_back(irr[i].mult);
    for (unsigned l = 0; l < D; ++l) t.Q[l][i] = irr[i].qcol[l];
  }
  t.minimal_order = minimal_order(t);
  return t;
}

CharTable character_table_auto(const Scheme& s, unsigned preferred) {
  std::vector<unsigned> orders{preferred};
  for (unsigned n : {4u, 8u, 12u, 24u})
    if (n != preferred) orders.push_back(n);
  std::string last;
  for (unsigned n : orders) {
    try {
      return character_table(s, n);
    } catch (const RecognitionError& e) {
      last = e.what();
    }
  }
  throw RecognitionError("character table not found for any cyclotomic order: " + last);
}

std::vector<std::string> verify_char_table(const Scheme& s, const CharTable& t) {
  std::vector<std::string> bad;
  const unsigned D = s.classes() + 1;
  const std::size_t r1 = t.size();
  const unsigned n = t.cyclotomic_order;
  const CycNum zero(n, 0), one(n, 1);
  std::vector<CycNum> sum(D, zero);
  for (std::size_t i = 0; i < r1; ++i) {
    for (unsigned k = 0; k < D; ++k) sum[k] += t.idempotents[i][k];
    for (std::size_t j = i; j < r1; ++j) {
      const auto prod = algebra_multiply(s, t.idempotents[i], t.idempotents[j]);
      const bool ok = i == j ? prod == t.idempotents[i] : std::all_of(prod.begin(), prod.end(), [&](const CycNum& x) {
        return x.is_zero();
      });
      if (!ok) bad.push_back("E_" + std::to_string(i) + " E_" + std::to_string(j) + " is wrong");
    }
  }
  for (unsigned k = 0; k < D; ++k)
    if (!(sum[k] == (k == 0 ? one : zero))) {
      bad.push_back("sum of idempotents is not the identity");
      break;
    }
  const mpq_class V = s.order();
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < r1; ++j) {
      CycNum acc = zero;
      for (unsigned l = 0; l < D; ++l) acc += t.P[i][l] * t.Q[l][j];
      const CycNum want = i == j ? t.P[i][0] * V : zero;
      if (!(acc == want)) bad.push_back("(PQ)_{" + std::to_string(i) + "," + std::to_string(j) + "} != |V| D");
    }
  std::uint64_t sq = 0, mn = 0;
  for (std::size_t i = 0; i < r1; ++i) {
    sq += t.rep_degrees[i] * t.rep_degrees[i];
    mn += t.multiplicities[i] * t.rep_degrees[i];
  }
  if (sq != D) bad.push_back("sum of n_i^2 != d+1");
  if (mn != s.order()) bad.push_back("sum of m_i n_i != |V|");
  return bad;
}

std::vector<CMatrix> dual_intersection_matrices(const CharTable& t) {
  for (auto d : t.rep_degrees)
    if (d != 1) throw std::invalid_argument("dual intersection numbers need a commutative scheme");
  const std::size_t D = t.size();
  const unsigned n = t.cyclotomic_order;
  const mpq_class inv(1, t.vertices);
  std::vector<CMatrix> out(D, CMatrix(D, std::vector<CycNum>(D, CycNum(n, 0))));
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) {
      std::vector<CycNum> qq;
      for (std::size_t l = 0; l < D; ++l) qq.push_back(t.Q[l][i] * t.Q[l][j]);
      for (std::size_t k = 0; k < D; ++k) {
        CycNum acc(n, 0);
        for (std::size_t l = 0; l < D; ++l) acc += qq[l] * t.P[k][l];
        out[i][k][j] = acc * inv;
      }
    }
  return out;
}

ConjectureReport conjecture_check(unsigned q, unsigned d) {
  ConjectureReport r;
  r.q = q;
  r.d = d;
  r.expected = static_cast<std::uint64_t>(q) * q + 1;
  r.holds = d == r.expected;
  return r;
}

mpz_class partition_count(unsigned m) {
  std::vector<mpz_class> p(m + 1, 0);
  p[0] = 1;
  for (unsigned k = 1; k <= m; ++k) {
    mpz_class acc = 0;
    for (long j = 1;; ++j) {
      const long g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
      if (g1 > static_cast<long>(k)) break;
      const int sign = (j % 2) ? 1 : -1;
      acc += sign * p[k - g1];
      if (g2 <= static_cast<long>(k)) acc += sign * p[k - g2];
    }
    p[k] = acc;
  }
  return p[m];
}

PartitionBound partition_bound(const std::vector<unsigned>& values, unsigned d) {
  PartitionBound b;
  b.sum = 0;
  for (auto v : values) b.sum += partition_count(v);
  b.d = d;
  b.bound = b.sum < d ? b.sum : mpz_class(d);
  return b;
}

// ---------------------------------------------------------------------------
// Table matching

namespace {

using Entry = std::vector<CycNum>;
using Table = std::vector<std::vector<Entry>>;

bool entry_less(const Entry& a, const Entry& b) { return rows_less(a, b); }

struct Matcher {
  const Table& a;
  const Table& b;
  const std::function<bool(const Matching&)>& accept;
  bool conjugated;
  std::size_t R, C;
  std::vector<std::size_t> cols;
  std::vector<bool> used;
  std::vector<std::vector<Entry>> sig_a, sig_b;
  std::optional<Matching> found;

  Matcher(const Table& a_, const Table& b_, const std::function<bool(const Matching&)>& acc, bool conj)
      : a(a_), b(b_), accept(acc), conjugated(conj), R(a_.size()), C(a_.empty() ? 0 : a_[0].size()) {
    auto sig = [&](const Table& t) {
      std::vector<std::vector<Entry>> s(C);
      for (std::size_t j = 0; j < C; ++j) {
        for (std::size_t i = 0; i < R; ++i) s[j].push_back(t[i][j]);
        std::sort(s[j].begin(), s[j].end(), entry_less);
      }
      return s;
    };
    sig_a = sig(a);
    sig_b = sig(b);
    cols.assign(C, 0);
    used.assign(C, false);
  }

  // Multiset of row tuples restricted to columns 0..upto must agree.
  bool rows_consistent(std::size_t upto) const {
    std::vector<std::vector<Entry>> ra(R), rb(R);
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j <= upto; ++j) {
        ra[i].push_back(a[i][j]);
        rb[i].push_back(b[i][cols[j]]);
      }
    auto lt = [](const std::vector<Entry>& x, const std::vector<Entry>& y) {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), entry_less);
    };
    std::sort(ra.begin(), ra.end(), lt);
    std::sort(rb.begin(), rb.end(), lt);
    return ra == rb;
  }

  bool finish() {
    Matching m;
    m.cols = cols;
    m.conjugated = conjugated;
    m.rows.assign(R, R);
    std::vector<bool> taken(R, false);
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t k = 0; k < R; ++k) {
        if (taken[k]) continue;
        bool eq = true;
        for (std::size_t j = 0; j < C && eq; ++j) eq = a[i][j] == b[k][cols[j]];
        if (eq) {
          m.rows[i] = k;
          taken[k] = true;
          break;
        }
      }
    if (std::find(m.rows.begin(), m.rows.end(), R) != m.rows.end()) return false;
    if (!accept(m)) return false;
    found = m;
    return true;
  }

  bool assign(std::size_t j) {
    if (j == C) return finish();
    for (std::size_t c = 0; c < C; ++c) {
      if (used[c] || (j == 0) != (c == 0) || !(sig_a[j] == sig_b[c])) continue;
      cols[j] = c;
      used[c] = true;
      if (rows_consistent(j) && assign(j + 1)) return true;
      used[c] = false;
    }
    return false;
  }
};

Table conjugate(const Table& t) {
  Table out = t;
  for (auto& row : out)
    for (auto& e : row)
      for (auto& x : e) x = x.conj();
  return out;
}

}  // namespace

std::optional<Matching> match_tables(const std::vector<std::vector<std::vector<CycNum>>>& a,
                                     const std::vector<std::vector<std::vector<CycNum>>>& b, bool allow_conjugate,
                                     const std::function<bool(const Matching&)>& accept) {
  if (a.size() != b.size() || a.empty() || a[0].size() != b[0].size()) return std::nullopt;
  {
    Matcher m(a, b, accept, false);
    if (m.assign(0)) return m.found;
  }
  if (allow_conjugate) {
    const Table ac = conjugate(a);
    Matcher m(ac, b, accept, true);
    if (m.assign(0)) return m.found;
  }
  return std::nullopt;
}

}  // namespace hermlab::schemes
