#include "hermlab/polyalg.hpp"

#include <algorithm>

namespace hermlab::polyalg {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

MonomialBasis::MonomialBasis(unsigned degree) : degree_(degree) {
  const unsigned d = degree;
  lookup_.assign(static_cast<std::size_t>(d + 1) * (d + 1) * (d + 1), UINT32_MAX);
  for (int a0 = static_cast<int>(d); a0 >= 0; --a0)
    for (int a1 = static_cast<int>(d) - a0; a1 >= 0; --a1)
      for (int a2 = static_cast<int>(d) - a0 - a1; a2 >= 0; --a2) {
        const int a3 = static_cast<int>(d) - a0 - a1 - a2;
        lookup_[(static_cast<std::size_t>(a0) * (d + 1) + a1) * (d + 1) + a2] =
            static_cast<std::uint32_t>(monomials_.size());
        monomials_.push_back({static_cast<std::uint8_t>(a0), static_cast<std::uint8_t>(a1),
                              static_cast<std::uint8_t>(a2), static_cast<std::uint8_t>(a3)});
      }
}

std::size_t MonomialBasis::index(const Exponent& e) const {
  const unsigned d = degree_;
  if (unsigned{e[0]} + e[1] + e[2] + e[3] != d) throw std::invalid_argument("monomial degree mismatch");
  return lookup_[(static_cast<std::size_t>(e[0]) * (d + 1) + e[1]) * (d + 1) + e[2]];
}

const MonomialBasis& monomial_basis(unsigned degree) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<MonomialBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[degree];
  if (!slot) slot = std::make_unique<MonomialBasis>(degree);
  return *slot;
}

BinaryForm multiply_forms(const Field& f, const BinaryForm& a, const BinaryForm& b) {
  if (a.empty() || b.empty()) return {};
  BinaryForm c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  return c;
}

Matrix pullback_matrix(const Field& f, const ParamCurve& c, unsigned d) {
  const auto& basis = monomial_basis(d);
  const std::size_t rows = static_cast<std::size_t>(c.degree) * d + 1;
  Matrix m(rows, basis.size());
  // pw[i][k] = (coordinate i)^k
  std::array<std::vector<BinaryForm>, 4> pw;
  for (int i = 0; i < 4; ++i) {
    pw[i].push_back(BinaryForm{1});
    for (unsigned k = 1; k <= d; ++k) pw[i].push_back(multiply_forms(f, pw[i].back(), c.coords[i]));
  }
  std::size_t col = 0;
  for (int a0 = static_cast<int>(d); a0 >= 0; --a0) {
    const BinaryForm& p0 = pw[0][a0];
    for (int a1 = static_cast<int>(d) - a0; a1 >= 0; --a1) {
      const BinaryForm p01 = multiply_forms(f, p0, pw[1][a1]);
      for (int a2 = static_cast<int>(d) - a0 - a1; a2 >= 0; --a2) {
        const int a3 = static_cast<int>(d) - a0 - a1 - a2;
        const BinaryForm p = multiply_forms(f, multiply_forms(f, p01, pw[2][a2]), pw[3][a3]);
        for (std::size_t k = 0; k < p.size() && k < rows; ++k) m.at(k, col) = p[k];
        ++col;
      }
    }
  }
  return m;
}

BinaryForm pullback(const Field& f, std::span<const Elem> form, unsigned d, const ParamCurve& c) {
  const Matrix m = pullback_matrix(f, c, d);
  if (form.size() != m.cols()) throw std::invalid_argument("form does not match degree");
  BinaryForm out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (form[j] != 0) out[r] = f.add(out[r], f.mul(m.at(r, j), form[j]));
  return out;
}

Elem evaluate(const Field& f, std::span<const Elem> form, unsigned d, const std::array<Elem, 4>& x) {
  const auto& basis = monomial_basis(d);
  Elem acc = 0;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (form[j] == 0) continue;
    Elem term = form[j];
    for (int i = 0; i < 4; ++i) term = f.mul(term, f.pow(x[i], basis[j][i]));
    acc = f.add(acc, term);
  }
  return acc;
}

GradedPiece curve_ideal_piece(const Field& f, const ParamCurve& c, unsigned d) {
  return GradedPiece{d, linalg::kernel(f, pullback_matrix(f, c, d))};
}

std::size_t hilbert_function(const Field& f, std::span<const GradedPiece> generators, unsigned d) {
  const auto& target = monomial_basis(d);
  linalg::RowSpace span(target.size());
  std::vector<Elem> row(target.size());
  for (const auto& g : generators) {
    if (g.degree > d) throw std::invalid_argument("generator degree exceeds target degree");
    const auto& gb = monomial_basis(g.degree);
    const auto& shifts = monomial_basis(d - g.degree);
    for (std::size_t r = 0; r < g.basis.rows(); ++r) {
      const auto src = g.basis.row(r);
      for (const auto& m : shifts.monomials()) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t j = 0; j < src.size(); ++j) {
          if (src[j] == 0) continue;
          Exponent e = gb[j];
          for (int i = 0; i < 4; ++i) e[i] = static_cast<std::uint8_t>(e[i] + m[i]);
          row[target.index(e)] = src[j];
        }
        span.insert(f, row);
        if (span.dim() == target.size()) return 0;
      }
    }
  }
  return target.size() - span.dim();
}

// ---------------------------------------------------------------------------

CurveData::CurveData(const Field& f, ParamCurve curve) : field_(&f), curve_(std::move(curve)) {}

void CurveData::ensure(unsigned d) {
  if (rref_.count(d)) return;
  Matrix m = pullback_matrix(*field_, curve_, d);
  ideal_.emplace(d, GradedPiece{d, linalg::kernel(*field_, m)});
  auto piv = linalg::rref(*field_, m);
  rref_.emplace(d, std::move(m));
  pivots_.emplace(d, std::move(piv));
}

const Matrix& CurveData::pullback_rref(unsigned d) {
  ensure(d);
  return rref_.at(d);
}

const std::vector<std::size_t>& CurveData::pullback_pivots(unsigned d) {
  ensure(d);
  return pivots_.at(d);
}

const GradedPiece& CurveData::ideal(unsigned d) {
  ensure(d);
  return ideal_.at(d);
}

namespace {

// h(d) = r_b - rank(rows of b reduced modulo the row space of a).
struct DegreeStep {
  std::size_t h;
  bool same_ideal;
};

DegreeStep hilbert_of_sum(const Field& f, CurveData& a, CurveData& b, unsigned d) {
  const Matrix& ra = a.pullback_rref(d);
  const auto& pa = a.pullback_pivots(d);
  const Matrix& rb = b.pullback_rref(d);
  Matrix residual = rb;
  for (std::size_t r = 0; r < residual.rows(); ++r) {
    auto row = residual.row(r);
    for (std::size_t i = 0; i < pa.size(); ++i) {
      const Elem x = row[pa[i]];
      if (x != 0) linalg::sub_scaled_row(f, row, ra.row(i), x);
    }
  }
  const std::size_t extra = linalg::rref(f, residual).size();
  // Both row spaces coincide exactly when nothing new survives and ranks match,
  // i.e. the kernels (ideal pieces) are equal.
  return {rb.rows() - extra, extra == 0 && ra.rows() == rb.rows()};
}

}  // namespace

IntersectionResult intersection_number(const Field& f, CurveData& a, CurveData& b,
                                       const IntersectionOptions& opts) {
  const unsigned top = std::max(a.curve().degree, b.curve().degree);
  const unsigned cap = opts.max_degree ? opts.max_degree : 6 * top;
  const unsigned probe = std::max(2u, top);
  IntersectionResult res;
  unsigned run = 0;
  for (unsigned d = opts.first_degree; d <= cap; ++d) {
    const auto step = hilbert_of_sum(f, a, b, d);
    if (d == probe && step.same_ideal)
      throw SameCurveError("curves have identical ideals in degree " + std::to_string(d));
    if (!res.hilbert.empty() && res.hilbert.back() == step.h)
      ++run;
    else
      run = 1;
    res.hilbert.push_back(step.h);
    if (run >= opts.stable_run) {
      res.value = static_cast<std::uint32_t>(step.h);
      res.stabilized_at = d + 1 - opts.stable_run;
      return res;
    }
  }
  throw InconclusiveError("Hilbert function did not stabilize by degree " + std::to_string(cap));
}

IntersectionResult intersection_number(const Field& f, const ParamCurve& a, const ParamCurve& b,
                                       const IntersectionOptions& opts) {
  CurveData da(f, a), db(f, b);
  return intersection_number(f, da, db, opts);
}

// ---------------------------------------------------------------------------

namespace univariate {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mod(const Field& f, Poly a, const Poly& b) {
  trim(a);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  const Elem lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const Elem c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    trim(a);
  }
  return a;
}

Poly gcd(const Field& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(f, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Elem li = f.inv(a.back());
    for (auto& x : a) x = f.mul(x, li);
  }
  return a;
}

}  // namespace univariate

std::optional<unsigned> binary_gcd_degree(const Field& f, std::span<const BinaryForm> forms) {
  std::optional<unsigned> s_mult;
  univariate::Poly g;
  bool have = false;
  for (const auto& form : forms) {
    univariate::Poly p(form.begin(), form.end());
    univariate::trim(p);
    if (p.empty()) continue;
    const unsigned m = static_cast<unsigned>(form.size() - p.size());  // power of s dividing the form
    s_mult = s_mult ? std::min(*s_mult, m) : m;
    if (!have) {
      g = std::move(p);
      have = true;
    } else if (g.size() > 1) {
      g = univariate::gcd(f, std::move(g), std::move(p));
    }
    if (g.size() <= 1 && *s_mult == 0) return 0u;
  }
  if (!have) return std::nullopt;
  return *s_mult + static_cast<unsigned>(g.size() - 1);
}

std::uint32_t intersection_number_fast(const Field& f, const ParamCurve& a,
                                       std::span<const GradedPiece> b_generators) {
  std::vector<BinaryForm> forms;
  for (const auto& piece : b_generators) {
    if (piece.dim() == 0) continue;
    const Matrix pm = pullback_matrix(f, a, piece.degree);
    for (std::size_t r = 0; r < piece.basis.rows(); ++r) {
      const auto g = piece.basis.row(r);
      BinaryForm out(pm.rows(), 0);
      for (std::size_t j = 0; j < pm.cols(); ++j) {
        if (g[j] == 0) continue;
        for (std::size_t k = 0; k < pm.rows(); ++k)
          if (pm.at(k, j) != 0) out[k] = f.add(out[k], f.mul(pm.at(k, j), g[j]));
      }
      forms.push_back(std::move(out));
    }
  }
  const auto deg = binary_gcd_degree(f, forms);
  if (!deg) throw SameCurveError("first curve lies inside the second (all pullbacks vanish)");
  return *deg;
}

}  // namespace hermlab::polyalg
