#include "hermlab/hermitian.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermlab::hermitian {

using gf::Field;

Mat4 identity4() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[5 * i] = 1;
  return m;
}

Mat4 mat_mul(const Field& f, const Mat4& a, const Mat4& b) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const Elem x = a[4 * i + k];
      if (x == 0) continue;
      for (int j = 0; j < 4; ++j) c[4 * i + j] = f.add(c[4 * i + j], f.mul(x, b[4 * k + j]));
    }
  return c;
}

Mat4 transpose(const Mat4& a) {
  Mat4 t{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[4 * j + i] = a[4 * i + j];
  return t;
}

Vec4 apply(const Field& f, const Mat4& a, const Vec4& v) {
  Vec4 out{};
  for (int i = 0; i < 4; ++i) {
    Elem acc = 0;
    for (int k = 0; k < 4; ++k) acc = f.add(acc, f.mul(a[4 * i + k], v[k]));
    out[i] = acc;
  }
  return out;
}

// ---------------------------------------------------------------------------

Surface::Surface(std::uint32_t q) : tower_(gf::Tower::build(q, 2)) {}

Elem Surface::form(const Vec4& u, const Vec4& v) const {
  const Field& f = field();
  Elem acc = 0;
  for (int i = 0; i < 4; ++i) acc = f.add(acc, f.mul(u[i], tower_.frobenius(v[i])));
  return acc;
}

Mat4 Surface::frobenius(const Mat4& a) const {
  Mat4 out{};
  for (int i = 0; i < 16; ++i) out[i] = tower_.frobenius(a[i]);
  return out;
}

Mat4 Surface::gram(const Mat4& f) const { return mat_mul(field(), transpose(f), frobenius(f)); }

Mat4 Surface::gram_target() const {
  Mat4 m{};
  const Elem m1 = field().minus_one();
  m[3] = m1;
  m[12] = m1;
  m[5] = 1;
  m[10] = 1;
  return m;
}

std::vector<ProjPoint> Surface::rational_points() const {
  std::vector<ProjPoint> out;
  for (const auto& p : projgeo::enumerate_p3(field()))
    if (contains(p.c)) out.push_back(p);
  return out;
}

std::uint64_t Surface::point_count() const {
  const std::uint64_t q = this->q();
  return (q * q * q + 1) * (q * q + 1);
}
std::uint64_t Surface::line_count() const {
  const std::uint64_t q = this->q();
  return (q * q * q + 1) * (q + 1);
}
std::uint64_t Surface::curve_count() const {
  const std::uint64_t q = this->q();
  return q * q * q * q * (q * q * q + 1) * (q * q - 1);
}

std::uint64_t group_order(std::uint32_t q32) {
  const std::uint64_t q = q32;
  const std::uint64_t q2 = q * q;
  return q2 * q2 * q2 * (q2 - 1) * (q2 * q + 1) * (q2 * q2 - 1);
}

std::uint64_t curve_stabilizer_order(std::uint32_t q32) {
  const std::uint64_t q = q32;
  return q * q * (q * q * q * q - 1);
}

std::uint64_t point_stabilizer_order(std::uint32_t q32) {
  const std::uint64_t q = q32;
  const std::uint64_t q2 = q * q;
  return q2 * q2 * q2 * (q2 - 1) * (q2 - 1);
}

GroupElem canonical_group_elem(const Field& f, const Mat4& a) {
  std::size_t i = 0;
  while (i < 16 && a[i] == 0) ++i;
  if (i == 16) throw std::invalid_argument("zero matrix is not a group element");
  const Elem s = f.inv(a[i]);
  GroupElem g;
  for (int k = 0; k < 16; ++k) g.a[k] = f.mul(a[k], s);
  return g;
}

std::optional<Elem> similitude_factor(const Surface& s, const Mat4& a) {
  const Mat4 g = mat_mul(s.field(), transpose(a), s.frobenius(a));
  const Elem lambda = g[0];
  if (lambda == 0) return std::nullopt;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (g[4 * i + j] != (i == j ? lambda : 0)) return std::nullopt;
  return lambda;
}

bool satisfies_gram(const Surface& s, const CurveMatrix& c) { return s.gram(c.f) == s.gram_target(); }

CurveMatrix construct_fj(const Surface& s) {
  const Field& f = s.field();
  const auto& t = s.tower();
  const auto [rho, rho2] = gf::find_rho_pair(t);
  const Vec4 e{1, rho, 0, 0};
  Vec4 e2{1, rho2, 0, 0};
  // b(e, c e2) = c^q b(e, e2) = -1  =>  c = (-1 / b(e, e2))^q.
  const Elem pairing = s.form(e, e2);
  const Elem c = t.frobenius(f.div(f.minus_one(), pairing));
  for (auto& x : e2) x = f.mul(x, c);
  const Vec4 u1{0, 0, 1, 0}, u2{0, 0, 0, 1};
  CurveMatrix fj;
  const std::array<Vec4, 4> cols{e, u1, u2, e2};
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) fj.f[4 * i + j] = cols[j][i];
  if (!satisfies_gram(s, fj)) throw std::logic_error("constructed curve frame violates the Gram condition");
  return fj;
}

LineFrame reference_line(const Surface& s) {
  const Elem rho = gf::find_rho(s.tower());
  std::array<Elem, 8> g{1, 0, 0, 1, rho, 0, 0, rho};
  return projgeo::canonical_line(s.field(), g);
}

std::pair<LineFrame, LineFrame> disjoint_line_pair(const Surface& s) {
  const auto [r1, r2] = gf::find_rho_pair(s.tower());
  auto make = [&](Elem rho) {
    // points (rho s, s, rho t, t)
    std::array<Elem, 8> g{rho, 0, 1, 0, 0, rho, 0, 1};
    return projgeo::canonical_line(s.field(), g);
  };
  return {make(r1), make(r2)};
}

namespace {
Vec4 monomial_vector(const Surface& s, const P1Point& st) {
  const Field& f = s.field();
  const auto& t = s.tower();
  const Elem a = st.c[0], b = st.c[1];
  const Elem aq = t.frobenius(a), bq = t.frobenius(b);
  return {f.mul(aq, a), f.mul(aq, b), f.mul(a, bq), f.mul(b, bq)};
}
}  // namespace

ProjPoint parameterize(const Surface& s, const CurveMatrix& c, const P1Point& st) {
  return projgeo::normalize(s.field(), apply(s.field(), c.f, monomial_vector(s, st)));
}

std::vector<ProjPoint> curve_rational_points(const Surface& s, const CurveMatrix& c) {
  std::vector<ProjPoint> out;
  for (const auto& st : projgeo::enumerate_p1(s.field())) out.push_back(parameterize(s, c, st));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::invalid_argument("curve parameterization is not injective on rational points");
  return out;
}

polyalg::ParamCurve param_curve(const Surface& s, const CurveMatrix& c) {
  const unsigned q = s.q();
  polyalg::ParamCurve pc;
  pc.degree = q + 1;
  const std::array<unsigned, 4> tpow{0, 1, q, q + 1};
  for (int i = 0; i < 4; ++i) {
    pc.coords[i].assign(q + 2, 0);
    for (int j = 0; j < 4; ++j) pc.coords[i][tpow[j]] = c.f[4 * i + j];
  }
  return pc;
}

polyalg::ParamCurve param_curve(const LineFrame& l) {
  polyalg::ParamCurve pc;
  pc.degree = 1;
  for (int i = 0; i < 4; ++i) pc.coords[i] = {l.at(i, 0), l.at(i, 1)};
  return pc;
}

std::vector<polyalg::GradedPiece> curve_ideal_pieces(const Surface& s, const CurveMatrix& c) {
  const auto pc = param_curve(s, c);
  std::vector<polyalg::GradedPiece> out;
  for (unsigned d = 2; d <= s.q() + 1; ++d) out.push_back(polyalg::curve_ideal_piece(s.field(), pc, d));
  return out;
}

std::vector<polyalg::GradedPiece> line_ideal_pieces(const Surface& s, const LineFrame& l) {
  return {polyalg::curve_ideal_piece(s.field(), param_curve(l), 1)};
}

Digest curve_key(const Surface& s, const CurveMatrix& c) {
  Hasher h;
  for (const auto& piece : curve_ideal_pieces(s, c)) {
    h.update(piece.degree);
    h.update(piece.dim());
    h.update(piece.basis.data());
  }
  return h.finish();
}

ProjPoint act_on_point(const Surface& s, const GroupElem& g, const ProjPoint& p) {
  return projgeo::normalize(s.field(), apply(s.field(), g.a, p.c));
}

LineFrame act_on_line(const Surface& s, const GroupElem& g, const LineFrame& l) {
  const Field& f = s.field();
  std::array<Elem, 8> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) {
      Elem acc = 0;
      for (int k = 0; k < 4; ++k) acc = f.add(acc, f.mul(g.a[4 * i + k], l.at(k, j)));
      out[2 * i + j] = acc;
    }
  return projgeo::canonical_line(f, out);
}

CurveMatrix act_on_curve(const Surface& s, const GroupElem& g, const CurveMatrix& c) {
  const Field& f = s.field();
  CurveMatrix out{mat_mul(f, g.a, c.f)};
  // Gram of g*F is lambda * M; entry (0,3) of M is -1.
  const Elem lambda = f.neg(s.gram(out.f)[3]);
  if (lambda != 1) {
    const Elem scale = gf::norm_preimage(s.tower(), f.inv(lambda));
    for (auto& x : out.f) x = f.mul(x, scale);
  }
  if (!satisfies_gram(s, out)) throw std::logic_error("group action broke the Gram condition");
  return out;
}

Mat4 random_unitary(const Surface& s, std::mt19937_64& rng) {
  const Field& f = s.field();
  std::uniform_int_distribution<Elem> pick(0, f.order() - 1);
  std::array<Vec4, 4> cols{};
  for (int j = 0; j < 4;) {
    Vec4 w{};
    for (auto& x : w) x = pick(rng);
    for (int i = 0; i < j; ++i) {
      const Elem c = s.form(w, cols[i]);  // b(cols[i], cols[i]) = 1
      for (int k = 0; k < 4; ++k) w[k] = f.sub(w[k], f.mul(c, cols[i][k]));
    }
    const Elem n = s.form(w, w);
    if (n == 0) continue;
    const Elem scale = gf::norm_preimage(s.tower(), f.inv(n));
    for (auto& x : w) x = f.mul(x, scale);
    cols[j++] = w;
  }
  Mat4 a{};
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) a[4 * i + j] = cols[j][i];
  return a;
}

namespace {

std::vector<GroupElem> candidate_generators(const Surface& s) {
  const Field& f = s.field();
  const auto& t = s.tower();
  std::vector<GroupElem> gens;
  for (int k = 0; k < 3; ++k) {
    Mat4 p{};
    for (int i = 0; i < 4; ++i) {
      int j = i == k ? k + 1 : (i == k + 1 ? k : i);
      p[4 * i + j] = 1;
    }
    gens.push_back(canonical_group_elem(f, p));
  }
  // alpha = g^{q-1} has order q+1, hence norm 1.
  const Elem alpha = f.pow(f.generator(), s.q() - 1);
  Mat4 d = identity4();
  d[0] = alpha;
  gens.push_back(canonical_group_elem(f, d));

  // Non-monomial 2x2 unitary block on coordinates 0,1 (none exists for q = 2).
  const Elem n = f.order();
  bool found = false;
  for (Elem a = 1; a < n && !found; ++a)
    for (Elem b = 1; b < n && !found; ++b)
      for (Elem c = 1; c < n && !found; ++c)
        for (Elem e = 1; e < n && !found; ++e) {
          if (f.add(t.norm(a), t.norm(c)) != 1 || f.add(t.norm(b), t.norm(e)) != 1) continue;
          if (f.add(f.mul(a, t.frobenius(b)), f.mul(c, t.frobenius(e))) != 0) continue;
          Mat4 u = identity4();
          u[0] = a;
          u[1] = b;
          u[4] = c;
          u[5] = e;
          gens.push_back(canonical_group_elem(f, u));
          found = true;
        }

  // Reflection x -> x + (alpha - 1) b(x,u)/b(u,u) u through the least
  // non-isotropic vector with at least two nonzero coordinates.
  for (const auto& p : projgeo::enumerate_p3(f)) {
    const int nz = static_cast<int>(std::count_if(p.c.begin(), p.c.end(), [](Elem x) { return x != 0; }));
    const Elem nu = s.form(p.c, p.c);
    if (nz < 2 || nu == 0) continue;
    const Elem coef = f.div(f.sub(alpha, 1), nu);
    Mat4 r = identity4();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        r[4 * i + j] = f.add(r[4 * i + j], f.mul(coef, f.mul(p.c[i], t.frobenius(p.c[j]))));
    gens.push_back(canonical_group_elem(f, r));
    break;
  }
  for (const auto& g : gens)
    if (!similitude_factor(s, g.a)) throw std::logic_error("generator is not a unitary similitude");
  return gens;
}

ProjPoint seed_point(const Surface& s) {
  return projgeo::normalize(s.field(), Vec4{1, gf::find_rho(s.tower()), 0, 0});
}

}  // namespace

PointOrbit point_orbit(const Surface& s, const std::vector<GroupElem>& gens, unsigned jobs) {
  return enumerate_orbit<ProjPoint, ProjPoint, projgeo::PointHash>(
      seed_point(s), gens.size(), [&](std::size_t g, const ProjPoint& p) { return act_on_point(s, gens[g], p); },
      [](const ProjPoint& p) { return p; }, s.point_count(), jobs);
}

LineOrbit line_orbit(const Surface& s, const std::vector<GroupElem>& gens, unsigned jobs) {
  return enumerate_orbit<LineFrame, LineFrame, projgeo::LineHash>(
      reference_line(s), gens.size(),
      [&](std::size_t g, const LineFrame& l) { return act_on_line(s, gens[g], l); },
      [](const LineFrame& l) { return l; }, s.line_count(), jobs);
}

CurveOrbit curve_orbit(const Surface& s, const std::vector<GroupElem>& gens, unsigned jobs, std::size_t cap) {
  if (cap == 0) cap = s.curve_count();
  auto orbit = enumerate_orbit<CurveMatrix, Digest, DigestHash>(
      construct_fj(s), gens.size(),
      [&](std::size_t g, const CurveMatrix& c) { return act_on_curve(s, gens[g], c); },
      [&](const CurveMatrix& c) { return curve_key(s, c); }, cap, jobs);
  if (orbit.size() != s.curve_count())
    throw std::runtime_error("curve orbit has " + std::to_string(orbit.size()) + " elements, expected " +
                             std::to_string(s.curve_count()));
  return orbit;
}

std::vector<GroupElem> unitary_generators(const Surface& s, unsigned jobs) {
  auto gens = candidate_generators(s);
  std::mt19937_64 rng(0x5eedull + s.q());
  for (int attempt = 0; attempt <= 8; ++attempt) {
    bool ok = false;
    try {
      ok = point_orbit(s, gens, jobs).size() == s.point_count() &&
           line_orbit(s, gens, jobs).size() == s.line_count();
    } catch (const OrbitCapExceeded&) {
      ok = false;
    }
    if (ok) return gens;
    gens.push_back(canonical_group_elem(s.field(), random_unitary(s, rng)));
  }
  throw std::runtime_error("could not validate a generating set of PGU_4");
}

namespace {
struct GroupElemHash {
  std::size_t operator()(const GroupElem& g) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : g.a) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};
}  // namespace

std::vector<GroupElem> enumerate_group(const Surface& s, const std::vector<GroupElem>& gens, std::size_t cap) {
  const GroupElem id = canonical_group_elem(s.field(), identity4());
  auto orbit = enumerate_orbit<GroupElem, GroupElem, GroupElemHash>(
      id, gens.size(),
      [&](std::size_t g, const GroupElem& x) { return canonical_group_elem(s.field(), mat_mul(s.field(), gens[g].a, x.a)); },
      [](const GroupElem& x) { return x; }, cap);
  return std::move(orbit.items);
}

}  // namespace hermlab::hermitian
