#include "hermlab/reference.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hermlab::reference {

CycNum parse_entry(const std::string& token, unsigned n) {
  std::size_t i = 0;
  bool neg = false;
  if (i < token.size() && (token[i] == '-' || token[i] == '+')) neg = token[i++] == '-';
  std::size_t j = i;
  while (j < token.size() && (std::isdigit(static_cast<unsigned char>(token[j])) || token[j] == '/')) ++j;
  mpq_class coef = 1;
  if (j > i) {
    coef = mpq_class(token.substr(i, j - i));
    coef.canonicalize();
  }
  const std::string name = token.substr(j);
  if (neg) coef = -coef;
  if (name.empty()) return CycNum(n, coef);
  const auto x = CycNum::sqrt_of_integer(n, -3);
  if (!x) throw std::invalid_argument("reference tables need 3 | N");
  const bool conj = std::isupper(static_cast<unsigned char>(name[0]));
  const std::string base = std::string(1, static_cast<char>(std::tolower(name[0]))) + name.substr(1);
  const CycNum s = conj ? -*x : *x;
  CycNum v(n, 0);
  if (base == "x") v = s;
  else if (base == "x11") v = CycNum(n, 1) + s;
  else if (base == "x12") v = CycNum(n, 1) + s * mpq_class(2);
  else if (base == "x21") v = CycNum(n, 2) + s;
  else throw std::invalid_argument("unknown reference symbol " + name);
  return v * coef;
}

CMatrix parse_matrix(const std::string& rows, unsigned n) {
  CMatrix out;
  std::stringstream all(rows);
  std::string row;
  while (std::getline(all, row, ';')) {
    std::stringstream rs(row);
    std::string tok;
    std::vector<CycNum> r;
    while (rs >> tok) r.push_back(parse_entry(tok, n));
    if (!r.empty()) out.push_back(std::move(r));
  }
  return out;
}

namespace {
std::vector<CMatrix> parse_list(const std::vector<std::string>& ms, unsigned n) {
  std::vector<CMatrix> out;
  for (const auto& m : ms) out.push_back(parse_matrix(m, n));
  return out;
}
}  // namespace

SchemeTables intersection_q2(unsigned n) {
  SchemeTables t;
  t.name = "intersection";
  t.order = 432;
  t.classes = 5;
  t.valencies = {1, 5, 120, 180, 120, 6};
  t.P = parse_matrix(
      "1 5 120 180 120 6; 1 5 60 0 -60 -6; 1 5 -24 36 -24 6; 1 5 12 -36 12 6; 1 5 -12 0 12 -6; 1 -1 0 0 0 0", n);
  t.Q = parse_matrix(
      "1 6 15 20 30 360; 1 6 15 20 30 -72; 1 3 -3 2 -3 0; 1 0 3 -4 0 0; 1 -3 -3 2 3 0; 1 -6 15 20 -30 0", n);
  t.L = parse_list(
      {
          "1 0 0 0 0 0; 0 1 0 0 0 0; 0 0 1 0 0 0; 0 0 0 1 0 0; 0 0 0 0 1 0; 0 0 0 0 0 1",
          "0 5 0 0 0 0; 1 4 0 0 0 0; 0 0 5 0 0 0; 0 0 0 5 0 0; 0 0 0 0 5 0; 0 0 0 0 0 5",
          "0 0 120 0 0 0; 0 0 120 0 0 0; 1 5 54 54 6 0; 0 0 36 48 36 0; 0 0 6 54 54 6; 0 0 0 0 120 0",
          "0 0 0 180 0 0; 0 0 0 180 0 0; 0 0 54 72 54 0; 1 5 48 72 48 6; 0 0 54 72 54 0; 0 0 0 180 0 0",
          "0 0 0 0 120 0; 0 0 0 0 120 0; 0 0 6 54 54 6; 0 0 36 48 36 0; 1 5 54 54 6 0; 0 0 120 0 0 0",
          "0 0 0 0 0 6; 0 0 0 0 0 6; 0 0 0 0 6 0; 0 0 0 6 0 0; 0 0 6 0 0 0; 1 5 0 0 0 0",
      },
      n);
  t.Lstar = parse_list(
      {
          "1 0 0 0 0 0; 0 1 0 0 0 0; 0 0 1 0 0 0; 0 0 0 1 0 0; 0 0 0 0 1 0; 0 0 0 0 0 1",
          "0 6 0 0 0 0; 1 0 0 5 0 0; 0 0 0 0 6 0; 0 3/2 0 0 9/2 0; 0 0 3 3 0 0; 0 0 0 0 0 6",
          "0 0 15 0 0 0; 0 0 0 0 15 0; 1 0 6 8 0 0; 0 0 6 9 0 0; 0 3 0 0 12 0; 0 0 0 0 0 15",
          "0 0 0 20 0 0; 0 5 0 0 15 0; 0 0 8 12 0 0; 1 0 9 10 0 0; 0 3 0 0 17 0; 0 0 0 0 0 20",
          "0 0 0 0 30 0; 0 0 15 15 0 0; 0 6 0 0 24 0; 0 9/2 0 0 51/2 0; 1 0 12 17 0 0; 0 0 0 0 0 30",
          "0 0 0 0 0 360; 0 0 0 0 0 360; 0 0 0 0 0 360; 0 0 0 0 0 360; 0 0 0 0 0 360; 1 6 15 20 30 288",
      },
      n);
  return t;
}

SchemeTables orbital_points_q2(unsigned n) {
  SchemeTables t;
  t.name = "orbital:points";
  t.order = 45;
  t.classes = 2;
  t.valencies = {1, 32, 12};
  t.P = parse_matrix("1 32 12; 1 2 -3; 1 -4 3", n);
  t.Q = parse_matrix("1 24 20; 1 3/2 -5/2; 1 -6 5", n);
  t.L = parse_list({"1 0 0; 0 1 0; 0 0 1", "0 32 0; 1 22 9; 0 24 8", "0 0 12; 0 9 3; 1 8 3"}, n);
  t.Lstar = parse_list({"1 0 0; 0 1 0; 0 0 1", "0 24 0; 1 21/2 25/2; 0 15 9", "0 0 20; 0 25/2 15/2; 1 9 10"}, n);
  return t;
}

SchemeTables orbital_lines_q2(unsigned n) {
  SchemeTables t;
  t.name = "orbital:lines";
  t.order = 27;
  t.classes = 2;
  t.valencies = {1, 10, 16};
  t.P = parse_matrix("1 10 16; 1 1 -2; 1 -5 4", n);
  t.Q = parse_matrix("1 20 6; 1 2 -3; 1 -5/2 3/2", n);
  t.L = parse_list({"1 0 0; 0 1 0; 0 0 1", "0 10 0; 1 1 8; 0 5 5", "0 0 16; 0 8 8; 1 5 10"}, n);
  t.Lstar = parse_list({"1 0 0; 0 1 0; 0 0 1", "0 1 0; 20 29/2 15; 0 9/2 5", "0 0 1; 0 9/2 5; 6 3/2 0"}, n);
  t.lstar_transposed = true;
  return t;
}

SchemeTables orbital_curves_q2(unsigned n) {
  SchemeTables t;
  t.name = "orbital:curves";
  t.order = 432;
  t.classes = 19;
  t.commutative = false;
  t.valencies = {1, 1, 20, 20, 5, 10, 20, 20, 10, 5, 10, 10, 30, 30, 30, 30, 30, 30, 60, 60};
  t.P = parse_matrix(
      "1 1 20 20 5 10 20 20 10 5 10 10 30 30 30 30 30 30 60 60;"
      "1 1 -2x21 -2x21 -1 X12 -2X21 -2X21 x12 -1 X12 x12 3 0 3 0 3 3 0 0;"
      "1 -1 2 -2 1 -1 -2 2 1 -1 1 -1 -3 -6 3 6 3 -3 0 0;"
      "1 -1 4X21 -4X21 1 2x12 -4x21 4x21 -2X12 -1 -2x12 2X12 -6 18 6 -18 6 -6 12x 12X;"
      "1 -1 4x21 -4x21 1 2X12 -4X21 4X21 -2x12 -1 -2X12 2x12 -6 18 6 -18 6 -6 12X 12x;"
      "1 1 2 2 -1 -1 2 2 -1 -1 -1 -1 -1 -4 -1 -4 -1 -1 4 4;"
      "1 -1 -10 10 -5 5 10 -10 -5 5 -5 5 -15 0 15 0 15 -15 0 0;"
      "1 1 2 2 -1 4 2 2 4 -1 4 4 -6 6 -6 6 -6 -6 -6 -6;"
      "1 -1 -x11 x11 1 x21 X11 -X11 -X21 -1 -x21 X21 3 0 -3 0 -3 3 6X 6x;"
      "1 -1 -X11 X11 1 X21 x11 -x11 -x21 -1 -X21 x21 3 0 -3 0 -3 3 6x 6X;"
      "1 1 2 2 5 1 2 2 1 5 1 1 3 -6 3 -6 3 3 -12 -12;"
      "1 1 -2X21 -2X21 -1 x12 -2x21 -2x21 X12 -1 x12 X12 3 0 3 0 3 3 0 0;"
      "4 4 -4 -4 8 -14 -4 -4 -14 8 -14 -14 -6 36 -6 36 -6 -6 0 0;"
      "4 -4 -4 4 -8 -10 4 -4 10 8 10 -10 6 12 -6 -12 -6 6 0 0",
      n);
  t.Q = parse_matrix(
      "1 30 60 5 5 81 6 24 40 40 20 30 30 60;"
      "1 30 -60 -5 -5 81 -6 24 -40 -40 20 30 30 -60;"
      "1 -3X21 6 x21 X21 81/10 -3 12/5 -2X11 -2x11 2 -3x21 -3/2 -3;"
      "1 -3X21 -6 -x21 -X21 81/10 3 12/5 2X11 2x11 2 -3x21 -3/2 3;"
      "1 -6 12 1 1 -81/5 -6 -24/5 8 8 20 -6 12 -24;"
      "1 3x12 -6 X12 x12 -81/10 3 48/5 4X21 4x21 2 3X12 -21/2 -15;"
      "1 -3x21 -6 -X21 -x21 81/10 3 12/5 2x11 2X11 2 -3X21 -3/2 3;"
      "1 -3x21 6 X21 x21 81/10 -3 12/5 -2x11 -2X11 2 -3X21 -3/2 -3;"
      "1 3X12 6 -x12 -X12 -81/10 -3 48/5 -4x21 -4X21 2 3x12 -21/2 15;"
      "1 -6 -12 -1 -1 -81/5 6 -24/5 -8 -8 20 -6 12 24;"
      "1 3x12 6 -X12 -x12 -81/10 -3 48/5 -4X21 -4x21 2 3X12 -21/2 15;"
      "1 3X12 -6 x12 X12 -81/10 3 48/5 4x21 4X21 2 3x12 -21/2 -15;"
      "1 3 -6 -1 -1 -27/10 -3 -24/5 4 4 2 3 -3/2 3;"
      "1 0 -12 3 3 -54/5 0 24/5 0 0 -4 0 9 6;"
      "1 3 6 1 1 -27/10 3 -24/5 -4 -4 2 3 -3/2 -3;"
      "1 0 12 -3 -3 -54/5 0 24/5 0 0 -4 0 9 -6;"
      "1 3 6 1 1 -27/10 3 -24/5 -4 -4 2 3 -3/2 -3;"
      "1 3 -6 -1 -1 -27/10 -3 -24/5 4 4 2 3 -3/2 3;"
      "1 0 0 -x x 27/5 0 -12/5 4x -4x -4 0 0 0;"
      "1 0 0 x -x 27/5 0 -12/5 -4x 4x -4 0 0 0",
      n);
  t.ranks = {1, 30, 60, 5, 5, 81, 6, 24, 40, 40, 20, 30, 30, 60};
  t.rep_degrees = {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2};
  t.multiplicities = {1, 30, 60, 5, 5, 81, 6, 24, 40, 40, 20, 30, 15, 30};
  return t;
}

Comparison compare(const schemes::Scheme& s, const schemes::CharTable& t, const SchemeTables& ref,
                   bool allow_conjugate) {
  Comparison c;
  const std::size_t D = s.classes() + 1;
  const std::size_t R = t.size();
  if (s.order() != ref.order || s.classes() != ref.classes || R != ref.P.size() || D != ref.Q.size()) {
    c.detail = "shape differs from the reference";
    return c;
  }
  auto table = [&](const CMatrix& P, const CMatrix& Q) {
    std::vector<std::vector<std::vector<CycNum>>> m(R, std::vector<std::vector<CycNum>>(D));
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < D; ++j) m[i][j] = {P[i][j], Q[j][i]};
    return m;
  };
  const auto a = table(t.P, t.Q);
  const auto b = table(ref.P, ref.Q);

  std::vector<schemes::CMatrix> lstar;
  if (!ref.Lstar.empty()) lstar = schemes::dual_intersection_matrices(t);
  const auto L = schemes::intersection_matrices(s);

  auto accept = [&](const schemes::Matching& m) {
    if (!ref.L.empty())
      for (std::size_t i = 0; i < D; ++i)
        for (std::size_t k = 0; k < D; ++k)
          for (std::size_t j = 0; j < D; ++j)
            if (!(ref.L[m.cols[i]][m.cols[k]][m.cols[j]] == CycNum(t.cyclotomic_order, L[i][k][j]))) return false;
    if (!ref.Lstar.empty())
      for (std::size_t i = 0; i < R; ++i)
        for (std::size_t k = 0; k < R; ++k)
          for (std::size_t j = 0; j < R; ++j) {
            const auto& r = ref.Lstar[m.rows[i]];
            const CycNum& want = ref.lstar_transposed ? r[m.rows[j]][m.rows[k]] : r[m.rows[k]][m.rows[j]];
            const CycNum got = m.conjugated ? lstar[i][k][j].conj() : lstar[i][k][j];
            if (!(want == got)) return false;
          }
    return true;
  };
  c.matching = schemes::match_tables(a, b, allow_conjugate, accept);
  c.matched = c.matching.has_value();
  if (!c.matched) c.detail = "no row/column permutation reproduces the reference tables";
  return c;
}

}  // namespace hermlab::reference
