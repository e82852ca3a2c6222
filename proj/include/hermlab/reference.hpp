#pragma once

// Known q = 2 tables, stored as text and parsed into Q(zeta_N).
//
// Entry grammar: [-]coef[name] where coef is an integer or a/b and name is
// one of x, x11, x12, x21 (lowercase) or its complex conjugate (uppercase):
//   x = sqrt(-3), x11 = 1 + x, x12 = 1 + 2x, x21 = 2 + x.

#include <optional>
#include <string>
#include <vector>

#include "hermlab/cyclotomic.hpp"
#include "hermlab/schemes.hpp"

namespace hermlab::reference {

using cyclo::CycNum;
using schemes::CMatrix;

struct SchemeTables {
  std::string name;
  std::size_t order = 0;
  unsigned classes = 0;
  bool commutative = true;
  std::vector<std::uint64_t> valencies;  // in reference column order
  CMatrix P, Q;
  std::vector<CMatrix> L;       // empty when not given
  std::vector<CMatrix> Lstar;   // as stored
  /// The stored dual matrices are the transposes of L*_i in the
  /// convention (L*_i)_{k,j} = q^k_{ij}.
  bool lstar_transposed = false;
  std::vector<std::uint64_t> ranks, rep_degrees, multiplicities;  // noncommutative case
};

/// Needs 3 | N.
CycNum parse_entry(const std::string& token, unsigned n);
CMatrix parse_matrix(const std::string& rows, unsigned n);  // rows separated by ';'

SchemeTables intersection_q2(unsigned n = 12);
SchemeTables orbital_points_q2(unsigned n = 12);
SchemeTables orbital_lines_q2(unsigned n = 12);
SchemeTables orbital_curves_q2(unsigned n = 12);

/// Result of comparing computed tables with a reference.
struct Comparison {
  bool matched = false;
  std::optional<schemes::Matching> matching;
  std::string detail;
};

/// Matches P and Q jointly up to row/column permutation (and complex
/// conjugation if allowed), then checks L_i and L*_i under the same
/// permutations when the reference prints them.
Comparison compare(const schemes::Scheme& s, const schemes::CharTable& t, const SchemeTables& ref,
                   bool allow_conjugate = true);

}  // namespace hermlab::reference
