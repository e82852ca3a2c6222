#pragma once

// Association schemes given by an explicit relation matrix: axiom checks,
// structure constants, and character tables computed in the regular
// representation of the adjacency algebra.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hermlab/cyclotomic.hpp"

namespace hermlab::schemes {

using cyclo::CycNum;

inline constexpr std::size_t kFullCheckLimit = 1200;

class NotASchemeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// r(x, y) in {0..d} for an n-vertex set, row-major.
struct RelationMatrix {
  std::size_t n = 0;
  std::vector<std::uint8_t> r;
  std::uint8_t operator()(std::size_t x, std::size_t y) const { return r[x * n + y]; }
};

class Scheme {
 public:
  std::size_t order() const { return n_; }
  unsigned classes() const { return d_; }
  std::uint64_t valency(unsigned i) const { return k_[i]; }
  const std::vector<std::uint64_t>& valencies() const { return k_; }
  unsigned transpose(unsigned i) const { return t_[i]; }
  /// p^k_{ij}
  std::int64_t p(unsigned i, unsigned j, unsigned k) const { return p_[(i * (d_ + 1) + j) * (d_ + 1) + k]; }
  /// Label of each class: the invariant value, or the first vertex hit.
  const std::vector<std::int64_t>& labels() const { return labels_; }
  const RelationMatrix& relations() const { return rel_; }

  bool commutative() const;
  bool symmetric() const;

  /// Checks the axioms on the recorded structure constants: k_0 = 1,
  /// sum_i k_i = |V|, sum_j p^k_{ij} = k_i, p^0_{ij} = k_i [j = i'].
  std::vector<std::string> axiom_violations() const;

  /// Builds the scheme from a relation matrix whose class 0 is the diagonal.
  /// Structure constants are read off `base_rows` (every row if empty) and
  /// verified for constancy on those rows; throws NotASchemeError with a
  /// witness otherwise.
  static Scheme from_relations(RelationMatrix rel, std::vector<std::int64_t> labels,
                               const std::vector<std::size_t>& base_rows = {}, unsigned jobs = 1);

  /// Symmetric relation known only on a few rows, for a vertex-transitive
  /// invariant: rows[x][z] = r(x, z) for the supplied x, and rows must contain
  /// vertex 0. p^k_{ij} = #{z : r(0,z) = i, r(y,z) = j} for any supplied y in
  /// class k of row 0; every supplied y is checked against it. relations()
  /// is empty for such a scheme.
  static Scheme from_symmetric_rows(std::size_t n, std::vector<std::int64_t> labels,
                                    const std::map<std::size_t, std::vector<std::uint8_t>>& rows);

 private:
  std::size_t n_ = 0;
  unsigned d_ = 0;
  std::vector<std::uint64_t> k_;
  std::vector<unsigned> t_;
  std::vector<std::int64_t> p_;
  std::vector<std::int64_t> labels_;
  RelationMatrix rel_;
};

/// Classes are the distinct values of invariant(x, y) for x != y, ordered by
/// value. invariant is evaluated once per unordered pair and must be symmetric.
Scheme scheme_from_invariant(std::size_t n, const std::function<std::int64_t(std::size_t, std::size_t)>& invariant,
                             unsigned jobs = 1);

/// Same, from a precomputed upper-triangular table value[x][y - x - 1].
Scheme scheme_from_values(std::size_t n, const std::vector<std::vector<std::int64_t>>& upper, unsigned jobs = 1);

/// Orbitals of a transitive permutation group given by generator images
/// (action[g][x]). Classes ordered by (valency, least vertex of the suborbit).
/// Constancy of p^k_{ij} is checked on every row up to kFullCheckLimit
/// vertices and on 16 spread rows beyond.
Scheme scheme_from_orbitals(const std::vector<std::vector<std::uint32_t>>& action, unsigned jobs = 1);

/// Stabilizer orbits of vertex 0 (Schreier generators, union-find).
std::vector<std::vector<std::uint32_t>> suborbits(const std::vector<std::vector<std::uint32_t>>& action);

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using QMatrix = std::vector<std::vector<mpq_class>>;
using CMatrix = std::vector<std::vector<CycNum>>;

/// (L_i)_{k,j} = p^k_{ij}.
std::vector<IntMatrix> intersection_matrices(const Scheme& s);

/// Tr(A_l A_j) = |V| k_j [l = j'].
IntMatrix adjacency_trace_products(const Scheme& s);

struct CharTable {
  unsigned cyclotomic_order = 0;  // N used for the computation
  unsigned minimal_order = 0;     // least N' | N containing every entry
  std::size_t vertices = 0;
  CMatrix P;                      // (r+1) x (d+1)
  CMatrix Q;                      // (d+1) x (r+1)
  CMatrix idempotents;            // E_i as coefficients over A_0..A_d
  std::vector<std::uint64_t> ranks;            // rank(E_i)
  std::vector<std::uint64_t> rep_degrees;      // n_i
  std::vector<std::uint64_t> multiplicities;   // m_i
  std::vector<CycNum> central_character(const std::vector<mpq_class>& w) const;
  std::size_t size() const { return P.size(); }
};

class RecognitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Character table over Q(zeta_N). Throws RecognitionError when some
/// eigenvalue is not found in Q(zeta_N).
CharTable character_table(const Scheme& s, unsigned n, std::uint64_t seed = 1);
/// Tries N = preferred, then 4, 8, 12, 24 (skipping repeats).
CharTable character_table_auto(const Scheme& s, unsigned preferred = 12);

/// Exact identities: E_i^2 = E_i, E_i E_j = 0, sum E_i = A_0, and
/// P Q = |V| D with D_ii = P_{i,0}. Returns the failures.
std::vector<std::string> verify_char_table(const Scheme& s, const CharTable& t);

/// (L*_i)_{k,j} = q^k_{ij}, commutative schemes only.
std::vector<CMatrix> dual_intersection_matrices(const CharTable& t);

/// Product in the adjacency algebra over CycNum.
std::vector<CycNum> algebra_multiply(const Scheme& s, const std::vector<CycNum>& a, const std::vector<CycNum>& b);

struct ConjectureReport {
  unsigned q = 0;
  unsigned d = 0;
  std::uint64_t expected = 0;  // q^2 + 1
  bool holds = false;
};
ConjectureReport conjecture_check(unsigned q, unsigned d);

/// Number of partitions of m (Euler's pentagonal recurrence).
mpz_class partition_count(unsigned m);
struct PartitionBound {
  mpz_class sum;
  unsigned d = 0;
  mpz_class bound;  // min(d, sum)
};
PartitionBound partition_bound(const std::vector<unsigned>& values, unsigned d);

/// A table given as rows (irreducibles) x columns (classes) of entry pairs,
/// compared up to row and column permutation; column 0 stays fixed.
struct Matching {
  std::vector<std::size_t> rows;  // rows[i] = reference row of computed row i
  std::vector<std::size_t> cols;
  bool conjugated = false;
};
/// Calls accept(m) for each matching of the tables `a` and `b` (entries
/// compared with ==), optionally also matching conj(a) against b; stops at
/// the first accepted matching and returns it.
std::optional<Matching> match_tables(const std::vector<std::vector<std::vector<CycNum>>>& a,
                                     const std::vector<std::vector<std::vector<CycNum>>>& b, bool allow_conjugate,
                                     const std::function<bool(const Matching&)>& accept);

}  // namespace hermlab::schemes
