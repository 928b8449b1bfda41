#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "qgw/linalg.hpp"

namespace qgw {

/// Generator alphabet: N*N matrix coefficients in row-major order, plus an
/// optional central generator f which sorts below everything else.
struct Alphabet {
  int N = 0;
  bool has_f = false;

  int size() const { return N * N + (has_f ? 1 : 0); }
  int f_symbol() const { return has_f ? 0 : -1; }
  int t_symbol(int i, int j) const { return (has_f ? 1 : 0) + i * N + j; }  // 0-based
  bool is_f(int s) const { return has_f && s == 0; }
  std::pair<int, int> t_indices(int s) const;
  std::string symbol_name(int s, const std::string& letter = "T") const;
};

using Word = std::vector<uint8_t>;  // sequence of symbols; degree = length

struct WordHash {
  size_t operator()(const Word& w) const {
    size_t h = 1469598103934665603ull;
    for (auto c : w) h = (h ^ c) * 1099511628211ull;
    return h;
  }
};

/// Canonical form: letters equal to f are moved to the front.
Word canonical_word(const Alphabet& a, Word w);

/// Homogeneous-friendly noncommutative polynomial; words assumed canonical.
struct NCPoly {
  std::map<Word, QScalar> t;

  bool is_zero() const { return t.empty(); }
  void add_term(Word w, QScalar c);
  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly scaled(const QScalar& s) const;
  /// -1 when inhomogeneous, else common degree (0 for the zero poly).
  int degree() const;
  /// Free-algebra concatenation product (canonicalized).
  NCPoly concat(const NCPoly& o, const Alphabet& a) const;
  NCPoly evaluate_at_one() const;
  std::string str(const Alphabet& a, const std::string& letter = "T") const;
};

/// A homogeneous relation list, stored per degree as linearly independent
/// representatives (row-reduced in the word coordinates of their degree).
class RelationSet {
 public:
  RelationSet() = default;
  RelationSet(Alphabet a, std::vector<NCPoly> rels);

  const Alphabet& alphabet() const { return alph_; }
  const std::vector<NCPoly>& relations() const { return rels_; }
  int min_degree() const;

  RelationSet merged(const RelationSet& extra) const;

 private:
  Alphabet alph_;
  std::vector<NCPoly> rels_;
};

/// All canonical words of a fixed degree in ascending lex order (f smallest),
/// with index lookup.
struct DegreeBasis {
  std::vector<Word> words;
  std::unordered_map<Word, int, WordHash> index;
};
DegreeBasis degree_basis(const Alphabet& a, int d);

using SparseVec = std::vector<std::pair<int, QScalar>>;  // sorted by index

/// Per-degree data of a graded quotient.
struct DegreeData {
  DegreeBasis basis;
  int slice_dim = 0;
  std::vector<int> pivot_cols;
  std::vector<int> complement_cols;           // the quotient basis
  std::vector<int> col_to_complement;         // word col -> complement pos or -1
  /// pivot word col -> expression over complement cols (fraction scalars)
  std::unordered_map<int, SparseVec> reduce_map;

  int quotient_dim() const { return int(complement_cols.size()); }
  /// Coordinates of the class of a word over the complement words.
  const SparseVec* reduce_word(int col) const;
};

/// Degreewise normal forms in the quotient of the free algebra by the
/// two-sided ideal of a homogeneous relation set.
class GradedQuotient {
 public:
  GradedQuotient() = default;
  GradedQuotient(RelationSet rels, int max_degree);

  const RelationSet& rels() const { return rels_; }
  const Alphabet& alphabet() const { return rels_.alphabet(); }
  int max_degree() const { return max_degree_; }
  const DegreeData& degree(int d) const { return per_degree_.at(d); }
  std::vector<int> dims() const;

  NCPoly normal_form(const NCPoly& p) const;
  NCPoly multiply(const NCPoly& a, const NCPoly& b) const;
  /// NCPoly for the class with given complement-coordinates at degree d.
  NCPoly from_coords(int d, const SparseVec& coords) const;

 private:
  RelationSet rels_;
  int max_degree_ = 0;
  std::vector<DegreeData> per_degree_;
};

/// Row-reduced degree-d slice of the two-sided ideal, in the coordinates of
/// degree_basis(alphabet, d).
RrefResult ideal_slice(const RelationSet& rels, int d);

/// Spanning rows of the slice before reduction (u * rel * v placements).
std::vector<SparseRow> ideal_slice_rows(const RelationSet& rels, int d);

/// Basis of degree-d elements commuting with every generator in the quotient.
std::vector<NCPoly> centralizer_basis(const GradedQuotient& gq, int d);

}  // namespace qgw
