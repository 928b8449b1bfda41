#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgw/freenc.hpp"

using namespace qgw;

namespace {

NCPoly letter(int s) {
  NCPoly p;
  p.add_term(Word{uint8_t(s)}, QScalar(1));
  return p;
}

/// Commutators of all generator pairs: the quotient is the polynomial ring.
RelationSet commutative_relations(const Alphabet& a) {
  std::vector<NCPoly> rels;
  for (int s = 0; s < a.size(); ++s)
    for (int t = s + 1; t < a.size(); ++t) {
      NCPoly r;
      r.add_term(Word{uint8_t(s), uint8_t(t)}, QScalar(1));
      r.add_term(Word{uint8_t(t), uint8_t(s)}, QScalar(-1));
      rels.push_back(r);
    }
  return RelationSet(a, rels);
}

int binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return int(r);
}

}  // namespace

TEST_CASE("alphabet layout and canonical words") {
  Alphabet a{2, true};
  CHECK(a.size() == 5);
  CHECK(a.f_symbol() == 0);
  CHECK(a.t_symbol(1, 0) == 3);
  // f letters commute to the front
  Word w{3, 0, 1, 0};
  CHECK(canonical_word(a, w) == Word{0, 0, 3, 1});
  Alphabet b{2, false};
  CHECK(b.t_symbol(1, 0) == 2);
  CHECK(canonical_word(b, Word{2, 1}) == Word{2, 1});
}

TEST_CASE("NCPoly arithmetic and concatenation") {
  Alphabet a{2, false};
  NCPoly x = letter(0), y = letter(1);
  NCPoly xy = x.concat(y, a);
  NCPoly yx = y.concat(x, a);
  CHECK(xy.degree() == 2);
  CHECK(!(xy - yx).is_zero());
  CHECK((xy - xy).is_zero());
  NCPoly s = x + y;
  CHECK(s.concat(s, a).t.size() == 4);
  CHECK((x + y).degree() == 1);
}

TEST_CASE("degree basis enumerates lexicographically") {
  Alphabet a{2, false};
  DegreeBasis db = degree_basis(a, 2);
  CHECK(int(db.words.size()) == 16);
  CHECK(db.words.front() == Word{0, 0});
  CHECK(db.words.back() == Word{3, 3});
  for (int i = 0; i < int(db.words.size()); ++i) CHECK(db.index.at(db.words[i]) == i);
}

TEST_CASE("commutative quotient has polynomial-ring dimensions") {
  Alphabet a{2, false};
  GradedQuotient gq(commutative_relations(a), 4);
  for (int d = 0; d <= 4; ++d)
    CHECK(gq.degree(d).quotient_dim() == binom(4 - 1 + d, d));
  // both orders of a product share one normal form
  NCPoly nf1 = gq.normal_form(letter(3).concat(letter(0), a));
  NCPoly nf2 = gq.normal_form(letter(0).concat(letter(3), a));
  REQUIRE(nf1.t.size() == 1);
  CHECK((nf1 - nf2).is_zero());
}

TEST_CASE("quotient multiplication is associative and respects relations") {
  Alphabet a{2, false};
  GradedQuotient gq(commutative_relations(a), 3);
  NCPoly x = letter(0), y = letter(3), z = letter(2);
  CHECK((gq.multiply(gq.multiply(x, y), z) - gq.multiply(x, gq.multiply(y, z)))
            .is_zero());
  CHECK((gq.multiply(x, y) - gq.multiply(y, x)).is_zero());
}

TEST_CASE("ideal slice of a single quadratic relation") {
  Alphabet a{2, false};
  // single relation xy - yx for one pair only: partial commutativity
  NCPoly r;
  r.add_term(Word{0, 1}, QScalar(1));
  r.add_term(Word{1, 0}, QScalar(-1));
  RelationSet rels(a, {r});
  RrefResult slice2 = ideal_slice(rels, 2);
  CHECK(slice2.rank() == 1);
  // degree 3: the eight one-letter placements u*r and r*v are independent
  RrefResult slice3 = ideal_slice(rels, 3);
  CHECK(slice3.rank() == 8);
}

TEST_CASE("centralizer of the full polynomial ring is everything") {
  Alphabet a{2, false};
  GradedQuotient gq(commutative_relations(a), 2);
  CHECK(centralizer_basis(gq, 1).size() == 4);
}

TEST_CASE("relation sets deduplicate dependent relations") {
  Alphabet a{2, false};
  NCPoly r;
  r.add_term(Word{0, 1}, QScalar(1));
  r.add_term(Word{1, 0}, QScalar(-1));
  RelationSet rels(a, {r, r.scaled(QScalar::q_power(2))});
  CHECK(int(rels.relations().size()) == 1);
}
