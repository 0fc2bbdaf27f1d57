#include <doctest.h>

#include "ecg/cover.hpp"
#include "ecg/mols.hpp"
#include "ecg/special.hpp"

using namespace ecg;

TEST_CASE("prime powers") {
  CHECK(prime_power(8) == std::pair{2, 3});
  CHECK(prime_power(25) == std::pair{5, 2});
  CHECK(prime_power(7) == std::pair{7, 1});
  CHECK_FALSE(prime_power(6));
  CHECK_FALSE(prime_power(1));
  CHECK(mols_order_supported(27));
  CHECK_FALSE(mols_order_supported(32));
}

TEST_CASE("field axioms on every tabulated order") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27}) {
    const auto f = FiniteField::of_order(q);
    REQUIRE(f);
    for (int a = 0; a < q; ++a) {
      CHECK(f->add(a, 0) == a);
      CHECK(f->mul(a, 1) == a);
      CHECK(f->mul(a, 0) == 0);
      if (a == 0) continue;
      int inverses = 0;
      for (int b = 1; b < q; ++b) inverses += f->mul(a, b) == 1;
      CHECK(inverses == 1);
    }
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; c += 3)
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
  }
  CHECK_FALSE(FiniteField::of_order(6));
}

TEST_CASE("GF(4) multiplication table") {
  // x^2 = x + 1: with x = 2, x^2 = 3.
  const auto f = FiniteField::of_order(4);
  CHECK(f->mul(2, 2) == 3);
  CHECK(f->mul(2, 3) == 1);
  CHECK(f->mul(3, 3) == 2);
  CHECK(f->add(2, 3) == 1);
}

TEST_CASE("complete families are latin and orthogonal") {
  for (int q : {3, 4, 5, 7, 8, 9}) {
    const auto fam = mols_family(q, q - 1);
    CHECK(fam.squares.size() == static_cast<std::size_t>(q - 1));
    for (const auto& s : fam.squares) CHECK(s.is_latin());
    CHECK(check_orthogonal(fam).orthogonal);
  }
}

TEST_CASE("unsupported requests") {
  CHECK_THROWS_AS(mols_family(6, 2), InputError);
  CHECK_THROWS_AS(mols_family(4, 4), InputError);
  CHECK_THROWS_AS(mols_family(0, 1), InputError);
  CHECK(mols_family(6, 1).squares.front().is_latin());
  CHECK(mols_family(10, 0).squares.empty());
}

TEST_CASE("orthogonality witness") {
  const auto one = mols_family(3, 1);
  MolsFamily twice{3, {one.squares[0], one.squares[0]}};
  const auto r = check_orthogonal(twice);
  CHECK_FALSE(r.orthogonal);
  REQUIRE(r.cells);
  const auto [c1, c2] = *r.cells;
  CHECK(twice.squares[0].at(c1.first, c1.second) == twice.squares[0].at(c2.first, c2.second));
}

TEST_CASE("latin square validation") {
  CHECK_FALSE(LatinSquare(2, {0, 1, 0, 1}).is_latin());
  CHECK(LatinSquare(2, {0, 1, 1, 0}).is_latin());
  CHECK_THROWS_AS(LatinSquare(2, {0, 1, 1}), InputError);
}

TEST_CASE("covers from squares") {
  const auto fam = mols_family(4, 3);
  for (int m = 3; m <= 5; ++m) {
    const auto c = cover_from_mols(4, m, fam);
    CHECK(c.cliques.size() == 16);
    CHECK_FALSE(verify_cover(complete_multipartite(4, m), c));
    CHECK(cliques_edge_disjoint(c.cliques));
  }
  CHECK_THROWS_AS(cover_from_mols(4, 6, fam), InputError);
  CHECK_THROWS_AS(cover_from_mols(4, 2, fam), InputError);
  CHECK_THROWS_AS(cover_from_mols(4, 5, mols_family(4, 2)), InputError);
  CHECK_THROWS_AS(cover_from_mols(3, 3, fam), InputError);
}
