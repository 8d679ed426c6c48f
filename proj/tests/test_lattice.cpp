#include <doctest.h>

#include <random>

#include "binoid/lattice.hpp"
#include "binoid/presentation.hpp"

using namespace binoid;

namespace {

void check_snf_contract(const IMat& a) {
  SNFResult r = smith_normal_form(a);
  // U a V == D
  IMat uav = matrix_product(matrix_product(r.u, a), r.v);
  REQUIRE(uav.size() == r.d.size());
  for (std::size_t i = 0; i < uav.size(); ++i) CHECK(uav[i] == r.d[i]);
  // D diagonal with a divisibility chain, entries non-negative.
  auto diag = r.diagonal();
  for (std::size_t i = 0; i < r.d.size(); ++i)
    for (std::size_t j = 0; j < r.d[i].size(); ++j)
      if (i != j) CHECK(r.d[i][j] == 0);
  for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
    if (diag[i] == 0) CHECK(diag[i + 1] == 0);
  }
  // U, V unimodular.
  BigInt du = determinant(r.u), dv = determinant(r.v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
}

}  // namespace

TEST_CASE("smith normal form of fixed matrices") {
  IMat zero(2, std::vector<BigInt>(3, 0));
  SNFResult rz = smith_normal_form(zero);
  CHECK(rz.rank == 0);
  check_snf_contract(zero);

  IMat row{{BigInt(4), BigInt(12), BigInt(-16)}};
  SNFResult rr = smith_normal_form(row);
  CHECK(rr.rank == 1);
  CHECK(rr.d[0][0] == 4);
  check_snf_contract(row);

  IMat id = identity_matrix(3);
  SNFResult ri = smith_normal_form(id);
  CHECK(ri.rank == 3);
  CHECK(ri.diagonal() == std::vector<BigInt>{1, 1, 1});
  check_snf_contract(id);
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    IMat a(r, std::vector<BigInt>(c));
    for (auto& row : a)
      for (auto& x : row) x = static_cast<long>(rng() % 19) - 9;
    check_snf_contract(a);
  }
}

TEST_CASE("difference group of free binoids") {
  LatticeData lat = difference_group(free_binoid(3));
  CHECK(lat.rank == 3);
  CHECK(lat.torsion_invariants.empty());
  CHECK(lat.torsion_order() == 1);
  for (const auto& e : lat.embedding) REQUIRE(e.has_value());
}

TEST_CASE("difference group of the torsion family") {
  for (std::int64_t a : {2, 3, 5}) {
    Presentation p = parse_presentation("binoid x,y | " + std::to_string(a) +
                                        "x = " + std::to_string(a) + "y");
    LatticeData lat = difference_group(p);
    CHECK(lat.rank == 1);
    CHECK(lat.torsion_invariants == std::vector<std::int64_t>{a});
    // Both generators project to the same free part.
    REQUIRE(lat.embedding[0].has_value());
    REQUIRE(lat.embedding[1].has_value());
    CHECK(lat.embedding[0]->free_part == lat.embedding[1]->free_part);
    // ... but differ in torsion.
    CHECK(lat.embedding[0]->torsion_part != lat.embedding[1]->torsion_part);
  }
}

TEST_CASE("difference group of the numerical submonoid with torsion") {
  Presentation p = parse_presentation("binoid a,b | 6a = 4b");
  TorsionFreefication tf = torsion_freefication(p);
  CHECK(tf.torsion_order == 2);
  CHECK(tf.lattice.rank == 1);
  REQUIRE(tf.monoid_generators.size() == 2);
  std::int64_t ga = tf.monoid_generators[0][0];
  std::int64_t gb = tf.monoid_generators[1][0];
  // The projections generate <2,3> up to a global sign.
  CHECK(std::abs(ga) == 2);
  CHECK(std::abs(gb) == 3);
  CHECK(ga * gb > 0);
}

TEST_CASE("difference group of the 4X+12Y=16Z example") {
  Presentation p = parse_presentation("binoid X,Y,Z | 4X+12Y = 16Z");
  LatticeData lat = difference_group(p);
  CHECK(lat.rank == 2);
  CHECK(lat.torsion_invariants == std::vector<std::int64_t>{4});
  TorsionFreefication tf = torsion_freefication(p);
  REQUIRE(tf.monoid_generators.size() == 3);
  // The projections satisfy X' + 3Y' = 4Z'.
  for (std::size_t j = 0; j < 2; ++j)
    CHECK(tf.monoid_generators[0][j] + 3 * tf.monoid_generators[1][j] ==
          4 * tf.monoid_generators[2][j]);
  // They span all of Z^2.
  IMat g(3, std::vector<BigInt>(2));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) g[i][j] = tf.monoid_generators[i][j];
  SNFResult snf = smith_normal_form(g);
  CHECK(snf.diagonal() == std::vector<BigInt>{1, 1});
}

TEST_CASE("word images in the difference group") {
  Presentation p = parse_presentation("binoid x,y | 3x = 3y");
  LatticeData lat = difference_group(p);
  auto img = lat.word_image(Word{2, 1});
  REQUIRE(img.has_value());
  CHECK(img->free_part[0] == 3 * lat.embedding[0]->free_part[0]);
  // 2x + y and 3x agree in the free part but not in torsion.
  auto img2 = lat.word_image(Word{3, 0});
  CHECK(img->free_part == img2->free_part);
  CHECK(img->torsion_part != img2->torsion_part);
}

TEST_CASE("killed generators have no image") {
  Presentation p = quotient_by_ideal(parse_presentation("binoid x,y | 3x = 3y"), {Word{0, 1}});
  LatticeData lat = difference_group(p);
  CHECK(lat.rank == 1);
  REQUIRE(lat.embedding[0].has_value());
  CHECK_FALSE(lat.embedding[1].has_value());
  CHECK_FALSE(lat.word_image(Word{1, 1}).has_value());
}
