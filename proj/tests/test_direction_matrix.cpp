#include <doctest.h>

#include <random>

#include "cdc/direction_matrix.hpp"
#include "support/oracles.hpp"

using namespace cdc;

namespace {

DirectionMatrix M(const char* s) { return DirectionMatrix::parse(s); }

// 4-connectivity of the set tiles, by explicit search over the 3x3 grid.
bool tiles_connected(DirectionMatrix m) {
  PixelRegion r(Frame{3, 3});
  for (int row = 1; row <= 3; ++row)
    for (int col = 1; col <= 3; ++col)
      if (m.at(row, col)) r.set(col - 1, 3 - row);
  return oracle::connected(r);
}

}  // namespace

TEST_CASE("parse and print") {
  const auto m = M("011/001/000");
  CHECK(m.at(1, 2));
  CHECK(m.at(1, 3));
  CHECK(m.at(2, 3));
  CHECK_FALSE(m.at(1, 1));
  CHECK(m.to_string() == "011/001/000");
  CHECK(m.to_string(false) == "011001000");
  CHECK(M("011001000") == m);
  CHECK(DirectionMatrix::center_only() == M("000/010/000"));
  CHECK(DirectionMatrix::single_tile(7) == M("000/000/100"));
  CHECK_THROWS_AS(M("01100100"), std::invalid_argument);
  CHECK_THROWS_AS(M("0110010001"), std::invalid_argument);
  CHECK_THROWS_AS(M("011/0x1/000"), std::invalid_argument);
}

TEST_CASE("model names") {
  for (Model m : {Model::Cdc, Model::CdcD, Model::CdcS}) CHECK(model_from_name(model_name(m)) == m);
  CHECK_FALSE(model_from_name("rcc8").has_value());
}

TEST_CASE("validity counts follow from connectivity of the tile sets") {
  int connected = 0;
  for (std::uint16_t b = 1; b < 512; ++b) {
    const auto m = DirectionMatrix::from_bits(b);
    CHECK(is_valid_matrix(m, Model::Cdc) == tiles_connected(m));
    CHECK(is_valid_matrix(m, Model::CdcS) == is_valid_matrix(m, Model::Cdc));
    CHECK(is_valid_matrix(m, Model::CdcD));
    connected += tiles_connected(m);
  }
  CHECK(connected == 218);
  CHECK(enumerate_basic(Model::Cdc).size() == 218);
  CHECK(enumerate_basic(Model::CdcD).size() == 511);
  CHECK_FALSE(is_valid_matrix(DirectionMatrix{}, Model::CdcD));
  CHECK_FALSE(is_valid_matrix(M("100/000/001"), Model::Cdc));
  CHECK(is_valid_matrix(M("100/000/001"), Model::CdcD));
  const auto all = enumerate_basic(Model::Cdc);
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("projections") {
  CHECK(x_projection(M("011/001/000")) == DirectionVector(false, true, true));
  CHECK(y_projection(M("011/001/000")) == DirectionVector(false, true, true));
  CHECK(x_projection(M("000/110/110")) == DirectionVector(true, true, false));
  CHECK(y_projection(M("000/110/110")) == DirectionVector(true, true, false));
  CHECK(y_projection(M("001/001/001")) == DirectionVector(true, true, true));
  CHECK(x_projection(M("000/000/100")) == DirectionVector(true, false, false));
  CHECK(y_projection(M("000/000/100")) == DirectionVector(true, false, false));
  // Split across both outer columns: the bounding interval covers the middle.
  CHECK(x_projection(M("100/000/001")) == DirectionVector(true, true, true));
  CHECK(y_projection(M("100/000/001")) == DirectionVector(true, true, true));
  CHECK(x_projection(M("000/101/000")) == DirectionVector(true, true, true));
  CHECK(y_projection(M("000/101/000")) == DirectionVector(false, true, false));
}

TEST_CASE("projections match the projected geometry of random regions") {
  std::mt19937 rng(21);
  for (int t = 0; t < 200; ++t) {
    const Frame f{6, 6};
    const auto a = oracle::random_region(f, 1 + t % 8, rng, t % 2 == 0);
    const auto b = oracle::random_region(f, 1 + t % 5, rng, true);
    const IntRect ma = oracle::bounding_box(a);
    const IntRect mb = oracle::bounding_box(b);
    const auto d = oracle::dir(a, mb);
    CHECK(x_projection(d) == direction_vector({ma.x_lo, ma.x_hi}, {mb.x_lo, mb.x_hi}));
    CHECK(y_projection(d) == direction_vector({ma.y_lo, ma.y_hi}, {mb.y_lo, mb.y_hi}));
    const auto back = oracle::dir(b, ma);
    const auto rx = projective_pair_relation(d, back, Axis::X);
    const auto ry = projective_pair_relation(d, back, Axis::Y);
    CHECK(rx.contains(basic_ia_of({ma.x_lo, ma.x_hi}, {mb.x_lo, mb.x_hi})));
    CHECK(ry.contains(basic_ia_of({ma.y_lo, ma.y_hi}, {mb.y_lo, mb.y_hi})));
  }
}

TEST_CASE("projective pair relation is converse-symmetric") {
  const auto all = enumerate_basic(Model::Cdc);
  for (auto a : all)
    for (auto b : all)
      for (Axis ax : {Axis::X, Axis::Y})
        REQUIRE(projective_pair_relation(a, b, ax) ==
                converse_ia(projective_pair_relation(b, a, ax)));
}

TEST_CASE("basic network storage") {
  CdcBasicNetwork n(3);
  CHECK_FALSE(n.complete());
  CHECK(n.get(1, 1) == DirectionMatrix::center_only());
  CHECK_THROWS_AS(n.set(1, 1, M("010/000/000")), std::invalid_argument);
  CHECK_THROWS_AS(n.set(0, 3, M("010/000/000")), std::out_of_range);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) n.set(i, j, M("100/000/001"));
  CHECK(n.complete());
  CHECK_FALSE(n.valid_for(Model::Cdc));
  CHECK(n.valid_for(Model::CdcD));
}

TEST_CASE("disjunctive network storage sorts and removes duplicates") {
  CdcDisjunctiveNetwork n(2);
  n.set(0, 1, {M("001/000/000"), M("100/000/000"), M("001/000/000")});
  CHECK(n.get(0, 1) == std::vector<DirectionMatrix>{M("100/000/000"), M("001/000/000")});
  CHECK(n.get(0, 0) == std::vector<DirectionMatrix>{DirectionMatrix::center_only()});
  CHECK_FALSE(n.valid_for(Model::Cdc));
  n.set(1, 0, {M("000/010/000")});
  CHECK(n.valid_for(Model::Cdc));
  CHECK_FALSE(n.all_singletons());
}

namespace {

CdcBasicNetwork running_example() {
  CdcBasicNetwork n(3);
  n.set(0, 1, M("011/001/000"));
  n.set(1, 0, M("000/110/110"));
  n.set(0, 2, M("110/010/000"));
  n.set(2, 0, M("000/001/011"));
  n.set(1, 2, M("000/100/000"));
  n.set(2, 1, M("001/001/001"));
  return n;
}

}  // namespace

TEST_CASE("projective networks of the running example") {
  const auto res = projective_networks(running_example());
  REQUIRE(res.networks.has_value());
  const auto& x = res.networks->x;
  const auto& y = res.networks->y;
  CHECK(x.get(0, 1) == IaRelationSet{IaBasic::oi});
  CHECK(x.get(0, 2) == IaRelationSet{IaBasic::o});
  CHECK(x.get(1, 2) == IaRelationSet{IaBasic::p});
  CHECK(y.get(0, 1) == IaRelationSet{IaBasic::oi});
  CHECK(y.get(0, 2) == IaRelationSet{IaBasic::oi});
  CHECK(y.get(1, 2) == IaRelationSet{IaBasic::d});
}

TEST_CASE("projective networks edge cases") {
  const auto single = projective_networks(CdcBasicNetwork(1));
  CHECK(single.networks.has_value());

  CdcBasicNetwork n(2);
  n.set(0, 1, M("000/100/000"));
  n.set(1, 0, M("000/100/000"));
  const auto res = projective_networks(n);
  REQUIRE(res.failure.has_value());
  CHECK(res.failure->axis == Axis::X);
  CHECK(res.failure->i == 0);
  CHECK(res.failure->j == 1);
}

TEST_CASE("dir_of_digital") {
  PixelRegion a(Frame{3, 3});
  a.set(0, 0);
  CHECK(dir_of_digital(a, IntRect{1, 2, 1, 2}) == M("000/000/100"));
  PixelRegion b(Frame{3, 3});
  b.set(0, 0);
  b.set(1, 0);
  CHECK(dir_of_digital(b, IntRect{1, 2, 0, 1}) == M("000/110/000"));
  CHECK(dir_of_digital(b, mbr_of(b)) == DirectionMatrix::center_only());

  std::mt19937 rng(4);
  for (int t = 0; t < 200; ++t) {
    const auto r = oracle::random_region(Frame{7, 5}, 1 + t % 12, rng, t % 2 == 0);
    const auto s = oracle::random_region(Frame{7, 5}, 1 + t % 6, rng, true);
    CHECK(dir_of_digital(r, mbr_of(s)) == oracle::dir(r, oracle::bounding_box(s)));
  }
}
