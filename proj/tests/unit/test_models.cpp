#include <doctest.h>

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <vector>

#include "../support/oracles.hpp"
#include "asearch/configuration.hpp"
#include "asearch/models.hpp"

using namespace asearch;

namespace {

std::vector<Value> v(std::initializer_list<Value> values) { return values; }

const std::vector<Value> kMagic3 = {2, 7, 6, 9, 5, 1, 4, 3, 8};

// Walks a random swap sequence through a model's evaluator and checks every
// query against full recomputation.
void check_evaluator(const ProblemModel& model, std::uint64_t seed, int steps) {
  RandomSource rng(seed);
  const auto domain = model.base_domain();
  auto c = random_permutation(std::span<const Value>(domain), rng);
  auto eval = model.make_evaluator();
  Cost cost = eval->reset(c);
  REQUIRE(cost == model.cost_of_solution(c));
  const std::size_t n = model.size();
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(rng.below(n));
    const auto j = static_cast<std::size_t>(rng.below(n));
    const auto k = static_cast<std::size_t>(rng.below(n));
    CHECK(eval->cost_on_variable(c, k) == model.cost_on_variable(c, k));
    const Cost projected = eval->cost_if_swap(c, cost, i, j);
    auto copy = c;
    copy.swap(i, j);
    REQUIRE(projected == model.cost_of_solution(copy));
    CHECK(model.cost_if_swap(c, cost, i, j) == projected);
    if (rng.below(2) == 0) {
      c.swap(i, j);
      eval->swapped(c, i, j);
      cost = projected;
    }
  }
  CHECK(eval->reset(c) == cost);
}

}  // namespace

TEST_CASE("magic square cost examples") {
  MagicSquareModel m(3);
  CHECK(m.magic_constant() == 15);
  CHECK(m.cost_of_solution(kMagic3) == 0);
  const auto identity = v({1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(m.cost_of_solution(identity) == 24);
  CHECK(m.cost_on_variable(identity, 4) == 0);
  CHECK(m.cost_on_variable(identity, 0) == 12);
  for (std::size_t k = 0; k < 9; ++k) CHECK(m.cost_on_variable(kMagic3, k) == 0);
  CHECK(m.verify(kMagic3));
  CHECK_FALSE(m.verify(identity));
}

TEST_CASE("magic square rejects bad input") {
  CHECK_THROWS_AS(MagicSquareModel(2), std::invalid_argument);
  MagicSquareModel m(3);
  CHECK_THROWS_AS(m.cost_of_solution(v({0, 1, 2, 3, 4, 5, 6, 7, 8})), std::invalid_argument);
  CHECK_THROWS_AS(m.cost_of_solution(v({1, 2, 3})), std::invalid_argument);
  CHECK_FALSE(m.verify(v({5, 5, 5, 5, 5, 5, 5, 5, 5})));
}

TEST_CASE("transposed magic square stays magic") {
  MagicSquareModel m(3);
  std::vector<Value> t(9);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) t[c * 3 + r] = kMagic3[r * 3 + c];
  }
  CHECK(m.cost_of_solution(t) == 0);
  CHECK(m.verify(t));
}

TEST_CASE("all-interval cost examples") {
  AllIntervalModel m8(8);
  const auto known = v({3, 6, 0, 7, 2, 4, 5, 1});
  CHECK(m8.cost_of_solution(known) == 0);
  CHECK(m8.verify(known));
  std::vector<Value> reversed(known.rbegin(), known.rend());
  CHECK(m8.cost_of_solution(reversed) == 0);

  AllIntervalModel m3(3);
  const auto line = v({0, 1, 2});
  // Distance 2 is missing; every position can repair it with one exchange.
  CHECK(m3.cost_of_solution(line) == 64);
  CHECK(m3.cost_on_variable(line, 1) == 65);
  CHECK(m3.cost_on_variable(line, 0) == 65);
  // Missing 5 outweighs missing 1 through 4 together.
  CHECK(AllIntervalModel::distance_weight(5) >
        AllIntervalModel::distance_weight(1) + AllIntervalModel::distance_weight(2) +
            AllIntervalModel::distance_weight(3) + AllIntervalModel::distance_weight(4));
  CHECK_FALSE(m3.verify(line));

  AllIntervalModel m2(2);
  CHECK(m2.cost_of_solution(v({0, 1})) == 0);
  CHECK(m2.cost_of_solution(v({1, 0})) == 0);
  AllIntervalModel m1(1);
  CHECK(m1.cost_of_solution(v({0})) == 0);
  CHECK(m1.verify(v({0})));
  CHECK_THROWS_AS(AllIntervalModel(0), std::invalid_argument);
}

TEST_CASE("partition cost examples") {
  PartitionModel m(8);
  const auto known = v({1, 4, 6, 7, 2, 3, 5, 8});
  CHECK(m.cost_of_solution(known) == 0);
  CHECK(m.verify(known));
  CHECK(m.cost_of_solution(v({7, 6, 4, 1, 8, 5, 3, 2})) == 0);
  const auto identity = v({1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(m.cost_of_solution(identity) == 160);
  CHECK_FALSE(m.verify(identity));
  // Exchanges inside one group keep the cost.
  CHECK(m.cost_if_swap(identity, 160, 0, 3) == 160);
  CHECK(m.cost_if_swap(identity, 160, 5, 7) == 160);
  for (std::size_t i = 0; i < 8; ++i) CHECK(m.cost_on_variable(known, i) == 0);
  // Exchanging 1 and 8 leaves |-2| + |-18| = 20, the best any position gets.
  CHECK(m.cost_on_variable(identity, 0) == 160 - 20 + 1);
  CHECK(m.cost_on_variable(identity, 7) == 160 - 20 + 1);
  // 4 can at best reach 56 (with 8), 5 only 104 (with 4).
  CHECK(m.cost_on_variable(identity, 3) == 160 - 56 + 1);
  CHECK(m.cost_on_variable(identity, 4) == 160 - 104 + 1);
  CHECK_THROWS_AS(PartitionModel(6), std::invalid_argument);
  CHECK_THROWS_AS(PartitionModel(0), std::invalid_argument);
}

TEST_CASE("costas cost examples") {
  CostasModel m3(3);
  CHECK(m3.cost_of_solution(v({1, 3, 2})) == 0);
  CHECK(m3.verify(v({1, 3, 2})));
  CostasModel m4(4);
  const auto identity = v({1, 2, 3, 4});
  CHECK(m4.cost_of_solution(identity) == 3);
  CHECK(oracle::costas_projection({1, 2, 3, 4}, 0) == 2);
  CHECK(m4.cost_on_variable(identity, 0) == 2);
  CHECK(m4.cost_on_variable(identity, 1) == 3);
  CHECK_FALSE(m4.verify(identity));
  CostasModel m1(1);
  CHECK(m1.cost_of_solution(v({1})) == 0);
  CHECK_THROWS_AS(CostasModel(0), std::invalid_argument);
}

TEST_CASE("projections match the test oracles") {
  RandomSource rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(12));
    auto base = random_permutation(static_cast<std::size_t>(n), rng);
    oracle::Perm ai(base.values().begin(), base.values().end());
    oracle::Perm cs(ai);
    for (auto& x : cs) ++x;
    AllIntervalModel all(n);
    CostasModel costas(n);
    CHECK(all.cost_of_solution(base.values()) == oracle::all_interval_cost(ai));
    std::vector<Value> shifted(cs.begin(), cs.end());
    CHECK(costas.cost_of_solution(shifted) == oracle::costas_cost(cs));
    for (int i = 0; i < n; ++i) {
      CHECK(all.cost_on_variable(base.values(), i) == oracle::all_interval_projection(ai, i));
      CHECK(costas.cost_on_variable(shifted, i) == oracle::costas_projection(cs, i));
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 * (1 + static_cast<int>(rng.below(12)));
    PartitionModel part(n);
    const auto domain = part.base_domain();
    const auto c = random_permutation(std::span<const Value>(domain), rng);
    oracle::Perm p(c.values().begin(), c.values().end());
    for (int i = 0; i < n; ++i) {
      CHECK(part.cost_on_variable(c.values(), i) == oracle::partition_projection(p, i));
    }
  }
}

TEST_CASE("full costs match the test oracles on larger instances") {
  RandomSource rng(5);
  MagicSquareModel magic(6);
  PartitionModel part(40);
  for (int trial = 0; trial < 100; ++trial) {
    const auto dm = magic.base_domain();
    const auto cm = random_permutation(std::span<const Value>(dm), rng);
    CHECK(magic.cost_of_solution(cm) ==
          oracle::magic_cost(oracle::Perm(cm.values().begin(), cm.values().end()), 6));
    const auto dp = part.base_domain();
    const auto cp = random_permutation(std::span<const Value>(dp), rng);
    CHECK(part.cost_of_solution(cp) ==
          oracle::partition_cost(oracle::Perm(cp.values().begin(), cp.values().end())));
  }
}

TEST_CASE("evaluators agree with full recomputation") {
  check_evaluator(MagicSquareModel(3), 1, 2000);
  check_evaluator(MagicSquareModel(7), 2, 2000);
  check_evaluator(AllIntervalModel(2), 3, 200);
  check_evaluator(AllIntervalModel(25), 4, 2000);
  check_evaluator(PartitionModel(4), 5, 200);
  check_evaluator(PartitionModel(64), 6, 2000);
  check_evaluator(CostasModel(2), 7, 200);
  check_evaluator(CostasModel(13), 8, 2000);
}

TEST_CASE("clone and registry") {
  for (const auto& name : model_names()) {
    const int size = name == "partition" ? 8 : 5;
    auto model = make_model(name, size);
    CHECK(model->name() == name);
    CHECK(model->order() == size);
    auto copy = model->clone();
    CHECK(copy->size() == model->size());
    CHECK(copy->base_domain() == model->base_domain());
  }
  CHECK(make_model("magic-square", 4)->size() == 16);
  CHECK_THROWS_AS(make_model("sudoku", 9), std::invalid_argument);
  CHECK_THROWS_AS(make_model("partition", 10), std::invalid_argument);
  CHECK(is_registered_model("costas"));
  CHECK_FALSE(is_registered_model("Costas"));
}

TEST_CASE("verify rejects non-permutations") {
  CHECK_FALSE(CostasModel(3).verify(v({1, 1, 2})));
  CHECK_FALSE(CostasModel(3).verify(v({1, 3})));
  CHECK_FALSE(AllIntervalModel(3).verify(v({0, 2, 2})));
  CHECK_FALSE(PartitionModel(4).verify(v({1, 4, 4, 1})));
}
