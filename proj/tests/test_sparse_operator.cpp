// Copyright 2026 The pauliprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pauliprop/sparse_operator.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace pauliprop;

namespace {
PauliString label(const char* text, int n) {
  return parse_pauli_label(text, n);
}
}  // namespace

TEST_CASE("upsert and exact cancellation") {
  SparseOperator op(4);
  PauliString i1 = label("Z0", 4);
  op.upsert(i1, 0.5);
  CHECK(op.term_count() == 1);
  CHECK(op.coefficient(i1) == 0.5);

  op.upsert(i1, -0.5);
  CHECK(op.term_count() == 1);  // zero persists until a truncation pass
  CHECK(op.coefficient(i1) == 0.0);

  SparseOperator order(4);
  order.upsert(i1, 0.25);
  order.upsert(i1, 0.25);
  CHECK(order.coefficient(i1) == 0.5);
}

TEST_CASE("scale_in_place") {
  SparseOperator op(2);
  PauliString x = label("X0", 2);
  op.upsert(x, 1.0);
  op.scale_in_place(x, std::cos(0.0));
  CHECK(op.coefficient(x) == 1.0);
  op.scale_in_place(x, 0.0);
  CHECK(op.term_count() == 1);
  CHECK(op.coefficient(x) == 0.0);

  PauliString y = label("Y1", 2);
  op.upsert(y, -0.2);
  op.scale_in_place(y, 0.5);
  CHECK(op.coefficient(y) == doctest::Approx(-0.1));

  CHECK_THROWS_AS(op.scale_in_place(label("Z0", 2), 2.0), std::out_of_range);
}

TEST_CASE("local_max_abs") {
  SparseOperator op(3);
  CHECK(op.local_max_abs() == 0.0);
  op.upsert(label("X0", 3), 0.3);
  op.upsert(label("Z1", 3), -0.7);
  CHECK(op.local_max_abs() == doctest::Approx(0.7));
  SparseOperator identity_only(3);
  identity_only.upsert(PauliString{}, 1.0);
  CHECK(identity_only.local_max_abs() == 1.0);
}

TEST_CASE("truncate") {
  TruncationPolicy exact{0.0, TruncationCadence::PerGate};

  SparseOperator op(4);
  op.upsert(label("X0", 4), 1.0);
  op.upsert(label("X1", 4), 1e-5);
  op.upsert(label("X2", 4), 1e-7);
  op.upsert(label("X3", 4), 0.0);

  // epsilon0 = 0: only exact zeros go.
  SUBCASE("epsilon0 zero") {
    size_t removed = op.truncate(1.0, exact);
    CHECK(removed == 1);
    CHECK(op.term_count() == 3);
  }

  SUBCASE("relative threshold") {
    TruncationPolicy policy{1e-6, TruncationCadence::PerGate};
    size_t removed = op.truncate(1.0, policy);
    CHECK(removed == 2);  // 1e-7 and the exact zero
    CHECK(op.term_count() == 2);
    CHECK(op.contains(label("X0", 4)));
    CHECK(op.contains(label("X1", 4)));
  }

  SUBCASE("strict inequality keeps the boundary survivor") {
    SparseOperator single(4);
    single.upsert(label("Z0", 4), 0.5);
    TruncationPolicy policy{1e-4, TruncationCadence::PerGate};
    CHECK(single.truncate(0.5, policy) == 0);
    CHECK(single.term_count() == 1);
  }

  SUBCASE("the global maximum itself survives") {
    TruncationPolicy policy{1e-1, TruncationCadence::PerGate};
    op.truncate(1.0, policy);
    CHECK(op.contains(label("X0", 4)));
  }

  CHECK_THROWS_AS(op.truncate(-1.0, exact), std::invalid_argument);
}

TEST_CASE("expectation_zero_state") {
  SparseOperator op(63);
  op.upsert(label("Z62", 63), 1.0);
  CHECK(op.expectation_zero_state() == 1.0);

  SparseOperator off(1);
  off.upsert(label("X0", 1), 0.3);
  CHECK(off.expectation_zero_state() == 0.0);

  SparseOperator mixed(2);
  mixed.upsert(label("Z0", 2), 0.25);
  mixed.upsert(label("Z1 Z0", 2), 0.5);
  mixed.upsert(label("Y0", 2), 9.0);
  mixed.upsert(label("X1 Z0", 2), 9.0);
  CHECK(mixed.expectation_zero_state() == doctest::Approx(0.75));
}

TEST_CASE("dump round-trips") {
  SparseOperator op(5);
  op.upsert(label("Z4 Y2", 5), -0.123456789012345678);
  op.upsert(label("X0", 5), 1e-300);
  op.upsert(PauliString{}, 2.5);

  std::ostringstream out;
  op.dump(out);
  std::istringstream in(out.str());
  SparseOperator back = SparseOperator::load_dump(in, 5);
  CHECK(back.term_count() == op.term_count());
  CHECK(back.coefficient(label("Z4 Y2", 5)) ==
        op.coefficient(label("Z4 Y2", 5)));
  CHECK(back.coefficient(label("X0", 5)) == 1e-300);
  CHECK(back.coefficient(PauliString{}) == 2.5);
}

TEST_CASE("density histogram") {
  SparseOperator op(2);
  op.upsert(label("Z0", 2), 1.0);
  std::vector<SparseOperator> shards;
  shards.push_back(std::move(op));

  SUBCASE("single term lands in the top bin") {
    auto hist = density_histogram(shards, 1.0, 10, 1e-6);
    CHECK(hist.positive.back() == doctest::Approx(1.0));
    double mass = 0;
    for (double v : hist.positive) mass += v;
    for (double v : hist.negative) mass += v;
    CHECK(mass == doctest::Approx(1.0));
  }

  SUBCASE("symmetric pair splits by sign") {
    shards[0].upsert(label("X0", 2), -1.0);
    auto hist = density_histogram(shards, 1.0, 8, 1e-6);
    CHECK(hist.positive.back() == doctest::Approx(0.5));
    CHECK(hist.negative.back() == doctest::Approx(0.5));
  }

  SUBCASE("no mass below the truncation threshold") {
    shards[0].upsert(label("Y0", 2), 2e-4);
    TruncationPolicy policy{1e-4, TruncationCadence::PerGate};
    shards[0].truncate(1.0, policy);
    auto hist = density_histogram(shards, 1.0, 16, 1e-4);
    // Everything surviving sits strictly above the lower edge.
    double mass = 0;
    for (double v : hist.positive) mass += v;
    for (double v : hist.negative) mass += v;
    CHECK(mass == doctest::Approx(1.0));
    CHECK(hist.bin_edges.front() == doctest::Approx(1e-4));
  }

  SUBCASE("zero max with nonempty store is rejected") {
    CHECK_THROWS_AS(density_histogram(shards, 0.0, 4, 0.0),
                    std::invalid_argument);
  }

  SUBCASE("tsv shape") {
    auto hist = density_histogram(shards, 1.0, 4, 1e-6);
    std::string tsv = hist.to_tsv();
    CHECK(tsv.find("bin_low\tbin_high\tsign\tnormalized_count") == 0);
    size_t lines = std::count(tsv.begin(), tsv.end(), '\n');
    CHECK(lines == 1 + 2 * 4);
  }
}
