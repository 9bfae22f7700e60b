#include <stdexcept>

#include "doctest.h"
#include "qprop/linmap.hpp"

using namespace qprop;

TEST_CASE("tensor index digits") {
  CHECK(power_size(6, 3) == 216);
  CHECK(power_size(5, 0) == 1);
  CHECK_THROWS_AS(power_size(10, 30), std::overflow_error);
  for (Index idx = 0; idx < 27; ++idx) {
    const auto digits = index_to_digits(idx, 3, 3);
    CHECK(digits_to_index(digits, 3) == idx);
  }
  // factor 1 is the most significant digit
  CHECK(index_to_digits(5, 2, 3) == std::vector<int>{1, 0, 1});
  CHECK_THROWS_AS(index_to_digits(8, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(digits_to_index({2}, 2), std::invalid_argument);
}

TEST_CASE("sparse columns never store zeros") {
  LinMap a(2, 1, 1);
  a.add(0, 0, Rational(1) / 2);
  a.add(0, 0, Rational(-1) / 2);
  CHECK(a.column(0).empty());
  CHECK(a == LinMap(2, 1, 1));
  a.add(1, 0, 3);
  CHECK(a.entry(1, 0) == 3);
  CHECK(a.entry(0, 1) == 0);
  CHECK_THROWS_AS(a.add(2, 0, 1), std::out_of_range);
}

TEST_CASE("composition and identities") {
  LinMap a(2, 1, 1);
  a.add(0, 0, 1);
  a.add(1, 0, 2);
  a.add(0, 1, 3);
  const LinMap id = LinMap::identity(2, 1);
  CHECK(compose(id, a) == a);
  CHECK(compose(a, id) == a);
  LinMap b(2, 1, 1);
  b.add(0, 0, 1);
  b.add(1, 1, 5);
  LinMap ab(2, 1, 1);  // a then b
  ab.add(0, 0, 1);
  ab.add(1, 0, 10);
  ab.add(0, 1, 3);
  CHECK(compose(b, a) == ab);
  CHECK_THROWS_AS(compose(a, LinMap(2, 1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(compose(a, LinMap(3, 1, 1)), std::invalid_argument);
}

TEST_CASE("tensor product is the Kronecker product") {
  LinMap a(2, 1, 1), b(2, 1, 1);
  a.add(0, 0, 1);
  a.add(1, 0, 2);
  a.add(1, 1, 3);
  b.add(0, 1, 5);
  b.add(1, 1, 7);
  const LinMap ab = tensor(a, b);
  CHECK(ab.dom_power() == 2);
  for (Index ra = 0; ra < 2; ++ra)
    for (Index rb = 0; rb < 2; ++rb)
      for (Index ca = 0; ca < 2; ++ca)
        for (Index cb = 0; cb < 2; ++cb)
          CHECK(ab.entry(ra * 2 + rb, ca * 2 + cb) == a.entry(ra, ca) * b.entry(rb, cb));
  // interchange with composition
  const LinMap left = compose(tensor(a, b), tensor(b, a));
  const LinMap right = tensor(compose(a, b), compose(b, a));
  CHECK(left == right);
}

TEST_CASE("permuting tensor factors") {
  const LinMap swap = permute_tensor(Permutation({2, 1}), 2);
  // basis tuple (0, 1) goes to (1, 0)
  CHECK(swap.entry(2, 1) == 1);
  CHECK(swap.entry(1, 2) == 1);
  CHECK(swap.entry(0, 0) == 1);
  CHECK(swap.entry(3, 3) == 1);
  CHECK(compose(swap, swap) == LinMap::identity(2, 2));
  // contravariant in the permutation
  for (const auto& s : all_permutations(3))
    for (const auto& t : all_permutations(3))
      CHECK(compose(permute_tensor(s, 2), permute_tensor(t, 2)) ==
            permute_tensor(t.compose(s), 2));
}
