#include <doctest.h>

#include <random>
#include <stdexcept>

#include "lpacket/clifford.hpp"
#include "lpacket/groups.hpp"

using namespace lpacket;
using clifford::Element;
using clifford::Rank;

namespace {

// Independent order oracle: multiply until the identity comes back.
int order_by_iteration(const Element& x, Rank rank) {
  Element acc = x;
  int ord = 1;
  while (!acc.is_identity()) {
    acc = clifford::mul(acc, x, rank);
    ++ord;
    REQUIRE(ord <= 8);
  }
  return ord;
}

// All 2^(rank+1) monomials at a rank.
std::vector<Element> all_elements(int rank) {
  std::vector<Element> out;
  for (int mask = 0; mask < (1 << rank); ++mask) {
    std::vector<int> support;
    for (int i = 0; i < rank; ++i) {
      if (mask & (1 << i)) support.push_back(i + 1);
    }
    for (int sign : {+1, -1}) {
      out.push_back(Element{sign, support});
    }
  }
  return out;
}

Element random_element(std::mt19937& rng, int rank) {
  std::uniform_int_distribution<int> mask_dist(0, (1 << rank) - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  int mask = mask_dist(rng);
  std::vector<int> support;
  for (int i = 0; i < rank; ++i) {
    if (mask & (1 << i)) support.push_back(i + 1);
  }
  return Element{sign_dist(rng) ? +1 : -1, support};
}

}  // namespace

TEST_CASE("generator products") {
  Rank r5(5);
  CHECK(clifford::mul(clifford::generator(1), clifford::generator(2), r5) ==
        Element{+1, {1, 2}});
  CHECK(clifford::mul(clifford::generator(2), clifford::generator(1), r5) ==
        Element{-1, {1, 2}});
  CHECK(clifford::mul(clifford::monomial({1, 2}), clifford::monomial({1, 2}),
                      r5) == Element{-1, {}});
}

TEST_CASE("square sign formula against brute-force squaring") {
  CHECK(clifford::square_sign(2) == -1);
  // k = 4 and k = 5: frozen from the product oracle below.
  Rank r5(5);
  Element m4 = clifford::monomial({1, 2, 3, 4});
  CHECK(clifford::mul(m4, m4, r5) == Element{+1, {}});
  CHECK(clifford::square_sign(4) == +1);
  Element m5 = clifford::monomial({1, 2, 3, 4, 5});
  CHECK(clifford::mul(m5, m5, r5) == Element{+1, {}});
  CHECK(clifford::square_sign(5) == +1);

  for (int k = 0; k <= 8; ++k) {
    Rank r8(8);
    std::vector<int> support;
    for (int i = 1; i <= k; ++i) support.push_back(i);
    Element m = clifford::monomial(support);
    Element sq = clifford::mul(m, m, r8);
    CHECK(sq.support.empty());
    CHECK(sq.sign == clifford::square_sign(k));
  }
}

TEST_CASE("element orders") {
  CHECK(clifford::order(clifford::minus_one()) == 2);
  CHECK(clifford::order(clifford::monomial({1, 2})) == 4);
  CHECK(clifford::order(clifford::monomial({1, 2, 3, 4})) == 2);
  CHECK(clifford::order(clifford::identity()) == 1);
}

TEST_CASE("order formula equals iterated multiplication at ranks 3..6") {
  for (int rank = 3; rank <= 6; ++rank) {
    for (const Element& x : all_elements(rank)) {
      CHECK(clifford::order(x) == order_by_iteration(x, Rank(rank)));
    }
  }
}

TEST_CASE("inverses") {
  Rank r5(5);
  CHECK(clifford::inverse(clifford::identity()) == clifford::identity());
  CHECK(clifford::inverse(clifford::generator(1)) == clifford::generator(1));

  // Brute-force oracle: search the cyclic group generated by x.
  Element x = clifford::monomial({1, 2});
  Element found{};
  Element power = x;
  for (int k = 0; k < 4; ++k) {
    if (clifford::mul(x, power, r5).is_identity()) found = power;
    power = clifford::mul(power, x, r5);
  }
  CHECK(found == Element{-1, {1, 2}});
  CHECK(clifford::inverse(x) == found);

  for (const Element& y : all_elements(5)) {
    CHECK(clifford::mul(y, clifford::inverse(y), r5).is_identity());
  }
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(Rank(2), std::invalid_argument);
  CHECK_THROWS_AS(Rank(9), std::invalid_argument);
  CHECK_THROWS_AS(
      clifford::mul(clifford::generator(6), clifford::generator(1), Rank(5)),
      std::invalid_argument);
  CHECK_THROWS_AS(clifford::validate(Element{+1, {2, 1}}, Rank(5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(clifford::validate(Element{0, {1}}, Rank(5)),
                  std::invalid_argument);
}

TEST_CASE("associativity fuzz, 1000 triples per rank") {
  std::mt19937 rng(20240517);
  for (int rank : {4, 5, 6}) {
    Rank r(rank);
    for (int trial = 0; trial < 1000; ++trial) {
      Element a = random_element(rng, rank);
      Element b = random_element(rng, rank);
      Element c = random_element(rng, rank);
      CHECK(clifford::mul(clifford::mul(a, b, r), c, r) ==
            clifford::mul(a, clifford::mul(b, c, r), r));
    }
  }
}

TEST_CASE("anticommutation of distinct generators") {
  for (int rank : {4, 5, 6}) {
    Rank r(rank);
    for (int i = 1; i <= rank; ++i) {
      for (int j = 1; j <= rank; ++j) {
        if (i == j) continue;
        CHECK(clifford::mul(clifford::generator(i), clifford::generator(j), r) ==
              clifford::negate(
                  clifford::mul(clifford::generator(j), clifford::generator(i), r)));
      }
    }
  }
}

TEST_CASE("center of the even monomial group at ranks 4, 5, 6") {
  for (int rank : {4, 5, 6}) {
    Rank r(rank);
    std::vector<Element> gens = {clifford::minus_one()};
    for (int i = 1; i <= rank; ++i) {
      for (int j = i + 1; j <= rank; ++j) {
        gens.push_back(clifford::monomial({i, j}));
      }
    }
    groups::CliffordGroup even = groups::generate(gens, r);
    CHECK(even.group.order() == (1 << rank));  // 2 * 2^(rank-1)

    groups::Subgroup center = even.group.center();
    std::vector<int> full_support;
    for (int i = 1; i <= rank; ++i) full_support.push_back(i);
    if (rank % 2 == 1) {
      CHECK(center.order() == 2);  // exactly {±1}
    } else {
      CHECK(center.order() == 4);  // {±1, ±w}
      int w = even.index_of(clifford::monomial(full_support));
      REQUIRE(w >= 0);
      CHECK(center.contains(w));
      CHECK(even.group.element_order(w) == (rank == 4 ? 2 : 4));
    }
  }
}

TEST_CASE("rendering") {
  CHECK(clifford::to_string(clifford::identity()) == "+1");
  CHECK(clifford::to_string(clifford::minus_one()) == "-1");
  CHECK(clifford::to_string(Element{-1, {1, 3, 5}}) == "-e{1,3,5}");
}
