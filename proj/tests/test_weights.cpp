#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qschur/weights.hpp"

using namespace qschur;

TEST_CASE("residue maps into 1..n") {
  CHECK(residue(5, 3).index == 2);
  CHECK(residue(0, 3).index == 3);
  CHECK(residue(3, 3).index == 3);
  CHECK(residue(-1, 3).index == 2);
  CHECK(residue(-3, 3).index == 3);
  for (long t = -20; t <= 20; ++t) {
    int i = residue(t, 4).index;
    CHECK(i >= 1);
    CHECK(i <= 4);
    CHECK((t - i) % 4 == 0);
  }
}

TEST_CASE("color successors wrap") {
  CHECK(next_color({3}, 3).index == 1);
  CHECK(prev_color({1}, 3).index == 3);
  for (int i = 1; i <= 5; ++i) CHECK(prev_color(next_color({i}, 5), 5).index == i);
}

TEST_CASE("simple roots sum to zero cyclically") {
  for (int n : {2, 3, 5}) {
    Weight total(n, 0);
    for (int i = 1; i <= n; ++i) total = add(total, root({i}, n));
    CHECK(total == Weight(n, 0));
  }
  CHECK(root({3}, 3) == Weight{-1, 0, 1});
  CHECK(root({1}, 3) == Weight{1, -1, 0});
}

TEST_CASE("rotate moves the last entry first and has order n") {
  Weight lam{1, 2, 0};
  CHECK(rotate(lam) == Weight{0, 1, 2});
  Weight w{4, 7, -1, 2};
  Weight r = w;
  for (int k = 0; k < 4; ++k) r = rotate(r);
  CHECK(r == w);
}

TEST_CASE("Lambda(n,r) enumeration") {
  CHECK(enumerate_compositions(3, 3).size() == 10);
  CHECK(enumerate_compositions(4, 4).size() == 35);
  CHECK(enumerate_compositions(2, 1).size() == 2);
  for (const auto& lam : enumerate_compositions(3, 3)) {
    CHECK(lam.rank() == 3);
    CHECK(lam.weight_sum() == 3);
    CHECK(in_lambda(lam.entries(), 3, 3));
  }
  // lexicographic: first is (0,0,3), last is (3,0,0)
  auto all = enumerate_compositions(3, 3);
  CHECK(all.front().entries() == std::vector<int>{0, 0, 3});
  CHECK(all.back().entries() == std::vector<int>{3, 0, 0});
}

TEST_CASE("weight of a tuple counts residues") {
  std::vector<long> t{1, 2, 3};
  CHECK(weight_of(t, 3).entries() == std::vector<int>{1, 1, 1});
  std::vector<long> u{4, 1, -2};
  CHECK(weight_of(u, 3).entries() == std::vector<int>{3, 0, 0});
}

TEST_CASE("phi solves the difference system or reports no solution") {
  std::vector<int> mu1{1, 0};
  CHECK(!phi(mu1, 3, 3).has_value());
  std::vector<int> mu2{0, 0};
  REQUIRE(phi(mu2, 3, 3).has_value());
  CHECK(*phi(mu2, 3, 3) == Weight{1, 1, 1});
  std::vector<int> mu3{1, 1};
  REQUIRE(phi(mu3, 3, 3).has_value());
  CHECK(*phi(mu3, 3, 3) == Weight{2, 1, 0});
  // solution may leave the nonnegative cone; phi itself is integral
  std::vector<int> mu4{3, 0};
  REQUIRE(phi(mu4, 3, 3).has_value());
  CHECK(*phi(mu4, 3, 3) == Weight{3, 0, 0});
}

TEST_CASE("phi inverts the difference map on Lambda(n,r)") {
  for (int n : {3, 4})
    for (const auto& lam : enumerate_compositions(n, n)) {
      std::vector<int> mu(n - 1);
      for (int i = 0; i + 1 < n; ++i) mu[i] = lam[i] - lam[i + 1];
      auto back = phi(mu, n, n);
      REQUIRE(back.has_value());
      CHECK(*back == Weight(lam.entries().begin(), lam.entries().end()));
    }
}

TEST_CASE("composition validation") {
  CHECK_THROWS(Composition({1, -1, 3}));
  CHECK(Composition({0, 2, 1}).weight_sum() == 3);
  CHECK(!in_lambda({1, -1, 3}, 3, 3));
  CHECK(!in_lambda({1, 1}, 3, 2));
}
