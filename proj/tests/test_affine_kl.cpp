#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "ljmod/affine_kl.hpp"
#include "ljmod/errors.hpp"
#include "support/oracles.hpp"

using namespace ljmod;
using namespace ljmod::affine_kl;

namespace {

AffinePermutation ap(const oracle::Win& w) { return AffinePermutation(w); }

std::vector<long long> coeffs(const oracle::Poly& p) { return p; }

std::set<oracle::Win> double_coset(const oracle::Win& w, const std::vector<int>& gens) {
  std::set<oracle::Win> seen{w};
  std::vector<oracle::Win> stack{w};
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (int s : gens)
      for (const auto& y : {oracle::right_simple(x, s), oracle::left_simple(x, s)})
        if (seen.insert(y).second) stack.push_back(y);
  }
  return seen;
}

}  // namespace

TEST_SUITE("affine_kl") {

TEST_CASE("windows") {
  CHECK_THROWS_AS(AffinePermutation({1, 4, 3}), DomainError);
  CHECK_THROWS_AS(AffinePermutation({}), DomainError);
  CHECK(AffinePermutation::simple(3, 0).window() == std::vector<long long>{0, 2, 4});
  CHECK(AffinePermutation::simple(3, 1).window() == std::vector<long long>{2, 1, 3});
  CHECK(AffinePermutation::rotation(3).level() == 1);
  CHECK(length(AffinePermutation::rotation(3)) == 0);
  CHECK(AffinePermutation::parse("[2, 1, 3]") == AffinePermutation({2, 1, 3}));
  CHECK(AffinePermutation::parse("0 2 4") == AffinePermutation::simple(3, 0));
  CHECK_THROWS_AS(AffinePermutation::parse("1,x"), DomainError);
  const auto w = AffinePermutation({4, -1, 3});
  CHECK(w(4) == 7);
  CHECK(w(0) == 0);
  CHECK(w * w.inverse() == AffinePermutation::identity(3));
  CHECK(w.times_simple(0) == w * AffinePermutation::simple(3, 0));
  CHECK(w.simple_times(2) == AffinePermutation::simple(3, 2) * w);
  CHECK(length(AffinePermutation({2, 1, 3}).times_simple(2)) == 2);
  for (int i = 0; i < 4; ++i) CHECK(length(AffinePermutation::simple(4, i)) == 1);
}

TEST_CASE("length and descents agree with breadth-first search") {
  for (int d = 2; d <= 4; ++d) {
    const auto ball = oracle::bfs_ball(d, 8);
    for (const auto& [win, dist] : ball.dist) {
      const auto w = ap(win);
      CHECK(length(w) == dist);
      CHECK(w.level() == 0);
      const auto word = reduced_word(w);
      CHECK(static_cast<int>(word.size()) == dist);
      auto x = AffinePermutation::identity(d);
      for (int s : word) x = x.times_simple(s);
      CHECK(x == w);
      const auto rot = AffinePermutation::rotation(d) * w;
      CHECK(length(rot) == dist);
      CHECK(length(w.inverse()) == dist);
      for (int i = 0; i < d; ++i) {
        CHECK(w.has_right_descent(i) == (length(w.times_simple(i)) < dist));
        CHECK(w.has_left_descent(i) == (length(w.simple_times(i)) < dist));
      }
    }
  }
}

TEST_CASE("Bruhat order agrees with the subword property") {
  CHECK_FALSE(bruhat_leq(AffinePermutation::simple(3, 0), AffinePermutation::simple(3, 1)));
  CHECK_FALSE(bruhat_leq(AffinePermutation::simple(3, 1), AffinePermutation::simple(3, 0)));
  CHECK_THROWS_AS(bruhat_leq(AffinePermutation::identity(3), AffinePermutation::rotation(3)), DomainError);
  CHECK_THROWS_AS(bruhat_leq(AffinePermutation::identity(3), AffinePermutation::identity(2)), DomainError);
  for (int d = 2; d <= 4; ++d) {
    const auto ball = oracle::bfs_ball(d, 8);
    std::vector<std::pair<AffinePermutation, std::set<oracle::Win>>> below;
    for (const auto& w : ball.order) below.emplace_back(ap(w), oracle::subword_products(ball.order.front(), ball.word.at(w)));
    for (const auto& [w, set] : below)
      for (const auto& x : ball.order) {
        const bool expect = set.count(x) > 0;
        if (bruhat_leq(ap(x), w) != expect) {
          FAIL_CHECK("Bruhat mismatch " << ap(x).to_string() << " <= " << w.to_string());
        }
      }
    // The same order one rotation component up.
    const auto tau = AffinePermutation::rotation(d);
    for (std::size_t i = 0; i < below.size(); i += 7)
      for (std::size_t j = 0; j < below.size(); j += 5)
        CHECK(bruhat_leq(tau * below[j].first, tau * below[i].first) == bruhat_leq(below[j].first, below[i].first));
  }
}

TEST_CASE("KL polynomials agree with the R-polynomial oracle on affine S_3") {
  const auto ball = oracle::bfs_ball(3, 8);
  oracle::NaiveKL naive(ball);
  KLContext ctx(3);
  KLContext plain(3, kDefaultMaxLength, false);
  for (const auto& w : ball.order)
    for (const auto& x : ball.order) {
      const auto p = ctx.kl_polynomial(ap(x), ap(w));
      const auto expect = naive.kl(x, w);
      if (p.coeffs != coeffs(expect)) FAIL_CHECK("KL mismatch " << ap(x).to_string() << " " << ap(w).to_string());
      if (!naive.leq(x, w)) {
        CHECK(p.is_zero());
        continue;
      }
      CHECK(p.coeffs.front() == 1);
      const int gap = naive.len(w) - naive.len(x);
      if (x != w) CHECK(2 * p.degree() <= gap - 1);
      for (auto c : p.coeffs) CHECK(c >= 0);
      if (gap <= 2) CHECK(p.coeffs == std::vector<long long>{1});
      CHECK(ctx.kl_polynomial(ap(x).inverse(), ap(w).inverse()) == p);
    }
  for (std::size_t i = 0; i < ball.order.size(); i += 3)
    for (std::size_t j = 0; j < ball.order.size(); j += 2)
      CHECK(plain.kl_polynomial(ap(ball.order[j]), ap(ball.order[i])) ==
            ctx.kl_polynomial(ap(ball.order[j]), ap(ball.order[i])));
}

TEST_CASE("KL polynomials on finite S_4") {
  const auto ball = oracle::bfs_ball(4, 6, false);
  REQUIRE(ball.dist.size() == 24);
  oracle::NaiveKL naive(ball);
  naive.set_finite();
  KLContext ctx(4);
  for (const auto& w : ball.order)
    for (const auto& x : ball.order) CHECK(ctx.kl_polynomial(ap(x), ap(w)).coeffs == naive.kl(x, w));
  const auto s2 = AffinePermutation::simple(4, 2);
  const auto w = s2.times_simple(1).times_simple(3).times_simple(2);
  CHECK(w == AffinePermutation({3, 4, 1, 2}));
  CHECK(ctx.kl_polynomial(s2, w).coeffs == std::vector<long long>{1, 1});
  CHECK(ctx.kl_polynomial(AffinePermutation::identity(4), w).to_string() == "1 1");
  CHECK(ctx.mu(s2, w) == 1);
  CHECK(kl_polynomial(w, w).to_string() == "1");
  CHECK(kl_polynomial(w, s2).to_string() == "0");
}

TEST_CASE("KL context limits and cache") {
  KLContext small(3, 4);
  const auto w = AffinePermutation::identity(3).times_simple(0).times_simple(1).times_simple(2).times_simple(0).times_simple(1);
  REQUIRE(length(w) == 5);
  CHECK_THROWS_AS(small.kl_polynomial(AffinePermutation::identity(3), w), ResourceError);
  CHECK_THROWS_AS(small.kl_polynomial(AffinePermutation::identity(3), AffinePermutation::identity(2)), DomainError);

  const auto path = (std::filesystem::temp_directory_path() / "ljmod_kl_cache_test.json").string();
  std::filesystem::remove(path);
  KLContext a(3);
  CHECK_FALSE(a.load(path));
  const auto p = a.kl_polynomial(AffinePermutation::identity(3), w);
  a.save(path);
  KLContext b(3);
  CHECK(b.load(path));
  CHECK(b.cached_polynomials() == a.cached_polynomials());
  CHECK(b.kl_polynomial(AffinePermutation::identity(3), w) == p);
  KLContext other_rank(4);
  CHECK_FALSE(other_rank.load(path));
  {
    std::ofstream out(path);
    out << R"({"format":"ljmod-kl-cache","version":99,"d":3,"entries":[]})";
  }
  KLContext c(3);
  CHECK_FALSE(c.load(path));
  {
    std::ofstream out(path);
    out << "not json";
  }
  CHECK_FALSE(c.load(path));
  std::filesystem::remove(path);
}

TEST_CASE("concurrent evaluation matches sequential") {
  const auto ball = oracle::bfs_ball(3, 7);
  std::vector<std::pair<AffinePermutation, AffinePermutation>> pairs;
  for (const auto& w : ball.order)
    for (const auto& x : ball.order) pairs.emplace_back(ap(x), ap(w));
  KLContext shared(3);
  std::vector<KLPolynomial> out(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < pairs.size(); ++i) out[i] = shared.kl_polynomial(pairs[i].first, pairs[i].second);
  KLContext seq(3);
  for (std::size_t i = 0; i < pairs.size(); ++i) CHECK(out[i] == seq.kl_polynomial(pairs[i].first, pairs[i].second));
}

TEST_CASE("parabolic subgroups and double cosets") {
  CHECK(parabolic_generators(4, 2) == std::vector<int>{1, 3});
  CHECK(parabolic_generators(3, 3).empty());
  CHECK(parabolic_generators(3, 1) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(max_double_coset_reps(4, 3, 2), DomainError);

  const auto reps = max_double_coset_reps(2, 1, 0);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].element == AffinePermutation({2, 1}));
  CHECK(reps[0].min_length == 0);

  CHECK(max_double_coset_reps(3, 3, 4).size() == elements_up_to_length(3, 4).size());

  for (auto [d, eps] : std::vector<std::pair<int, int>>{{2, 1}, {4, 2}, {4, 1}, {3, 1}, {6, 3}}) {
    const int bound = 4;
    const auto gens = parabolic_generators(d, eps);
    const auto reps2 = max_double_coset_reps(d, eps, bound);
    std::vector<std::set<oracle::Win>> cosets;
    for (const auto& r : reps2) {
      cosets.push_back(double_coset(r.element.window(), gens));
      int longest = 0, shortest = 1 << 30;
      for (const auto& x : cosets.back()) {
        longest = std::max(longest, length(ap(x)));
        shortest = std::min(shortest, length(ap(x)));
      }
      CHECK(length(r.element) == longest);
      CHECK(r.length == longest);
      CHECK(r.min_length == shortest);
      CHECK(r.min_length <= bound);
      CHECK(max_in_double_coset(r.element, gens) == r.element);
    }
    for (std::size_t i = 0; i + 1 < reps2.size(); ++i)
      CHECK(std::make_pair(reps2[i].length, reps2[i].element.window()) <
            std::make_pair(reps2[i + 1].length, reps2[i + 1].element.window()));
    for (const auto& x : elements_up_to_length(d, bound)) {
      int hits = 0;
      for (const auto& c : cosets) hits += c.count(x.window()) > 0;
      CHECK(hits == 1);
      CHECK(std::count_if(reps2.begin(), reps2.end(), [&](const DoubleCosetRep& r) {
              return r.element == max_in_double_coset(x, gens);
            }) == 1);
    }
  }
}

}  // TEST_SUITE
