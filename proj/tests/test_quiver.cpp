#include <functional>
#include <map>
#include <random>

#include "doctest.h"
#include "ljmod/errors.hpp"
#include "ljmod/groth.hpp"
#include "ljmod/quiver_orbits.hpp"
#include "support/oracles.hpp"

using namespace ljmod;
using namespace ljmod::quiver;
using segcomb::Multisegment;

namespace {

std::vector<std::pair<int, int>> pairs_of(const Multisegment& a) {
  std::vector<std::pair<int, int>> out;
  for (const auto& s : a.segments())
    for (int c = 0; c < s.weight; ++c) out.emplace_back(s.start, s.length);
  return out;
}

void for_each_dims(int e, int max_total, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> dims(static_cast<std::size_t>(e), 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == e) {
      if (left < max_total) fn(dims);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      dims[static_cast<std::size_t>(k)] = x;
      rec(k + 1, left - x);
    }
  };
  rec(0, max_total);
}

std::uint64_t starts_mask(const Multisegment& a) {
  std::uint64_t m = 0;
  for (const auto& s : a.segments()) m |= std::uint64_t{1} << s.start;
  return m;
}

}  // namespace

TEST_SUITE("quiver_orbits") {

TEST_CASE("rank invariants match elimination over several fields") {
  std::size_t checked = 0;
  const auto f101 = FiniteField::make(101);
  for (int e = 1; e <= 4; ++e)
    for_each_dims(e, 6, [&](const std::vector<int>& dims) {
      for (const auto& a : segcomb::enumerate_block(e, dims)) {
        const int total = a.degree();
        const auto segs = pairs_of(a);
        const auto n = build_nilpotent_matrix(a, f101);
        const auto grades = basis_grades(a);
        for (int i = 0; i < e; ++i)
          for (int l = 1; l <= total; ++l) {
            const int r = rank_invariant(a, i, l);
            CHECK(r == composite_rank(n, grades, i, l));
            for (long long p : {2, 3, 101}) CHECK(r == oracle::string_rank(e, segs, i, l, p));
          }
        ++checked;
      }
    });
  CHECK(checked > 500);
}

TEST_CASE("weights count as multiplicities") {
  const Multisegment a(3, {{0, 2, 2}, {1, 1, 1}});
  const auto n = build_nilpotent_matrix(a, FiniteField::make(5));
  CHECK(n.rows() == 5);
  const auto grades = basis_grades(a);
  for (int i = 0; i < 3; ++i)
    for (int l = 1; l <= 4; ++l) CHECK(rank_invariant(a, i, l) == composite_rank(n, grades, i, l));
  CHECK(rank_invariant(a, 0, 1) == 2);
}

TEST_CASE("edge scalars do not change ranks") {
  std::mt19937_64 rng(3);
  const auto f = FiniteField::make(7);
  std::uniform_int_distribution<std::uint32_t> nz(1, 6);
  for (const auto& a : segcomb::enumerate_block(3, {2, 2, 1})) {
    std::vector<FieldElem> sc(static_cast<std::size_t>(a.degree()));
    for (auto& x : sc) x = nz(rng);
    const auto n = build_nilpotent_matrix(a, f, sc);
    const auto grades = basis_grades(a);
    for (int i = 0; i < 3; ++i)
      for (int l = 1; l <= 5; ++l) CHECK(rank_invariant(a, i, l) == composite_rank(n, grades, i, l));
    // N maps grade i into grade i + 1.
    for (std::size_t r = 0; r < n.rows(); ++r)
      for (std::size_t c = 0; c < n.cols(); ++c)
        if (n(r, c)) CHECK(grades[r] == (grades[c] + 1) % 3);
  }
}

TEST_CASE("closure order is a partial order with distinct rank tables") {
  for (int e = 1; e <= 4; ++e)
    for_each_dims(e, 7, [&](const std::vector<int>& dims) {
      int total = 0;
      for (int x : dims) total += x;
      if (!total) return;
      const auto block = segcomb::enumerate_block(e, dims);
      std::map<RankTable, std::size_t> tables;
      for (std::size_t k = 0; k < block.size(); ++k) tables[rank_table(block[k], total)] = k;
      CHECK(tables.size() == block.size());
      if (block.size() > 40) return;
      std::vector<GradedOrbit> orbits(block.begin(), block.end());
      for (auto& x : orbits) {
        CHECK(closure_leq(x, x));
        for (auto& y : orbits) {
          if (closure_leq(x, y) && closure_leq(y, x)) CHECK(x.shape() == y.shape());
          for (auto& z : orbits)
            if (closure_leq(x, y) && closure_leq(y, z)) CHECK(closure_leq(x, z));
        }
      }
    });
  CHECK_THROWS_AS(closure_leq(GradedOrbit(Multisegment(2, {{0, 2, 1}})), GradedOrbit(Multisegment(2, {{0, 1, 1}, {0, 1, 1}}))),
                  DomainError);
}

TEST_CASE("epsilon = d: closure is reverse inclusion of start sets") {
  for (int d = 1; d <= 8; ++d) {
    const auto poset = orbit_poset(d, std::vector<int>(static_cast<std::size_t>(d), 1));
    CHECK(poset.size() == (std::size_t{1} << d) - 1);
    const auto dm = groth::closed_form_matrix(d);
    for (std::size_t b = 0; b < poset.size(); ++b)
      for (std::size_t a = 0; a < poset.size(); ++a) {
        const auto mb = starts_mask(poset.nodes[b]), ma = starts_mask(poset.nodes[a]);
        CHECK(static_cast<bool>(poset.leq[b][a]) == ((mb & ma) == ma));
        // m(b, a) != 0 only when O_a lies in the closure of O_b, where
        // IC(O_b) is supported.
        if (dm.m(b, a)) CHECK(poset.leq[a][b]);
      }
    CHECK(poset.nodes == dm.basis->elements());
  }
}

TEST_CASE("small posets") {
  const auto p = orbit_poset(2, {1, 1});
  CHECK(p.size() == 3);
  CHECK(p.cover_count() == 2);
  CHECK(p.height == std::vector<int>{0, 1, 1});
  CHECK(orbit_poset(2, {1, 0}).size() == 1);
  CHECK(orbit_poset(1, {3}).size() == 3);
  const auto dot = p.to_dot();
  CHECK(dot.find("digraph") == 0);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 2);
  const auto json = p.to_json();
  CHECK(json.find("\"covers\"") != std::string::npos);
}

TEST_CASE("parallel poset matches the serial reference") {
  for (auto [e, dims] : std::vector<std::pair<int, std::vector<int>>>{{2, {2, 2}}, {3, {2, 1, 2}}, {5, {1, 1, 1, 1, 1}}, {1, {6}}}) {
    const auto a = orbit_poset(e, dims), b = orbit_poset_serial(e, dims);
    CHECK(a.leq == b.leq);
    CHECK(a.lower_covers == b.lower_covers);
    CHECK(a.height == b.height);
    CHECK(a.to_json() == b.to_json());
  }
}

}  // TEST_SUITE
