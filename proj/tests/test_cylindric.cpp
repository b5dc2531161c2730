#include <gtest/gtest.h>

#include "support.hpp"

using namespace affcrystal;
using namespace fixtures;

namespace {

// conditions checked directly on the extended array over a wide window
bool valid_by_scan(const CylindricPlanePartition& pi) {
  const int ell = pi.ell(), n = pi.n();
  int lo = pi.start(2 * ell), hi = lo;
  for (int i = -2 * ell; i <= 2 * ell; ++i) {
    lo = std::min(lo, pi.start(i));
    hi = std::max(hi, pi.start(i));
  }
  hi += 20;
  for (int i = -ell; i <= ell; ++i)
    for (int j = lo; j <= hi; ++j) {
      auto here = pi.entry(i, j);
      if (!here) continue;
      if (!pi.entry(i + 1, j) || !pi.entry(i, j + 1)) return false;
      if (*here < *pi.entry(i + 1, j) || *here < *pi.entry(i, j + 1)) return false;
      if (pi.entry(i + ell, j - n) != here) return false;
    }
  return true;
}

std::vector<CylindricPlanePartition> all_cpps(int n, int ell, int max_weight) {
  std::vector<CylindricPlanePartition> out;
  for (const auto& psi : all_descending(n, ell, max_weight)) out.push_back(from_abacus(psi));
  return out;
}

}  // namespace

TEST(Cylindric, WideCylinderIsValid) {
  EXPECT_TRUE(is_valid_cpp(wide_cpp()));
  EXPECT_TRUE(valid_by_scan(wide_cpp()));
  EXPECT_TRUE(is_valid_cpp(zero_cpp(3, {4, 2, 1})));
  EXPECT_FALSE(is_valid_cpp(zero_cpp(3, {5, 1, -2})));
  EXPECT_EQ(hw_of_cpp(wide_cpp()), weight({2, 3, 1}));
}

TEST(Cylindric, UpwardMutationBreaksValidity) {
  // diagonal 2 starts at the same column as diagonal 1, whose first entry is 6
  auto rows = wide_cpp().rows();
  rows[2].partition = Partition{7, 4, 1};
  CylindricPlanePartition bad(3, 6, rows);
  EXPECT_FALSE(is_valid_cpp(bad));
  EXPECT_FALSE(valid_by_scan(bad));
}

TEST(Cylindric, ValidityAgreesWithScanOnMutations) {
  gen::Rng rng(31);
  auto sample = all_cpps(3, 2, 5);
  for (const auto& pi : all_cpps(2, 3, 5)) sample.push_back(pi);
  sample.push_back(wide_cpp());
  sample.push_back(example_cpp());
  int invalid = 0;
  for (const auto& pi : sample) {
    ASSERT_TRUE(is_valid_cpp(pi));
    ASSERT_TRUE(valid_by_scan(pi));
    for (int t = 0; t < 4; ++t) {
      auto rows = pi.rows();
      auto& row = rows[rng.uniform(0, pi.ell() - 1)];
      auto parts = row.partition.parts();
      std::size_t k = rng.uniform(0, static_cast<int>(parts.size()));
      if (k == parts.size()) parts.push_back(0);
      parts[k] += rng.uniform(1, 2);
      if (k > 0 && parts[k] > parts[k - 1]) continue;
      row.partition = Partition(parts);
      CylindricPlanePartition mutated(pi.n(), pi.ell(), rows);
      bool ok = is_valid_cpp(mutated);
      EXPECT_EQ(ok, valid_by_scan(mutated));
      invalid += !ok;
    }
  }
  EXPECT_GT(invalid, 0);
}

TEST(Cylindric, ExampleToArray) {
  EXPECT_EQ(from_abacus(descending_example()), example_cpp());
  EXPECT_EQ(to_abacus(example_cpp()), descending_example());
  EXPECT_EQ(hw_of_cpp(example_cpp()), weight({1, 2, 1}));
  EXPECT_EQ(cpp_weight(example_cpp()), 18);
  EXPECT_EQ(cpp_weight(example_cpp()), weight(descending_example()));
}

TEST(Cylindric, CompactIsZero) {
  EXPECT_EQ(from_abacus(compact_example()), zero_cpp(3, {2, 1, 1, 0}));
  EXPECT_EQ(to_abacus(zero_cpp(3, {2, 1, 1, 0})), compact_example());
  EXPECT_EQ(hw_of_cpp(zero_cpp(3, {0, 0, 0})), weight({3, 0, 0}));
  EXPECT_EQ(cpp_weight(zero_cpp(3, {0, 0})), 0);
  EXPECT_THROW(from_abacus(AbacusConfig(3, {BeadRow(0, {}), BeadRow(0, {2})})), std::invalid_argument);
}

TEST(Cylindric, BijectionWithDescendingConfigurations) {
  for (auto [n, ell] : {std::pair{2, 2}, std::pair{3, 2}})
    for (const auto& psi : all_descending(n, ell, 8)) {
      auto pi = from_abacus(psi);
      ASSERT_TRUE(is_valid_cpp(pi));
      ASSERT_TRUE(valid_by_scan(pi));
      ASSERT_EQ(to_abacus(pi), psi);
      EXPECT_EQ(cpp_weight(pi), weight(psi));
      EXPECT_EQ(hw_of_cpp(pi), highest_weight(compactify(psi)));
    }
}

TEST(Cylindric, EveryValidArrayComesFromAConfiguration) {
  // enumerate arrays by hand on a small cylinder and push them through to_abacus
  const int n = 2, ell = 2, top = 5;
  for (const auto& w : dominant_weights(n, ell)) {
    auto psi0 = compact_config(w);
    auto layers = enumerate_descending(psi0, top);
    std::size_t expected = 0;
    for (const auto& l : layers) expected += l.size();
    std::set<CylindricPlanePartition> found;
    for (int s0 = 0; s0 <= top; ++s0)
      for (const auto& a : partitions_of(s0))
        for (int s1 = 0; s0 + s1 <= top; ++s1)
          for (const auto& b : partitions_of(s1)) {
            CylindricPlanePartition pi(n, ell, {{psi0.charge(0), a}, {psi0.charge(1), b}});
            if (!valid_by_scan(pi)) continue;
            ASSERT_TRUE(is_valid_cpp(pi));
            auto psi = to_abacus(pi);
            EXPECT_TRUE(is_descending(psi));
            EXPECT_EQ(compactify(psi), psi0);
            found.insert(pi);
          }
    EXPECT_EQ(found.size(), expected) << to_string(w);
  }
}

TEST(Cylindric, TValuePeriodicAndDistinct) {
  gen::Rng rng(32);
  for (int t = 0; t < 500; ++t) {
    int n = rng.uniform(1, 6), ell = rng.uniform(1, 6);
    Box b{rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(0, 9)};
    EXPECT_EQ(t_value(Box{b.x + ell, b.y - n, b.z}, n, ell), t_value(b, n, ell));
    EXPECT_EQ(box_color(Box{b.x, b.y + 3, b.z + 3}, n), box_color(b, n));
    auto c = canonical_box(b, n, ell);
    EXPECT_GE(c.x, 0);
    EXPECT_LT(c.x, ell);
    EXPECT_EQ(t_value(c, n, ell), t_value(b, n, ell));
  }
  EXPECT_EQ(t_value(Box{0, 0, 0}, 3, 2), (Rational{0, 1}));

  for (auto [n, ell] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 3}})
    for (const auto& pi : all_cpps(n, ell, 6))
      for (int i = 0; i < n; ++i) {
        std::vector<Rational> ts;
        auto add = addable_boxes(pi, i), rem = removable_boxes(pi, i);
        for (const auto& b : add) ts.push_back(t_value(b, n, ell));
        for (const auto& b : rem) {
          ts.push_back(t_value(b, n, ell));
          EXPECT_EQ(std::count(add.begin(), add.end(), b), 0);
        }
        std::sort(ts.begin(), ts.end());
        EXPECT_EQ(std::adjacent_find(ts.begin(), ts.end()), ts.end());
      }
}

TEST(Cylindric, ZeroArrayAddableBoxes) {
  for (const auto& w : dominant_weights(3, 3)) {
    auto pi = from_abacus(compact_config(w));
    int total = 0;
    for (int i = 0; i < 3; ++i) {
      auto add = addable_boxes(pi, i);
      EXPECT_EQ(static_cast<int>(add.size()), w.coeffs[i]);
      EXPECT_TRUE(removable_boxes(pi, i).empty());
      total += add.size();
      auto f = f_cpp(pi, i);
      EXPECT_EQ(f.has_value(), w.coeffs[i] > 0);
      if (f) EXPECT_EQ(cpp_weight(*f), 1);
    }
    EXPECT_EQ(total, 3);
  }
}

TEST(Cylindric, BoxesMatchAbacusBrackets) {
  for (auto [n, ell] : {std::pair{2, 2}, std::pair{3, 2}})
    for (const auto& psi : all_descending(n, ell, 6))
      for (int i = 0; i < n; ++i) {
        auto pi = from_abacus(psi);
        int opens = 0, closes = 0;
        for (const auto& m : abacus_moves(psi, i)) (m.right ? opens : closes)++;
        EXPECT_EQ(static_cast<int>(addable_boxes(pi, i).size()), opens);
        EXPECT_EQ(static_cast<int>(removable_boxes(pi, i).size()), closes);
      }
}

TEST(Cylindric, OperatorsIntertwineWithAbacus) {
  for (auto [n, ell] : {std::pair{2, 2}, std::pair{3, 2}})
    for (const auto& psi : all_descending(n, ell, 6))
      for (int i = 0; i < n; ++i) {
        auto pi = from_abacus(psi);
        auto f = f_cpp(pi, i);
        auto fd = f_descending(psi, i);
        ASSERT_EQ(f.has_value(), fd.has_value()) << psi.key() << " i=" << i;
        if (f) {
          EXPECT_EQ(*f, from_abacus(*fd));
          EXPECT_TRUE(is_valid_cpp(*f));
          EXPECT_EQ(e_cpp(*f, i), pi);
        }
        auto e = e_cpp(pi, i);
        auto ed = e_descending(psi, i);
        ASSERT_EQ(e.has_value(), ed.has_value()) << psi.key() << " i=" << i;
        if (e) EXPECT_EQ(*e, from_abacus(*ed));
      }
}

TEST(Reflect, WideCylinder) {
  auto r = reflect(wide_cpp());
  EXPECT_EQ(r.n(), 6);
  EXPECT_EQ(r.ell(), 3);
  EXPECT_TRUE(is_valid_cpp(r));
  EXPECT_EQ(cpp_weight(r), cpp_weight(wide_cpp()));
  EXPECT_EQ(hw_of_cpp(r), weight({1, 1, 0, 0, 1, 0}));
  EXPECT_EQ(dual_weight(weight({2, 3, 1})), weight({1, 1, 0, 0, 1, 0}));
  EXPECT_EQ(reflect(r), wide_cpp());
}

TEST(Reflect, DualWeightOfMultipleOfLambdaZero) {
  for (int n = 1; n <= 5; ++n)
    for (int ell = 1; ell <= 5; ++ell) {
      std::vector<int> c(n, 0);
      c[0] = ell;
      std::vector<int> expect(ell, 0);
      expect[0] = n;
      EXPECT_EQ(dual_weight(DominantWeight{c}), DominantWeight{expect});
    }
}

TEST(Reflect, ZeroGoesToZero) {
  for (const auto& w : dominant_weights(3, 2)) {
    auto zero = from_abacus(compact_config(w));
    auto r = reflect(zero);
    EXPECT_EQ(cpp_weight(r), 0);
    EXPECT_EQ(r.n(), 2);
    EXPECT_EQ(r.ell(), 3);
    EXPECT_EQ(hw_of_cpp(r), dual_weight(w));
  }
}

TEST(Reflect, WeightPreservingBijection) {
  for (auto [n, ell] : {std::pair{3, 2}, std::pair{2, 2}, std::pair{2, 4}})
    for (const auto& w : dominant_weights(n, ell)) {
      auto psi0 = compact_config(w);
      auto dual0 = to_abacus(reflect(from_abacus(psi0)));
      ASSERT_TRUE(is_compact(dual0) && is_descending(dual0));
      auto here = enumerate_descending(psi0, 6);
      auto there = enumerate_descending(dual0, 6);
      for (int d = 0; d <= 6; ++d) {
        std::set<CylindricPlanePartition> image, target;
        for (const auto& psi : here[d]) {
          auto pi = from_abacus(psi);
          auto r = reflect(pi);
          ASSERT_TRUE(is_valid_cpp(r));
          EXPECT_EQ(cpp_weight(r), d);
          EXPECT_EQ(hw_of_cpp(r), dual_weight(w));
          EXPECT_EQ(reflect(r), pi);
          image.insert(r);
        }
        for (const auto& psi : there[d]) target.insert(from_abacus(psi));
        EXPECT_EQ(image, target) << to_string(w) << " degree " << d;
      }
    }
}

TEST(Cylindric, RotateColors) {
  auto r = rotate_colors(example_cpp(), 1);
  EXPECT_TRUE(is_valid_cpp(r));
  EXPECT_EQ(cpp_weight(r), cpp_weight(example_cpp()));
  auto w = hw_of_cpp(example_cpp()), rw = hw_of_cpp(r);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(rw.coeffs[(i + 1) % 3], w.coeffs[i]);
  EXPECT_EQ(rotate_colors(r, -1), example_cpp());
}

TEST(Cylindric, RenderText) {
  auto text = render_text(example_cpp());
  EXPECT_NE(text.find("weight=18"), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2 + 4);
}
