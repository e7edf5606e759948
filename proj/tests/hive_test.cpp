#include "reflr/hive.hpp"

#include <algorithm>

#include "test_util.hpp"

using namespace reflr;

namespace {

Permutation p(const std::string& s) { return parse_permutation(s); }

// Reference n=5 hive and its row-difference pattern (frozen worked example).
Hive example_hive() {
  return Hive{{{0},
               {7, 9},
               {12, 16, 18},
               {15, 21, 24, 24},
               {15, 22, 27, 28, 28},
               {15, 22, 27, 29, 29, 29}}};
}
const Partition kLam{7, 5, 3, 0, 0};
const Partition kMu{7, 5, 2, 0, 0};
const Partition kNu{9, 9, 6, 4, 1};

GTPattern example_gt() {
  return GTPattern{{{2}, {4, 2}, {6, 3, 0}, {7, 5, 1, 0}, {7, 5, 2, 0, 0}}};
}

void test_golden_hive() {
  Hive h = example_hive();
  CHECK(validate_hive(h, kLam, kMu, kNu).ok);
  CHECK(hive_delta(h) == example_gt());
  CHECK(delta_inverse(example_gt(), kLam) == h);
  GTPattern ne = hive_delta_ne(h);
  CHECK(valid_gt(ne));
  CHECK(ne.rows.back() == (std::vector<long long>{7, 5, 3, 0, 0}));
  CHECK(delta_ne_inverse(ne, kNu) == h);
  // perturbing one interior label breaks specific rhombi
  Hive bad = h;
  bad.labels[3][2] += 1;
  auto check = validate_hive(bad, kLam, kMu, kNu);
  CHECK(!check.ok);
  CHECK(check.borders_ok);
  CHECK(!check.negative.empty());
  for (const Rhombus& r : check.negative) {
    auto vs = rhombus_vertices(r);
    bool touches = false;
    for (auto [a, b] : vs)
      if (a == 3 && b == 2) touches = true;
    CHECK(touches);
  }
  // n=1: no rhombi, consistent borders validate
  Hive tiny{{{0}, {2, 2}}};
  CHECK(validate_hive(tiny, {2}, {0}, {2}).ok);
}

void test_bg() {
  // size-5 reference pattern; the bottom tableau row is forced to be [5]
  // by the NE differences
  GTPattern a{{{2}, {3, 2}, {5, 3, 1}, {5, 4, 2, 1}, {6, 4, 2, 2, 1}}};
  Tableau t = gt_to_tableau(a);
  Tableau expected{{{1, 1, 2, 3, 3, 5}, {2, 2, 3, 4}, {3, 4}, {4, 5}, {5}}};
  CHECK(t == expected);
  CHECK(tableau_to_gt(t, 5) == a);
  // single row (m): m ones
  GTPattern one_row{{{4}}};
  CHECK(gt_to_tableau(one_row) == (Tableau{{{1, 1, 1, 1}}}));
  // inverse of the running tableau example
  Tableau t2{{{1, 2, 3}, {2, 3}}};
  GTPattern a2 = tableau_to_gt(t2, 3);
  CHECK(a2 == (GTPattern{{{1}, {2, 1}, {3, 2, 0}}}));
  CHECK(gt_to_tableau(a2) == t2);
  // round trips across a grid of shapes
  for (const Partition& mu : partitions_in_box(3, 2))
    for (const Tableau& t3 : all_ssyt(mu, 3)) {
      GTPattern g = tableau_to_gt(t3, 3);
      CHECK(valid_gt(g));
      CHECK(gt_shape(g) == mu);
      CHECK(gt_to_tableau(g) == t3);
    }
}

// All integer GT patterns with the given bottom row, by direct interlacing
// search (independent of the bg bijection it is used to test).
std::vector<GTPattern> enumerate_gt(const Partition& shape) {
  const int n = static_cast<int>(shape.size());
  GTPattern a;
  a.rows.assign(n, {});
  for (int i = 0; i < n; ++i) a.rows[i].assign(i + 1, 0);
  a.rows[n - 1] = std::vector<long long>(shape.begin(), shape.end());
  std::vector<GTPattern> out;
  std::function<void(int, int)> rec = [&](int row, int col) {
    if (row < 0) {
      out.push_back(a);
      return;
    }
    if (col > row) {
      rec(row - 1, 0);
      return;
    }
    for (long long v = a.rows[row + 1][col + 1]; v <= a.rows[row + 1][col]; ++v) {
      a.rows[row][col] = v;
      rec(row, col + 1);
    }
  };
  rec(n - 2, 0);
  return out;
}

void test_bg_round_trips() {
  for (const Partition& mu : partitions_in_box(3, 3)) {
    auto patterns = enumerate_gt(mu);
    CHECK(patterns.size() == all_ssyt(mu, 3).size());
    std::set<Tableau> images;
    for (const GTPattern& a : patterns) {
      CHECK(valid_gt(a));
      Tableau t = gt_to_tableau(a);
      CHECK(valid_ssyt(t, 3));
      CHECK(tableau_to_gt(t, 3) == a);
      images.insert(t);
    }
    CHECK(images.size() == patterns.size());
  }
}

void test_face_word() {
  KoganFace f1{{{2, 1}}, false};
  auto fw1 = face_word(f1, 3);
  CHECK(fw1.sigma == Permutation::simple(1, 3));
  CHECK(fw1.reduced);
  KoganFace staircase{{{2, 1}, {3, 1}, {3, 2}}, false};
  auto fw2 = face_word(staircase, 3);
  CHECK(fw2.letters == (std::vector<int>{1, 2, 1}));
  CHECK(fw2.sigma == p("321"));
  CHECK(fw2.reduced);
  KoganFace bad{{{2, 1}, {3, 2}}, false};
  auto fw3 = face_word(bad, 3);
  CHECK(fw3.sigma == Permutation::identity(3));
  CHECK(!fw3.reduced);
  // lex and column orders agree as permutations on every subset, n <= 4
  for (int n = 3; n <= 4; ++n) {
    std::vector<std::pair<int, int>> pos;
    for (int i = 2; i <= n; ++i)
      for (int j = 1; j < i; ++j) pos.push_back({i, j});
    for (size_t mask = 0; mask < (size_t{1} << pos.size()); ++mask) {
      KoganFace f;
      for (size_t b = 0; b < pos.size(); ++b)
        if (mask & (size_t{1} << b)) f.flats.insert(pos[b]);
      CHECK(face_word(f, n, FaceOrder::lex).sigma ==
            face_word(f, n, FaceOrder::column).sigma);
    }
  }
}

void test_varpi() {
  CHECK(varpi(KoganFace{}, 3) == Permutation::identity(3));
  CHECK(varpi(KoganFace{{{2, 1}}, false}, 3) == Permutation::simple(2, 3));
  CHECK(varpi(KoganFace{{{2, 1}, {3, 1}, {3, 2}}, false}, 3) == p("321"));
  bool threw = false;
  try {
    varpi(KoganFace{{{2, 1}, {3, 2}}, false}, 3);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  CHECK(threw);
}

void test_reduced_faces() {
  CHECK(reduced_faces_for(Permutation::identity(3)).size() == 1);
  CHECK(reduced_faces_for(Permutation::identity(3))[0].flats.empty());
  // S4: every 312-avoiding w gives a unique left-and-bottom justified face
  // for w0 w
  Permutation w04 = Permutation::longest_element(4);
  for (const Permutation& w : all_permutations(4)) {
    if (!avoids_pattern(w, 312)) continue;
    auto faces = reduced_faces_for(compose(w04, w));
    CHECK(faces.size() == 1);
    CHECK(is_left_bottom_justified(faces[0], 4));
  }
  // counts for the four permutations outside the block-avoiding class,
  // by exhaustive enumeration under the lex face-word order
  CHECK(reduced_faces_for(p("2413")).size() == 2);  // w0 w for w = 3142
  CHECK(reduced_faces_for(p("2143")).size() == 3);  // w0 w for w = 3412
  CHECK(reduced_faces_for(p("3142")).size() == 2);  // w0 w for w = 2413
  CHECK(reduced_faces_for(p("1324")).size() == 2);  // w0 w for w = 4231
  // no face for 2413's target is left-and-bottom justified
  for (const KoganFace& f : reduced_faces_for(p("2413")))
    CHECK(!is_left_bottom_justified(f, 4));
}

void test_f_w() {
  CHECK(f_w_for_312(Permutation::longest_element(3)).flats.empty());
  CHECK(f_w_for_312(Permutation::identity(3)).flats ==
        (std::set<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}}));
  KoganFace f231 = f_w_for_312(p("231"));
  CHECK(f231.flats == (std::set<std::pair<int, int>>{{3, 1}}));
  CHECK(varpi(f231, 3) == compose(Permutation::longest_element(3), p("231")));
  bool threw = false;
  try {
    f_w_for_312(p("3142"));  // contains 312
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  CHECK(threw);
  // S5: uniqueness and shape across all 312-avoiding w
  Permutation w05 = Permutation::longest_element(5);
  int count = 0;
  for (const Permutation& w : all_permutations(5)) {
    if (!avoids_pattern(w, 312)) continue;
    ++count;
    auto faces = reduced_faces_for(compose(w05, w));
    CHECK(faces.size() == 1);
    CHECK(is_left_bottom_justified(faces[0], 5));
    CHECK(f_w_for_312(w) == faces[0]);
  }
  CHECK(count == 42);  // Catalan(5)
}

void test_enumeration() {
  auto hs = enumerate_kogan_hives({2, 1, 0}, {2, 1, 0}, {3, 2, 1}, KoganFace{});
  CHECK(hs.size() == 2);
  for (const Hive& h : hs) CHECK(validate_hive(h, {2, 1, 0}, {2, 1, 0}, {3, 2, 1}).ok);
  // delta case: nu = lam + mu on the full staircase face
  auto one = enumerate_kogan_hives({2, 1, 0}, {2, 1, 0}, {4, 2, 0},
                                   f_w_for_312(Permutation::identity(3)));
  CHECK(one.size() == 1);
  // size mismatch: empty
  CHECK(enumerate_kogan_hives({1, 0}, {1, 0}, {2, 1}, KoganFace{}).empty());
}

void test_refined_lr_hive() {
  CHECK(refined_lr_hive({2, 1, 0}, {2, 1, 0}, {3, 2, 1}, p("321")) == 2);
  CHECK(refined_lr_hive({2, 1, 0}, {2, 1, 0}, {3, 3, 0}, p("213")) == 1);
  CHECK(refined_lr_hive({2, 1, 0}, {2, 0, 0}, {4, 1, 0},
                        Permutation::identity(3)) == 1);
  CHECK(refined_lr_hive({2, 1, 0}, {2, 0, 0}, {3, 2, 0},
                        Permutation::identity(3)) == 0);
}

// Tab_lam^nu(mu) by direct enumeration and ballot check.
std::set<Tableau> tab_lam_nu(const Partition& lam, const Partition& mu,
                             const Partition& nu, int n) {
  std::set<Tableau> out;
  Word prefix = reverse_row_word(extreme_tableau(lam, Extreme::highest, n));
  std::vector<int> target(nu.begin(), nu.end());
  for (const Tableau& t : all_ssyt(mu, n)) {
    Word u = prefix;
    Word bt = reverse_row_word(t);
    u.insert(u.end(), bt.begin(), bt.end());
    if (word_weight(u, n) == target && is_dominant(u, n)) out.insert(t);
  }
  return out;
}

void test_bg_delta_bijection() {
  // bg o delta : Hive_Z(lam,mu,nu) -> Tab_lam^nu(mu), exhaustive small grid
  auto parts = partitions_in_box(3, 2);
  for (const Partition& lam : parts)
    for (const Partition& mu : parts) {
      int total = static_cast<int>(part_sum(lam) + part_sum(mu));
      for (const Partition& nu : partitions_of(total, 3)) {
        std::set<Tableau> image;
        auto hives = enumerate_kogan_hives(lam, mu, nu, KoganFace{});
        for (const Hive& h : hives) {
          GTPattern a = hive_delta(h);
          CHECK(valid_gt(a));
          image.insert(gt_to_tableau(a));
          CHECK(delta_inverse(a, lam) == h);
        }
        CHECK(image.size() == hives.size());
        CHECK(image == tab_lam_nu(lam, mu, nu, 3));
      }
    }
}

void test_increasable() {
  // n=2: no interior vertices
  Hive h2{{{0}, {1, 1}, {1, 2, 2}}};
  CHECK(validate_hive(h2, {1, 0}, {1, 0}, {1, 1}).ok);
  CHECK(increasable_subsets(h2).empty());
  // the c=2 instance has one interior vertex; the lower of the two hives is
  // increasable
  auto hs = enumerate_kogan_hives({2, 1, 0}, {2, 1, 0}, {3, 2, 1}, KoganFace{});
  CHECK(hs.size() == 2);
  CHECK(hs[0].labels[2][1] != hs[1].labels[2][1]);
  const Hive& low = hs[0].labels[2][1] < hs[1].labels[2][1] ? hs[0] : hs[1];
  const Hive& high = hs[0].labels[2][1] < hs[1].labels[2][1] ? hs[1] : hs[0];
  auto inc_low = increasable_subsets(low);
  CHECK(inc_low.size() == 1);
  CHECK(inc_low[0].vertices == (std::vector<std::pair<int, int>>{{2, 1}}));
  CHECK(inc_low[0].max_eps == (Rational{1, 1}));
  CHECK(add_indicator(low, inc_low[0].vertices, 1) == high);
  CHECK(increasable_subsets(high).empty());
}

void test_flat_moves_on_staircase_faces() {
  // On F_w faces, increasable moves keep every F_w rhombus flat: integer
  // steps up to floor(eps) and the rational endpoint stay on the face.
  auto parts = partitions_in_box(3, 2);
  for (const Permutation& w : all_permutations(3)) {
    if (!avoids_pattern(w, 312)) continue;
    KoganFace fw = f_w_for_312(w);
    for (const Partition& lam : parts)
      for (const Partition& mu : parts) {
        int total = static_cast<int>(part_sum(lam) + part_sum(mu));
        for (const Partition& nu : partitions_of(total, 3))
          for (const Hive& h : enumerate_kogan_hives(lam, mu, nu, fw))
            for (const auto& inc : increasable_subsets(h)) {
              for (const Rhombus& r : all_rhombi(3)) {
                if (r.type != RhombusType::ne || !fw.flats.count({r.i, r.j}))
                  continue;
                // the move must not touch the flat rhombus content at all
                auto vs = rhombus_vertices(r);
                int delta = 0;
                for (int t = 0; t < 4; ++t)
                  if (std::find(inc.vertices.begin(), inc.vertices.end(),
                                vs[t]) != inc.vertices.end())
                    delta += t < 2 ? 1 : -1;
                CHECK(delta == 0);
              }
              long long steps = inc.max_eps.num / inc.max_eps.den;
              for (long long s = 1; s <= steps; ++s) {
                Hive moved = add_indicator(h, inc.vertices, s);
                CHECK(validate_hive(moved, lam, mu, nu).ok);
                for (auto [i, j] : fw.flats)
                  CHECK(content(moved, {RhombusType::ne, i, j}) == 0);
              }
            }
      }
  }
}

void test_scaling() {
  // h on the face => p*h on the face of (p lam, p mu, p nu)
  auto parts = partitions_in_box(3, 2);
  for (const Permutation& w : all_permutations(3)) {
    Permutation u = compose(Permutation::longest_element(3), w);
    for (const Partition& lam : parts) {
      const Partition mu = {2, 1, 0};
      int total = static_cast<int>(part_sum(lam) + part_sum(mu));
      for (const Partition& nu : partitions_of(total, 3))
        for (const Hive& h : kogan_hive_union(lam, mu, nu, u))
          for (int s = 2; s <= 3; ++s) {
            Hive hs = h;
            for (auto& row : hs.labels)
              for (long long& x : row) x *= s;
            CHECK(validate_hive(hs, scale_partition(lam, s),
                                scale_partition(mu, s), scale_partition(nu, s))
                      .ok);
            for (const KoganFace& f : reduced_faces_for(u)) {
              bool on_orig = true, on_scaled = true;
              for (auto [i, j] : f.flats) {
                if (content(h, {RhombusType::ne, i, j}) != 0) on_orig = false;
                if (content(hs, {RhombusType::ne, i, j}) != 0) on_scaled = false;
              }
              if (on_orig) CHECK(on_scaled);
            }
          }
    }
  }
}

void test_delta_ne_rotation() {
  // delta^NE reads the same differences as delta applied to the 120-degree
  // rotation of the label triangle: rot[i][j] = h[n-i+j][n-i].
  auto rotate = [](const Hive& h) {
    const int n = h.size();
    Hive r;
    r.labels.assign(n + 1, {});
    for (int i = 0; i <= n; ++i) {
      r.labels[i].assign(i + 1, 0);
      for (int j = 0; j <= i; ++j) r.labels[i][j] = h.labels[n - i + j][n - i];
    }
    return r;
  };
  Hive ref = example_hive();
  CHECK(hive_delta_ne(ref) == hive_delta(rotate(ref)));
  for (const Hive& h :
       enumerate_kogan_hives({2, 1, 0}, {2, 1, 0}, {3, 2, 1}, KoganFace{}))
    CHECK(hive_delta_ne(h) == hive_delta(rotate(h)));
}

void test_face_leaving_move_off_staircase() {
  // Converse diagnostic: on a face that is not left-and-bottom justified,
  // an increasable subset may leave the face. Frozen witness: one of the two
  // varpi = 2413 faces with lam = mu = (2,1,0,0), nu = (3,2,1,0).
  KoganFace f{{{2, 1}, {4, 1}, {4, 2}}, false};
  CHECK(face_word(f, 4).reduced);
  CHECK(varpi(f, 4) == p("2413"));
  CHECK(!is_left_bottom_justified(f, 4));
  Hive h{{{0}, {2, 3}, {3, 4, 5}, {3, 5, 6, 6}, {3, 5, 6, 6, 6}}};
  const Partition lam{2, 1, 0, 0}, mu{2, 1, 0, 0}, nu{3, 2, 1, 0};
  CHECK(validate_hive(h, lam, mu, nu).ok);
  for (auto [i, j] : f.flats) CHECK(content(h, {RhombusType::ne, i, j}) == 0);
  std::vector<std::pair<int, int>> s{{2, 1}};
  auto incs = increasable_subsets(h);
  bool found = false;
  for (const auto& inc : incs)
    if (inc.vertices == s) {
      found = true;
      CHECK(inc.max_eps == (Rational{1, 1}));
    }
  CHECK(found);
  Hive moved = add_indicator(h, s, 1);
  CHECK(validate_hive(moved, lam, mu, nu).ok);        // still a hive
  CHECK(content(moved, {RhombusType::ne, 2, 1}) == 1);  // but off the face
}

void test_dual_face_membership() {
  // h on the (lam,mu,nu,w0 w) union => delta^NE h on a dual Kogan face with
  // varpi-bar = w^{-1} w0
  auto parts = partitions_in_box(3, 2);
  Permutation w0 = Permutation::longest_element(3);
  for (const Permutation& w : all_permutations(3)) {
    Permutation u = compose(w0, w);
    Permutation dual_target = compose(inverse(w), w0);
    for (const Partition& lam : parts)
      for (const Partition& mu : parts) {
        int total = static_cast<int>(part_sum(lam) + part_sum(mu));
        for (const Partition& nu : partitions_of(total, 3))
          for (const Hive& h : kogan_hive_union(lam, mu, nu, u)) {
            GTPattern b = hive_delta_ne(h);
            CHECK(valid_gt(b));
            CHECK(gt_shape(b) == lam);
            CHECK(gt_in_kogan_union(b, dual_target, /*dual=*/true));
          }
      }
  }
}

}  // namespace

int main() {
  test_golden_hive();
  test_bg();
  test_bg_round_trips();
  test_face_word();
  test_varpi();
  test_reduced_faces();
  test_f_w();
  test_enumeration();
  test_refined_lr_hive();
  test_bg_delta_bijection();
  test_increasable();
  test_flat_moves_on_staircase_faces();
  test_scaling();
  test_delta_ne_rotation();
  test_face_leaving_move_off_staircase();
  test_dual_face_membership();
  return testkit::summary("hive_test");
}
