#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galbrauer/abgroup.hpp"
#include "galbrauer/seeded_rng.hpp"

using namespace galbrauer;

namespace {

IntMatrix M(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Int>> conv;
  for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
  return IntMatrix::from_rows(conv);
}

AbStructure S(std::size_t free_rank, std::vector<long> torsion) {
  AbStructure s;
  s.free_rank = free_rank;
  s.invariant_factors.assign(torsion.begin(), torsion.end());
  return s;
}

} // namespace

TEST_CASE("structure of pinned presentations") {
  CHECK(structure({2, M({{2, 0}, {0, 3}})}) == S(0, {6}));
  CHECK(structure(FpAbGroup::free_group(3)) == S(3, {}));
  CHECK(structure({2, M({{2}, {0}})}) == S(1, {2}));
  CHECK(structure(FpAbGroup::zero()) == S(0, {}));
  CHECK(structure({2, M({{1}, {0}})}) == S(1, {}));
  CHECK(structure({1, M({{4}})}) == S(0, {4}));
}

TEST_CASE("structure text rendering") {
  CHECK(S(0, {}).to_text() == "0");
  CHECK(S(1, {}).to_text() == "Z");
  CHECK(S(2, {}).to_text() == "Z^2");
  CHECK(S(0, {2}).to_text() == "Z/2");
  CHECK(S(2, {2, 6}).to_text() == "Z^2 (+) Z/2 (+) Z/6");
  CHECK(S(1, {3}).to_text() == "Z (+) Z/3");
}

TEST_CASE("from_structure round-trips") {
  SeededRng rng(61);
  for (int it = 0; it < 30; ++it) {
    AbStructure s;
    s.free_rank = rng.uniform(0, 3);
    Int d = 1;
    int torsion = rng.uniform(0, 3);
    for (int i = 0; i < torsion; ++i) {
      d *= rng.uniform(2, 4);
      s.invariant_factors.push_back(d);
    }
    CHECK(structure(FpAbGroup::from_structure(s)) == s);
  }
}

TEST_CASE("structure is presentation independent") {
  SeededRng rng(67);
  for (int it = 0; it < 100; ++it) {
    std::size_t n = 1 + rng.uniform(0, 3);
    std::size_t k = rng.uniform(0, 4);
    FpAbGroup g{n, rng.matrix(n, k, -6, 6)};
    AbStructure base = structure(g);

    // Append redundant relators: random combinations of existing columns.
    std::size_t extra = 1 + rng.uniform(0, 2);
    IntMatrix padded(n, k + extra);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < n; ++i) padded(i, j) = g.relations(i, j);
    for (std::size_t e = 0; e < extra; ++e) {
      IntVector combo(n);
      for (std::size_t j = 0; j < k; ++j) {
        Int c = rng.uniform(-3, 3);
        for (std::size_t i = 0; i < n; ++i)
          combo[i] += c * g.relations(i, j);
      }
      for (std::size_t i = 0; i < n; ++i) padded(i, k + e) = combo[i];
    }
    CHECK(structure({n, padded}) == base);
  }
}

TEST_CASE("ill-defined hom is rejected") {
  FpAbGroup z2{1, M({{2}})};
  FpAbGroup z = FpAbGroup::free_group(1);
  CHECK_THROWS_AS((void)make_hom(z2, z, M({{1}})), Error);
  // The other direction is fine.
  CHECK(well_defined(AbHom{z, z2, M({{1}})}));
}

TEST_CASE("kernel of multiplication by 2 on Z/4") {
  FpAbGroup z4{1, M({{4}})};
  AbHom dbl = make_hom(z4, z4, M({{2}}));
  SubgroupPart k = kernel(dbl);
  CHECK(structure(k.group) == S(0, {2}));
  // The inclusion really lands in the kernel of the map.
  CHECK(is_zero_hom(compose(dbl, k.incl)));
  // The generator class is 2 mod 4.
  bool found = false;
  for (std::size_t j = 0; j < k.incl.matrix.cols(); ++j)
    if (element_equal(z4, k.incl.matrix.col(j), IntVector{2})) found = true;
  CHECK(found);
}

TEST_CASE("image of Z -> Z/4 sending 1 to 2") {
  FpAbGroup z4{1, M({{4}})};
  AbHom f = make_hom(FpAbGroup::free_group(1), z4, M({{2}}));
  CHECK(structure(image(f).group) == S(0, {2}));
}

TEST_CASE("cokernel of diag(2,3) on Z^2") {
  AbHom f = make_hom(FpAbGroup::free_group(2), FpAbGroup::free_group(2),
                     M({{2, 0}, {0, 3}}));
  QuotientPart c = cokernel(f);
  CHECK(structure(c.group) == S(0, {6}));
  CHECK(is_zero_hom(compose(c.proj, f)));
}

TEST_CASE("subquotient of pinned diagonal lattice") {
  // span{(1,1)} / span{(3,3)} inside Z^2 is Z/3.
  Subquotient q =
      subquotient(M({{1}, {1}}), M({{3}, {3}}), FpAbGroup::free_group(2));
  CHECK(structure(q.group) == S(0, {3}));
  CHECK_THROWS_AS((void)subquotient(M({{1}, {1}}), M({{1}, {0}}),
                                    FpAbGroup::free_group(2)),
                  Error);
}

TEST_CASE("subquotient sees ambient relations") {
  // span{e1} / 0 inside Z^2/(2e1) is Z/2.
  FpAbGroup amb{2, M({{2}, {0}})};
  Subquotient q = subquotient(M({{1}, {0}}), IntMatrix(2, 0), amb);
  CHECK(structure(q.group) == S(0, {2}));
}

TEST_CASE("kernel and image fit in exact sequences") {
  SeededRng rng(71);
  for (int it = 0; it < 40; ++it) {
    std::size_t a = 1 + rng.uniform(0, 2);
    std::size_t b = 1 + rng.uniform(0, 2);
    std::size_t ka = rng.uniform(0, 2);
    std::size_t kb = rng.uniform(0, 2);
    FpAbGroup src{a, rng.matrix(a, ka, -4, 4)};
    FpAbGroup tgt{b, rng.matrix(b, kb, -4, 4)};
    IntMatrix m = rng.matrix(b, a, -3, 3);
    AbHom f{src, tgt, m};
    if (!well_defined(f)) continue;

    SubgroupPart k = kernel(f);
    CHECK(is_zero_hom(compose(f, k.incl)));
    // ker -> src -> tgt is exact at src by construction; verify with the
    // generic checker.
    CHECK(is_exact_at(k.incl, f));

    QuotientPart c = cokernel(f);
    CHECK(is_zero_hom(compose(c.proj, f)));
    // src -> tgt -> coker is exact at tgt.
    CHECK(is_exact_at(f, c.proj));
  }
}

TEST_CASE("exactness checker flags failures") {
  FpAbGroup z = FpAbGroup::free_group(1);
  FpAbGroup z2{1, M({{2}})};
  AbHom dbl = make_hom(z, z, M({{2}}));
  AbHom quad = make_hom(z, z, M({{4}}));
  AbHom proj = make_hom(z, z2, M({{1}}));
  // Z -(x2)-> Z -> Z/2 is exact in the middle.
  CHECK(is_exact_at(dbl, proj));
  // Z -(x4)-> Z -> Z/2 is not: class of 2 is in the kernel, not the image.
  CHECK(!is_exact_at(quad, proj));
}

TEST_CASE("composite through cokernel of x2 on Z computes Z/2") {
  AbHom dbl = make_hom(FpAbGroup::free_group(1), FpAbGroup::free_group(1),
                       M({{2}}));
  CHECK(structure(cokernel(dbl).group) == S(0, {2}));
}

TEST_CASE("direct sum structures renormalize") {
  CHECK(sum_structure(S(0, {2}), S(0, {3})) == S(0, {6}));
  CHECK(sum_structure(S(0, {2}), S(0, {2})) == S(0, {2, 2}));
  CHECK(sum_structure(S(1, {2}), S(2, {4})) == S(3, {2, 4}));
  CHECK(sum_structure(S(0, {}), S(0, {})) == S(0, {}));
  CHECK(sum_structure(S(0, {2, 4}), S(0, {3})) == S(0, {2, 12}));
}

TEST_CASE("hom equality is modulo target relations") {
  FpAbGroup z4{1, M({{4}})};
  AbHom a = make_hom(z4, z4, M({{1}}));
  AbHom b = make_hom(z4, z4, M({{5}}));
  AbHom c = make_hom(z4, z4, M({{2}}));
  CHECK(hom_equal(a, b));
  CHECK(!hom_equal(a, c));
}
