#include <vector>

#include "doctest.h"
#include "tropmon/errors.hpp"
#include "tropmon/representations.hpp"

using namespace tropmon;

namespace {
  constexpr TropInt X = NEG_INF;

  std::vector<MonoidId> represented_monoids() {
    std::vector<MonoidId> ids{MonoidId::free_monogenic(), MonoidId::bicyclic(), MonoidId::klein()};
    for (int i : {1, 2, 3, 5, 8}) {
      ids.push_back(MonoidId::shneerson(i));
    }
    for (std::uint32_t k : {1u, 2u, 3u, 5u}) {
      ids.push_back(MonoidId::shneerson(6, k));
      ids.push_back(MonoidId::shneerson(9, k));
    }
    for (std::uint32_t k = 1; k <= 6; ++k) {
      for (std::uint32_t l = 0; l < k; ++l) {
        ids.push_back(MonoidId::monogenic(k, l));
      }
    }
    return ids;
  }

  TropMatrix const& A(Representation const& r) {
    return r.images.at('a');
  }
  TropMatrix const& B(Representation const& r) {
    return r.images.at('b');
  }
}  // namespace

TEST_CASE("every representation satisfies its relation") {
  for (auto const& id : represented_monoids()) {
    CAPTURE(id.name());
    auto const r = representation(id);
    CHECK(verify_relation(r));
    for (auto const& [letter, m] : r.images) {
      CHECK(m.dim() == r.n);
      if (r.target == Target::ut) {
        CHECK(is_upper_triangular(m));
      }
    }
  }
  CHECK_THROWS_AS(representation(MonoidId::shneerson(4)), UnsupportedError);
  CHECK_THROWS_AS(representation(MonoidId::shneerson(7)), UnsupportedError);
}

TEST_CASE("the defining equalities hold as matrix equations") {
  auto const m6 = representation(MonoidId::shneerson(6, 1));
  CHECK(A(m6) * B(m6) == B(m6));
  for (std::uint32_t k : {2u, 3u, 5u}) {
    auto const r = representation(MonoidId::shneerson(6, k));
    CHECK(A(r) * B(r) == power(B(r), k));
  }
  auto const m5 = representation(MonoidId::shneerson(5));
  CHECK(A(m5) * B(m5) * A(m5) == B(m5) * A(m5));
  auto const k = representation(MonoidId::klein());
  CHECK(A(k) * B(k) * B(k) * A(k) == TropMatrix::identity(2));
  auto const m3 = representation(MonoidId::shneerson(3));
  CHECK(A(m3) * B(m3) * A(m3) == B(m3));
  auto const m2 = representation(MonoidId::shneerson(2));
  CHECK(A(m2) * A(m2) == B(m2) * B(m2));
  auto const b = representation(MonoidId::bicyclic());
  CHECK(A(b) * B(b) != B(b) * A(b));
}

TEST_CASE("M8 and M9 use the anti-transposed images of M5 and M6") {
  auto const m5 = representation(MonoidId::shneerson(5));
  auto const m8 = representation(MonoidId::shneerson(8));
  CHECK(A(m8) == anti_transpose(A(m5)));
  CHECK(B(m8) == anti_transpose(B(m5)));
  for (std::uint32_t k : {1u, 2u, 3u}) {
    auto const m6 = representation(MonoidId::shneerson(6, k));
    auto const m9 = representation(MonoidId::shneerson(9, k));
    CHECK(A(m9) == anti_transpose(A(m6)));
    CHECK(B(m9) == anti_transpose(B(m6)));
  }
}

TEST_CASE("M3 sends b^7 a^8 b to diag(-4, 12)") {
  auto const r = representation(MonoidId::shneerson(3));
  CHECK(evaluate_word(r, "bbbbbbbaaaaaaaab") == TropMatrix{{-4, X}, {X, 12}});
  CHECK(evaluate_word(r, "") == TropMatrix::identity(2));
}

TEST_CASE("bicyclic embedding at length 6 has 28 classes") {
  auto const rep = verify_embedding(MonoidId::bicyclic(), 6);
  CHECK(rep.relation_holds);
  CHECK(rep.injective);
  CHECK(rep.classes == 28);
  CHECK_FALSE(rep.witnesses);
}

TEST_CASE("embeddings are faithful on short words") {
  for (auto const& id : represented_monoids()) {
    CAPTURE(id.name());
    auto const rep = verify_embedding(id, 6);
    CHECK(rep.relation_holds);
    CHECK(rep.injective);
  }
  CHECK_THROWS_AS(verify_embedding(MonoidId::shneerson(4), 4), UnsupportedError);
}

TEST_CASE("parallel and serial sweeps agree") {
  for (auto const& id : {MonoidId::shneerson(5), MonoidId::klein(), MonoidId::bicyclic()}) {
    CHECK(verify_embedding(id, 8, true) == verify_embedding(id, 8, false));
  }
}

TEST_CASE("the M5 pair with B(0,0) = 1 is not faithful") {
  auto r = representation(MonoidId::shneerson(5));
  r.images.at('b').set(0, 0, 1);
  CHECK(verify_relation(r));
  CHECK(evaluate_word(r, "babb") == evaluate_word(r, "bbab"));
  CHECK(model_from_word(r.monoid, "babb") != model_from_word(r.monoid, "bbab"));
  auto const rep = verify_embedding(r, 4);
  CHECK_FALSE(rep.injective);
  REQUIRE(rep.witnesses);
  CHECK(evaluate_word(r, rep.witnesses->first) == evaluate_word(r, rep.witnesses->second));
}

TEST_CASE("a broken image is reported with witnesses") {
  auto r = representation(MonoidId::klein());
  r.images.at('a') = TropMatrix{{X, 0}, {0, X}};
  auto const rep = verify_embedding(r, 4);
  CHECK_FALSE(rep.relation_holds);
  CHECK_FALSE(rep.injective);
  CHECK(rep.witnesses);
}

TEST_CASE("transformation matrices compose as maps") {
  std::vector<std::size_t> f{1, 2, 0};
  std::vector<std::size_t> g{0, 0, 2};
  std::vector<std::size_t> gf(3);
  for (std::size_t i = 0; i < 3; ++i) {
    gf[i] = g[f[i]];
  }
  CHECK(transformation_matrix(f) * transformation_matrix(g) == transformation_matrix(gf));
  std::vector<std::size_t> bad{3, 0, 1};
  CHECK_THROWS_AS(transformation_matrix(bad), std::invalid_argument);

  auto const r = transformation_representation(MonoidId::monogenic(5, 2));
  CHECK(r.n == 5);
  CHECK(power(A(r), 5) == power(A(r), 2));
  CHECK(power(A(r), 4) != power(A(r), 2));
  CHECK_THROWS_AS(transformation_representation(MonoidId::bicyclic()), std::invalid_argument);
}

TEST_CASE("aperiodic monogenic images are nilpotent upper triangular") {
  for (std::uint32_t l = 1; l <= 5; ++l) {
    auto const r = representation(MonoidId::monogenic(l + 1, l));
    CHECK(r.n == l);
    CHECK(r.target == Target::ut);
    CHECK(power(A(r), l) == TropMatrix::zero(l));
    CHECK(power(A(r), l - 1) != TropMatrix::zero(l));
  }
}
