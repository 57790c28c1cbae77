#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "tropmon/classifier.hpp"
#include "tropmon/representations.hpp"

using namespace tropmon;

namespace {
  using Category = ClassificationVerdict::Category;

  ClassificationVerdict classify_text(std::string const& text) {
    return classify(parse_presentation(text));
  }

  // Every listed monoid, with the parameterized rows at k = 1, 2, 3.
  std::vector<MonoidId> listed() {
    std::vector<MonoidId> ids{MonoidId::free_monogenic(), MonoidId::bicyclic(), MonoidId::klein()};
    for (std::uint32_t l = 0; l <= 3; ++l) {
      ids.push_back(MonoidId::monogenic(l + 1, l));
      ids.push_back(MonoidId::monogenic(l + 3, l));
    }
    for (int i = 1; i <= 9; ++i) {
      if (i == 6 || i == 9) {
        for (std::uint32_t k : {1u, 2u, 3u}) {
          ids.push_back(MonoidId::shneerson(i, k));
        }
      } else {
        ids.push_back(MonoidId::shneerson(i));
      }
    }
    return ids;
  }

  Presentation swap_letters(Presentation p) {
    for (Word* w : {&p.lhs, &p.rhs}) {
      for (char& c : *w) {
        c = c == 'a' ? 'b' : 'a';
      }
    }
    return p;
  }

  void check_same(ClassificationVerdict const& x, ClassificationVerdict const& y) {
    CHECK(x.category == y.category);
    CHECK(x.monoid == y.monoid);
    CHECK(x.satisfies_identity == y.satisfies_identity);
    CHECK(x.ut == y.ut);
    CHECK(x.mt == y.mt);
    CHECK(x.ut_rank == y.ut_rank);
    CHECK(x.mt_rank == y.mt_rank);
  }
}  // namespace

TEST_CASE("table rows") {
  auto const rows = table();
  REQUIRE(rows.size() == 14);

  struct Expected {
    std::string family;
    Verdict     ut;
    std::string ut_rank;
    Verdict     mt;
    std::string mt_rank;
  };
  std::vector<Expected> const expected{
      {"N", Verdict::yes, "1", Verdict::yes, "1"},
      {"C(k,l), k > l+1", Verdict::no, "-", Verdict::yes, "<= k"},
      {"C(l+1,l)", Verdict::yes, "<= l", Verdict::yes, "<= l"},
      {"B", Verdict::yes, "2", Verdict::yes, "2"},
      {"K", Verdict::no, "-", Verdict::yes, "2"},
      {"M1", Verdict::yes, "2", Verdict::yes, "2"},
      {"M2", Verdict::no, "-", Verdict::yes, "2"},
      {"M3", Verdict::no, "-", Verdict::yes, "2"},
      {"M4", Verdict::no, "-", Verdict::unknown, "?"},
      {"M5", Verdict::yes, "<= 4", Verdict::yes, "<= 4"},
      {"M6(k)", Verdict::yes, "2", Verdict::yes, "2"},
      {"M7", Verdict::no, "-", Verdict::unknown, "?"},
      {"M8", Verdict::yes, "<= 4", Verdict::yes, "<= 4"},
      {"M9(k)", Verdict::yes, "2", Verdict::yes, "2"},
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(rows[i].family);
    CHECK(rows[i].family == expected[i].family);
    CHECK(rows[i].ut == expected[i].ut);
    CHECK(rows[i].ut_rank_text == expected[i].ut_rank);
    CHECK(rows[i].mt == expected[i].mt);
    CHECK(rows[i].mt_rank_text == expected[i].mt_rank);
    CHECK(!rows[i].citations.empty());
  }

  auto const m5 = table_row(MonoidId::shneerson(5));
  CHECK(m5.ut_rank == RankBound::at_most(4));
  CHECK(m5.identity == IdentityTerm{"xyxyx", "yxxyx"});
  CHECK(table_row(MonoidId::shneerson(6, 3)).ut_rank == RankBound::exact(2));
  CHECK(table_row(MonoidId::free_monogenic()).mt_rank == RankBound::exact(1));
  CHECK(table_row(MonoidId::monogenic(5, 2)).mt_rank == RankBound::at_most(5));
  CHECK(table_row(MonoidId::monogenic(4, 3)).ut_rank == RankBound::at_most(3));
  CHECK(table_row(MonoidId::monogenic(1, 0)).ut_rank == RankBound::at_most(1));
  CHECK(to_string(RankBound::at_most(4)) == "<= 4");
  CHECK(to_string(RankBound{}) == "-");
}

TEST_CASE("classification examples") {
  auto const b = classify_text("a,b|ab=1");
  CHECK(b.category == Category::listed);
  CHECK(b.monoid == MonoidId::bicyclic());
  CHECK(b.ut == Verdict::yes);
  CHECK(b.mt_rank == RankBound::exact(2));

  auto const k = classify_text("a,b|abba=1");
  CHECK(k.monoid == MonoidId::klein());
  CHECK(k.satisfies_identity == Verdict::yes);
  CHECK(k.identity == IdentityTerm{"xxyy", "yyxx"});
  CHECK(k.ut == Verdict::no);
  CHECK(k.mt == Verdict::yes);

  auto const m4 = classify_text("a,b|abaa=ba");
  CHECK(m4.monoid == MonoidId::shneerson(4));
  CHECK(m4.satisfies_identity == Verdict::yes);
  CHECK(m4.ut == Verdict::no);
  CHECK(m4.mt == Verdict::unknown);

  auto const m7 = classify_text("a,b|aaba=ab");
  CHECK(m7.monoid == MonoidId::shneerson(7));
  CHECK(m7.mt == Verdict::unknown);

  auto const three = classify_text("a,b,c|ab=ba");
  CHECK(three.category == Category::outside_list);
  CHECK(three.satisfies_identity == Verdict::no);
  CHECK(three.ut == Verdict::no);
  CHECK(three.mt == Verdict::no);

  auto const c52 = classify_text("a|aaaaa=aa");
  CHECK(c52.monoid == MonoidId::monogenic(5, 2));
  CHECK(c52.ut == Verdict::no);
  CHECK(c52.mt == Verdict::yes);
  CHECK(c52.mt_rank == RankBound::at_most(5));

  CHECK(classify_text("a|aaa=1").monoid == MonoidId::monogenic(3, 0));
  CHECK(classify_text("a|aa=aa").monoid == MonoidId::free_monogenic());
  CHECK(classify_text("a,b|ab=ab").category == Category::outside_list);
  CHECK(classify_text("a,b|aab=ba").category == Category::outside_list);
  CHECK(classify_text("a,b|aa=a").category == Category::outside_list);
  CHECK(classify_text("a,b|aabb=1").category == Category::unsupported);
  CHECK(classify_text("a,b|ab=bbbb").monoid == MonoidId::shneerson(6, 4));
  CHECK(classify_text("x,y|yx=xxx").monoid == MonoidId::shneerson(6, 3));
  CHECK(classify_text("x,y|xy=xxx").monoid == MonoidId::shneerson(9, 3));
}

TEST_CASE("normalization") {
  auto const n = normalize(parse_presentation("a,b|b=a"));
  CHECK(n.match == MonoidId::free_monogenic());

  auto const m2 = normalize(parse_presentation("a,b|bb=aa"));
  CHECK(m2.match == MonoidId::shneerson(2));
  CHECK(m2.presentation == Presentation{"ab", "aa", "bb"});

  auto const b = normalize(parse_presentation("a,b|ba=1"));
  CHECK(b.match == MonoidId::bicyclic());
  CHECK(b.renaming == std::map<char, char>{{'a', 'b'}, {'b', 'a'}});

  auto const t = normalize(parse_presentation("a,b,c|c=ab"));
  CHECK_FALSE(t.match);
  CHECK(t.presentation.alphabet == "ab");

  auto const nn = normalize(parse_presentation("x,y|yxy=x"));
  CHECK(nn.match == MonoidId::shneerson(3));
  CHECK(nn.renaming == std::map<char, char>{{'x', 'b'}, {'y', 'a'}});
}

TEST_CASE("reversal maps the table onto itself") {
  for (auto const& id : listed()) {
    CAPTURE(id.name());
    auto const v = classify(reverse(id.presentation()));
    REQUIRE(v.monoid);
    CHECK(*v.monoid == id.reversed());
    check_same(v, classify(id.reversed().presentation()));
    auto const direct = classify(id.presentation());
    CHECK(direct.ut == v.ut);
    CHECK(direct.mt == v.mt);
    CHECK(direct.satisfies_identity == v.satisfies_identity);
  }
}

TEST_CASE("classification is invariant under renaming and side order") {
  for (auto const& id : listed()) {
    CAPTURE(id.name());
    auto const p      = id.presentation();
    auto const direct = classify(p);
    REQUIRE(direct.monoid == id);
    if (p.alphabet.size() == 2) {
      auto const swapped = classify(swap_letters(p));
      check_same(direct, swapped);
      CHECK(swapped.renaming == std::map<char, char>{{'a', 'b'}, {'b', 'a'}});
    }
    check_same(direct, classify(Presentation{p.alphabet, p.rhs, p.lhs}));
  }
}

TEST_CASE("UT-tropical implies MT-tropical, and only M4 and M7 are open") {
  for (auto const& id : listed()) {
    auto const row = table_row(id);
    if (row.ut == Verdict::yes) {
      CHECK(row.mt == Verdict::yes);
    }
    bool const open = id.kind == MonoidKind::m4 || id.kind == MonoidKind::m7;
    CHECK((row.mt == Verdict::unknown) == open);
  }
}

TEST_CASE("every YES cell is backed by a faithful representation") {
  for (auto const& id : listed()) {
    auto const row = table_row(id);
    if (row.mt != Verdict::yes) {
      continue;
    }
    CAPTURE(id.name());
    auto const r = representation(id);
    if (row.ut == Verdict::yes) {
      CHECK(r.target == Target::ut);
    }
    auto const rep = verify_embedding(r, 8);
    CHECK(rep.relation_holds);
    CHECK(rep.injective);
  }
}

TEST_CASE("every classified identity holds on its pool") {
  for (auto const& id : listed()) {
    CAPTURE(id.name());
    auto const row = table_row(id);
    CHECK(check_identity_model(row.identity, id, 3).status == CheckStatus::holds_on_pool);
  }
}
