#include "tropmon/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropmon {

  namespace {
    Word rename(Word const& w, std::map<char, char> const& r) {
      Word out = w;
      for (char& c : out) {
        c = r.at(c);
      }
      return out;
    }

    bool all_b(Word const& w) {
      return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return c == 'b'; });
    }

    std::optional<MonoidId> match_template(Word const& lhs, Word const& rhs) {
      static constexpr MonoidKind fixed[] = {MonoidKind::bicyclic, MonoidKind::klein, MonoidKind::m1,
                                             MonoidKind::m2,       MonoidKind::m3,    MonoidKind::m4,
                                             MonoidKind::m5,       MonoidKind::m7,    MonoidKind::m8};
      for (auto kind : fixed) {
        MonoidId   id{kind};
        auto const p = id.presentation();
        if (p.lhs == lhs && p.rhs == rhs) {
          return id;
        }
      }
      if (all_b(rhs) && (lhs == "ab" || lhs == "ba")) {
        auto const k = static_cast<std::uint32_t>(rhs.size());
        return lhs == "ab" ? MonoidId::shneerson(6, k) : MonoidId::shneerson(9, k);
      }
      return std::nullopt;
    }

    std::string join(std::string const& alphabet) {
      std::string out;
      for (char c : alphabet) {
        if (!out.empty()) {
          out += ',';
        }
        out += c;
      }
      return out;
    }
  }  // namespace

  std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::yes:
        return "yes";
      case Verdict::no:
        return "no";
      case Verdict::unknown:
        return "unknown";
      case Verdict::unsupported:
        return "unsupported";
    }
    return "unsupported";
  }

  std::string to_string(RankBound const& r) {
    switch (r.kind) {
      case RankBound::Kind::none:
        return "-";
      case RankBound::Kind::exact:
        return std::to_string(r.n);
      case RankBound::Kind::at_most:
        return "<= " + std::to_string(r.n);
    }
    return "-";
  }

  std::string to_string(ClassificationVerdict::Category c) {
    switch (c) {
      case ClassificationVerdict::Category::listed:
        return "listed";
      case ClassificationVerdict::Category::outside_list:
        return "outside_list";
      case ClassificationVerdict::Category::unsupported:
        return "unsupported";
    }
    return "unsupported";
  }

  ClassTableRow table_row(MonoidId const& id) {
    id.validate();
    ClassTableRow row;
    row.id = id;

    auto set = [&row](Verdict ut, RankBound utr, std::string utt, Verdict mt, RankBound mtr, std::string mtt) {
      row.ut           = ut;
      row.ut_rank      = utr;
      row.ut_rank_text = std::move(utt);
      row.mt           = mt;
      row.mt_rank      = mtr;
      row.mt_rank_text = std::move(mtt);
    };
    auto two_by_two = [&](std::string rep) {
      set(Verdict::yes, RankBound::exact(2), "2", Verdict::yes, RankBound::exact(2), "2");
      row.citations.push_back(std::move(rep));
    };
    auto mt_only = [&](std::string rep) {
      set(Verdict::no, {}, "-", Verdict::yes, RankBound::exact(2), "2");
      row.citations.push_back(std::move(rep));
    };

    switch (id.kind) {
      case MonoidKind::free_monogenic:
        row.family        = "N";
        row.relation      = "(none)";
        row.identity_name = "commutativity";
        set(Verdict::yes, RankBound::exact(1), "1", Verdict::yes, RankBound::exact(1), "1");
        row.citations.push_back("a -> (1) in UT_1");
        break;
      case MonoidKind::monogenic:
        row.relation      = id.is_aperiodic_monogenic() ? "a^(l+1) = a^l" : "a^k = a^l";
        row.identity_name = "commutativity";
        if (id.is_aperiodic_monogenic()) {
          row.family         = "C(l+1,l)";
          auto const bound   = std::max<std::uint32_t>(id.l, 1);
          set(Verdict::yes, RankBound::at_most(bound), "<= l", Verdict::yes, RankBound::at_most(bound), "<= l");
          row.citations.push_back("a -> l x l strictly upper triangular matrix of 1s");
        } else {
          row.family = "C(k,l), k > l+1";
          set(Verdict::no, {}, "-", Verdict::yes, RankBound::at_most(id.k), "<= k");
          row.citations.push_back("powers of a UT matrix that repeat have period 1");
          row.citations.push_back("right regular action on the k elements, in MT_k");
        }
        break;
      case MonoidKind::bicyclic:
        row.family        = "B";
        row.identity_name = "adian";
        two_by_two("2 x 2 upper triangular representation");
        break;
      case MonoidKind::klein:
        row.family        = "K";
        row.identity_name = "square_comm";
        mt_only("2 x 2 anti-diagonal representation");
        break;
      case MonoidKind::m1:
        two_by_two("diagonal representation of N x N");
        break;
      case MonoidKind::m2:
      case MonoidKind::m3:
        mt_only("2 x 2 anti-diagonal representation");
        break;
      case MonoidKind::m4:
      case MonoidKind::m7:
        set(Verdict::no, {}, "-", Verdict::unknown, {}, "?");
        row.citations.push_back("no tropical representation known");
        break;
      case MonoidKind::m5:
        set(Verdict::yes, RankBound::at_most(4), "<= 4", Verdict::yes, RankBound::at_most(4), "<= 4");
        row.citations.push_back("4 x 4 upper triangular representation");
        break;
      case MonoidKind::m8:
        set(Verdict::yes, RankBound::at_most(4), "<= 4", Verdict::yes, RankBound::at_most(4), "<= 4");
        row.citations.push_back("anti-transpose of the M5 representation");
        break;
      case MonoidKind::m6:
        two_by_two("2 x 2 upper triangular representation");
        break;
      case MonoidKind::m9:
        two_by_two("anti-transpose of the M6(k) representation");
        break;
    }

    if (row.family.empty()) {
      auto const index = static_cast<int>(id.kind) - static_cast<int>(MonoidKind::m1) + 1;
      row.family        = "M" + std::to_string(index);
      row.identity_name = "shneerson:" + std::to_string(index);
      if (id.kind == MonoidKind::m6 || id.kind == MonoidKind::m9) {
        row.family += "(k)";
      }
    }
    if (row.relation.empty()) {
      auto const p = id.presentation();
      row.relation = word_to_text(p.lhs) + " = " + word_to_text(p.rhs);
      if (id.kind == MonoidKind::m6) {
        row.relation = "ab = b^k";
      } else if (id.kind == MonoidKind::m9) {
        row.relation = "ba = b^k";
      }
    }
    row.identity = identity_catalog(row.identity_name);
    return row;
  }

  std::vector<ClassTableRow> table() {
    std::vector<MonoidId> ids{MonoidId::free_monogenic(), MonoidId::monogenic(3, 1), MonoidId::monogenic(3, 2),
                              MonoidId::bicyclic(),       MonoidId::klein()};
    for (int i = 1; i <= 9; ++i) {
      ids.push_back(MonoidId::shneerson(i, 1));
    }
    std::vector<ClassTableRow> rows;
    for (auto const& id : ids) {
      rows.push_back(table_row(id));
    }
    return rows;
  }

  Normalization normalize(Presentation const& p) {
    Normalization out;
    auto          alphabet = p.alphabet;
    Word          lhs      = p.lhs;
    Word          rhs      = p.rhs;

    if (alphabet.size() == 1) {
      out.renaming = {{alphabet[0], 'a'}};
      lhs          = rename(lhs, out.renaming);
      rhs          = rename(rhs, out.renaming);
      if (lhs.size() < rhs.size()) {
        std::swap(lhs, rhs);
      }
      out.presentation = {"a", lhs, rhs};
      if (lhs == rhs) {
        out.notes.push_back("trivial relation on one generator");
        out.match = MonoidId::free_monogenic();
      } else {
        out.match = MonoidId::monogenic(static_cast<std::uint32_t>(lhs.size()),
                                        static_cast<std::uint32_t>(rhs.size()));
      }
      return out;
    }

    for (int side = 0; side < 2 && lhs != rhs; ++side) {
      auto const& x = side == 0 ? lhs : rhs;
      auto const& w = side == 0 ? rhs : lhs;
      if (x.size() == 1 && w.find(x[0]) == Word::npos) {
        out.notes.push_back("eliminated " + x + " = " + word_to_text(w));
        alphabet.erase(alphabet.find(x[0]), 1);
        lhs.clear();
        rhs.clear();
      }
    }
    out.presentation = {alphabet, lhs, rhs};

    if (lhs == rhs) {
      if (alphabet.size() == 1) {
        out.renaming     = {{alphabet[0], 'a'}};
        out.presentation = {"a", "", ""};
        out.match        = MonoidId::free_monogenic();
      } else {
        out.notes.push_back("free monoid of rank " + std::to_string(alphabet.size()));
      }
      return out;
    }
    std::string absent;
    for (char c : alphabet) {
      if (lhs.find(c) == Word::npos && rhs.find(c) == Word::npos) {
        absent.push_back(c);
      }
    }
    if (!absent.empty()) {
      out.notes.push_back("generators " + join(absent) + " do not occur in the relation");
      return out;
    }
    if (alphabet.size() != 2) {
      out.notes.push_back(std::to_string(alphabet.size()) + " generators");
      return out;
    }

    for (int swap_sides = 0; swap_sides < 2; ++swap_sides) {
      for (int swap_letters = 0; swap_letters < 2; ++swap_letters) {
        std::map<char, char> r{{alphabet[0], swap_letters ? 'b' : 'a'}, {alphabet[1], swap_letters ? 'a' : 'b'}};
        auto const           l2 = rename(swap_sides ? rhs : lhs, r);
        auto const           r2 = rename(swap_sides ? lhs : rhs, r);
        if (auto id = match_template(l2, r2)) {
          out.presentation = {"ab", l2, r2};
          out.renaming     = std::move(r);
          out.match        = id;
          return out;
        }
      }
    }
    out.notes.push_back("no template matches");
    return out;
  }

  ClassificationVerdict classify(Presentation const& p) {
    auto                  norm = normalize(p);
    ClassificationVerdict v;
    v.renaming = std::move(norm.renaming);
    v.notes    = std::move(norm.notes);

    if (norm.match) {
      auto const row       = table_row(*norm.match);
      v.category           = ClassificationVerdict::Category::listed;
      v.monoid             = norm.match;
      v.satisfies_identity = Verdict::yes;
      v.identity           = row.identity;
      v.ut                 = row.ut;
      v.mt                 = row.mt;
      v.ut_rank            = row.ut_rank;
      v.mt_rank            = row.mt_rank;
      v.citations          = row.citations;
      return v;
    }

    auto const& q       = norm.presentation;
    bool const  special = q.lhs.empty() || q.rhs.empty();
    bool        absent  = false;
    for (char c : q.alphabet) {
      absent = absent || (q.lhs.find(c) == Word::npos && q.rhs.find(c) == Word::npos);
    }
    if (absent || !special) {
      v.category           = ClassificationVerdict::Category::outside_list;
      v.satisfies_identity = Verdict::no;
      v.ut                 = Verdict::no;
      v.mt                 = Verdict::no;
      v.citations.push_back("not isomorphic to a listed monoid: no identity, not tropical");
    } else {
      v.notes.push_back("special relation outside ab = 1, abba = 1, a^k = 1");
    }
    return v;
  }

}  // namespace tropmon
