#ifndef TROPMON_CLASSIFIER_HPP_
#define TROPMON_CLASSIFIER_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropmon/identities.hpp"
#include "tropmon/models.hpp"
#include "tropmon/words.hpp"

namespace tropmon {

  enum class Verdict { yes, no, unknown, unsupported };

  std::string to_string(Verdict v);

  struct RankBound {
    enum class Kind { none, exact, at_most };
    Kind          kind = Kind::none;
    std::uint32_t n    = 0;

    static RankBound exact(std::uint32_t n) {
      return {Kind::exact, n};
    }
    static RankBound at_most(std::uint32_t n) {
      return {Kind::at_most, n};
    }

    bool operator==(RankBound const&) const = default;
  };

  // "2", "<= 4" or "-".
  std::string to_string(RankBound const& r);

  //! One line of the classification table.
  //!
  //! `family`, `relation` and the rank texts are symbolic ("C(k,l)",
  //! "<= k"); the RankBound fields are instantiated for `id`.
  struct ClassTableRow {
    MonoidId                 id;
    std::string              family;
    std::string              relation;
    std::string              identity_name;
    IdentityTerm             identity;
    Verdict                  ut = Verdict::no;
    RankBound                ut_rank;
    std::string              ut_rank_text;
    Verdict                  mt = Verdict::no;
    RankBound                mt_rank;
    std::string              mt_rank_text;
    std::vector<std::string> citations;
  };

  // Throws std::invalid_argument for an invalid id.
  ClassTableRow table_row(MonoidId const& id);

  // One row per family, instantiated at N, C(3,1), C(3,2), B, K, M1..M5,
  // M6(1), M7, M8, M9(1).
  std::vector<ClassTableRow> table();

  struct Normalization {
    Presentation         presentation;  // over the template letters
    std::map<char, char> renaming;      // original letter -> template letter
    std::vector<std::string> notes;
    std::optional<MonoidId>  match;
  };

  // Tietze elimination of a generator x in a relation x = w with x not in
  // w, then orientation of the sides and renaming of the letters until a
  // template matches. Side orders are tried before renamings. Unmatched
  // presentations pass through with notes.
  Normalization normalize(Presentation const& p);

  struct ClassificationVerdict {
    enum class Category { listed, outside_list, unsupported };
    Category                    category = Category::unsupported;
    std::optional<MonoidId>     monoid;
    Verdict                     satisfies_identity = Verdict::unsupported;
    std::optional<IdentityTerm> identity;
    Verdict                     ut = Verdict::unsupported;
    Verdict                     mt = Verdict::unsupported;
    RankBound                   ut_rank;
    RankBound                   mt_rank;
    std::map<char, char>        renaming;
    std::vector<std::string>    notes;
    std::vector<std::string>    citations;
  };

  std::string to_string(ClassificationVerdict::Category c);

  ClassificationVerdict classify(Presentation const& p);

}  // namespace tropmon

#endif  // TROPMON_CLASSIFIER_HPP_
