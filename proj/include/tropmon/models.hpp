#ifndef TROPMON_MODELS_HPP_
#define TROPMON_MODELS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tropmon/words.hpp"

namespace tropmon {

  enum class MonoidKind {
    free_monogenic,  // <a | >
    monogenic,       // C(k, l) = <a | a^k = a^l>, 0 <= l < k
    bicyclic,        // <a, b | ab = 1>
    klein,           // <a, b | abba = 1>
    m1,              // ab = ba
    m2,              // aa = bb
    m3,              // aba = b
    m4,              // abaa = ba
    m5,              // aba = ba
    m6,              // ab = b^k, k >= 1
    m7,              // aaba = ab
    m8,              // aba = ab
    m9               // ba = b^k, k >= 1
  };

  struct MonoidId {
    MonoidKind    kind = MonoidKind::free_monogenic;
    std::uint32_t k    = 0;
    std::uint32_t l    = 0;

    static MonoidId free_monogenic() {
      return {MonoidKind::free_monogenic};
    }
    static MonoidId monogenic(std::uint32_t k, std::uint32_t l);
    static MonoidId bicyclic() {
      return {MonoidKind::bicyclic};
    }
    static MonoidId klein() {
      return {MonoidKind::klein};
    }
    // M1..M9; `k` is used by M6 and M9 only.
    static MonoidId shneerson(int index, std::uint32_t k = 1);

    // Throws std::invalid_argument for out-of-range parameters.
    void validate() const;

    [[nodiscard]] bool is_aperiodic_monogenic() const noexcept {
      return kind == MonoidKind::monogenic && k == l + 1;
    }

    // "M5", "M6(2)", "C(5,2)", "N", "B", "K".
    [[nodiscard]] std::string name() const;

    // "a" or "ab".
    [[nodiscard]] std::string alphabet() const;

    // The defining presentation with exponents expanded.
    [[nodiscard]] Presentation presentation() const;

    // The anti-isomorphic monoid: M5 <-> M8, M6(k) <-> M9(k), M4 <-> M7,
    // everything else is fixed.
    [[nodiscard]] MonoidId reversed() const;

    bool operator==(MonoidId const&) const = default;
  };

  // Parses "bicyclic", "klein", "free", "m1".."m9" (also "m6k", "m9k"),
  // "monogenic"/"cyclic" with the parameters passed separately, and the
  // names printed by MonoidId::name() such as "M6(2)" and "C(5,2)".
  // Throws ParseError.
  MonoidId parse_monoid(std::string_view name, std::uint32_t k = 1, std::uint32_t l = 0);

  // Canonical element types. Which fields mean what depends on the monoid.
  struct Exponent {
    std::int64_t m = 0;
    auto operator<=>(Exponent const&) const = default;
  };

  // Bicyclic b^m a^n; M1 a^m b^n; M6(k) b^m a^n; M9(k) a^n b^m.
  struct Pair {
    std::int64_t m = 0;
    std::int64_t n = 0;
    auto operator<=>(Pair const&) const = default;
  };

  // Element (m, n) of Z x| Z with (m1,n1)(m2,n2) = (m1 + (-1)^n1 m2, n1 + n2).
  struct Twisted {
    std::int64_t m = 0;
    std::int64_t n = 0;
    auto operator<=>(Twisted const&) const = default;
  };

  // M5 (ba)^alpha a^beta b^gamma; M8 b^gamma a^beta (ab)^alpha.
  struct Triple {
    std::int64_t alpha = 0;
    std::int64_t beta  = 0;
    std::int64_t gamma = 0;
    auto operator<=>(Triple const&) const = default;
  };

  using ModelElement = std::variant<Exponent, Pair, Twisted, Triple>;

  // Flat coordinates of an element (1, 2 or 3 integers).
  std::vector<std::int64_t> coordinates(ModelElement const& x);

  // Inverse of coordinates() for the element type used by `id`.
  ModelElement element_from_coordinates(MonoidId const& id, std::vector<std::int64_t> const& c);

  [[nodiscard]] bool has_model(MonoidId const& id) noexcept;

  // The functions below throw UnsupportedError for M4 and M7, and
  // std::invalid_argument if an element is not of the monoid's element type
  // or violates its invariants.
  ModelElement model_one(MonoidId const& id);
  ModelElement model_generator(MonoidId const& id, char letter);
  ModelElement model_mul(MonoidId const& id, ModelElement const& x, ModelElement const& y);
  ModelElement model_from_word(MonoidId const& id, Word const& w);

  // The normal-form word of `x`. Throws NoCanonicalWordError for twisted
  // values outside the image of the monoid, e.g. M3's (-1, 0).
  Word model_canonical_word(MonoidId const& id, ModelElement const& x);

  // Every element whose normal form has all exponents <= bound, sorted by
  // canonical word in shortlex order. For the Klein group it is every (m, n)
  // with |m|, |n| <= bound.
  std::vector<ModelElement> model_pool(MonoidId const& id, std::uint32_t bound);

  std::string to_string(ModelElement const& x);

  struct ModelElementHash {
    std::size_t operator()(ModelElement const& x) const noexcept;
  };

}  // namespace tropmon

#endif  // TROPMON_MODELS_HPP_
