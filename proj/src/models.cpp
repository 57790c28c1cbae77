#include "tropmon/models.hpp"

#include <algorithm>
#include <stdexcept>

#include "tropmon/errors.hpp"

// Reference semantics for the one-relation monoids: a canonical element per
// monoid and the exact multiplication law on canonical elements.
//
// M3 is modelled inside Z x| Z (a -> (1,0), b -> (0,1)); M3 is cycle-free and
// so embeds in the group <a, b | aba = b>, which is this semidirect product.
// A commonly quoted table for the b^x a^y normal forms gets the two odd
// cases wrong (one of them yields a negative exponent). The law that the
// twisted product induces, and that the 2x2 tropical representation agrees
// with, is
//
//   b^x1 a^y1 . b^x2 a^y2 = b^(x1+x2) a^(y1+y2)          if x2 is even,
//                         = b^(x1+x2) a^(y2-y1)          if x2 is odd, y2 >= y1,
//                         = b^(x1+x2-1) a^(y1-y2) b      if x2 is odd, y1 > y2.
//
// M2 is modelled through M2 <= M3, a -> ba, b -> b. The Klein group uses
// a -> (0,1), b -> (1,-1), which satisfies abba = 1 and generates Z x| Z.
// M8 and M9(k) reuse the laws of M5 and M6(k) with the factors swapped.

namespace tropmon {

  namespace {

    [[noreturn]] void unsupported(MonoidId const& id) {
      throw UnsupportedError("no normal-form model is available for " + id.name());
    }

    template <typename T>
    T const& as(ModelElement const& x, MonoidId const& id) {
      if (auto const* p = std::get_if<T>(&x)) {
        return *p;
      }
      throw std::invalid_argument("element " + to_string(x) + " does not belong to " + id.name());
    }

    std::int64_t sign(std::int64_t n) {
      return n % 2 == 0 ? 1 : -1;
    }

    std::int64_t reduce_monogenic(MonoidId const& id, std::int64_t m) {
      std::int64_t const k = id.k;
      std::int64_t const l = id.l;
      return m < k ? m : l + (m - l) % (k - l);
    }

    Pair mul_bicyclic(Pair x, Pair y) {
      auto t = std::min(x.n, y.m);
      return {x.m + y.m - t, x.n + y.n - t};
    }

    // M6(k): (b^m a^n)(b^m' a^n').
    Pair mul_m6(std::int64_t k, Pair x, Pair y) {
      if (y.m != 0) {
        return {x.m + x.n * (k - 1) + y.m, y.n};
      }
      return {x.m, x.n + y.n};
    }

    // M5: ((ba)^al a^be b^ga)((ba)^al' a^be' b^ga').
    Triple mul_m5(Triple x, Triple y) {
      if (y.alpha != 0) {
        return {x.alpha + x.gamma + y.alpha, y.beta, y.gamma};
      }
      if (y.beta != 0 && x.gamma != 0) {
        return {x.alpha + x.gamma, y.beta - 1, y.gamma};
      }
      if (y.beta != 0) {
        return {x.alpha, x.beta + y.beta, y.gamma};
      }
      return {x.alpha, x.beta, x.gamma + y.gamma};
    }

    Twisted mul_twisted(Twisted x, Twisted y) {
      return {x.m + sign(x.n) * y.m, x.n + y.n};
    }

    void check_nonneg(MonoidId const& id, ModelElement const& x) {
      for (auto c : coordinates(x)) {
        if (c < 0) {
          throw std::invalid_argument("element " + to_string(x) + " has a negative exponent in "
                                      + id.name());
        }
      }
    }

    void validate_element(MonoidId const& id, ModelElement const& x) {
      switch (id.kind) {
        case MonoidKind::free_monogenic:
          check_nonneg(id, as<Exponent>(x, id));
          return;
        case MonoidKind::monogenic:
          if (as<Exponent>(x, id).m < 0 || as<Exponent>(x, id).m >= id.k) {
            throw std::invalid_argument("exponent out of range for " + id.name());
          }
          return;
        case MonoidKind::bicyclic:
        case MonoidKind::m1:
        case MonoidKind::m6:
        case MonoidKind::m9:
          check_nonneg(id, as<Pair>(x, id));
          return;
        case MonoidKind::m2:
        case MonoidKind::m3:
        case MonoidKind::klein:
          as<Twisted>(x, id);
          return;
        case MonoidKind::m5:
        case MonoidKind::m8:
          check_nonneg(id, as<Triple>(x, id));
          return;
        case MonoidKind::m4:
        case MonoidKind::m7:
          unsupported(id);
      }
    }

    Word power_of(char c, std::int64_t e) {
      return Word(static_cast<std::size_t>(e), c);
    }

    Word m3_canonical(Twisted x) {
      if (x.n < 0) {
        throw NoCanonicalWordError("(" + std::to_string(x.m) + "," + std::to_string(x.n)
                                   + ") is not in the image of M3");
      }
      // b^n a^y has image ((-1)^n y, n); b^(n-1) a^y b has ((-1)^(n-1) y, n).
      std::int64_t const y = sign(x.n) * x.m;
      if (y >= 0) {
        return power_of('b', x.n) + power_of('a', y);
      }
      if (x.n == 0) {
        throw NoCanonicalWordError("(" + std::to_string(x.m) + ",0) is not in the image of M3");
      }
      return power_of('b', x.n - 1) + power_of('a', -y) + "b";
    }

    // Normal forms of the completed system {bb -> aa, baa -> aab}: words
    // a^i (ba)^j and a^i (ba)^j b.
    Word m2_form(std::int64_t i, std::int64_t j, bool trailing_b) {
      return power_of('a', i) + repeat("ba", static_cast<std::size_t>(j)) + (trailing_b ? "b" : "");
    }

    Word m2_canonical(MonoidId const& id, Twisted x) {
      if (x.n >= 0) {
        for (int t = 0; t <= 1; ++t) {
          for (std::int64_t i = 0; i + t <= x.n; ++i) {
            if ((x.n - t - i) % 2 != 0) {
              continue;
            }
            auto w = m2_form(i, (x.n - t - i) / 2, t == 1);
            if (std::get<Twisted>(model_from_word(id, w)) == x) {
              return w;
            }
          }
        }
      }
      throw NoCanonicalWordError("(" + std::to_string(x.m) + "," + std::to_string(x.n)
                                 + ") is not in the image of M2");
    }

    // b^i (ab)^j a^k, with i the least admissible value.
    Word klein_canonical(Twisted x) {
      std::int64_t i = 0;
      std::int64_t j = 0;
      if (x.m <= 0) {
        j = -x.m;
        i = std::max<std::int64_t>(0, -x.n);
        i += i % 2;
      } else {
        j = x.m - 1;
        i = std::max<std::int64_t>(1, -x.n);
        i += 1 - i % 2;
      }
      return power_of('b', i) + repeat("ab", static_cast<std::size_t>(j)) + power_of('a', x.n + i);
    }

  }  // namespace

  MonoidId MonoidId::monogenic(std::uint32_t k, std::uint32_t l) {
    MonoidId id{MonoidKind::monogenic, k, l};
    id.validate();
    return id;
  }

  MonoidId MonoidId::shneerson(int index, std::uint32_t k) {
    static constexpr MonoidKind kinds[] = {MonoidKind::m1,
                                           MonoidKind::m2,
                                           MonoidKind::m3,
                                           MonoidKind::m4,
                                           MonoidKind::m5,
                                           MonoidKind::m6,
                                           MonoidKind::m7,
                                           MonoidKind::m8,
                                           MonoidKind::m9};
    if (index < 1 || index > 9) {
      throw std::invalid_argument("Shneerson index must be in 1..9");
    }
    MonoidId id{kinds[index - 1]};
    if (id.kind == MonoidKind::m6 || id.kind == MonoidKind::m9) {
      id.k = k;
    }
    id.validate();
    return id;
  }

  void MonoidId::validate() const {
    if (kind == MonoidKind::monogenic && l >= k) {
      throw std::invalid_argument("C(k,l) requires 0 <= l < k");
    }
    if ((kind == MonoidKind::m6 || kind == MonoidKind::m9) && k < 1) {
      throw std::invalid_argument("M6(k) and M9(k) require k >= 1");
    }
  }

  std::string MonoidId::name() const {
    switch (kind) {
      case MonoidKind::free_monogenic:
        return "N";
      case MonoidKind::monogenic:
        return "C(" + std::to_string(k) + "," + std::to_string(l) + ")";
      case MonoidKind::bicyclic:
        return "B";
      case MonoidKind::klein:
        return "K";
      case MonoidKind::m6:
        return "M6(" + std::to_string(k) + ")";
      case MonoidKind::m9:
        return "M9(" + std::to_string(k) + ")";
      default:
        return "M" + std::to_string(static_cast<int>(kind) - static_cast<int>(MonoidKind::m1) + 1);
    }
  }

  std::string MonoidId::alphabet() const {
    return kind == MonoidKind::free_monogenic || kind == MonoidKind::monogenic ? "a" : "ab";
  }

  Presentation MonoidId::presentation() const {
    auto const bk = Word(k, 'b');
    switch (kind) {
      case MonoidKind::free_monogenic:
        return {"a", "a", "a"};
      case MonoidKind::monogenic:
        return {"a", Word(k, 'a'), Word(l, 'a')};
      case MonoidKind::bicyclic:
        return {"ab", "ab", ""};
      case MonoidKind::klein:
        return {"ab", "abba", ""};
      case MonoidKind::m1:
        return {"ab", "ab", "ba"};
      case MonoidKind::m2:
        return {"ab", "aa", "bb"};
      case MonoidKind::m3:
        return {"ab", "aba", "b"};
      case MonoidKind::m4:
        return {"ab", "abaa", "ba"};
      case MonoidKind::m5:
        return {"ab", "aba", "ba"};
      case MonoidKind::m6:
        return {"ab", "ab", bk};
      case MonoidKind::m7:
        return {"ab", "aaba", "ab"};
      case MonoidKind::m8:
        return {"ab", "aba", "ab"};
      case MonoidKind::m9:
        return {"ab", "ba", bk};
    }
    return {};
  }

  MonoidId MonoidId::reversed() const {
    MonoidId r = *this;
    switch (kind) {
      case MonoidKind::m4:
        r.kind = MonoidKind::m7;
        break;
      case MonoidKind::m7:
        r.kind = MonoidKind::m4;
        break;
      case MonoidKind::m5:
        r.kind = MonoidKind::m8;
        break;
      case MonoidKind::m8:
        r.kind = MonoidKind::m5;
        break;
      case MonoidKind::m6:
        r.kind = MonoidKind::m9;
        break;
      case MonoidKind::m9:
        r.kind = MonoidKind::m6;
        break;
      default:
        break;
    }
    return r;
  }

  MonoidId parse_monoid(std::string_view name, std::uint32_t k, std::uint32_t l) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    // Names as printed by MonoidId::name(): "M6(2)", "C(5,2)".
    if (auto open = s.find('('); open != std::string::npos && s.back() == ')') {
      std::vector<std::uint32_t> params;
      std::size_t                pos = open + 1;
      while (pos < s.size()) {
        std::size_t used = 0;
        try {
          params.push_back(static_cast<std::uint32_t>(std::stoul(s.substr(pos), &used)));
        } catch (std::exception const&) {
          throw ParseError("bad parameters in \"" + std::string(name) + "\"");
        }
        pos += used + 1;
      }
      auto const base = s.substr(0, open);
      if (base == "c" && params.size() == 2) {
        return parse_monoid("monogenic", params[0], params[1]);
      }
      if ((base == "m6" || base == "m9") && params.size() == 1) {
        return parse_monoid(base, params[0]);
      }
      throw ParseError("unknown monoid \"" + std::string(name) + "\"");
    }
    if (s == "free" || s == "n" || s == "free_monogenic") {
      return MonoidId::free_monogenic();
    }
    if (s == "monogenic" || s == "cyclic" || s == "c") {
      if (l >= k) {
        throw ParseError("monogenic monoids need 0 <= l < k");
      }
      return MonoidId::monogenic(k, l);
    }
    if (s == "bicyclic" || s == "b") {
      return MonoidId::bicyclic();
    }
    if (s == "klein" || s == "k") {
      return MonoidId::klein();
    }
    if (s == "m6k") {
      s = "m6";
    } else if (s == "m9k") {
      s = "m9";
    }
    if (s.size() == 2 && s[0] == 'm' && s[1] >= '1' && s[1] <= '9') {
      if ((s[1] == '6' || s[1] == '9') && k < 1) {
        throw ParseError("M6/M9 need k >= 1");
      }
      return MonoidId::shneerson(s[1] - '0', k);
    }
    throw ParseError("unknown monoid \"" + std::string(name) + "\"");
  }

  std::vector<std::int64_t> coordinates(ModelElement const& x) {
    return std::visit(
        [](auto const& e) -> std::vector<std::int64_t> {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, Exponent>) {
            return {e.m};
          } else if constexpr (std::is_same_v<T, Triple>) {
            return {e.alpha, e.beta, e.gamma};
          } else {
            return {e.m, e.n};
          }
        },
        x);
  }

  ModelElement element_from_coordinates(MonoidId const& id, std::vector<std::int64_t> const& c) {
    auto need = [&](std::size_t n) {
      if (c.size() != n) {
        throw ParseError(id.name() + " elements have " + std::to_string(n) + " coordinates");
      }
    };
    ModelElement x;
    switch (id.kind) {
      case MonoidKind::free_monogenic:
      case MonoidKind::monogenic:
        need(1);
        x = Exponent{c[0]};
        break;
      case MonoidKind::bicyclic:
      case MonoidKind::m1:
      case MonoidKind::m6:
      case MonoidKind::m9:
        need(2);
        x = Pair{c[0], c[1]};
        break;
      case MonoidKind::klein:
      case MonoidKind::m2:
      case MonoidKind::m3:
        need(2);
        x = Twisted{c[0], c[1]};
        break;
      case MonoidKind::m5:
      case MonoidKind::m8:
        need(3);
        x = Triple{c[0], c[1], c[2]};
        break;
      case MonoidKind::m4:
      case MonoidKind::m7:
        unsupported(id);
    }
    try {
      validate_element(id, x);
    } catch (std::invalid_argument const& e) {
      throw ParseError(e.what());
    }
    return x;
  }

  bool has_model(MonoidId const& id) noexcept {
    return id.kind != MonoidKind::m4 && id.kind != MonoidKind::m7;
  }

  ModelElement model_one(MonoidId const& id) {
    switch (id.kind) {
      case MonoidKind::free_monogenic:
      case MonoidKind::monogenic:
        return Exponent{0};
      case MonoidKind::bicyclic:
      case MonoidKind::m1:
      case MonoidKind::m6:
      case MonoidKind::m9:
        return Pair{};
      case MonoidKind::klein:
      case MonoidKind::m2:
      case MonoidKind::m3:
        return Twisted{};
      case MonoidKind::m5:
      case MonoidKind::m8:
        return Triple{};
      case MonoidKind::m4:
      case MonoidKind::m7:
        break;
    }
    unsupported(id);
  }

  ModelElement model_generator(MonoidId const& id, char letter) {
    if (!has_model(id)) {
      unsupported(id);
    }
    auto const alphabet = id.alphabet();
    if (alphabet.find(letter) == std::string::npos) {
      throw std::invalid_argument(std::string("letter '") + letter + "' is not a generator of "
                                  + id.name());
    }
    bool const a = letter == 'a';
    switch (id.kind) {
      case MonoidKind::free_monogenic:
        return Exponent{1};
      case MonoidKind::monogenic:
        return Exponent{reduce_monogenic(id, 1)};
      case MonoidKind::bicyclic:
      case MonoidKind::m6:
      case MonoidKind::m9:
        return a ? Pair{0, 1} : Pair{1, 0};
      case MonoidKind::m1:
        return a ? Pair{1, 0} : Pair{0, 1};
      case MonoidKind::m3:
        return a ? Twisted{1, 0} : Twisted{0, 1};
      case MonoidKind::m2:
        return a ? Twisted{-1, 1} : Twisted{0, 1};
      case MonoidKind::klein:
        return a ? Twisted{0, 1} : Twisted{1, -1};
      case MonoidKind::m5:
      case MonoidKind::m8:
        return a ? Triple{0, 1, 0} : Triple{0, 0, 1};
      default:
        unsupported(id);
    }
  }

  ModelElement model_mul(MonoidId const& id, ModelElement const& x, ModelElement const& y) {
    validate_element(id, x);
    validate_element(id, y);
    switch (id.kind) {
      case MonoidKind::free_monogenic:
        return Exponent{std::get<Exponent>(x).m + std::get<Exponent>(y).m};
      case MonoidKind::monogenic:
        return Exponent{reduce_monogenic(id, std::get<Exponent>(x).m + std::get<Exponent>(y).m)};
      case MonoidKind::bicyclic:
        return mul_bicyclic(std::get<Pair>(x), std::get<Pair>(y));
      case MonoidKind::m1: {
        auto const& p = std::get<Pair>(x);
        auto const& q = std::get<Pair>(y);
        return Pair{p.m + q.m, p.n + q.n};
      }
      case MonoidKind::m6:
        return mul_m6(id.k, std::get<Pair>(x), std::get<Pair>(y));
      case MonoidKind::m9:
        return mul_m6(id.k, std::get<Pair>(y), std::get<Pair>(x));
      case MonoidKind::klein:
      case MonoidKind::m2:
      case MonoidKind::m3:
        return mul_twisted(std::get<Twisted>(x), std::get<Twisted>(y));
      case MonoidKind::m5:
        return mul_m5(std::get<Triple>(x), std::get<Triple>(y));
      case MonoidKind::m8:
        return mul_m5(std::get<Triple>(y), std::get<Triple>(x));
      default:
        unsupported(id);
    }
  }

  ModelElement model_from_word(MonoidId const& id, Word const& w) {
    auto result = model_one(id);
    for (char c : w) {
      result = model_mul(id, result, model_generator(id, c));
    }
    return result;
  }

  Word model_canonical_word(MonoidId const& id, ModelElement const& x) {
    validate_element(id, x);
    switch (id.kind) {
      case MonoidKind::free_monogenic:
      case MonoidKind::monogenic:
        return power_of('a', std::get<Exponent>(x).m);
      case MonoidKind::bicyclic:
      case MonoidKind::m6: {
        auto const& p = std::get<Pair>(x);
        return power_of('b', p.m) + power_of('a', p.n);
      }
      case MonoidKind::m9: {
        auto const& p = std::get<Pair>(x);
        return power_of('a', p.n) + power_of('b', p.m);
      }
      case MonoidKind::m1: {
        auto const& p = std::get<Pair>(x);
        return power_of('a', p.m) + power_of('b', p.n);
      }
      case MonoidKind::m3:
        return m3_canonical(std::get<Twisted>(x));
      case MonoidKind::m2:
        return m2_canonical(id, std::get<Twisted>(x));
      case MonoidKind::klein:
        return klein_canonical(std::get<Twisted>(x));
      case MonoidKind::m5: {
        auto const& t = std::get<Triple>(x);
        return repeat("ba", t.alpha) + power_of('a', t.beta) + power_of('b', t.gamma);
      }
      case MonoidKind::m8: {
        auto const& t = std::get<Triple>(x);
        return power_of('b', t.gamma) + power_of('a', t.beta) + repeat("ab", t.alpha);
      }
      default:
        unsupported(id);
    }
  }

  std::vector<ModelElement> model_pool(MonoidId const& id, std::uint32_t bound) {
    if (!has_model(id)) {
      unsupported(id);
    }
    std::int64_t const         b = bound;
    std::vector<ModelElement>  pool;
    switch (id.kind) {
      case MonoidKind::free_monogenic:
      case MonoidKind::monogenic: {
        std::int64_t top = id.kind == MonoidKind::monogenic ? std::min<std::int64_t>(b, id.k - 1) : b;
        for (std::int64_t m = 0; m <= top; ++m) {
          pool.emplace_back(Exponent{m});
        }
        break;
      }
      case MonoidKind::bicyclic:
      case MonoidKind::m1:
      case MonoidKind::m6:
      case MonoidKind::m9:
        for (std::int64_t m = 0; m <= b; ++m) {
          for (std::int64_t n = 0; n <= b; ++n) {
            pool.emplace_back(Pair{m, n});
          }
        }
        break;
      case MonoidKind::m5:
      case MonoidKind::m8:
        for (std::int64_t x = 0; x <= b; ++x) {
          for (std::int64_t y = 0; y <= b; ++y) {
            for (std::int64_t z = 0; z <= b; ++z) {
              pool.emplace_back(Triple{x, y, z});
            }
          }
        }
        break;
      case MonoidKind::m3:
        for (std::int64_t x = 0; x <= b; ++x) {
          for (std::int64_t y = 0; y <= b; ++y) {
            pool.push_back(model_from_word(id, power_of('b', x) + power_of('a', y)));
            if (y >= 1) {
              pool.push_back(model_from_word(id, power_of('b', x) + power_of('a', y) + "b"));
            }
          }
        }
        break;
      case MonoidKind::m2:
        for (std::int64_t i = 0; i <= b; ++i) {
          for (std::int64_t j = 0; j <= b; ++j) {
            pool.push_back(model_from_word(id, m2_form(i, j, false)));
            pool.push_back(model_from_word(id, m2_form(i, j, true)));
          }
        }
        break;
      case MonoidKind::klein:
        for (std::int64_t m = -b; m <= b; ++m) {
          for (std::int64_t n = -b; n <= b; ++n) {
            pool.emplace_back(Twisted{m, n});
          }
        }
        break;
      default:
        unsupported(id);
    }
    std::vector<std::pair<Word, ModelElement>> keyed;
    keyed.reserve(pool.size());
    for (auto const& x : pool) {
      keyed.emplace_back(model_canonical_word(id, x), x);
    }
    auto const alphabet = id.alphabet();
    std::sort(keyed.begin(), keyed.end(), [&](auto const& p, auto const& q) {
      return shortlex_less(p.first, q.first, alphabet);
    });
    keyed.erase(std::unique(keyed.begin(),
                            keyed.end(),
                            [](auto const& p, auto const& q) { return p.first == q.first; }),
                keyed.end());
    pool.clear();
    for (auto& [w, x] : keyed) {
      pool.push_back(x);
    }
    return pool;
  }

  std::string to_string(ModelElement const& x) {
    std::string out = "(";
    auto const  c   = coordinates(x);
    for (std::size_t i = 0; i < c.size(); ++i) {
      out += (i == 0 ? "" : ",") + std::to_string(c[i]);
    }
    return out + ")";
  }

  std::size_t ModelElementHash::operator()(ModelElement const& x) const noexcept {
    std::size_t seed = x.index();
    std::visit(
        [&seed](auto const& e) {
          auto mix = [&seed](std::int64_t v) {
            seed ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
          };
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, Exponent>) {
            mix(e.m);
          } else if constexpr (std::is_same_v<T, Triple>) {
            mix(e.alpha);
            mix(e.beta);
            mix(e.gamma);
          } else {
            mix(e.m);
            mix(e.n);
          }
        },
        x);
    return seed;
  }

}  // namespace tropmon
