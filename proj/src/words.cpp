#include "tropmon/words.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <optional>
#include <unordered_set>

#include "tropmon/errors.hpp"

namespace tropmon {

  namespace {
    std::string strip_spaces(std::string_view text) {
      std::string out;
      for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
          out.push_back(c);
        }
      }
      return out;
    }

    void append_neighbours(Word const&           w,
                           Word const&           from,
                           Word const&           to,
                           std::size_t           max_len,
                           std::vector<Word>&    out) {
      if (w.size() - from.size() + to.size() > max_len) {
        return;
      }
      if (from.empty()) {
        for (std::size_t i = 0; i <= w.size(); ++i) {
          out.push_back(w.substr(0, i) + to + w.substr(i));
        }
        return;
      }
      for (auto pos = w.find(from); pos != Word::npos; pos = w.find(from, pos + 1)) {
        out.push_back(w.substr(0, pos) + to + w.substr(pos + from.size()));
      }
    }
  }  // namespace

  Presentation parse_presentation(std::string_view text) {
    auto const s   = strip_spaces(text);
    auto const bar = s.find('|');
    if (bar == std::string::npos || s.find('|', bar + 1) != std::string::npos) {
      throw ParseError("expected exactly one '|' in presentation \"" + std::string(text) + "\"");
    }
    Presentation p;
    std::string_view gens(s.data(), bar);
    if (gens.empty()) {
      throw ParseError("presentation has no generators");
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      char c = gens[i];
      if (i % 2 == 1) {
        if (c != ',') {
          throw ParseError("generators must be single letters separated by ','");
        }
        continue;
      }
      if (!std::isalpha(static_cast<unsigned char>(c))) {
        throw ParseError(std::string("invalid generator '") + c + "'");
      }
      if (p.alphabet.find(c) != std::string::npos) {
        throw ParseError(std::string("duplicate generator '") + c + "'");
      }
      p.alphabet.push_back(c);
    }
    if (gens.size() % 2 == 0) {
      throw ParseError("trailing ',' in generator list");
    }

    std::string_view rel(s.data() + bar + 1, s.size() - bar - 1);
    auto const       eq = rel.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("relation has no '='");
    }
    if (rel.find('=', eq + 1) != std::string_view::npos) {
      throw ParseError("only one relation is supported");
    }
    p.lhs = parse_word(rel.substr(0, eq), p.alphabet);
    p.rhs = parse_word(rel.substr(eq + 1), p.alphabet);
    return p;
  }

  std::string to_string(Presentation const& p) {
    std::string out;
    for (std::size_t i = 0; i < p.alphabet.size(); ++i) {
      if (i != 0) {
        out.push_back(',');
      }
      out.push_back(p.alphabet[i]);
    }
    return out + "|" + word_to_text(p.lhs) + "=" + word_to_text(p.rhs);
  }

  std::string word_to_text(Word const& w) {
    return w.empty() ? std::string("1") : w;
  }

  Word parse_word(std::string_view text, std::string_view alphabet) {
    if (text.empty()) {
      throw ParseError("empty word text (use \"1\" for the identity)");
    }
    if (text == "1") {
      return {};
    }
    for (char c : text) {
      if (alphabet.find(c) == std::string_view::npos) {
        throw ParseError(std::string("unknown letter '") + c + "'");
      }
    }
    return Word(text);
  }

  Word reverse(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
  }

  Presentation reverse(Presentation p) {
    p.lhs = reverse(std::move(p.lhs));
    p.rhs = reverse(std::move(p.rhs));
    return p;
  }

  Word repeat(Word const& w, std::size_t times) {
    Word out;
    out.reserve(w.size() * times);
    for (std::size_t i = 0; i < times; ++i) {
      out += w;
    }
    return out;
  }

  bool shortlex_less(Word const& x, Word const& y, std::string_view alphabet) {
    if (x.size() != y.size()) {
      return x.size() < y.size();
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != y[i]) {
        return alphabet.find(x[i]) < alphabet.find(y[i]);
      }
    }
    return false;
  }

  Word rewrite_normal_form(Word w, std::span<RewriteRule const> rules, std::size_t max_steps) {
    for (std::size_t step = 0;; ++step) {
      std::size_t         best_pos  = Word::npos;
      RewriteRule const*  best_rule = nullptr;
      for (auto const& rule : rules) {
        if (rule.lhs.empty()) {
          throw ParseError("rewrite rules need a non-empty left-hand side");
        }
        auto pos = w.find(rule.lhs);
        if (pos == Word::npos) {
          continue;
        }
        if (best_rule == nullptr || pos < best_pos
            || (pos == best_pos && rule.lhs.size() > best_rule->lhs.size())) {
          best_pos  = pos;
          best_rule = &rule;
        }
      }
      if (best_rule == nullptr) {
        return w;
      }
      if (step == max_steps) {
        throw BudgetExceededError("rewriting did not terminate within "
                                  + std::to_string(max_steps) + " steps");
      }
      w.replace(best_pos, best_rule->lhs.size(), best_rule->rhs);
    }
  }

  Equality bounded_equality(Presentation const& p,
                            Word const&         w1,
                            Word const&         w2,
                            std::size_t         max_len,
                            std::size_t         max_steps) {
    if (w1 == w2) {
      return Equality::equal;
    }
    if (p.lhs == p.rhs) {
      return Equality::unknown;
    }
    std::array<std::unordered_set<Word>, 2> seen{std::unordered_set<Word>{w1},
                                                 std::unordered_set<Word>{w2}};
    std::array<std::deque<Word>, 2>         queue{std::deque<Word>{w1}, std::deque<Word>{w2}};
    std::vector<Word>                       next;
    for (std::size_t steps = 0; steps < max_steps; ++steps) {
      if (queue[0].empty() || queue[1].empty()) {
        break;
      }
      std::size_t const side  = queue[0].size() <= queue[1].size() ? 0 : 1;
      std::size_t const other = 1 - side;
      Word              w     = std::move(queue[side].front());
      queue[side].pop_front();
      next.clear();
      append_neighbours(w, p.lhs, p.rhs, max_len, next);
      append_neighbours(w, p.rhs, p.lhs, max_len, next);
      for (auto& x : next) {
        if (seen[other].contains(x)) {
          return Equality::equal;
        }
        if (seen[side].insert(x).second) {
          queue[side].push_back(std::move(x));
        }
      }
    }
    return Equality::unknown;
  }

  std::string to_string(Equality e) {
    switch (e) {
      case Equality::equal:
        return "equal";
      case Equality::distinct:
        return "distinct";
      case Equality::unknown:
        return "unknown";
    }
    return "unknown";
  }

  CycleFree cycle_free(Presentation const& p) {
    if (p.lhs.empty() || p.rhs.empty()) {
      return CycleFree::none;
    }
    if (p.lhs.front() != p.rhs.front()) {
      return CycleFree::left;
    }
    if (p.lhs.back() != p.rhs.back()) {
      return CycleFree::right;
    }
    return CycleFree::none;
  }

  namespace {
    class LeftDivision {
     public:
      LeftDivision(Word u, Word v, std::size_t max_steps)
          : _u(std::move(u)), _v(std::move(v)), _max_steps(max_steps) {}

      // The side of the relation that starts with `c`, if any.
      Word const* side(char c) const {
        return _u.front() == c ? &_u : _v.front() == c ? &_v : nullptr;
      }

      // Some x with w = d x, if d is a left divisor of w.
      std::optional<Word> quotient(Word w, Word d) {
        std::size_t i = 0;
        while (i < d.size()) {
          tick();
          if (w.empty()) {
            return std::nullopt;
          }
          if (w.front() == d[i]) {
            w.erase(0, 1);
            ++i;
            continue;
          }
          Word const* from = side(w.front());
          Word const* to   = side(d[i]);
          if (from == nullptr || to == nullptr) {
            return std::nullopt;
          }
          auto z = quotient(std::move(w), *from);
          if (!z) {
            return std::nullopt;
          }
          w = to->substr(1) + *z;
          ++i;
        }
        return w;
      }

      bool equal(Word w1, Word w2) {
        while (true) {
          tick();
          if (w1.empty() || w2.empty()) {
            return w1.empty() && w2.empty();
          }
          if (w1.front() == w2.front()) {
            w1.erase(0, 1);
            w2.erase(0, 1);
            continue;
          }
          Word const* s1 = side(w1.front());
          Word const* s2 = side(w2.front());
          if (s1 == nullptr || s2 == nullptr) {
            return false;
          }
          auto z1 = quotient(std::move(w1), *s1);
          if (!z1) {
            return false;
          }
          auto z2 = quotient(std::move(w2), *s2);
          if (!z2) {
            return false;
          }
          w1 = std::move(*z1);
          w2 = std::move(*z2);
        }
      }

     private:
      void tick() {
        if (++_steps > _max_steps) {
          throw BudgetExceededError("step budget exhausted");
        }
      }

      Word        _u;
      Word        _v;
      std::size_t _max_steps;
      std::size_t _steps = 0;
    };
  }  // namespace

  Equality cycle_free_equality(Presentation const& p, Word const& w1, Word const& w2, std::size_t max_steps) {
    auto const mode = cycle_free(p);
    if (mode == CycleFree::none) {
      return w1 == w2 ? Equality::equal : Equality::unknown;
    }
    try {
      if (mode == CycleFree::left) {
        return LeftDivision(p.lhs, p.rhs, max_steps).equal(w1, w2) ? Equality::equal : Equality::distinct;
      }
      return LeftDivision(reverse(p.lhs), reverse(p.rhs), max_steps).equal(reverse(w1), reverse(w2))
                 ? Equality::equal
                 : Equality::distinct;
    } catch (BudgetExceededError const&) {
      return Equality::unknown;
    }
  }

  WordRange::iterator::iterator(std::string_view alphabet, std::size_t max_len)
      : _alphabet(alphabet), _max_len(max_len), _done(false) {}

  WordRange::iterator& WordRange::iterator::operator++() {
    if (_done) {
      return *this;
    }
    // Odometer increment over the current length; roll over to the next.
    std::size_t i = _digits.size();
    while (i > 0) {
      --i;
      if (++_digits[i] < _alphabet.size()) {
        _word[i] = _alphabet[_digits[i]];
        return *this;
      }
      _digits[i] = 0;
      _word[i]   = _alphabet[0];
    }
    if (_alphabet.empty() || _digits.size() == _max_len) {
      _done = true;
      _word.clear();
      return *this;
    }
    _digits.assign(_digits.size() + 1, 0);
    _word.assign(_digits.size(), _alphabet[0]);
    return *this;
  }

  std::uint64_t WordRange::count() const noexcept {
    std::uint64_t total = 0;
    std::uint64_t term  = 1;
    for (std::size_t i = 0; i <= _max_len; ++i) {
      total += term;
      term *= _alphabet.size();
      if (term == 0) {
        break;
      }
    }
    return total;
  }

  std::vector<Word> words_of_length(std::string_view alphabet, std::size_t len) {
    std::vector<Word> out{Word()};
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<Word> longer;
      longer.reserve(out.size() * alphabet.size());
      for (auto const& w : out) {
        for (char c : alphabet) {
          longer.push_back(w + c);
        }
      }
      out = std::move(longer);
    }
    return out;
  }

}  // namespace tropmon
