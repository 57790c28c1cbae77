#ifndef TROPMON_WORDS_HPP_
#define TROPMON_WORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tropmon {

  // A word is a string of single-character generator symbols; the empty
  // string is the identity element. In text form the empty word is "1".
  using Word = std::string;

  // A one-relation monoid presentation <alphabet | lhs = rhs>.
  struct Presentation {
    std::string alphabet;  // distinct letters, in declaration order
    Word        lhs;
    Word        rhs;

    bool operator==(Presentation const&) const = default;
  };

  // Parses `gens "|" word "=" word`, e.g. "a,b|ab=1". Generators are single
  // letters separated by commas; "1" denotes the empty word. Whitespace is
  // ignored. Exponents are not supported. Throws ParseError.
  Presentation parse_presentation(std::string_view text);

  std::string to_string(Presentation const& p);

  // "1" for the empty word, the letters otherwise.
  std::string word_to_text(Word const& w);

  // Inverse of word_to_text; validates letters against `alphabet`.
  Word parse_word(std::string_view text, std::string_view alphabet);

  Word reverse(Word w);
  Presentation reverse(Presentation p);

  Word repeat(Word const& w, std::size_t times);

  // Shortlex order: shorter words first, then lexicographic by the position
  // of each letter in `alphabet`.
  bool shortlex_less(Word const& x, Word const& y, std::string_view alphabet);

  struct RewriteRule {
    Word lhs;
    Word rhs;
  };

  // Rewrites to an irreducible word. At each step the leftmost occurrence of
  // any left-hand side is replaced, preferring the longest left-hand side at
  // that position and then the earlier rule. Throws BudgetExceededError after
  // `max_steps` applications.
  Word rewrite_normal_form(Word w,
                           std::span<RewriteRule const> rules,
                           std::size_t max_steps = 1'000'000);

  enum class Equality { equal, distinct, unknown };

  std::string to_string(Equality e);

  // Semi-decision for equality in the monoid presented by `p`: bidirectional
  // breadth-first search applying the relation in both directions, visiting
  // only words of length <= max_len, expanding at most `max_steps` words in
  // total. Never claims inequality.
  Equality bounded_equality(Presentation const& p,
                            Word const& w1,
                            Word const& w2,
                            std::size_t max_len,
                            std::size_t max_steps);

  // One relation u = v with u, v non-empty: `left` when their first letters
  // differ (the monoid is left cancellative), else `right` when their last
  // letters differ, else `none`.
  enum class CycleFree { none, left, right };

  CycleFree cycle_free(Presentation const& p);

  // Decides equality when cycle_free(p) != none. Two words with different
  // first letters are equal only if each has the relation side starting
  // with its first letter as a left divisor, with equal quotients; the
  // quotients are found recursively, cancelling common first letters. The
  // right case runs on reversed words. Returns unknown after `max_steps`
  // letter steps, or when cycle_free(p) == none.
  Equality cycle_free_equality(Presentation const& p,
                               Word const&         w1,
                               Word const&         w2,
                               std::size_t         max_steps = 1'000'000);

  // Lazy enumeration of every word over `alphabet` of length 0..max_len in
  // shortlex order.
  class WordRange {
   public:
    class iterator {
     public:
      using value_type        = Word;
      using difference_type   = std::ptrdiff_t;
      using iterator_category = std::input_iterator_tag;
      using reference         = Word const&;
      using pointer           = Word const*;

      iterator() = default;

      reference operator*() const noexcept {
        return _word;
      }
      pointer operator->() const noexcept {
        return &_word;
      }
      iterator& operator++();
      iterator operator++(int) {
        auto tmp = *this;
        ++*this;
        return tmp;
      }
      bool operator==(iterator const& that) const noexcept {
        return _done == that._done && (_done || _word == that._word);
      }

     private:
      friend class WordRange;
      iterator(std::string_view alphabet, std::size_t max_len);

      std::string           _alphabet;
      std::size_t           _max_len = 0;
      std::vector<std::size_t> _digits;
      Word                  _word;
      bool                  _done = true;
    };

    WordRange(std::string_view alphabet, std::size_t max_len)
        : _alphabet(alphabet), _max_len(max_len) {}

    [[nodiscard]] iterator begin() const {
      return iterator(_alphabet, _max_len);
    }
    [[nodiscard]] iterator end() const {
      return iterator();
    }
    // Sum of |alphabet|^i for i = 0..max_len.
    [[nodiscard]] std::uint64_t count() const noexcept;

   private:
    std::string _alphabet;
    std::size_t _max_len;
  };

  inline WordRange enumerate_words(std::string_view alphabet, std::size_t max_len) {
    return WordRange(alphabet, max_len);
  }

  // All words of length exactly `len`, in lexicographic order.
  std::vector<Word> words_of_length(std::string_view alphabet, std::size_t len);

}  // namespace tropmon

#endif  // TROPMON_WORDS_HPP_
