#ifndef TROPMON_IDENTITIES_HPP_
#define TROPMON_IDENTITIES_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropmon/matrix.hpp"
#include "tropmon/models.hpp"
#include "tropmon/words.hpp"

namespace tropmon {

  // A semigroup identity lhs ~ rhs over single-letter variables.
  struct IdentityTerm {
    Word lhs;
    Word rhs;

    // Distinct variables in order of first occurrence (lhs then rhs).
    [[nodiscard]] std::string variables() const;

    bool operator==(IdentityTerm const&) const = default;
  };

  // Names: "adian", "commutativity", "square_comm", "shneerson:i" for
  // i = 1..9 (also "shneerson(i)" and "shneersoni"), and "cain:n".
  // Throws ParseError for anything else.
  IdentityTerm identity_catalog(std::string_view name);

  // The fixed names accepted by identity_catalog (excluding cain:n).
  std::vector<std::string> catalog_names();

  // Parses "xyyx.xy.xyyx = xyyx.yx.xyyx"; dots and spaces are ignored.
  IdentityTerm parse_identity(std::string_view text);

  // Catalogue name or literal identity.
  IdentityTerm resolve_identity(std::string_view name_or_literal);

  std::string to_string(IdentityTerm const& id);

  // Largest i accepted by uv_words (5^i letters per word).
  inline constexpr unsigned max_uv_index = 8;

  // U_0 = p, V_0 = q, U_1 = pqppq, V_1 = pqqpq, and
  // U_i = U_1(U_{i-1}, V_{i-1}), V_i = V_1(U_{i-1}, V_{i-1}).
  std::pair<Word, Word> uv_words(unsigned i);

  // U_{n-1}(xy, yx) ~ V_{n-1}(xy, yx), which holds in UT_n.
  IdentityTerm cain_identity(unsigned n);

  // Replaces every letter of `w` by its image.
  Word substitute(Word const& w, std::map<char, Word> const& images);

  enum class CheckStatus { holds_on_pool, no_counterexample, counterexample, unknown };

  std::string to_string(CheckStatus s);

  //! Result of an identity check.
  //!
  //! Sampled checks report no_counterexample at best, exhaustive pool checks
  //! holds_on_pool; neither is a proof that the identity holds. A
  //! counterexample carries the assignment that refutes the identity, and
  //! for matrix checks the trial index, so it can be replayed from the seed.
  struct CheckOutcome {
    CheckStatus                status = CheckStatus::unknown;
    std::uint64_t              seed   = 0;
    std::uint64_t              trials = 0;  // trials or assignments examined
    std::optional<std::uint64_t> trial;     // failing trial (matrix checks)
    std::map<char, Word>       word_assignment;
    std::map<char, TropMatrix> matrix_assignment;
  };

  struct MatrixSampler {
    Eigen::Index  n             = 2;
    bool          triangular    = true;
    std::int64_t  entry_bound   = 20;
    double        neg_inf_prob  = 0.25;

    // Entries independently -inf with probability neg_inf_prob, otherwise
    // uniform in [-entry_bound, entry_bound]; below-diagonal entries are
    // -inf when triangular.
    TropMatrix operator()(std::mt19937_64& rng) const;
  };

  // The generator used for trial `trial` of a run seeded with `seed`.
  std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

  // Substitutes independently sampled matrices for every variable in each
  // trial and compares the two sides exactly. A trial whose evaluation
  // overflows is re-sampled with half the entry bound. Stops at the first
  // counterexample; a parallel run reports the same outcome.
  CheckOutcome check_identity_matrices(IdentityTerm const& id,
                                       MatrixSampler const& sampler,
                                       std::uint64_t        trials,
                                       std::uint64_t        seed,
                                       bool                 parallel = false);

  // Exhaustive substitution of model_pool(monoid, pool_bound) into every
  // variable. For M4 and M7, which have no model, the pool is every word of
  // length <= pool_bound and each instance is decided with
  // cycle_free_equality, falling back to bounded_equality; any undecided
  // instance makes the outcome unknown.
  CheckOutcome check_identity_model(IdentityTerm const& id,
                                    MonoidId const&     monoid,
                                    std::uint32_t       pool_bound,
                                    std::size_t         equality_steps = 200'000);

  // Substitutes distinct letters for distinct variables and compares the
  // resulting words: a counterexample iff the identity is non-trivial.
  CheckOutcome free_word_check(IdentityTerm const& id);

}  // namespace tropmon

#endif  // TROPMON_IDENTITIES_HPP_
