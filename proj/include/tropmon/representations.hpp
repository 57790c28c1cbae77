#ifndef TROPMON_REPRESENTATIONS_HPP_
#define TROPMON_REPRESENTATIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>

#include "tropmon/matrix.hpp"
#include "tropmon/models.hpp"
#include "tropmon/words.hpp"

namespace tropmon {

  enum class Target { ut, mt };

  //! A homomorphism from a one-relation monoid into MT_n or UT_n, given by
  //! the images of the generators.
  //!
  //! When `unital` is false the representation is only a semigroup
  //! homomorphism: the identity of the monoid maps to an idempotent rather
  //! than to I_n (bicyclic, M6(k) and M9(k) for k > 1), and the empty word
  //! is left out of faithfulness sweeps.
  struct Representation {
    MonoidId                  monoid;
    Target                    target = Target::mt;
    Eigen::Index              n      = 1;
    std::map<char, TropMatrix> images;
    bool                      unital = true;
  };

  // The explicit representation of every monoid in the catalogue. Aperiodic
  // monogenic monoids C(l+1, l) with l >= 1 use the l x l strictly upper
  // triangular matrix of 1s; other finite monogenic monoids use
  // transformation_representation. Throws UnsupportedError for M4 and M7.
  Representation representation(MonoidId const& id);

  // C(k, l) acting on its own k elements by right multiplication, in MT_k.
  Representation transformation_representation(MonoidId const& id);

  // Matrix with 0 at (i, f[i]) and -inf elsewhere (0-based points).
  // matrix(f) * matrix(g) is the matrix of i -> g(f(i)).
  TropMatrix transformation_matrix(std::span<std::size_t const> f);

  // Tropical product of the generator images; the empty word maps to I_n.
  TropMatrix evaluate_word(Representation const& r, Word const& w);

  // The images of the two sides of the defining relation agree.
  bool verify_relation(Representation const& r);

  struct EmbeddingReport {
    bool          relation_holds    = false;
    std::uint64_t hom_checked_words = 0;
    std::uint64_t classes           = 0;
    bool          injective         = false;
    // On failure: two words that break the bijection between model
    // elements and matrices.
    std::optional<std::pair<Word, Word>> witnesses;

    bool operator==(EmbeddingReport const&) const = default;
  };

  // Enumerates every word of length <= max_len (the empty word only for
  // unital representations), evaluates it in the model and through the
  // representation, and checks that equal model elements give equal
  // matrices and distinct ones give distinct matrices. Also checks
  // eval(uv) = eval(u) * eval(v) at every split of every word. The parallel
  // run splits the words among threads and produces the same report.
  EmbeddingReport verify_embedding(Representation const& r, std::size_t max_len, bool parallel = false);

  // Uses representation(id). Throws UnsupportedError for M4 and M7.
  EmbeddingReport verify_embedding(MonoidId const& id, std::size_t max_len, bool parallel = false);

}  // namespace tropmon

#endif  // TROPMON_REPRESENTATIONS_HPP_
