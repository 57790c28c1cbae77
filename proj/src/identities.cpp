#include "tropmon/identities.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <thread>

#include "tropmon/errors.hpp"

namespace tropmon {

  namespace {
    // Shneerson's list, in the order of the classification.
    constexpr std::pair<char const*, char const*> shneerson_identities[] = {
        {"xy", "yx"},
        {"xxyy", "yyxx"},
        {"xxyy", "yyxx"},
        {"xyxxyxyxyx", "yxyxxyxxyx"},
        {"xyxyx", "yxxyx"},
        {"xyxyx", "yxxyx"},
        {"xyxxyxxyxy", "xyxyxyxxyx"},
        {"xyxyx", "xyxxy"},
        {"xyxyx", "xyxxy"},
    };

    std::string strip(std::string_view text, std::string_view drop) {
      std::string out;
      for (char c : text) {
        if (drop.find(c) == std::string_view::npos && !std::isspace(static_cast<unsigned char>(c))) {
          out.push_back(c);
        }
      }
      return out;
    }

    std::optional<unsigned> parse_index(std::string_view s) {
      if (s.empty() || s.size() > 3) {
        return std::nullopt;
      }
      unsigned v = 0;
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          return std::nullopt;
        }
        v = 10 * v + static_cast<unsigned>(c - '0');
      }
      return v;
    }

    // Parameter of "name:i", "name(i)" or "namei".
    std::optional<unsigned> parameter(std::string_view name, std::string_view prefix) {
      if (!name.starts_with(prefix)) {
        return std::nullopt;
      }
      auto rest = name.substr(prefix.size());
      if (rest.starts_with(':')) {
        rest.remove_prefix(1);
      } else if (rest.starts_with('(') && rest.ends_with(')')) {
        rest = rest.substr(1, rest.size() - 2);
      }
      return parse_index(rest);
    }

    TropMatrix evaluate(Word const& w, std::map<char, TropMatrix> const& images, Eigen::Index n) {
      auto result = TropMatrix::identity(n);
      for (char c : w) {
        result = result * images.at(c);
      }
      return result;
    }

    ModelElement evaluate(MonoidId const& monoid, Word const& w, std::map<char, ModelElement> const& images) {
      auto result = model_one(monoid);
      for (char c : w) {
        result = model_mul(monoid, result, images.at(c));
      }
      return result;
    }

    struct TrialResult {
      bool                       failed = false;
      std::uint64_t              trial  = 0;
      std::map<char, TropMatrix> assignment;
    };

    TrialResult run_trials(IdentityTerm const&  id,
                           MatrixSampler const& sampler,
                           std::uint64_t        seed,
                           std::uint64_t        begin,
                           std::uint64_t        end) {
      auto const vars = id.variables();
      for (std::uint64_t t = begin; t < end; ++t) {
        auto rng   = trial_rng(seed, t);
        auto local = sampler;
        while (true) {
          std::map<char, TropMatrix> images;
          for (char v : vars) {
            images.emplace(v, local(rng));
          }
          try {
            if (evaluate(id.lhs, images, sampler.n) != evaluate(id.rhs, images, sampler.n)) {
              return {true, t, std::move(images)};
            }
            break;
          } catch (OverflowError const&) {
            if (local.entry_bound == 0) {
              throw;
            }
            local.entry_bound /= 2;
          }
        }
      }
      return {};
    }
  }  // namespace

  std::string IdentityTerm::variables() const {
    std::string vars;
    for (char c : lhs + rhs) {
      if (vars.find(c) == std::string::npos) {
        vars.push_back(c);
      }
    }
    return vars;
  }

  IdentityTerm identity_catalog(std::string_view name) {
    if (name == "adian") {
      return {"xyyxxyxyyx", "xyyxyxxyyx"};
    }
    if (name == "commutativity") {
      return {"xy", "yx"};
    }
    if (name == "square_comm") {
      return {"xxyy", "yyxx"};
    }
    if (auto i = parameter(name, "shneerson"); i && *i >= 1 && *i <= 9) {
      auto const& [lhs, rhs] = shneerson_identities[*i - 1];
      return {lhs, rhs};
    }
    if (auto n = parameter(name, "cain"); n && *n >= 1) {
      return cain_identity(*n);
    }
    throw ParseError("unknown identity \"" + std::string(name) + "\"");
  }

  std::vector<std::string> catalog_names() {
    std::vector<std::string> names{"adian", "commutativity", "square_comm"};
    for (int i = 1; i <= 9; ++i) {
      names.push_back("shneerson:" + std::to_string(i));
    }
    return names;
  }

  IdentityTerm parse_identity(std::string_view text) {
    auto const s  = strip(text, ".");
    auto const eq = s.find('=');
    if (eq == std::string::npos || s.find('=', eq + 1) != std::string::npos) {
      throw ParseError("an identity needs exactly one '='");
    }
    IdentityTerm id{s.substr(0, eq), s.substr(eq + 1)};
    if (id.lhs.empty() || id.rhs.empty()) {
      throw ParseError("both sides of an identity must be non-empty");
    }
    for (char c : id.lhs + id.rhs) {
      if (!std::isalpha(static_cast<unsigned char>(c))) {
        throw ParseError(std::string("invalid variable '") + c + "'");
      }
    }
    return id;
  }

  IdentityTerm resolve_identity(std::string_view name_or_literal) {
    if (name_or_literal.find('=') != std::string_view::npos) {
      return parse_identity(name_or_literal);
    }
    return identity_catalog(name_or_literal);
  }

  std::string to_string(IdentityTerm const& id) {
    return id.lhs + " = " + id.rhs;
  }

  std::pair<Word, Word> uv_words(unsigned i) {
    if (i > max_uv_index) {
      throw std::length_error("U_i and V_i have 5^i letters; i = " + std::to_string(i)
                              + " exceeds the limit " + std::to_string(max_uv_index));
    }
    Word u = "p";
    Word v = "q";
    for (unsigned j = 0; j < i; ++j) {
      Word next_u = u + v + u + u + v;
      Word next_v = u + v + v + u + v;
      u           = std::move(next_u);
      v           = std::move(next_v);
    }
    return {u, v};
  }

  IdentityTerm cain_identity(unsigned n) {
    if (n < 1) {
      throw std::invalid_argument("cain_identity needs n >= 1");
    }
    auto const [u, v] = uv_words(n - 1);
    std::map<char, Word> const images{{'p', "xy"}, {'q', "yx"}};
    return {substitute(u, images), substitute(v, images)};
  }

  Word substitute(Word const& w, std::map<char, Word> const& images) {
    Word out;
    for (char c : w) {
      auto it = images.find(c);
      if (it == images.end()) {
        throw std::invalid_argument(std::string("no image for variable '") + c + "'");
      }
      out += it->second;
    }
    return out;
  }

  std::string to_string(CheckStatus s) {
    switch (s) {
      case CheckStatus::holds_on_pool:
        return "holds_on_pool";
      case CheckStatus::no_counterexample:
        return "no_counterexample";
      case CheckStatus::counterexample:
        return "counterexample";
      case CheckStatus::unknown:
        return "unknown";
    }
    return "unknown";
  }

  TropMatrix MatrixSampler::operator()(std::mt19937_64& rng) const {
    std::bernoulli_distribution                 infinite(neg_inf_prob);
    std::uniform_int_distribution<std::int64_t> value(-entry_bound, entry_bound);
    TropMatrix                                  m(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (triangular && i > j) {
          continue;
        }
        if (!infinite(rng)) {
          m.set(i, j, value(rng));
        }
      }
    }
    return m;
  }

  std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial),
                      static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
  }

  CheckOutcome check_identity_matrices(IdentityTerm const&  id,
                                       MatrixSampler const& sampler,
                                       std::uint64_t        trials,
                                       std::uint64_t        seed,
                                       bool                 parallel) {
    if (trials < 1) {
      throw std::invalid_argument("at least one trial is required");
    }
    TrialResult found;
    if (parallel && trials > 1) {
      std::uint64_t const workers = std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 2, 16);
      std::uint64_t const step    = (trials + workers - 1) / workers;
      std::vector<std::future<TrialResult>> futures;
      for (std::uint64_t b = 0; b < trials; b += step) {
        futures.push_back(std::async(std::launch::async, run_trials, std::cref(id), std::cref(sampler),
                                     seed, b, std::min(trials, b + step)));
      }
      // Chunks are in trial order, so the first failing chunk holds the
      // earliest counterexample.
      for (auto& f : futures) {
        auto r = f.get();
        if (r.failed && !found.failed) {
          found = std::move(r);
        }
      }
    } else {
      found = run_trials(id, sampler, seed, 0, trials);
    }

    CheckOutcome out;
    out.seed = seed;
    if (found.failed) {
      out.status            = CheckStatus::counterexample;
      out.trials            = found.trial + 1;
      out.trial             = found.trial;
      out.matrix_assignment = std::move(found.assignment);
    } else {
      out.status = CheckStatus::no_counterexample;
      out.trials = trials;
    }
    return out;
  }

  CheckOutcome check_identity_model(IdentityTerm const& id,
                                    MonoidId const&     monoid,
                                    std::uint32_t       pool_bound,
                                    std::size_t         equality_steps) {
    auto const   vars = id.variables();
    CheckOutcome out;
    out.status = CheckStatus::holds_on_pool;

    std::size_t pool_size = 0;
    std::vector<ModelElement> pool;
    std::vector<Word>         pool_words;
    if (has_model(monoid)) {
      pool = model_pool(monoid, pool_bound);
      for (auto const& x : pool) {
        pool_words.push_back(model_canonical_word(monoid, x));
      }
    } else {
      for (auto const& w : enumerate_words(monoid.alphabet(), pool_bound)) {
        pool_words.push_back(w);
      }
    }
    pool_size = pool_words.size();

    auto const presentation = monoid.presentation();
    auto const relator_len  = std::max(presentation.lhs.size(), presentation.rhs.size());

    std::vector<std::size_t> digits(vars.size(), 0);
    while (true) {
      ++out.trials;
      std::map<char, Word> words;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        words.emplace(vars[i], pool_words[digits[i]]);
      }
      if (!pool.empty()) {
        std::map<char, ModelElement> images;
        for (std::size_t i = 0; i < vars.size(); ++i) {
          images.emplace(vars[i], pool[digits[i]]);
        }
        if (evaluate(monoid, id.lhs, images) != evaluate(monoid, id.rhs, images)) {
          out.status          = CheckStatus::counterexample;
          out.word_assignment = std::move(words);
          return out;
        }
      } else {
        auto const lhs = substitute(id.lhs, words);
        auto const rhs = substitute(id.rhs, words);
        auto       eq  = cycle_free_equality(presentation, lhs, rhs, equality_steps);
        if (eq == Equality::unknown) {
          auto const max_len = std::max(lhs.size(), rhs.size()) + 2 * relator_len;
          eq                 = bounded_equality(presentation, lhs, rhs, max_len, equality_steps);
        }
        if (eq != Equality::equal) {
          out.status          = eq == Equality::distinct ? CheckStatus::counterexample : CheckStatus::unknown;
          out.word_assignment = std::move(words);
          return out;
        }
      }
      // Odometer over pool^vars, first variable most significant.
      std::size_t i = digits.size();
      while (i > 0 && ++digits[i - 1] == pool_size) {
        digits[--i] = 0;
      }
      if (i == 0) {
        break;
      }
    }
    return out;
  }

  CheckOutcome free_word_check(IdentityTerm const& id) {
    auto const           vars = id.variables();
    std::map<char, Word> images;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      images.emplace(vars[i], Word(1, static_cast<char>('a' + i)));
    }
    CheckOutcome out;
    out.trials          = 1;
    out.word_assignment = images;
    out.status          = substitute(id.lhs, images) == substitute(id.rhs, images)
                              ? CheckStatus::holds_on_pool
                              : CheckStatus::counterexample;
    return out;
  }

}  // namespace tropmon
