#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "tropmon/classifier.hpp"
#include "tropmon/errors.hpp"
#include "tropmon/identities.hpp"
#include "tropmon/models.hpp"
#include "tropmon/representations.hpp"
#include "tropmon/serialization.hpp"
#include "tropmon/words.hpp"

namespace tropmon::cli {

  namespace {
    std::uint64_t parse_seed(std::string const& text) {
      std::size_t used = 0;
      std::uint64_t seed = 0;
      try {
        seed = std::stoull(text, &used, 0);
      } catch (std::exception const&) {
        throw ParseError("invalid seed \"" + text + "\"");
      }
      if (used != text.size()) {
        throw ParseError("invalid seed \"" + text + "\"");
      }
      return seed;
    }

    struct MonoidOptions {
      std::string   name;
      std::uint32_t k = 1;
      std::uint32_t l = 0;

      void add(CLI::App* cmd) {
        cmd->add_option("--k", k, "parameter k (M6, M9, monogenic)");
        cmd->add_option("--l", l, "parameter l (monogenic)");
      }

      MonoidId get() const {
        return parse_monoid(name, k, l);
      }
    };

    std::string yes_no(bool b) {
      return b ? "true" : "false";
    }

    std::string verdict_text(Verdict v, RankBound const& r) {
      auto s = to_string(v);
      if (r.kind == RankBound::Kind::exact) {
        s += " (rank " + std::to_string(r.n) + ")";
      } else if (r.kind == RankBound::Kind::at_most) {
        s += " (rank <= " + std::to_string(r.n) + ")";
      }
      return s;
    }

    std::string join(std::vector<std::string> const& items, std::string const& sep) {
      std::string out;
      for (auto const& x : items) {
        out += (out.empty() ? "" : sep) + x;
      }
      return out;
    }

    int cmd_classify(std::string const& text, bool as_json, std::ostream& out) {
      auto const p = parse_presentation(text);
      auto const v = classify(p);
      if (as_json) {
        auto j            = to_json(v);
        j["presentation"] = to_string(p);
        out << j.dump(2) << '\n';
      } else {
        std::string monoid;
        switch (v.category) {
          case ClassificationVerdict::Category::listed:
            monoid = v.monoid->name();
            break;
          case ClassificationVerdict::Category::outside_list:
            monoid = "OUTSIDE_LIST";
            break;
          case ClassificationVerdict::Category::unsupported:
            monoid = "UNSUPPORTED";
            break;
        }
        out << "presentation: " << to_string(p) << '\n' << "monoid: " << monoid << '\n';
        if (!v.renaming.empty()) {
          std::vector<std::string> r;
          for (auto const& [from, to] : v.renaming) {
            r.push_back(std::string(1, from) + "->" + std::string(1, to));
          }
          out << "renaming: " << join(r, ", ") << '\n';
        }
        out << "identity: " << to_string(v.satisfies_identity);
        if (v.identity) {
          out << " (" << to_string(*v.identity) << ")";
        }
        out << '\n'
            << "UT: " << verdict_text(v.ut, v.ut_rank) << '\n'
            << "MT: " << verdict_text(v.mt, v.mt_rank) << '\n';
        for (auto const& n : v.notes) {
          out << "note: " << n << '\n';
        }
        for (auto const& c : v.citations) {
          out << "basis: " << c << '\n';
        }
      }
      return v.category == ClassificationVerdict::Category::unsupported ? unsupported : ok;
    }

    int cmd_verify(MonoidId const& id, std::size_t max_len, bool parallel, bool as_json, std::ostream& out) {
      auto const r = verify_embedding(id, max_len, parallel);
      if (as_json) {
        auto j      = to_json(r);
        j["monoid"] = id.name();
        j["max_len"] = max_len;
        out << j.dump(2) << '\n';
      } else {
        out << "monoid: " << id.name() << '\n'
            << "max_len: " << max_len << '\n'
            << "relation_holds: " << yes_no(r.relation_holds) << '\n'
            << "words: " << r.hom_checked_words << '\n'
            << "classes: " << r.classes << '\n'
            << "injective: " << yes_no(r.injective) << '\n';
        if (r.witnesses) {
          out << "witnesses: " << word_to_text(r.witnesses->first) << ", "
              << word_to_text(r.witnesses->second) << '\n';
        }
      }
      return r.relation_holds && r.injective ? ok : failure;
    }

    struct IdentityOptions {
      std::string   identity;
      std::string   backend = "ut:2";
      std::uint64_t trials  = 10'000;
      std::string   seed;
      std::int64_t  entry_bound  = 20;
      double        neg_inf_prob = 0.25;
      std::uint32_t pool_bound   = 3;
      bool          parallel     = false;
    };

    int cmd_identity(IdentityOptions const& o, MonoidOptions m, bool as_json, std::ostream& out) {
      auto const   id   = resolve_identity(o.identity);
      auto const   seed = o.seed.empty() ? default_seed() : parse_seed(o.seed);
      CheckOutcome outcome;
      if (o.backend == "free") {
        outcome = free_word_check(id);
      } else if (o.backend.starts_with("model:")) {
        m.name  = o.backend.substr(6);
        outcome = check_identity_model(id, m.get(), o.pool_bound);
      } else if (o.backend.starts_with("ut:") || o.backend.starts_with("mt:")) {
        MatrixSampler s;
        std::size_t   used = 0;
        long long     n    = 0;
        try {
          n = std::stoll(o.backend.substr(3), &used);
        } catch (std::exception const&) {
          throw ParseError("invalid backend \"" + o.backend + "\"");
        }
        if (used != o.backend.size() - 3 || n < 1 || n > 64) {
          throw ParseError("invalid backend \"" + o.backend + "\"");
        }
        s.n            = n;
        s.triangular   = o.backend.starts_with("ut:");
        s.entry_bound  = o.entry_bound;
        s.neg_inf_prob = o.neg_inf_prob;
        outcome        = check_identity_matrices(id, s, o.trials, seed, o.parallel);
      } else {
        throw ParseError("unknown backend \"" + o.backend + "\"; use ut:n, mt:n, model:<monoid> or free");
      }

      if (as_json) {
        auto j        = to_json(outcome);
        j["identity"] = to_json(id);
        j["backend"]  = o.backend;
        out << j.dump(2) << '\n';
      } else {
        out << "identity: " << to_string(id) << '\n'
            << "backend: " << o.backend << '\n'
            << "status: " << to_string(outcome.status) << '\n'
            << "trials: " << outcome.trials << '\n';
        if (o.backend.starts_with("ut:") || o.backend.starts_with("mt:")) {
          out << "seed: " << outcome.seed << '\n';
        }
        if (outcome.trial) {
          out << "trial: " << *outcome.trial << '\n';
        }
        if (outcome.status == CheckStatus::counterexample || outcome.status == CheckStatus::unknown) {
          for (auto const& [v, w] : outcome.word_assignment) {
            out << v << " = " << word_to_text(w) << '\n';
          }
          for (auto const& [v, x] : outcome.matrix_assignment) {
            out << v << " = " << rows_to_json(x).dump() << '\n';
          }
        }
      }
      switch (outcome.status) {
        case CheckStatus::holds_on_pool:
        case CheckStatus::no_counterexample:
          return ok;
        case CheckStatus::counterexample:
          return failure;
        case CheckStatus::unknown:
          return unsupported;
      }
      return unsupported;
    }

    Representation load_representation(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw ParseError("cannot open \"" + path + "\"");
      }
      json j;
      try {
        j = json::parse(in);
      } catch (json::exception const& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
      }
      if (!j.contains("monoid") || !j.at("monoid").is_string()) {
        throw ParseError("representation JSON needs \"monoid\"");
      }
      return representation_from_json(parse_monoid(j.at("monoid").get<std::string>()), j);
    }

    int cmd_eval(MonoidOptions const& m, std::string const& word_text, bool as_json, std::ostream& out) {
      auto const r = m.name.ends_with(".json") ? load_representation(m.name) : representation(m.get());
      std::string alphabet;
      for (auto const& [c, _] : r.images) {
        alphabet.push_back(c);
      }
      auto const w = parse_word(word_text, alphabet);
      auto const x = evaluate_word(r, w);
      if (as_json) {
        out << json{{"monoid", r.monoid.name()}, {"word", word_to_text(w)}, {"matrix", to_json(x)}}.dump(2)
            << '\n';
      } else {
        out << rows_to_json(x).dump() << '\n';
      }
      return ok;
    }

    int cmd_nf(MonoidId const& id, std::string const& word_text, bool as_json, std::ostream& out) {
      auto const w  = parse_word(word_text, id.alphabet());
      auto const x  = model_from_word(id, w);
      auto const nf = model_canonical_word(id, x);
      if (as_json) {
        out << json{{"monoid", id.name()},
                    {"word", word_to_text(w)},
                    {"normal_form", word_to_text(nf)},
                    {"element", to_json(id, x)}}
                   .dump(2)
            << '\n';
      } else {
        out << word_to_text(nf) << '\n';
      }
      return ok;
    }

    int cmd_table(bool as_json, std::ostream& out) {
      auto const rows = table();
      if (as_json) {
        json j = json::array();
        for (auto const& row : rows) {
          j.push_back(to_json(row));
        }
        out << j.dump(2) << '\n';
        return ok;
      }
      out << std::left << std::setw(18) << "monoid" << std::setw(16) << "relation" << std::setw(15) << "identity"
          << std::setw(6) << "UT" << std::setw(8) << "rank" << std::setw(9) << "MT"
          << "rank" << '\n';
      for (auto const& row : rows) {
        out << std::setw(18) << row.family << std::setw(16) << row.relation << std::setw(15) << row.identity_name
            << std::setw(6) << to_string(row.ut) << std::setw(8) << row.ut_rank_text << std::setw(9)
            << to_string(row.mt) << row.mt_rank_text << '\n';
      }
      return ok;
    }
  }  // namespace

  std::uint64_t default_seed() {
    if (char const* env = std::getenv("TROP_SEED"); env != nullptr && *env != '\0') {
      return parse_seed(env);
    }
    return default_seed_value;
  }

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tropical representations of one-relation monoids", "tropmon"};
    app.require_subcommand(1);
    bool as_json = false;

    std::string text;
    auto*       classify_cmd = app.add_subcommand("classify", "classify a presentation such as \"a,b|ab=1\"");
    classify_cmd->add_option("presentation", text)->required();
    classify_cmd->add_flag("--json", as_json, "JSON output");

    MonoidOptions monoid;
    std::size_t   max_len  = 8;
    bool          parallel = false;
    auto*         verify_cmd = app.add_subcommand("verify", "check a representation against the normal-form model");
    verify_cmd->add_option("monoid", monoid.name)->required();
    verify_cmd->add_option("--max-len", max_len, "longest word checked");
    verify_cmd->add_flag("--parallel", parallel, "split the words among threads");
    verify_cmd->add_flag("--json", as_json, "JSON output");
    monoid.add(verify_cmd);

    IdentityOptions identity;
    auto*           identity_cmd = app.add_subcommand("identity", "search for a counterexample to an identity");
    identity_cmd->add_option("identity", identity.identity, "catalogue name or literal \"lhs=rhs\"")->required();
    identity_cmd->add_option("--backend", identity.backend, "ut:n, mt:n, model:<monoid> or free");
    identity_cmd->add_option("--trials", identity.trials, "sampled trials");
    identity_cmd->add_option("--seed", identity.seed, "seed (default TROP_SEED or 0xC0FFEE)");
    identity_cmd->add_option("--entry-bound", identity.entry_bound, "sampled entries lie in [-b, b]");
    identity_cmd->add_option("--neg-inf-prob", identity.neg_inf_prob, "probability of a -inf entry");
    identity_cmd->add_option("--pool-bound", identity.pool_bound, "exponent bound of the model pool");
    identity_cmd->add_flag("--parallel", identity.parallel, "run trials on several threads");
    identity_cmd->add_flag("--json", as_json, "JSON output");
    monoid.add(identity_cmd);

    std::string word;
    auto*       eval_cmd = app.add_subcommand("eval", "image of a word under a representation");
    eval_cmd->add_option("monoid", monoid.name, "monoid name or representation JSON file")->required();
    eval_cmd->add_option("word", word)->required();
    eval_cmd->add_flag("--json", as_json, "JSON output");
    monoid.add(eval_cmd);

    auto* nf_cmd = app.add_subcommand("nf", "normal form of a word");
    nf_cmd->add_option("monoid", monoid.name)->required();
    nf_cmd->add_option("word", word)->required();
    nf_cmd->add_flag("--json", as_json, "JSON output");
    monoid.add(nf_cmd);

    auto* rep_cmd = app.add_subcommand("rep", "representation as JSON");
    rep_cmd->add_option("monoid", monoid.name)->required();
    monoid.add(rep_cmd);

    auto* table_cmd = app.add_subcommand("table", "the classification table");
    table_cmd->add_flag("--json", as_json, "JSON output");

    std::vector<char const*> argv{"tropmon"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? ok : parse_error;
    }

    try {
      if (*classify_cmd) {
        return cmd_classify(text, as_json, out);
      }
      if (*verify_cmd) {
        return cmd_verify(monoid.get(), max_len, parallel, as_json, out);
      }
      if (*identity_cmd) {
        return cmd_identity(identity, monoid, as_json, out);
      }
      if (*eval_cmd) {
        return cmd_eval(monoid, word, as_json, out);
      }
      if (*nf_cmd) {
        return cmd_nf(monoid.get(), word, as_json, out);
      }
      if (*rep_cmd) {
        out << to_json(representation(monoid.get())).dump(2) << '\n';
        return ok;
      }
      if (*table_cmd) {
        return cmd_table(as_json, out);
      }
    } catch (ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return parse_error;
    } catch (UnsupportedError const& e) {
      err << "unsupported: " << e.what() << '\n';
      return unsupported;
    } catch (NoCanonicalWordError const& e) {
      err << "unsupported: " << e.what() << '\n';
      return unsupported;
    } catch (BudgetExceededError const& e) {
      err << "unsupported: " << e.what() << '\n';
      return unsupported;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return failure;
    } catch (std::logic_error const& e) {
      err << "error: " << e.what() << '\n';
      return parse_error;
    }
    return parse_error;
  }

}  // namespace tropmon::cli
