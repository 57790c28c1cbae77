#include "tropmon/representations.hpp"

#include <algorithm>
#include <iterator>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "tropmon/errors.hpp"

namespace tropmon {

  namespace {
    constexpr TropInt X = NEG_INF;

    Representation make(MonoidId const& id, Target target, TropMatrix a, TropMatrix b, bool unital) {
      Representation r;
      r.monoid = id;
      r.target = target;
      r.n      = a.dim();
      r.images.emplace('a', std::move(a));
      r.images.emplace('b', std::move(b));
      r.unital = unital;
      return r;
    }

    // The monogenic representations only have the generator 'a'.
    Representation make(MonoidId const& id, Target target, TropMatrix a) {
      Representation r;
      r.monoid = id;
      r.target = target;
      r.n      = a.dim();
      r.images.emplace('a', std::move(a));
      return r;
    }

    TropMatrix aperiodic_matrix(std::int64_t l) {
      TropMatrix a(l);
      for (Eigen::Index i = 0; i < l; ++i) {
        for (Eigen::Index j = i + 1; j < l; ++j) {
          a.set(i, j, 1);
        }
      }
      return a;
    }

    struct Evaluated {
      std::vector<Word>         words;
      std::vector<TropMatrix>   matrices;
      std::unordered_map<Word, std::size_t> index;
    };

    // Every word of length <= max_len with its image, each computed from
    // its prefix.
    Evaluated evaluate_all(Representation const& r, std::string const& alphabet, std::size_t max_len) {
      Evaluated e;
      e.words.push_back(Word());
      e.matrices.push_back(TropMatrix::identity(r.n));
      e.index.emplace(Word(), 0);
      std::size_t layer_begin = 0;
      for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t const layer_end = e.words.size();
        for (std::size_t p = layer_begin; p < layer_end; ++p) {
          for (char c : alphabet) {
            e.words.push_back(e.words[p] + c);
            e.matrices.push_back(e.matrices[p] * r.images.at(c));
            e.index.emplace(e.words.back(), e.words.size() - 1);
          }
        }
        layer_begin = layer_end;
      }
      return e;
    }

    struct ChunkResult {
      std::vector<ModelElement>              models;
      std::optional<std::pair<Word, Word>>   hom_failure;
    };

    ChunkResult check_chunk(Representation const& r,
                            Evaluated const&      e,
                            std::size_t           begin,
                            std::size_t           end) {
      ChunkResult out;
      out.models.reserve(end - begin);
      for (std::size_t i = begin; i < end; ++i) {
        auto const& w = e.words[i];
        out.models.push_back(model_from_word(r.monoid, w));
        if (out.hom_failure) {
          continue;
        }
        for (std::size_t s = 0; s <= w.size(); ++s) {
          auto const& left  = e.matrices[e.index.at(w.substr(0, s))];
          auto const& right = e.matrices[e.index.at(w.substr(s))];
          if (left * right != e.matrices[i]) {
            out.hom_failure = std::make_pair(w.substr(0, s), w.substr(s));
            break;
          }
        }
      }
      return out;
    }
  }  // namespace

  TropMatrix transformation_matrix(std::span<std::size_t const> f) {
    TropMatrix m(static_cast<Eigen::Index>(f.size()));
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] >= f.size()) {
        throw std::invalid_argument("transformation maps outside {0, ..., n - 1}");
      }
      m.set(i, f[i], 0);
    }
    return m;
  }

  Representation transformation_representation(MonoidId const& id) {
    if (id.kind != MonoidKind::monogenic) {
      throw std::invalid_argument("transformation representations are for finite monogenic monoids");
    }
    std::vector<std::size_t> f(id.k);
    for (std::size_t i = 0; i < id.k; ++i) {
      f[i] = i + 1 < id.k ? i + 1 : id.l;
    }
    return make(id, id.k == 1 ? Target::ut : Target::mt, transformation_matrix(f));
  }

  Representation representation(MonoidId const& id) {
    id.validate();
    std::int64_t const k = id.k;
    switch (id.kind) {
      case MonoidKind::free_monogenic:
        return make(id, Target::ut, TropMatrix{{1}});
      case MonoidKind::monogenic:
        if (id.is_aperiodic_monogenic() && id.l >= 1) {
          return make(id, Target::ut, aperiodic_matrix(id.l));
        }
        return transformation_representation(id);
      case MonoidKind::bicyclic:
        return make(id, Target::ut, {{0, 1}, {X, 1}}, {{0, 0}, {X, -1}}, false);
      case MonoidKind::m1:
        return make(id, Target::ut, {{1, X}, {X, 0}}, {{0, X}, {X, 1}}, true);
      case MonoidKind::m6:
        if (k == 1) {
          return make(id, Target::ut, {{0, X}, {X, 1}}, {{1, 1}, {X, X}}, true);
        }
        return make(id, Target::ut, {{k - 1, X}, {X, 0}}, {{1, 1}, {X, X}}, false);
      case MonoidKind::m9:
        if (k == 1) {
          return make(id, Target::ut, {{1, X}, {X, 0}}, {{X, 1}, {X, 1}}, true);
        }
        return make(id, Target::ut, {{0, X}, {X, k - 1}}, {{X, 1}, {X, 1}}, false);
      case MonoidKind::m5:
        // B(0,0) is -1. With +1 there, babb and bbab (distinct in M5) have
        // the same image; with -1, (BA)^x A^y B^z has first row
        // (-x-z, -x-z+1, -x+y+1, -x+y+z+1) for x > 0, y > 1, z > 0.
        return make(id,
                    Target::ut,
                    {{0, 1, X, 0}, {X, 1, 0, -1}, {X, X, X, X}, {X, X, X, X}},
                    {{-1, 0, 0, -1}, {X, X, X, 0}, {X, X, 0, X}, {X, X, X, 1}},
                    true);
      case MonoidKind::m8:
        // Anti-transpose of the M5 pair.
        return make(id,
                    Target::ut,
                    {{X, X, -1, 0}, {X, X, 0, X}, {X, X, 1, 1}, {X, X, X, 0}},
                    {{1, X, 0, -1}, {X, 0, X, 0}, {X, X, X, 0}, {X, X, X, -1}},
                    true);
      case MonoidKind::m3:
        return make(id, Target::mt, {{1, X}, {X, -1}}, {{X, 1}, {0, X}}, true);
      case MonoidKind::m2:
        return make(id, Target::mt, {{X, 0}, {1, X}}, {{X, 1}, {0, X}}, true);
      case MonoidKind::klein:
        return make(id, Target::mt, {{X, -1}, {0, X}}, {{X, 1}, {0, X}}, true);
      case MonoidKind::m4:
      case MonoidKind::m7:
        break;
    }
    throw UnsupportedError("no tropical representation is known for " + id.name());
  }

  TropMatrix evaluate_word(Representation const& r, Word const& w) {
    auto result = TropMatrix::identity(r.n);
    for (char c : w) {
      auto it = r.images.find(c);
      if (it == r.images.end()) {
        throw std::invalid_argument(std::string("letter '") + c + "' has no image");
      }
      result = result * it->second;
    }
    return result;
  }

  bool verify_relation(Representation const& r) {
    auto const p = r.monoid.presentation();
    if (!r.unital && (p.lhs.empty() || p.rhs.empty())) {
      // The identity is represented by the image idempotent: check that the
      // other side is idempotent and acts as an identity on the generators.
      auto const e = evaluate_word(r, p.lhs.empty() ? p.rhs : p.lhs);
      if (e * e != e) {
        return false;
      }
      return std::all_of(r.images.begin(), r.images.end(), [&](auto const& kv) {
        return e * kv.second == kv.second && kv.second * e == kv.second;
      });
    }
    return evaluate_word(r, p.lhs) == evaluate_word(r, p.rhs);
  }

  EmbeddingReport verify_embedding(Representation const& r, std::size_t max_len, bool parallel) {
    EmbeddingReport report;
    report.relation_holds = verify_relation(r);

    auto const  alphabet = r.monoid.alphabet();
    auto const  e        = evaluate_all(r, alphabet, max_len);
    std::size_t const first = r.unital ? 0 : 1;
    std::size_t const total = e.words.size();

    std::vector<ChunkResult> chunks;
    if (parallel && total - first > 1) {
      std::size_t const workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 2, 16);
      std::size_t const step    = (total - first + workers - 1) / workers;
      std::vector<std::future<ChunkResult>> futures;
      for (std::size_t b = first; b < total; b += step) {
        futures.push_back(std::async(std::launch::async, check_chunk, std::cref(r), std::cref(e), b,
                                     std::min(total, b + step)));
      }
      for (auto& f : futures) {
        chunks.push_back(f.get());
      }
    } else {
      chunks.push_back(check_chunk(r, e, first, total));
    }

    std::vector<ModelElement> models;
    models.reserve(total - first);
    for (auto& chunk : chunks) {
      if (!report.witnesses && chunk.hom_failure) {
        report.witnesses = chunk.hom_failure;
      }
      std::move(chunk.models.begin(), chunk.models.end(), std::back_inserter(models));
    }

    std::unordered_map<ModelElement, std::size_t, ModelElementHash> by_model;
    std::unordered_map<TropMatrix, std::size_t>                     by_matrix;
    for (std::size_t i = first; i < total; ++i) {
      auto const& model  = models[i - first];
      auto const& matrix = e.matrices[i];
      auto const  mit    = by_model.try_emplace(model, i).first;
      auto const  xit    = by_matrix.try_emplace(matrix, i).first;
      ++report.hom_checked_words;
      if (report.witnesses) {
        continue;
      }
      if (e.matrices[mit->second] != matrix) {
        // Equal in the monoid, different matrices.
        report.witnesses = std::make_pair(e.words[mit->second], e.words[i]);
      } else if (models[xit->second - first] != model) {
        // Same matrix for different elements.
        report.witnesses = std::make_pair(e.words[xit->second], e.words[i]);
      }
    }
    report.classes   = by_model.size();
    report.injective = !report.witnesses;
    return report;
  }

  EmbeddingReport verify_embedding(MonoidId const& id, std::size_t max_len, bool parallel) {
    if (!has_model(id)) {
      throw UnsupportedError("no model is available for " + id.name());
    }
    return verify_embedding(representation(id), max_len, parallel);
  }

}  // namespace tropmon
