#include "tropmon/serialization.hpp"

#include <string>

#include "tropmon/errors.hpp"

namespace tropmon {

  namespace {
    json assignment_to_json(std::map<char, Word> const& a) {
      json j = json::object();
      for (auto const& [v, w] : a) {
        j[std::string(1, v)] = word_to_text(w);
      }
      return j;
    }

    json rank_to_json(RankBound const& r) {
      switch (r.kind) {
        case RankBound::Kind::none:
          return nullptr;
        case RankBound::Kind::exact:
          return {{"kind", "exact"}, {"n", r.n}};
        case RankBound::Kind::at_most:
          return {{"kind", "at_most"}, {"n", r.n}};
      }
      return nullptr;
    }
  }  // namespace

  json scalar_to_json(TropInt x) {
    if (x.is_neg_inf()) {
      return "-inf";
    }
    return x.value();
  }

  TropInt scalar_from_json(json const& j) {
    if (j.is_string() && j.get<std::string>() == "-inf") {
      return NEG_INF;
    }
    if (j.is_number_integer()) {
      return TropInt(j.get<std::int64_t>());
    }
    throw ParseError("tropical entries are integers or \"-inf\", got " + j.dump());
  }

  json rows_to_json(TropMatrix const& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.dim(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.dim(); ++j) {
        row.push_back(scalar_to_json(m(i, j)));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  json to_json(TropMatrix const& m) {
    return {{"n", m.dim()}, {"rows", rows_to_json(m)}};
  }

  TropMatrix matrix_from_json(json const& j) {
    json const* rows = &j;
    if (j.is_object()) {
      if (!j.contains("rows")) {
        throw ParseError("matrix JSON needs \"rows\"");
      }
      rows = &j.at("rows");
    }
    if (!rows->is_array() || rows->empty()) {
      throw ParseError("matrix rows must be a non-empty array");
    }
    auto const n = static_cast<Eigen::Index>(rows->size());
    if (j.is_object() && j.contains("n") && j.at("n") != n) {
      throw ParseError("matrix \"n\" does not match the number of rows");
    }
    TropMatrix m(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      auto const& row = (*rows)[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
        throw ParseError("matrix rows must all have length " + std::to_string(n));
      }
      for (Eigen::Index k = 0; k < n; ++k) {
        m.set(i, k, scalar_from_json(row[static_cast<std::size_t>(k)]));
      }
    }
    return m;
  }

  json to_json(MonoidId const& id, ModelElement const& x) {
    return {{"monoid", id.name()}, {"elem", coordinates(x)}};
  }

  ModelElement element_from_json(MonoidId const& id, json const& j) {
    json const& elem = j.is_object() ? j.at("elem") : j;
    if (!elem.is_array()) {
      throw ParseError("element coordinates must be an array");
    }
    std::vector<std::int64_t> c;
    for (auto const& x : elem) {
      if (!x.is_number_integer()) {
        throw ParseError("element coordinates must be integers");
      }
      c.push_back(x.get<std::int64_t>());
    }
    return element_from_coordinates(id, c);
  }

  std::string to_string(Target t) {
    return t == Target::ut ? "UT" : "MT";
  }

  json to_json(Representation const& r) {
    json images = json::object();
    for (auto const& [c, m] : r.images) {
      images[std::string(1, c)] = to_json(m);
    }
    return {{"monoid", r.monoid.name()},
            {"target", to_string(r.target)},
            {"n", r.n},
            {"unital", r.unital},
            {"images", std::move(images)}};
  }

  Representation representation_from_json(MonoidId const& id, json const& j) {
    try {
      Representation r;
      r.monoid = id;
      auto const target = j.at("target").get<std::string>();
      if (target != "UT" && target != "MT") {
        throw ParseError("target must be \"UT\" or \"MT\"");
      }
      r.target = target == "UT" ? Target::ut : Target::mt;
      r.n      = j.at("n").get<Eigen::Index>();
      r.unital = j.value("unital", true);
      for (auto const& [name, m] : j.at("images").items()) {
        if (name.size() != 1) {
          throw ParseError("image keys are single letters");
        }
        auto matrix = matrix_from_json(m);
        if (matrix.dim() != r.n) {
          throw ParseError("image dimension does not match \"n\"");
        }
        r.images.emplace(name[0], std::move(matrix));
      }
      return r;
    } catch (json::exception const& e) {
      throw ParseError(std::string("malformed representation JSON: ") + e.what());
    }
  }

  json to_json(EmbeddingReport const& r) {
    json j{{"relation_holds", r.relation_holds},
           {"hom_checked_words", r.hom_checked_words},
           {"classes", r.classes},
           {"injective", r.injective}};
    if (r.witnesses) {
      j["witnesses"] = {word_to_text(r.witnesses->first), word_to_text(r.witnesses->second)};
    }
    return j;
  }

  json to_json(IdentityTerm const& id) {
    return {{"lhs", id.lhs}, {"rhs", id.rhs}};
  }

  json to_json(CheckOutcome const& c) {
    json j{{"status", to_string(c.status)}, {"seed", c.seed}, {"trials", c.trials}};
    if (c.trial) {
      j["trial"] = *c.trial;
    }
    if (!c.word_assignment.empty()) {
      j["assignment"] = assignment_to_json(c.word_assignment);
    }
    if (!c.matrix_assignment.empty()) {
      json m = json::object();
      for (auto const& [v, x] : c.matrix_assignment) {
        m[std::string(1, v)] = to_json(x);
      }
      j["matrices"] = std::move(m);
    }
    return j;
  }

  json to_json(ClassTableRow const& row) {
    return {{"monoid", row.id.name()},
            {"family", row.family},
            {"relation", row.relation},
            {"identity", row.identity_name},
            {"identity_term", to_json(row.identity)},
            {"ut", to_string(row.ut)},
            {"ut_rank", rank_to_json(row.ut_rank)},
            {"ut_rank_text", row.ut_rank_text},
            {"mt", to_string(row.mt)},
            {"mt_rank", rank_to_json(row.mt_rank)},
            {"mt_rank_text", row.mt_rank_text},
            {"citations", row.citations}};
  }

  json to_json(ClassificationVerdict const& v) {
    json renaming = json::object();
    for (auto const& [from, to] : v.renaming) {
      renaming[std::string(1, from)] = std::string(1, to);
    }
    json j{{"category", to_string(v.category)},
           {"monoid", v.monoid ? json(v.monoid->name()) : json(nullptr)},
           {"satisfies_identity", to_string(v.satisfies_identity)},
           {"identity", v.identity ? to_json(*v.identity) : json(nullptr)},
           {"ut", to_string(v.ut)},
           {"ut_rank", rank_to_json(v.ut_rank)},
           {"mt", to_string(v.mt)},
           {"mt_rank", rank_to_json(v.mt_rank)},
           {"renaming", std::move(renaming)},
           {"notes", v.notes},
           {"citations", v.citations}};
    return j;
  }

}  // namespace tropmon
