#ifndef TROPMON_SERIALIZATION_HPP_
#define TROPMON_SERIALIZATION_HPP_

#include "json.hpp"

#include "tropmon/classifier.hpp"
#include "tropmon/identities.hpp"
#include "tropmon/matrix.hpp"
#include "tropmon/models.hpp"
#include "tropmon/representations.hpp"

// JSON forms. Tropical scalars are integers or the string "-inf".
//
//   matrix          {"n": 2, "rows": [[-4, "-inf"], ["-inf", 12]]}
//   model element   {"monoid": "M5", "elem": [1, 2, 1]}
//   representation  {"monoid": "M3", "target": "MT", "n": 2, "unital": true,
//                    "images": {"a": <matrix>, "b": <matrix>}}
//
// The *_from_json functions throw ParseError on malformed input.
namespace tropmon {

  using json = nlohmann::json;

  json   scalar_to_json(TropInt x);
  TropInt scalar_from_json(json const& j);

  // Just the "rows" array.
  json       rows_to_json(TropMatrix const& m);
  json       to_json(TropMatrix const& m);
  TropMatrix matrix_from_json(json const& j);

  json         to_json(MonoidId const& id, ModelElement const& x);
  ModelElement element_from_json(MonoidId const& id, json const& j);

  std::string to_string(Target t);
  json           to_json(Representation const& r);
  Representation representation_from_json(MonoidId const& id, json const& j);

  json to_json(EmbeddingReport const& r);
  json to_json(IdentityTerm const& id);
  json to_json(CheckOutcome const& c);
  json to_json(ClassTableRow const& row);
  json to_json(ClassificationVerdict const& v);

}  // namespace tropmon

#endif  // TROPMON_SERIALIZATION_HPP_
