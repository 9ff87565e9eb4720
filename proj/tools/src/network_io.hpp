#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "topoctrl/types.hpp"

namespace topoctrl::io {

// Raised for malformed input files: JSON syntax errors, missing or
// ill-typed fields, and values the network model rejects. The message
// always names the offending location (file, field, or array index).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A network plus the optional descriptive metadata carried by its file.
struct NetworkDocument {
  SignedNetwork net;
  std::string name;         // empty when absent
  std::string description;  // empty when absent
};

// Parses a network document from JSON. Expected shape:
//   {
//     "n": 5,
//     "edges": [{"i": 1, "j": 2, "sign": "+", "weight": 2.0}, ...],
//     "inputs": [{"input": 6, "state": 3}, ...],
//     "diagonal_signs": ["-", "-", "-", "-", "-"],   // optional
//     "name": "...", "description": "..."            // optional
//   }
// Edge endpoints satisfy i < j; "weight" is optional but must be supplied
// either for all edges or none, and its sign must match "sign".
// Throws ParseError on any structural problem and surfaces
// InvalidNetworkError messages as ParseError too.
NetworkDocument document_from_json(const nlohmann::json& j);

// Reads and parses a file. Throws ParseError (file unreadable, bad JSON,
// bad document).
NetworkDocument load_network(const std::string& path);

// Serializes back to the same JSON shape accepted by document_from_json.
nlohmann::json document_to_json(const NetworkDocument& doc);

// Writes document_to_json with 2-space indentation and a trailing newline.
void save_network(const NetworkDocument& doc, std::ostream& out);

}  // namespace topoctrl::io
