#include "network_io.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace topoctrl::io {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& require(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing required field \"") + key + "\"");
  return *it;
}

int require_int(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_number_integer())
    fail(where, std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

Sign parse_sign(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "sign must be the string \"+\" or \"-\"");
  const std::string s = v.get<std::string>();
  if (s == "+") return Sign::Positive;
  if (s == "-") return Sign::Negative;
  fail(where, "sign must be \"+\" or \"-\", got \"" + s + "\"");
}

std::string sign_string(Sign s) { return s == Sign::Positive ? "+" : "-"; }

}  // namespace

NetworkDocument document_from_json(const json& j) {
  if (!j.is_object()) fail("document", "top level must be a JSON object");

  NetworkDocument doc;
  doc.net.n = require_int(j, "n", "document");

  const json& edges = require(j, "edges", "document");
  if (!edges.is_array()) fail("document", "\"edges\" must be an array");
  bool any_weight = false, all_weight = true;
  std::map<EdgeKey, double> weights;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    std::ostringstream ws;
    ws << "edges[" << k << "]";
    const std::string where = ws.str();
    const json& e = edges[k];
    if (!e.is_object()) fail(where, "must be an object");
    const int i = require_int(e, "i", where);
    const int jj = require_int(e, "j", where);
    const Sign s = parse_sign(require(e, "sign", where), where);
    if (i >= jj) fail(where, "endpoints must satisfy i < j");
    EdgeKey key{i, jj};
    if (doc.net.state_edge_signs.count(key)) fail(where, "duplicate edge");
    doc.net.state_edge_signs[key] = s;
    if (auto it = e.find("weight"); it != e.end()) {
      if (!it->is_number()) fail(where, "\"weight\" must be a number");
      const double w = it->get<double>();
      if (w == 0.0 || !std::isfinite(w)) fail(where, "\"weight\" must be nonzero and finite");
      if ((w > 0) != (s == Sign::Positive))
        fail(where, "\"weight\" sign disagrees with \"sign\"");
      weights[key] = w;
      any_weight = true;
    } else {
      all_weight = false;
    }
  }
  if (any_weight && !all_weight)
    fail("document", "either every edge carries a \"weight\" or none does");
  if (any_weight) doc.net.nominal_weights = std::move(weights);

  const json& inputs = require(j, "inputs", "document");
  if (!inputs.is_array()) fail("document", "\"inputs\" must be an array");
  // Inputs may appear in any order in the file but are stored by input index.
  std::map<int, int> by_input;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    std::ostringstream ws;
    ws << "inputs[" << k << "]";
    const std::string where = ws.str();
    const json& e = inputs[k];
    if (!e.is_object()) fail(where, "must be an object");
    const int input = require_int(e, "input", where);
    const int state = require_int(e, "state", where);
    if (by_input.count(input)) fail(where, "duplicate input node");
    by_input[input] = state;
  }
  const int m = static_cast<int>(by_input.size());
  doc.net.input_assignment.resize(m);
  {
    int expected = doc.net.n + 1;
    for (const auto& [input, state] : by_input) {
      if (input != expected) {
        std::ostringstream os;
        os << "inputs: input nodes must be exactly " << doc.net.n + 1 << ".."
           << doc.net.n + m << "; found " << input;
        throw ParseError(os.str());
      }
      doc.net.input_assignment[input - doc.net.n - 1] = state;
      ++expected;
    }
  }

  if (auto it = j.find("diagonal_signs"); it != j.end()) {
    if (!it->is_array()) fail("document", "\"diagonal_signs\" must be an array");
    std::vector<Sign> ds;
    for (std::size_t k = 0; k < it->size(); ++k) {
      std::ostringstream ws;
      ws << "diagonal_signs[" << k << "]";
      ds.push_back(parse_sign((*it)[k], ws.str()));
    }
    doc.net.diagonal_signs = std::move(ds);
  }

  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) fail("document", "\"name\" must be a string");
    doc.name = it->get<std::string>();
  }
  if (auto it = j.find("description"); it != j.end()) {
    if (!it->is_string()) fail("document", "\"description\" must be a string");
    doc.description = it->get<std::string>();
  }

  try {
    doc.net.validate();
  } catch (const InvalidNetworkError& e) {
    throw ParseError(std::string("invalid network: ") + e.what());
  }
  return doc;
}

NetworkDocument load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return document_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json document_to_json(const NetworkDocument& doc) {
  json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  if (!doc.description.empty()) j["description"] = doc.description;
  j["n"] = doc.net.n;
  json edges = json::array();
  for (const auto& [key, sign] : doc.net.state_edge_signs) {
    json e;
    e["i"] = key.first;
    e["j"] = key.second;
    e["sign"] = sign_string(sign);
    if (doc.net.nominal_weights) e["weight"] = doc.net.nominal_weights->at(key);
    edges.push_back(std::move(e));
  }
  j["edges"] = std::move(edges);
  json inputs = json::array();
  for (int k = 0; k < static_cast<int>(doc.net.input_assignment.size()); ++k) {
    json e;
    e["input"] = doc.net.input_node(k);
    e["state"] = doc.net.input_assignment[k];
    inputs.push_back(std::move(e));
  }
  j["inputs"] = std::move(inputs);
  if (doc.net.diagonal_signs) {
    json ds = json::array();
    for (Sign s : *doc.net.diagonal_signs) ds.push_back(sign_string(s));
    j["diagonal_signs"] = std::move(ds);
  }
  return j;
}

void save_network(const NetworkDocument& doc, std::ostream& out) {
  out << document_to_json(doc).dump(2) << "\n";
}

}  // namespace topoctrl::io
