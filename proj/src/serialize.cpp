#include "wpp/serialize.hpp"

#include "wpp/error.hpp"

namespace wpp {

namespace {

Json pairs_json(const Relation& r) {
  Json out = Json::array();
  for (auto [i, j] : r.strict_pairs()) out.push_back({i + 1, j + 1});
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_from(const Json& j,
                                                            const char* key,
                                                            std::size_t n) {
  if (!j.contains(key)) {
    throw ValidationError(std::string("poset JSON lacks \"") + key + "\"");
  }
  const Json& arr = j.at(key);
  if (!arr.is_array()) {
    throw ValidationError(std::string("poset JSON \"") + key +
                          "\" is not an array");
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 ||
        !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned()) {
      throw ValidationError(std::string("poset JSON \"") + key +
                            "\" entry " + pair.dump() +
                            " is not a pair of positive integers");
    }
    auto i = pair[0].get<std::size_t>();
    auto k = pair[1].get<std::size_t>();
    if (i < 1 || k < 1 || i > n || k > n) {
      throw ValidationError(std::string("poset JSON \"") + key +
                            "\" entry " + pair.dump() + " outside [1, " +
                            std::to_string(n) + "]");
    }
    out.emplace_back(i - 1, k - 1);
  }
  return out;
}

std::string word_text(const PackedWord& w) { return w.to_string(); }

}  // namespace

Json to_json(const DoublePoset& p) {
  Json j;
  j["n"] = p.size();
  j["rel1"] = pairs_json(p.order1());
  j["rel2"] = pairs_json(p.order2());
  return j;
}

DoublePoset poset_from_json(const Json& j) {
  if (!j.is_object()) {
    throw ValidationError("poset JSON is not an object");
  }
  if (!j.contains("n") || !j.at("n").is_number_unsigned()) {
    throw ValidationError("poset JSON lacks a nonnegative integer \"n\"");
  }
  auto n = j.at("n").get<std::size_t>();
  if (n > kMaxGroundSet) {
    throw CapacityError("poset of size " + std::to_string(n) +
                        " exceeds the limit of " +
                        std::to_string(kMaxGroundSet));
  }
  return DoublePoset::from_pairs(n, pairs_from(j, "rel1", n),
                                 pairs_from(j, "rel2", n));
}

DoublePoset parse_poset(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed poset JSON: ") + e.what());
  }
  return poset_from_json(j);
}

Json to_json(const ModuleElement& x) {
  Json terms = Json::array();
  for (const auto& [w, c] : x) {
    Json t;
    t["word"] = word_text(w);
    t["coeff"] = c;
    terms.push_back(std::move(t));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

ModuleElement module_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
    throw ValidationError("module JSON lacks a \"terms\" array");
  }
  ModuleElement out;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("word") || !t.at("word").is_string() ||
        !t.contains("coeff") || !t.at("coeff").is_number_integer()) {
      throw ValidationError("module JSON term " + t.dump() +
                            " needs a string \"word\" and integer \"coeff\"");
    }
    out.add(PackedWord::parse(t.at("word").get<std::string>()),
            t.at("coeff").get<Coeff>());
  }
  return out;
}

Json to_json(const TensorElement& x) {
  Json terms = Json::array();
  for (const auto& [pair, c] : x) {
    Json t;
    t["left"] = word_text(pair.first);
    t["right"] = word_text(pair.second);
    t["coeff"] = c;
    terms.push_back(std::move(t));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const IntMatrix& m) {
  auto words = [](const std::vector<PackedWord>& b) {
    Json out = Json::array();
    for (const auto& w : b) out.push_back(word_text(w));
    return out;
  };
  Json j;
  if (m.is_square_on_one_basis()) {
    j["basis"] = words(m.row_basis());
  } else {
    j["row_basis"] = words(m.row_basis());
    j["col_basis"] = words(m.col_basis());
  }
  j["rows"] = m.to_rows();
  return j;
}

}  // namespace wpp
