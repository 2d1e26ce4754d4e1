#include "gps/json_io.hpp"

namespace gps {

using nlohmann::json;

json tensor_to_json(const ExactTensor& t) {
  json entries = json::array();
  for (std::size_t off = 0; off < t.size(); ++off) {
    const ExactScalar& v = t.flat(off);
    if (v.is_zero()) continue;
    std::vector<int> idx = t.unflatten(off);
    for (int& k : idx) ++k;  // 1-based externally
    entries.push_back(json::array({idx, v.str()}));
  }
  return json{{"rank", t.rank()}, {"dim", t.dim()}, {"entries", entries}};
}

ExactTensor tensor_from_json(const json& j) {
  ExactTensor t(j.at("rank").get<int>(), j.at("dim").get<int>());
  for (const auto& entry : j.at("entries")) {
    std::vector<int> idx = entry.at(0).get<std::vector<int>>();
    for (int& k : idx) --k;
    t.at(idx) = ExactScalar::parse(entry.at(1).get<std::string>());
  }
  return t;
}

json multivector_to_json(const PolyMultivector& m) {
  json terms = json::array();
  for (const auto& [key, c] : m.terms()) {
    std::vector<int> exps(key.first.begin(), key.first.end());
    std::vector<int> idx;
    idx.reserve(key.second.size());
    for (auto v : key.second) idx.push_back(static_cast<int>(v) + 1);
    terms.push_back(json::array({exps, idx, c.str()}));
  }
  return json{{"dim", m.dim()}, {"order", m.order()}, {"terms", terms}};
}

PolyMultivector multivector_from_json(const json& j) {
  PolyMultivector m(j.at("dim").get<int>(), j.at("order").get<int>());
  for (const auto& term : j.at("terms")) {
    auto exps = term.at(0).get<std::vector<int>>();
    Monomial mono(exps.size());
    for (std::size_t k = 0; k < exps.size(); ++k) mono[k] = static_cast<std::uint8_t>(exps[k]);
    auto idx1 = term.at(1).get<std::vector<int>>();
    IndexTuple idx;
    idx.reserve(idx1.size());
    for (int v : idx1) idx.push_back(static_cast<std::uint8_t>(v - 1));
    m.add_term(mono, idx, ExactScalar::parse(term.at(2).get<std::string>()));
  }
  return m;
}

}  // namespace gps
