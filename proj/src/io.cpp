#include "ljmod/io.hpp"

#include "ljmod/errors.hpp"

namespace ljmod::io {

nlohmann::ordered_json to_json(const segcomb::Multisegment& a) {
  nlohmann::ordered_json j;
  j["period"] = a.period();
  j["segments"] = nlohmann::ordered_json::array();
  for (const auto& s : a.segments())
    j["segments"].push_back({{"start", s.start}, {"len", s.length}, {"weight", s.weight}});
  return j;
}

segcomb::Multisegment multisegment_from_json(const nlohmann::json& j) {
  try {
    std::vector<segcomb::Segment> segs;
    for (const auto& s : j.at("segments"))
      segs.push_back({s.at("start").get<int>(), s.at("len").get<int>(), s.value("weight", 1)});
    return segcomb::Multisegment(j.at("period").get<int>(), std::move(segs));
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("malformed multisegment JSON: ") + ex.what());
  }
}

std::string block_listing(int d, int epsilon, const std::vector<segcomb::Multisegment>& block) {
  nlohmann::ordered_json j;
  j["d"] = d;
  j["epsilon"] = epsilon;
  j["count"] = block.size();
  j["multisegments"] = nlohmann::ordered_json::array();
  for (const auto& a : block) j["multisegments"].push_back(to_json(a));
  return j.dump();
}

FieldMatrix field_matrix_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("matrix file is not valid JSON: ") + ex.what());
  }
  try {
    const int l = j.at("l").get<int>();
    const int m = j.value("m", 1);
    std::vector<int> modulus = j.contains("modulus") ? j.at("modulus").get<std::vector<int>>()
                                                     : FiniteField::default_modulus(l, m);
    auto field = std::make_shared<const FiniteField>(l, m, std::move(modulus));
    const auto& rows = j.at("rows");
    const std::size_t n = rows.size();
    FieldMatrix out(field, n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].size() != n) throw DomainError("matrix must be square");
      for (std::size_t c = 0; c < n; ++c) {
        const auto& e = rows[r][c];
        out(r, c) = e.is_number() ? field->from_int(e.get<long long>())
                                  : field->from_coeffs(e.get<std::vector<int>>());
      }
    }
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("malformed matrix JSON: ") + ex.what());
  }
}

std::string brauer_trace_json(const Cyclotomic& trace, const FiniteField& field, FieldElem reduction) {
  nlohmann::ordered_json j;
  j["conductor"] = trace.conductor();
  j["coeffs"] = trace.coeffs();
  j["reduction"] = field.coeffs(reduction);
  return j.dump();
}

}  // namespace ljmod::io
