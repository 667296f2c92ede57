#include "foelner/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace foelner {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw std::invalid_argument("operator JSON: field '" + field + "' " + why);
}

TrigPoly poly_from(const json& arr, const std::string& where) {
  if (!arr.is_array()) fail(where, "must be an array of coefficients");
  TrigPoly::CoeffMap coeffs;
  for (const auto& item : arr) {
    if (!item.contains("freq") || !item["freq"].is_number_integer()) {
      fail(where + ".freq", "missing or not an integer");
    }
    if (!item.contains("re") || !item["re"].is_number()) {
      fail(where + ".re", "missing or not a number");
    }
    if (!item.contains("im") || !item["im"].is_number()) {
      fail(where + ".im", "missing or not a number");
    }
    coeffs[item["freq"].get<long>()] +=
        Complex(item["re"].get<double>(), item["im"].get<double>());
  }
  return TrigPoly(std::move(coeffs));
}

json poly_to(const TrigPoly& g) {
  json arr = json::array();
  for (const auto& [freq, c] : g.coeffs()) {
    arr.push_back({{"freq", freq}, {"re", c.real()}, {"im", c.imag()}});
  }
  return arr;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw std::invalid_argument("operator JSON: not valid JSON");
  }
  return j;
}

}  // namespace

TrigPoly trig_poly_from_json(const std::string& text) {
  return poly_from(parse(text), "fourier");
}

std::string trig_poly_to_json(const TrigPoly& g) { return poly_to(g).dump(); }

CrossedSymbol crossed_symbol_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("theta") || !j["theta"].is_number()) {
    fail("theta", "missing or not a number");
  }
  if (!j.contains("terms") || !j["terms"].is_array()) {
    fail("terms", "missing or not an array");
  }
  CrossedSymbol::TermMap terms;
  for (const auto& t : j["terms"]) {
    if (!t.contains("group") || !t["group"].is_number_integer()) {
      fail("terms.group", "missing or not an integer");
    }
    if (!t.contains("fourier")) fail("terms.fourier", "missing");
    const long s = t["group"].get<long>();
    const TrigPoly g = poly_from(t["fourier"], "terms.fourier");
    auto it = terms.find(s);
    if (it == terms.end()) {
      terms.emplace(s, g);
    } else {
      it->second = it->second + g;
    }
  }
  return CrossedSymbol(j["theta"].get<double>(), std::move(terms));
}

std::string crossed_symbol_to_json(const CrossedSymbol& x) {
  json terms = json::array();
  for (const auto& [s, g] : x.terms()) {
    terms.push_back({{"group", s}, {"fourier", poly_to(g)}});
  }
  return json{{"theta", x.theta()}, {"terms", terms}}.dump();
}

CrossedSymbol crossed_symbol_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("operator JSON: cannot open file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return crossed_symbol_from_json(buf.str());
}

}  // namespace foelner
