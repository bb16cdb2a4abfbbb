#include "oscoh/arrangement_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oscoh/errors.hpp"
#include "oscoh/rational.hpp"

namespace oscoh {

namespace {

using nlohmann::json;

// Line numbers of the elements of the top-level array `key`. nlohmann::json
// keeps no source positions, so this walks the text once more.
std::vector<int> element_lines(std::string_view text, const std::string& key) {
  std::vector<int> lines;
  int line = 1;
  int depth = 0;
  bool in_target = false;
  bool expect_element = false;
  std::string last_string;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') continue;
    if (c == '"') {
      std::string s;
      for (++i; i < text.size() && text[i] != '"'; ++i) {
        if (text[i] == '\\') ++i;
        else s += text[i];
      }
      if (in_target && depth == 2 && expect_element) {
        lines.push_back(line);
        expect_element = false;
      }
      last_string = std::move(s);
      continue;
    }
    if (in_target && depth == 2 && expect_element && c != ']') {
      lines.push_back(line);
      expect_element = false;
    }
    if (c == '[' || c == '{') {
      ++depth;
      if (depth == 2 && c == '[' && last_string == key) {
        in_target = true;
        expect_element = true;
      }
    } else if (c == ']' || c == '}') {
      if (depth == 2) in_target = false;
      --depth;
    } else if (c == ',' && in_target && depth == 2) {
      expect_element = true;
    } else if (c == ',' && depth == 1) {
      last_string.clear();
    }
  }
  return lines;
}

std::string where(const std::vector<int>& lines, std::size_t index, const char* what) {
  std::string s = std::string(what) + " " + std::to_string(index + 1);
  if (index < lines.size()) s += " (line " + std::to_string(lines[index]) + ")";
  return s;
}

Rational parse_scalar(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Integer(v.dump()));
  throw ParseError("expected an integer or a rational string such as \"-2/3\", got " + v.dump());
}

FieldPtr parse_field(const json& doc) {
  if (!doc.contains("field")) return NumberField::rationals();
  const json& f = doc.at("field");
  if (f.is_string()) {
    if (f.get<std::string>() == "Q") return NumberField::rationals();
    throw ParseError("field must be \"Q\" or {\"min_poly\": [...]}, got " + f.dump());
  }
  if (!f.is_object() || !f.contains("min_poly") || !f.at("min_poly").is_array()) {
    throw ParseError("field must be \"Q\" or {\"min_poly\": [...]}, got " + f.dump());
  }
  std::vector<Integer> poly;
  for (const auto& c : f.at("min_poly")) {
    const Rational r = parse_scalar(c);
    if (r.get_den() != 1) throw ParseError("min_poly coefficients must be integers");
    poly.push_back(r.get_num());
  }
  return NumberField::from_min_poly(std::move(poly));
}

NumberFieldElement parse_entry(const FieldPtr& field, const json& v) {
  if (v.is_array()) {
    std::vector<Rational> coeffs;
    for (const auto& c : v) coeffs.push_back(parse_scalar(c));
    if (coeffs.empty()) throw ParseError("empty coefficient list");
    return NumberFieldElement(field, std::move(coeffs));
  }
  return NumberFieldElement(field, parse_scalar(v));
}

std::vector<std::string> parse_labels(const json& doc, std::size_t n) {
  if (!doc.contains("labels")) return {};
  const json& l = doc.at("labels");
  if (!l.is_array() || l.size() != n) {
    throw ParseError("labels must be a list of " + std::to_string(n) + " strings");
  }
  std::vector<std::string> out;
  for (const auto& s : l) {
    if (!s.is_string()) throw ParseError("labels must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

Arrangement parse_realized(std::string_view text, const json& doc, bool essentialize_input) {
  const FieldPtr field = parse_field(doc);
  const json& rows = doc.at("hyperplanes");
  if (!rows.is_array() || rows.empty()) throw ParseError("hyperplanes must be a nonempty list of rows");
  const auto lines = element_lines(text, "hyperplanes");
  std::vector<FormRow> forms;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    try {
      if (!rows[i].is_array()) throw ParseError("expected a list of coefficients");
      FormRow row;
      for (const auto& v : rows[i]) row.push_back(parse_entry(field, v));
      if (row.size() < 2) throw ParseError("a row needs at least one coefficient and a constant");
      if (!forms.empty() && row.size() != forms.front().size()) {
        throw LengthMismatchError("expected " + std::to_string(forms.front().size()) + " entries, got " +
                                  std::to_string(row.size()));
      }
      forms.push_back(std::move(row));
    } catch (const LengthMismatchError& e) {
      throw LengthMismatchError(where(lines, i, "hyperplane row") + ": " + e.what());
    } catch (const Error& e) {
      throw ParseError(where(lines, i, "hyperplane row") + ": " + e.what());
    }
  }
  auto labels = parse_labels(doc, forms.size());
  if (essentialize_input) forms = essentialize(field, forms);
  try {
    return Arrangement::from_forms(field, std::move(forms), std::move(labels));
  } catch (const ZeroFormError& e) {
    // Name the row: the first all-zero linear part.
    for (std::size_t i = 0; i < rows.size(); ++i) {
      bool zero = true;
      for (std::size_t j = 0; j + 1 < rows[i].size(); ++j) zero = zero && parse_entry(field, rows[i][j]).is_zero();
      if (zero) throw ZeroFormError(where(lines, i, "hyperplane row") + ": " + e.what());
    }
    throw;
  }
}

Arrangement parse_matroid(std::string_view text, const json& doc) {
  for (const char* key : {"n", "rank"}) {
    if (!doc.contains(key) || !doc.at(key).is_number_integer()) {
      throw ParseError(std::string("matroid input needs an integer \"") + key + "\"");
    }
  }
  const int n = doc.at("n").get<int>();
  const int rank = doc.at("rank").get<int>();
  bool central = true;
  if (doc.contains("central")) {
    if (!doc.at("central").is_boolean()) throw ParseError("\"central\" must be true or false");
    central = doc.at("central").get<bool>();
  }
  if (doc.contains("field")) throw ParseError("\"field\" only applies to hyperplane input");
  const json& list = doc.at("circuits");
  if (!list.is_array()) throw ParseError("circuits must be a list of index lists");
  const auto lines = element_lines(text, "circuits");
  const int lo = central ? 1 : 0;
  std::vector<std::vector<int>> circuits;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& c = list[i];
    if (!c.is_array() || c.empty()) throw ParseError(where(lines, i, "circuit") + ": expected a nonempty index list");
    std::vector<int> circuit;
    for (const auto& v : c) {
      if (!v.is_number_integer() || v.get<long>() < lo || v.get<long>() > n) {
        throw ParseError(where(lines, i, "circuit") + ": indices must be integers in " + std::to_string(lo) + ".." +
                         std::to_string(n) + ", got " + v.dump());
      }
      circuit.push_back(v.get<int>());
    }
    circuits.push_back(std::move(circuit));
  }
  return Arrangement::from_circuits(n, rank, central, circuits, parse_labels(doc, static_cast<std::size_t>(n)));
}

json entry_json(const NumberFieldElement& x) {
  if (x.field()->is_rationals()) return to_string(x.coeffs().empty() ? Rational(0) : x.coeffs().front());
  std::size_t len = x.coeffs().size();
  while (len > 1 && x.coeffs()[len - 1] == 0) --len;
  json out = json::array();
  for (std::size_t i = 0; i < std::max<std::size_t>(len, 1); ++i) {
    out.push_back(to_string(i < x.coeffs().size() ? x.coeffs()[i] : Rational(0)));
  }
  return out;
}

}  // namespace

Arrangement parse_arrangement(std::string_view text, bool essentialize_input) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("arrangement document must be a JSON object");
  const bool realized = doc.contains("hyperplanes");
  const bool matroid = doc.contains("circuits");
  if (realized == matroid) throw ParseError("exactly one of \"hyperplanes\" and \"circuits\" must be present");
  if (matroid && essentialize_input) throw InvalidArgumentError("--essentialize applies only to hyperplane input");
  return realized ? parse_realized(text, doc, essentialize_input) : parse_matroid(text, doc);
}

Arrangement read_arrangement_file(const std::string& path, bool essentialize_input) {
  std::ifstream in(path);
  if (!in) throw InvalidArgumentError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_arrangement(buf.str(), essentialize_input);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string write_arrangement(const Arrangement& arr) {
  nlohmann::ordered_json doc;
  if (const auto& real = arr.realization()) {
    if (real->field->is_rationals()) {
      doc["field"] = "Q";
    } else {
      json poly = json::array();
      for (const auto& c : real->field->modulus()) poly.push_back(json::parse(c.get_str()));
      doc["field"] = {{"min_poly", poly}};
    }
    json rows = json::array();
    for (const auto& row : real->forms) {
      json r = json::array();
      for (const auto& x : row) r.push_back(entry_json(x));
      rows.push_back(std::move(r));
    }
    doc["hyperplanes"] = std::move(rows);
  } else {
    doc["n"] = arr.size();
    doc["rank"] = arr.rank();
    doc["central"] = arr.central();
    json circuits = json::array();
    for (Mask c : arr.cone_circuits()) circuits.push_back(elements(c));
    doc["circuits"] = std::move(circuits);
  }
  doc["labels"] = arr.labels();
  // One row or circuit per line.
  std::string out = "{\n";
  bool first = true;
  for (const auto& [key, value] : doc.items()) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + json(key).dump() + ": ";
    if (value.is_array() && !value.empty() && value.front().is_array()) {
      out += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        out += "    " + value[i].dump() + (i + 1 < value.size() ? ",\n" : "\n");
      }
      out += "  ]";
    } else {
      out += value.dump();
    }
  }
  return out + "\n}\n";
}

}  // namespace oscoh
