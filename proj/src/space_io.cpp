#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "ricci/errors.hpp"
#include "ricci/space.hpp"

namespace ricci {

using nlohmann::json;

double parse_number(const std::string& text) {
  auto to_double = [&](const std::string& part) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw ParseError("not a number: '" + text + "'");
    }
    if (used != part.size()) throw ParseError("not a number: '" + text + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return to_double(text);
  const double num = to_double(text.substr(0, slash));
  const double den = to_double(text.substr(slash + 1));
  if (den == 0.0) throw ParseError("zero denominator in '" + text + "'");
  return num / den;
}

namespace {

const json& require(const json& doc, const std::string& field) {
  auto it = doc.find(field);
  if (it == doc.end()) throw SchemaError(field, "missing");
  return *it;
}

double read_real(const json& v, const std::string& path) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      return parse_number(v.get<std::string>());
    } catch (const ParseError& e) {
      throw SchemaError(path, e.what());
    }
  }
  throw SchemaError(path, "expected a number or a \"p/q\" string");
}

int read_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) {
    // Negative or zero values are left to validation; only the type is checked here.
    throw SchemaError(path, "expected an integer");
  }
  return v.get<int>();
}

std::vector<double> read_real_list(const json& doc, const std::string& field, int s) {
  const json& v = require(doc, field);
  if (!v.is_array()) throw SchemaError(field, "expected a list");
  if (static_cast<int>(v.size()) != s)
    throw SchemaError(field, "expected " + std::to_string(s) + " entries");
  std::vector<double> out;
  for (std::size_t n = 0; n < v.size(); ++n)
    out.push_back(read_real(v[n], field + "[" + std::to_string(n) + "]"));
  return out;
}

}  // namespace

HomogeneousSpace parse_space(const std::string& text, const LoadOptions& options,
                             ValidationReport* report) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("space file: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("$", "expected an object");

  HomogeneousSpace sp;
  const json& name = require(doc, "name");
  if (!name.is_string()) throw SchemaError("name", "expected a string");
  sp.name = name.get<std::string>();

  sp.s = read_int(require(doc, "s"), "s");
  if (sp.s < 1) throw SchemaError("s", "must be at least 1");

  const json& dims = require(doc, "dims");
  if (!dims.is_array() || static_cast<int>(dims.size()) != sp.s)
    throw SchemaError("dims", "expected a list of " + std::to_string(sp.s) + " integers");
  for (std::size_t n = 0; n < dims.size(); ++n)
    sp.dims.push_back(read_int(dims[n], "dims[" + std::to_string(n) + "]"));

  sp.killing = read_real_list(doc, "killing", sp.s);
  sp.casimir = read_real_list(doc, "casimir", sp.s);

  const json& gamma = require(doc, "gamma");
  if (!gamma.is_array()) throw SchemaError("gamma", "expected a list of {i,k,l,value} records");
  sp.gamma = StructureConstants(sp.s);
  std::map<std::array<int, 3>, double> orbits;
  for (std::size_t n = 0; n < gamma.size(); ++n) {
    const std::string path = "gamma[" + std::to_string(n) + "]";
    const json& rec = gamma[n];
    if (!rec.is_object()) throw SchemaError(path, "expected a record");
    std::array<int, 3> idx{};
    const char* keys[] = {"i", "k", "l"};
    for (int j = 0; j < 3; ++j) {
      auto it = rec.find(keys[j]);
      if (it == rec.end()) throw SchemaError(path + "." + keys[j], "missing");
      idx[j] = read_int(*it, path + "." + keys[j]);
      if (idx[j] < 1 || idx[j] > sp.s)
        throw SchemaError(path + "." + keys[j], "index out of range 1.." + std::to_string(sp.s));
    }
    auto vit = rec.find("value");
    if (vit == rec.end()) throw SchemaError(path + ".value", "missing");
    const double value = read_real(*vit, path + ".value");
    std::array<int, 3> key = idx;
    std::sort(key.begin(), key.end());
    auto [it, inserted] = orbits.emplace(key, value);
    if (!inserted && it->second != value)
      throw SchemaError(path, "conflicts with an earlier entry for the same index triple");
    sp.gamma.set_symmetric(idx[0] - 1, idx[1] - 1, idx[2] - 1, value);
  }

  auto read_bool = [&](const char* field) {
    auto it = doc.find(field);
    if (it == doc.end()) return false;
    if (!it->is_boolean()) throw SchemaError(field, "expected a boolean");
    return it->get<bool>();
  };
  sp.is_maximal = read_bool("is_maximal");
  sp.has_intermediate = read_bool("has_intermediate");
  if (auto it = doc.find("metadata"); it != doc.end())
    sp.metadata = it->is_string() ? it->get<std::string>() : it->dump();

  ValidationReport rep = validate_space(sp, options.tolerance);
  if (!rep.ok() && options.policy == ValidationPolicy::Reject)
    throw ValidationError("space '" + sp.name + "' failed validation:\n" + rep.to_string());
  if (report) *report = std::move(rep);
  return sp;
}

HomogeneousSpace load_space(const std::string& path, const LoadOptions& options,
                            ValidationReport* report) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open space file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_space(buf.str(), options, report);
}

std::string serialize_space(const HomogeneousSpace& space) {
  json doc;
  doc["name"] = space.name;
  doc["s"] = space.s;
  doc["dims"] = space.dims;
  doc["killing"] = space.killing;
  doc["casimir"] = space.casimir;
  json gamma = json::array();
  for (int i = 0; i < space.s; ++i)
    for (int k = i; k < space.s; ++k)
      for (int l = k; l < space.s; ++l)
        if (double v = space.gamma(i, k, l); v != 0.0)
          gamma.push_back({{"i", i + 1}, {"k", k + 1}, {"l", l + 1}, {"value", v}});
  doc["gamma"] = std::move(gamma);
  doc["is_maximal"] = space.is_maximal;
  doc["has_intermediate"] = space.has_intermediate;
  doc["metadata"] = space.metadata;
  return doc.dump(2) + "\n";
}

void save_space(const HomogeneousSpace& space, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write space file '" + path + "'");
  out << serialize_space(space);
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace ricci
