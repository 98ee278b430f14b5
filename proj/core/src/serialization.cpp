#include "sliceop/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sliceop/errors.hpp"

namespace sliceop {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& where) {
  if (!j.is_number()) {
    throw FormatError(where + ": expected a number, got " +
                      std::string(j.type_name()));
  }
  return j.get<double>();
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Series parse_series_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("series JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw FormatError("series JSON: top level must be an object");
  }
  for (const auto& item : root.items()) {
    if (item.key() != "radius" && item.key() != "coeffs") {
      throw FormatError("series JSON: unknown field \"" + item.key() + "\"");
    }
  }
  if (!root.contains("coeffs")) {
    throw FormatError("series JSON: missing field \"coeffs\"");
  }
  const json& coeffs = root["coeffs"];
  if (!coeffs.is_array()) {
    throw FormatError("coeffs: expected an array of [w,x,y,z] quadruples");
  }
  std::vector<Quaternion> out;
  out.reserve(coeffs.size());
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    const json& c = coeffs[n];
    const std::string where = "coeffs[" + std::to_string(n) + "]";
    if (!c.is_array()) {
      throw FormatError(where + ": expected an array of 4 components");
    }
    if (c.size() != 4) {
      throw FormatError(where + ": expected 4 components, got " +
                        std::to_string(c.size()));
    }
    Quaternion q;
    q.w = require_number(c[0], where + "[0]");
    q.x = require_number(c[1], where + "[1]");
    q.y = require_number(c[2], where + "[2]");
    q.z = require_number(c[3], where + "[3]");
    if (!std::isfinite(q.w) || !std::isfinite(q.x) || !std::isfinite(q.y) ||
        !std::isfinite(q.z)) {
      throw FormatError(where + ": components must be finite");
    }
    out.push_back(q);
  }
  if (out.empty()) out.push_back(Quaternion{});

  double radius = kInfRadius;
  if (root.contains("radius")) {
    const json& r = root["radius"];
    if (r.is_string()) {
      if (r.get<std::string>() != "inf") {
        throw FormatError("radius: the only accepted string is \"inf\"");
      }
    } else {
      radius = require_number(r, "radius");
      if (!(radius > 0.0)) {
        throw FormatError("radius: must be a positive number or \"inf\"");
      }
    }
  }

  Series f(std::move(out), radius);
  f.normalize();
  return f;
}

Series parse_series(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open \"" + path + "\" for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading \"" + path + "\"");
  try {
    return parse_series_text(buf.str());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::string serialize_series(const Series& f) {
  std::string out = "{\"radius\":";
  if (std::isinf(f.radius())) {
    out += "\"inf\"";
  } else {
    out += format_double(f.radius());
  }
  out += ",\"coeffs\":[";
  for (std::size_t n = 0; n <= f.degree(); ++n) {
    const Quaternion c = f.coeff(n);
    const double comp[4] = {c.w, c.x, c.y, c.z};
    out += n == 0 ? "[" : ",[";
    for (int k = 0; k < 4; ++k) {
      if (!std::isfinite(comp[k])) {
        throw FormatError("serialize_series: coefficient " +
                          std::to_string(n) + " has a non-finite component");
      }
      if (k) out += ',';
      out += format_double(comp[k]);
    }
    out += ']';
  }
  out += "]}";
  return out;
}

void write_series(const Series& f, const std::string& path) {
  const std::string text = serialize_series(f) + "\n";
  std::ofstream outf(path, std::ios::binary | std::ios::trunc);
  if (!outf) throw IoError("cannot open \"" + path + "\" for writing");
  outf.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!outf) throw IoError("error while writing \"" + path + "\"");
}

}  // namespace sliceop
