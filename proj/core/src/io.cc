// Copyright 2026 The ulc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ulc/io.h"

#include <fstream>
#include <iterator>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ulc/errors.h"

namespace ulc {
namespace {

using nlohmann::json;

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Rat RationalFromJson(const json& value) {
  if (value.is_string()) return ParseRational(value.get<std::string>());
  if (value.is_number_integer()) return ParseRational(value.dump());
  throw ParseError("expected a rational string or integer, got " +
                   value.dump());
}

std::vector<Rat> RationalsFromJson(const json& value, const char* what) {
  if (!value.is_array()) {
    throw ParseError(std::string(what) + " must be a JSON array");
  }
  std::vector<Rat> out;
  out.reserve(value.size());
  for (const json& x : value) out.push_back(RationalFromJson(x));
  return out;
}

json ToJson(std::span<const Rat> values) {
  json out = json::array();
  for (const Rat& x : values) out.push_back(ToString(x));
  return out;
}

json BodyJson(const Body& body) {
  json verts = json::array();
  for (const Point& p : body.vertices()) verts.push_back(ToJson(p));
  return json{{"dim", body.dim()}, {"vertices", std::move(verts)}};
}

Body BodyFromJson(const json& doc) {
  if (!doc.is_object()) throw ParseError("polytope must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned() ||
      doc["dim"].get<std::size_t>() == 0) {
    throw ParseError("polytope needs a positive integer \"dim\"");
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array() ||
      doc["vertices"].empty()) {
    throw ParseError("polytope needs a nonempty \"vertices\" array");
  }
  const auto dim = doc["dim"].get<std::size_t>();
  std::vector<Point> pts;
  for (const json& v : doc["vertices"]) {
    Point p = RationalsFromJson(v, "vertex");
    if (p.size() != dim) {
      throw ParseError("vertex " + v.dump() + " does not have " +
                       std::to_string(dim) + " coordinates");
    }
    pts.push_back(std::move(p));
  }
  return Body(dim, std::move(pts));
}

}  // namespace

Seq ParseSequence(std::string_view json_text) {
  std::vector<Rat> coeffs = RationalsFromJson(Parse(json_text), "sequence");
  if (coeffs.empty()) throw ParseError("sequence must be nonempty");
  return Seq(std::move(coeffs));
}

std::string SequenceToJson(const Seq& seq) {
  return ToJson(seq.coeffs()).dump();
}

Body ParseBody(std::string_view json_text) {
  return BodyFromJson(Parse(json_text));
}

std::string BodyToJson(const Body& body) { return BodyJson(body).dump(); }

std::string RealizationToJson(const Seq& sequence,
                              const Realization& realization) {
  const BodyPair bodies = realization.bodies();
  json doc{{"n", realization.n()},
           {"lambda", ToJson(realization.lambda())},
           {"proportionality", ToString(realization.proportionality())},
           {"sequence", ToJson(sequence.coeffs())},
           {"P", BodyJson(bodies.p)},
           {"Q", BodyJson(bodies.q)}};
  return doc.dump();
}

Realization ParseRealization(std::string_view json_text) {
  const json doc = Parse(json_text);
  if (!doc.is_object() || !doc.contains("lambda") ||
      !doc.contains("proportionality")) {
    throw ParseError(
        "realization needs \"lambda\" and \"proportionality\" fields");
  }
  try {
    return Realization(RationalsFromJson(doc["lambda"], "lambda"),
                       RationalFromJson(doc["proportionality"]));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid realization: ") + e.what());
  }
}

std::string ReportToJson(const ViolationReport& report) {
  json doc{{"holds", report.holds},
           {"kind", std::string(ToString(report.kind))}};
  if (report.index) doc["index"] = *report.index;
  if (report.lhs) doc["lhs"] = ToString(*report.lhs);
  if (report.rhs) doc["rhs"] = ToString(*report.rhs);
  return doc.dump();
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw ParseError("cannot read " + path.string());
  return text;
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text << '\n';
  if (!out) throw ParseError("cannot write " + path.string());
}

Seq LoadSequence(const std::filesystem::path& path) {
  try {
    return ParseSequence(ReadTextFile(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Body LoadBody(const std::filesystem::path& path) {
  try {
    return ParseBody(ReadTextFile(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace ulc
