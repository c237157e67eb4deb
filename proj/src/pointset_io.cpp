// Copyright 2026 The Multiplicity Authors.
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

#include "multiplicity/pointset_io.hpp"

#include <fstream>

#include "multiplicity/errors.hpp"

namespace multiplicity {

namespace {

Rational coordinate(const nlohmann::json& value, const char* name) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long long>());
  throw InvalidInput(std::string("coordinate ") + name +
                     " must be a rational string \"p/q\" or an integer");
}

}  // namespace

nlohmann::json pointset_to_json(const PointSet& ps) {
  nlohmann::json doc;
  if (!ps.is_exact()) {
    doc["mode"] = "convex";
    doc["n"] = ps.size();
    return doc;
  }
  doc["mode"] = "exact";
  auto points = nlohmann::json::array();
  for (const Point& p : ps.points())
    points.push_back({{"x", format_rational(p.x)}, {"y", format_rational(p.y)}});
  doc["points"] = std::move(points);
  return doc;
}

PointSet pointset_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("mode") || !doc["mode"].is_string())
    throw InvalidInput("point set JSON needs a string \"mode\"");
  const std::string mode = doc["mode"].get<std::string>();
  if (mode == "convex") {
    if (!doc.contains("n") || !doc["n"].is_number_integer())
      throw InvalidInput("convex point set needs an integer \"n\"");
    const long long n = doc["n"].get<long long>();
    if (n < 0 || n > 1'000'000) throw InvalidInput("convex point set size out of range");
    return PointSet::abstract_convex(static_cast<int>(n));
  }
  if (mode != "exact") throw InvalidInput("unknown point set mode \"" + mode + "\"");
  if (!doc.contains("points") || !doc["points"].is_array())
    throw InvalidInput("exact point set needs a \"points\" array");
  std::vector<Point> points;
  for (const auto& item : doc["points"]) {
    if (!item.is_object() || !item.contains("x") || !item.contains("y"))
      throw InvalidInput("each point needs \"x\" and \"y\"");
    points.push_back({coordinate(item["x"], "x"), coordinate(item["y"], "y")});
  }
  return PointSet::exact(std::move(points));
}

PointSet load_pointset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  return pointset_from_json(doc);
}

}  // namespace multiplicity
