// Copyright 2026 The mhgr Authors
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

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mhgr/error.hpp"
#include "mhgr/group_io.hpp"

namespace mhgr {

using nlohmann::json;

Group group_from_table_json(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("malformed group table JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("table"))
    throw InvalidArgument("group table JSON needs an object with a \"table\" field");
  std::vector<std::vector<Element>> table;
  try {
    table = doc.at("table").get<std::vector<std::vector<Element>>>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("\"table\" must be an array of integer rows: ") +
                          e.what());
  }
  if (doc.contains("order")) {
    if (!doc["order"].is_number_integer() ||
        doc["order"].get<long long>() != static_cast<long long>(table.size()))
      throw InvalidArgument("\"order\" does not match the number of table rows (" +
                            std::to_string(table.size()) + ")");
  }
  std::vector<std::string> names;
  if (doc.contains("names")) {
    try {
      names = doc["names"].get<std::vector<std::string>>();
    } catch (const json::exception&) {
      throw InvalidArgument("\"names\" must be an array of strings");
    }
  }
  return Group::from_table(std::move(table), std::move(names));
}

Group load_group_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open group table file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return group_from_table_json(ss.str());
}

std::string group_to_table_json(const Group& g) {
  json doc = json::object();
  doc["order"] = g.order();
  doc["table"] = g.table();
  doc["names"] = g.names();
  return doc.dump();
}

}  // namespace mhgr
