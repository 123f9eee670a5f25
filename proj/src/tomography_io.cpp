// Copyright 2026 The qpd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <istream>
#include <ostream>

#include <json.hpp>

#include "qpd/tomography.hpp"

namespace qpd::tomo {

void write_counts_json(std::ostream& out, const CountsFile& file) {
  nlohmann::ordered_json doc;
  doc["seed"] = file.seed;
  doc["N"] = file.n_per_setting;
  doc["settings"] = nlohmann::ordered_json::array();
  for (const CountRecord& record : file.records) {
    nlohmann::ordered_json entry;
    entry["bases"] = record.setting.label();
    entry["counts"] = record.counts;
    doc["settings"].push_back(std::move(entry));
  }
  out << doc.dump(2) << "\n";
}

CountsFile read_counts_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("counts file: invalid JSON: ") +
                                e.what());
  }
  CountsFile file;
  try {
    file.seed = doc.at("seed").get<std::uint64_t>();
    file.n_per_setting = doc.at("N").get<std::int64_t>();
    for (const auto& entry : doc.at("settings")) {
      CountRecord record;
      record.setting = MeasurementSetting::from_label(
          entry.at("bases").get<std::string>());
      const auto& counts = entry.at("counts");
      if (counts.size() != record.counts.size()) {
        throw std::invalid_argument(
            "counts file: each setting needs 16 counts");
      }
      for (std::size_t i = 0; i < record.counts.size(); ++i) {
        record.counts[i] = counts[i].get<std::int64_t>();
      }
      file.records.push_back(record);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("counts file: bad schema: ") +
                                e.what());
  }
  return file;
}

}  // namespace qpd::tomo
