/* Copyright 2026-present the bitnic authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "bitnic/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include "bitnic/error.hpp"

namespace bitnic {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    // Trim surrounding whitespace.
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? std::string() : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

uint64_t parse_uint(const std::string& cell, const char* what, size_t line_no) {
  uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size())
    throw DataError(std::string("line ") + std::to_string(line_no) + ": bad " + what + " '" +
                    cell + "'");
  return v;
}

}  // namespace

Dataset load_csv_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset " + path.string());

  std::string line;
  if (!std::getline(in, line)) throw DataError("dataset " + path.string() + " is empty");
  const auto header = split_csv_line(line);
  if (header.size() < 2 || header.back() != "label")
    throw DataError("dataset header must end with a 'label' column");

  Dataset ds;
  ds.feature_count = static_cast<uint32_t>(header.size() - 1);
  uint32_t max_label = 0;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != header.size())
      throw DataError("line " + std::to_string(line_no) + ": expected " +
                      std::to_string(header.size()) + " columns, got " +
                      std::to_string(cells.size()));
    std::vector<uint16_t> row(ds.feature_count);
    for (uint32_t f = 0; f < ds.feature_count; ++f) {
      const uint64_t v = parse_uint(cells[f], "feature value", line_no);
      if (v > 0xffff)
        throw DataError("line " + std::to_string(line_no) + ": feature value " +
                        std::to_string(v) + " exceeds 16 bits");
      row[f] = static_cast<uint16_t>(v);
    }
    const uint64_t label = parse_uint(cells.back(), "label", line_no);
    max_label = std::max<uint32_t>(max_label, static_cast<uint32_t>(label));
    ds.rows.push_back(std::move(row));
    ds.labels.push_back(static_cast<uint32_t>(label));
  }
  if (ds.rows.empty()) throw DataError("dataset " + path.string() + " has no rows");
  ds.class_count = max_label + 1;
  return ds;
}

Dataset select_features(const Dataset& ds, std::span<const uint32_t> indices) {
  for (uint32_t idx : indices) {
    if (idx >= ds.feature_count)
      throw DimensionError("feature index " + std::to_string(idx) + " out of range");
  }
  Dataset out;
  out.feature_count = static_cast<uint32_t>(indices.size());
  out.class_count = ds.class_count;
  out.labels = ds.labels;
  out.rows.reserve(ds.rows.size());
  for (const auto& row : ds.rows) {
    std::vector<uint16_t> sel(indices.size());
    for (size_t i = 0; i < indices.size(); ++i) sel[i] = row[indices[i]];
    out.rows.push_back(std::move(sel));
  }
  return out;
}

std::vector<uint32_t> load_feature_indices(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open feature list " + path.string());
  std::vector<uint32_t> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(static_cast<uint32_t>(
        parse_uint(line.substr(b, e - b + 1), "feature index", line_no)));
  }
  if (out.empty()) throw DataError("feature list " + path.string() + " is empty");
  return out;
}

BitVector encode_features(std::span<const uint16_t> row, unsigned bits_per_feature) {
  if (bits_per_feature == 0 || bits_per_feature > 16)
    throw ConfigError("encode_features: bits_per_feature must be in [1, 16]");
  if (row.empty()) throw DimensionError("encode_features: empty feature row");
  BitVector out(static_cast<uint32_t>(row.size() * bits_per_feature));
  for (size_t f = 0; f < row.size(); ++f) {
    if (bits_per_feature < 16 && row[f] >= (1u << bits_per_feature))
      throw DataError("encode_features: value " + std::to_string(row[f]) +
                      " does not fit " + std::to_string(bits_per_feature) + " bits");
    for (unsigned b = 0; b < bits_per_feature; ++b) {
      const bool bit = (row[f] >> (bits_per_feature - 1 - b)) & 1u;
      if (bit) out.set(static_cast<uint32_t>(f * bits_per_feature + b));
    }
  }
  return out;
}

std::vector<uint32_t> chi2_rank(const Dataset& ds, uint32_t k) {
  if (ds.rows.empty()) throw DataError("chi2_rank: empty dataset");
  if (k > ds.feature_count) throw DimensionError("chi2_rank: k exceeds feature count");
  constexpr uint32_t kBins = 8;
  const size_t n = ds.rows.size();
  const uint32_t classes = ds.class_count;

  std::vector<double> stats(ds.feature_count, 0.0);
  std::vector<double> class_tot(classes, 0.0);
  for (uint32_t label : ds.labels) class_tot[label] += 1.0;

  for (uint32_t f = 0; f < ds.feature_count; ++f) {
    uint16_t lo = 0xffff, hi = 0;
    for (const auto& row : ds.rows) {
      lo = std::min(lo, row[f]);
      hi = std::max(hi, row[f]);
    }
    if (lo == hi) continue;  // constant feature carries no signal; statistic 0

    std::vector<double> observed(size_t{kBins} * classes, 0.0);
    std::vector<double> bin_tot(kBins, 0.0);
    const double width = (static_cast<double>(hi) - lo + 1) / kBins;
    for (size_t i = 0; i < n; ++i) {
      uint32_t bin = static_cast<uint32_t>((ds.rows[i][f] - lo) / width);
      bin = std::min(bin, kBins - 1);
      observed[size_t{bin} * classes + ds.labels[i]] += 1.0;
      bin_tot[bin] += 1.0;
    }
    double chi2 = 0.0;
    for (uint32_t b = 0; b < kBins; ++b) {
      for (uint32_t c = 0; c < classes; ++c) {
        const double expected = bin_tot[b] * class_tot[c] / static_cast<double>(n);
        if (expected > 0.0) {
          const double d = observed[size_t{b} * classes + c] - expected;
          chi2 += d * d / expected;
        }
      }
    }
    stats[f] = chi2;
  }

  std::vector<uint32_t> order(ds.feature_count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](uint32_t a, uint32_t b) { return stats[a] > stats[b]; });
  order.resize(k);
  return order;
}

}  // namespace bitnic
