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

#include "bitnic/model_io.hpp"

#include <fstream>
#include <string>

#include "bitnic/error.hpp"

namespace bitnic {

namespace {

constexpr char kMagic[4] = {'B', 'N', 'N', '1'};
constexpr uint8_t kVersion = 1;

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v));
  out.push_back(static_cast<uint8_t>(v >> 8));
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

class Reader {
 public:
  explicit Reader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  uint8_t u8() {
    need(1);
    return bytes_[pos_++];
  }
  uint16_t u16() {
    need(2);
    uint16_t v = static_cast<uint16_t>(bytes_[pos_] | (bytes_[pos_ + 1] << 8));
    pos_ += 2;
    return v;
  }
  uint32_t u32() {
    need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= uint32_t{bytes_[pos_ + i]} << (8 * i);
    pos_ += 4;
    return v;
  }
  size_t remaining() const { return bytes_.size() - pos_; }

 private:
  void need(size_t n) {
    if (bytes_.size() - pos_ < n) throw FormatError("model file truncated");
  }
  std::span<const uint8_t> bytes_;
  size_t pos_ = 0;
};

}  // namespace

std::vector<uint8_t> serialize_model(const BnnModel& model) {
  std::vector<uint8_t> out;
  out.insert(out.end(), kMagic, kMagic + 4);
  out.push_back(kVersion);
  out.push_back(static_cast<uint8_t>(model.block_size()));
  if (model.layers().size() > 0xffff) throw FormatError("model has too many layers for BNN1");
  put_u16(out, static_cast<uint16_t>(model.layers().size()));
  for (const BinaryLayer& l : model.layers()) {
    put_u32(out, l.input_bits());
    put_u32(out, l.output_neurons());
  }
  for (const BinaryLayer& l : model.layers()) {
    const size_t words32 = (size_t{l.input_bits()} + 31) / 32;
    for (uint32_t n = 0; n < l.output_neurons(); ++n) {
      const BitVector row = l.row(n);
      for (size_t j = 0; j < words32; ++j)
        put_u32(out, static_cast<uint32_t>(row.word(32, j)));
    }
  }
  return out;
}

BnnModel deserialize_model(std::span<const uint8_t> bytes) {
  Reader r(bytes);
  char magic[4];
  for (char& c : magic) c = static_cast<char>(r.u8());
  if (magic[0] != 'B' || magic[1] != 'N' || magic[2] != 'N' || magic[3] != '1')
    throw FormatError("bad magic: not a BNN1 model file");
  const uint8_t version = r.u8();
  if (version != kVersion)
    throw FormatError("unsupported BNN1 version " + std::to_string(version));
  const uint8_t block_size = r.u8();
  const uint16_t layer_count = r.u16();
  if (layer_count == 0) throw FormatError("model file declares zero layers");

  std::vector<std::pair<uint32_t, uint32_t>> dims(layer_count);
  for (auto& [in, out] : dims) {
    in = r.u32();
    out = r.u32();
    if (in == 0 || out == 0) throw FormatError("model file declares a zero-sized layer");
  }

  std::vector<BinaryLayer> layers;
  layers.reserve(layer_count);
  for (const auto& [in, out] : dims) {
    BinaryLayer layer(in, out);
    const size_t words32 = (size_t{in} + 31) / 32;
    for (uint32_t n = 0; n < out; ++n) {
      BitVector row(in);
      for (size_t j = 0; j < words32; ++j) {
        const uint64_t w = r.u32();
        row.data()[j / 2] |= w << (32 * (j % 2));
      }
      // Padding bits within the final 32-bit word must be zero on disk.
      if (in % 32 != 0) {
        const uint32_t top = in % 64;
        const uint64_t mask = (uint64_t{1} << top) - 1;
        if ((row.data()[row.backing_words() - 1] & ~mask) != 0)
          throw FormatError("model file has nonzero padding bits in a weight row");
      }
      layer.set_row(n, row);
    }
    layers.push_back(std::move(layer));
  }
  if (r.remaining() != 0) throw FormatError("trailing bytes after model payload");

  try {
    return BnnModel(block_size, std::move(layers));
  } catch (const Error& e) {
    throw FormatError(std::string("model file violates invariants: ") + e.what());
  }
}

void save_model(const BnnModel& model, const std::filesystem::path& path) {
  const std::vector<uint8_t> bytes = serialize_model(model);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("short write to " + path.string());
}

BnnModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize_model(bytes);
}

}  // namespace bitnic
