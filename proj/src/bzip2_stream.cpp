// Copyright 2026 The Wikinames Authors
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

#include "wikinames/bzip2_stream.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <vector>

#include "wikinames/errors.hpp"

namespace wikinames {
namespace {

constexpr std::uint64_t kBlockMagic = 0x314159265359ULL;
constexpr std::uint64_t kEosMagic = 0x177245385090ULL;
constexpr int kMaxGroups = 6;
constexpr int kMaxAlpha = 258;
constexpr int kMaxCodeLen = 20;
// 2 + 900000 / 50, the most selectors a maximal block can need.
constexpr int kMaxSelectors = 18002;

// CRC32 with polynomial 0x04C11DB7, MSB-first (the bzip2 variant, which
// shifts bits in the opposite direction from the zlib CRC).
struct CrcTable {
  std::array<std::uint32_t, 256> t{};
  constexpr CrcTable() {
    for (std::uint32_t i = 0; i < 256; ++i) {
      std::uint32_t c = i << 24;
      for (int k = 0; k < 8; ++k) {
        c = (c << 1) ^ ((c & 0x80000000U) != 0 ? 0x04C11DB7U : 0U);
      }
      t[i] = c;
    }
  }
};
constexpr CrcTable kCrc;

inline std::uint32_t crc_update(std::uint32_t crc, std::uint8_t byte) {
  return (crc << 8) ^ kCrc.t[(crc >> 24) ^ byte];
}

class BitReader {
 public:
  explicit BitReader(ByteSource* src) : src_(src) {}

  // Reads `n` (1..32) bits, most significant first.
  std::uint32_t bits(int n) {
    while (nbits_ < n) {
      if (pos_ == len_) {
        len_ = src_->read(reinterpret_cast<char*>(buf_.data()), buf_.size());
        pos_ = 0;
        if (len_ == 0) throw DataError("bzip2: truncated stream");
      }
      acc_ = (acc_ << 8) | buf_[pos_++];
      nbits_ += 8;
    }
    nbits_ -= n;
    return static_cast<std::uint32_t>(acc_ >> nbits_) &
           (n == 32 ? 0xFFFFFFFFU : ((1U << n) - 1U));
  }

  std::uint32_t bit() { return bits(1); }

  // Drops any partial byte, then reports whether the input is exhausted.
  // Used between concatenated streams, which are byte-aligned.
  bool at_end() {
    nbits_ -= nbits_ % 8;
    if (nbits_ > 0) return false;
    if (pos_ < len_) return false;
    len_ = src_->read(reinterpret_cast<char*>(buf_.data()), buf_.size());
    pos_ = 0;
    return len_ == 0;
  }

 private:
  ByteSource* src_;
  std::array<std::uint8_t, 65536> buf_;
  std::size_t pos_ = 0;
  std::size_t len_ = 0;
  std::uint64_t acc_ = 0;
  int nbits_ = 0;
};

// Canonical Huffman decoding tables in the limit/base/perm form: `perm`
// lists symbols ordered by (length, symbol), `limit[len]` is the largest
// code of that length, and `base[len]` offsets codes into `perm`.
struct HuffTable {
  std::array<std::int32_t, kMaxCodeLen + 2> limit{};
  std::array<std::int32_t, kMaxCodeLen + 2> base{};
  std::array<std::int32_t, kMaxAlpha> perm{};
  int min_len = 0;
  int max_len = 0;
  int n_symbols = 0;

  void build(const std::uint8_t* lengths, int alpha_size) {
    n_symbols = alpha_size;
    min_len = kMaxCodeLen;
    max_len = 1;
    for (int i = 0; i < alpha_size; ++i) {
      if (lengths[i] > max_len) max_len = lengths[i];
      if (lengths[i] < min_len) min_len = lengths[i];
    }
    int pp = 0;
    for (int len = min_len; len <= max_len; ++len) {
      for (int i = 0; i < alpha_size; ++i) {
        if (lengths[i] == len) perm[pp++] = i;
      }
    }
    std::array<std::int32_t, kMaxCodeLen + 2> count{};
    for (int i = 0; i < alpha_size; ++i) count[lengths[i] + 1]++;
    for (int i = 1; i <= kMaxCodeLen + 1; ++i) count[i] += count[i - 1];
    std::int32_t vec = 0;
    limit.fill(0);
    base.fill(0);
    for (int len = min_len; len <= max_len; ++len) {
      vec += count[len + 1] - count[len];
      limit[len] = vec - 1;
      vec <<= 1;
    }
    // base[len] starts as the count of symbols shorter than len, so the
    // perm index below is simply code - base[len].
    for (int len = min_len + 1; len <= max_len; ++len) {
      base[len] = ((limit[len - 1] + 1) << 1) - count[len];
    }
  }

  int decode(BitReader& br) const {
    int len = min_len;
    std::int32_t code = static_cast<std::int32_t>(br.bits(len));
    while (true) {
      if (len > max_len) throw DataError("bzip2: invalid Huffman code");
      if (code <= limit[len]) break;
      code = (code << 1) | static_cast<std::int32_t>(br.bit());
      ++len;
    }
    const std::int32_t idx = code - base[len];
    if (idx < 0 || idx >= n_symbols) throw DataError("bzip2: invalid Huffman code");
    return perm[idx];
  }
};

}  // namespace

struct Bzip2Source::Impl {
  explicit Impl(std::unique_ptr<ByteSource> input)
      : src(std::move(input)), br(src.get()) {}

  std::unique_ptr<ByteSource> src;
  BitReader br;

  int block_limit = 0;  // 100000 * level from the stream header
  bool header_seen = false;
  bool finished = false;
  std::uint32_t stream_crc = 0;

  // Decoded block (pre-RLE1) and inverse-BWT scratch.
  std::vector<std::uint8_t> bwt;
  std::vector<std::uint32_t> lf;
  std::vector<std::uint8_t> decoded;
  std::size_t pos = 0;  // cursor into decoded
  bool block_active = false;
  std::uint32_t block_crc_stored = 0;
  std::uint32_t block_crc = 0;

  // RLE1 expansion state.
  int run_char = -1;
  int run_len = 0;
  int copies_left = 0;

  void read_stream_header() {
    const std::uint32_t b0 = br.bits(8), b1 = br.bits(8), b2 = br.bits(8);
    const std::uint32_t level = br.bits(8);
    if (b0 != 'B' || b1 != 'Z' || b2 != 'h' || level < '1' || level > '9') {
      throw DataError("bzip2: bad stream header");
    }
    block_limit = 100000 * static_cast<int>(level - '0');
    stream_crc = 0;
    header_seen = true;
  }

  // Advances to the next block, the next concatenated stream, or EOF.
  // Returns false once all input is consumed.
  bool next_block() {
    while (true) {
      if (finished) return false;
      if (!header_seen) read_stream_header();
      const std::uint64_t magic =
          (static_cast<std::uint64_t>(br.bits(24)) << 24) | br.bits(24);
      if (magic == kBlockMagic) {
        decode_block();
        return true;
      }
      if (magic != kEosMagic) throw DataError("bzip2: bad block magic");
      const std::uint32_t stored = br.bits(32);
      if (stored != stream_crc) throw DataError("bzip2: stream CRC mismatch");
      header_seen = false;
      if (br.at_end()) {
        finished = true;
        return false;
      }
      // More bytes follow: another stream header is required.
    }
  }

  void decode_block() {
    block_crc_stored = br.bits(32);
    if (br.bit() != 0) {
      throw DataError("bzip2: randomized blocks are not supported");
    }
    const std::uint32_t orig_ptr = br.bits(24);

    // Symbol map: 16 coarse bits, then 16 fine bits per set coarse bit.
    std::array<std::uint8_t, 256> seq_to_byte{};
    int n_used = 0;
    const std::uint32_t coarse = br.bits(16);
    for (int i = 0; i < 16; ++i) {
      if ((coarse & (0x8000U >> i)) == 0) continue;
      const std::uint32_t fine = br.bits(16);
      for (int j = 0; j < 16; ++j) {
        if ((fine & (0x8000U >> j)) != 0) {
          seq_to_byte[n_used++] = static_cast<std::uint8_t>(i * 16 + j);
        }
      }
    }
    if (n_used == 0) throw DataError("bzip2: empty symbol map");
    const int alpha_size = n_used + 2;
    const int eob = alpha_size - 1;

    const int n_groups = static_cast<int>(br.bits(3));
    if (n_groups < 2 || n_groups > kMaxGroups) {
      throw DataError("bzip2: invalid group count");
    }
    const int n_selectors = static_cast<int>(br.bits(15));
    if (n_selectors < 1 || n_selectors > kMaxSelectors) {
      throw DataError("bzip2: invalid selector count");
    }

    // Selectors, MTF-coded over the group ids.
    std::vector<std::uint8_t> selectors(static_cast<std::size_t>(n_selectors));
    {
      std::array<std::uint8_t, kMaxGroups> order{};
      for (int i = 0; i < n_groups; ++i) order[i] = static_cast<std::uint8_t>(i);
      for (int s = 0; s < n_selectors; ++s) {
        int j = 0;
        while (br.bit() != 0) {
          if (++j >= n_groups) throw DataError("bzip2: invalid selector");
        }
        const std::uint8_t g = order[j];
        for (; j > 0; --j) order[j] = order[j - 1];
        order[0] = g;
        selectors[static_cast<std::size_t>(s)] = g;
      }
    }

    // Per-group code lengths, delta-coded from a 5-bit start value.
    std::array<HuffTable, kMaxGroups> tables;
    for (int g = 0; g < n_groups; ++g) {
      std::array<std::uint8_t, kMaxAlpha> lengths{};
      int cur = static_cast<int>(br.bits(5));
      for (int i = 0; i < alpha_size; ++i) {
        while (true) {
          if (cur < 1 || cur > kMaxCodeLen) {
            throw DataError("bzip2: code length out of range");
          }
          if (br.bit() == 0) break;
          cur += br.bit() != 0 ? -1 : 1;
        }
        lengths[i] = static_cast<std::uint8_t>(cur);
      }
      tables[g].build(lengths.data(), alpha_size);
    }

    // MTF + RLE2 decode into the BWT string.
    bwt.clear();
    bwt.reserve(static_cast<std::size_t>(block_limit));
    std::array<std::uint8_t, 256> mtf{};
    for (int i = 0; i < n_used; ++i) mtf[i] = seq_to_byte[i];

    int sel_idx = 0;
    int group_left = 0;
    const HuffTable* table = nullptr;
    std::int64_t run = 0;
    int run_shift = 0;
    auto flush_run = [&] {
      if (run_shift == 0) return;
      if (run > block_limit ||
          bwt.size() + static_cast<std::size_t>(run) >
              static_cast<std::size_t>(block_limit)) {
        throw DataError("bzip2: block overflow");
      }
      bwt.insert(bwt.end(), static_cast<std::size_t>(run), mtf[0]);
      run = 0;
      run_shift = 0;
    };
    while (true) {
      if (group_left == 0) {
        if (sel_idx >= n_selectors) throw DataError("bzip2: selectors exhausted");
        table = &tables[selectors[static_cast<std::size_t>(sel_idx++)]];
        group_left = 50;
      }
      --group_left;
      const int sym = table->decode(br);
      if (sym >= alpha_size) throw DataError("bzip2: symbol out of range");
      if (sym <= 1) {  // RUNA / RUNB: bijective base-2 run length
        if (run_shift > 25) throw DataError("bzip2: run length overflow");
        run += static_cast<std::int64_t>(sym + 1) << run_shift;
        ++run_shift;
        continue;
      }
      flush_run();
      if (sym == eob) break;
      const int idx = sym - 1;
      if (idx >= n_used) throw DataError("bzip2: MTF index out of range");
      const std::uint8_t byte = mtf[idx];
      std::memmove(&mtf[1], &mtf[0], static_cast<std::size_t>(idx));
      mtf[0] = byte;
      if (bwt.size() >= static_cast<std::size_t>(block_limit)) {
        throw DataError("bzip2: block overflow");
      }
      bwt.push_back(byte);
    }

    const std::size_t n = bwt.size();
    if (n == 0 || orig_ptr >= n) throw DataError("bzip2: bad BWT origin");

    // Inverse BWT via the LF mapping, then a backward walk from orig_ptr
    // filling the output right to left.
    std::array<std::uint32_t, 256> base{};
    for (std::uint8_t b : bwt) base[b]++;
    std::uint32_t total = 0;
    for (int i = 0; i < 256; ++i) {
      const std::uint32_t c = base[static_cast<std::size_t>(i)];
      base[static_cast<std::size_t>(i)] = total;
      total += c;
    }
    lf.resize(n);
    {
      std::array<std::uint32_t, 256> seen{};
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t b = bwt[i];
        lf[i] = base[b] + seen[b]++;
      }
    }
    decoded.resize(n);
    std::uint32_t idx = orig_ptr;
    for (std::size_t k = n; k-- > 0;) {
      decoded[k] = bwt[idx];
      idx = lf[idx];
    }

    pos = 0;
    block_active = true;
    block_crc = 0xFFFFFFFFU;
    run_char = -1;
    run_len = 0;
    copies_left = 0;
  }

  void finish_block() {
    block_active = false;
    const std::uint32_t crc = ~block_crc;
    if (crc != block_crc_stored) throw DataError("bzip2: block CRC mismatch");
    stream_crc = ((stream_crc << 1) | (stream_crc >> 31)) ^ crc;
  }

  // Emits up to `size` bytes of the current block through the final RLE1
  // expansion stage. Returns bytes emitted; 0 means the block is done.
  std::size_t emit(char* out, std::size_t size) {
    std::size_t produced = 0;
    while (produced < size) {
      if (copies_left > 0) {
        --copies_left;
        const std::uint8_t b = static_cast<std::uint8_t>(run_char);
        block_crc = crc_update(block_crc, b);
        out[produced++] = static_cast<char>(b);
        continue;
      }
      if (pos == decoded.size()) {
        finish_block();
        break;
      }
      const std::uint8_t b = decoded[pos++];
      if (run_len == 4) {
        // Fifth byte of a run is a repeat count, not literal data.
        copies_left = b;
        run_len = 0;
        continue;
      }
      block_crc = crc_update(block_crc, b);
      out[produced++] = static_cast<char>(b);
      if (static_cast<int>(b) == run_char) {
        ++run_len;
      } else {
        run_char = b;
        run_len = 1;
      }
    }
    return produced;
  }
};

Bzip2Source::Bzip2Source(std::unique_ptr<ByteSource> input)
    : impl_(std::make_unique<Impl>(std::move(input))) {}

Bzip2Source::~Bzip2Source() = default;

std::size_t Bzip2Source::read(char* out, std::size_t size) {
  std::size_t produced = 0;
  while (produced < size) {
    if (!impl_->block_active && !impl_->next_block()) break;
    const std::size_t n = impl_->emit(out + produced, size - produced);
    produced += n;
  }
  return produced;
}

std::string Bzip2Source::decompress(std::string compressed) {
  Bzip2Source src(std::make_unique<MemoryByteSource>(std::move(compressed)));
  std::string out;
  char buf[65536];
  std::size_t n;
  while ((n = src.read(buf, sizeof(buf))) > 0) out.append(buf, n);
  return out;
}

bool looks_like_bzip2(const char* data, std::size_t size) {
  return size >= 4 && data[0] == 'B' && data[1] == 'Z' && data[2] == 'h' &&
         data[3] >= '1' && data[3] <= '9';
}

}  // namespace wikinames
