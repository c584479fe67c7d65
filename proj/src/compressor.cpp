#include "quartet/compressor.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>

#include "quartet/errors.hpp"

namespace quartet {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

std::uint32_t get_u32(const std::uint8_t* p) {
  return (static_cast<std::uint32_t>(p[0]) << 24) | (static_cast<std::uint32_t>(p[1]) << 16) |
         (static_cast<std::uint32_t>(p[2]) << 8) | static_cast<std::uint32_t>(p[3]);
}

// ---------------------------------------------------------------------------
// deflate family (zlib)

class DeflateCompressor final : public Compressor {
 public:
  const std::string& name() const override {
    static const std::string n = "deflate";
    return n;
  }

  std::vector<std::uint8_t> compress(const std::vector<std::uint8_t>& data) const override {
    uLongf bound = compressBound(static_cast<uLong>(data.size()));
    std::vector<std::uint8_t> out;
    out.reserve(bound + 4);
    put_u32(out, static_cast<std::uint32_t>(data.size()));
    out.resize(4 + bound);
    if (compress2(out.data() + 4, &bound, data.data(), static_cast<uLong>(data.size()),
                  Z_BEST_COMPRESSION) != Z_OK)
      throw input_error("deflate compression failed");
    out.resize(4 + bound);
    return out;
  }

  std::vector<std::uint8_t> decompress(const std::vector<std::uint8_t>& stream) const override {
    if (stream.size() < 4) throw input_error("truncated deflate stream");
    uLongf raw_len = get_u32(stream.data());
    std::vector<std::uint8_t> out(raw_len);
    if (uncompress(out.data(), &raw_len, stream.data() + 4,
                   static_cast<uLong>(stream.size() - 4)) != Z_OK ||
        raw_len != out.size())
      throw input_error("corrupt deflate stream");
    return out;
  }
};

// ---------------------------------------------------------------------------
// block-sorting family: BWT + MTF + zero-RLE + adaptive range coder

// Suffix array of data plus a virtual past-the-end sentinel smaller than
// every byte, by prefix doubling. Returned array has data.size()+1 entries;
// entry value data.size() is the sentinel position.
std::vector<std::uint32_t> suffix_array(const std::uint8_t* data, std::size_t len) {
  const std::size_t n = len + 1;
  std::vector<std::uint32_t> sa(n), tmp(n);
  std::vector<std::int32_t> rank(n), next_rank(n);
  for (std::size_t i = 0; i < len; ++i) rank[i] = static_cast<std::int32_t>(data[i]) + 1;
  rank[len] = 0;
  std::iota(sa.begin(), sa.end(), 0u);
  for (std::size_t k = 1;; k <<= 1) {
    auto key = [&](std::uint32_t i) {
      const std::int32_t second = i + k < n ? rank[i + k] : -1;
      return std::pair<std::int32_t, std::int32_t>(rank[i], second);
    };
    std::sort(sa.begin(), sa.end(), [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
    next_rank[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i)
      next_rank[sa[i]] = next_rank[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]) ? 1 : 0);
    rank.swap(next_rank);
    if (rank[sa[n - 1]] == static_cast<std::int32_t>(n - 1)) break;
  }
  return sa;
}

// Forward transform: BWT column with the sentinel dropped, plus the row
// index where it sat.
std::pair<std::vector<std::uint8_t>, std::uint32_t> bwt_forward(const std::uint8_t* data,
                                                                std::size_t len) {
  const auto sa = suffix_array(data, len);
  std::vector<std::uint8_t> out;
  out.reserve(len);
  std::uint32_t primary = 0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i] == 0) {
      primary = static_cast<std::uint32_t>(i);  // sentinel precedes data[0]
      continue;
    }
    out.push_back(data[sa[i] - 1]);
  }
  return {std::move(out), primary};
}

std::vector<std::uint8_t> bwt_inverse(const std::vector<std::uint8_t>& bwt, std::uint32_t primary) {
  const std::size_t n = bwt.size() + 1;  // with sentinel
  if (primary >= n) throw input_error("corrupt block stream: bad primary index");
  // Symbol at BWT row i: sentinel at `primary`, else bwt with that gap closed.
  auto row_byte = [&](std::size_t i) { return bwt[i < primary ? i : i - 1]; };
  std::array<std::uint32_t, 256> count{};
  for (std::uint8_t b : bwt) ++count[b];
  std::array<std::uint32_t, 256> before{};  // symbols smaller than b, sentinel included
  std::uint32_t acc = 1;
  for (int b = 0; b < 256; ++b) {
    before[b] = acc;
    acc += count[b];
  }
  std::vector<std::uint32_t> lf(n);
  std::array<std::uint32_t, 256> seen{};
  for (std::size_t i = 0; i < n; ++i) {
    if (i == primary) {
      lf[i] = 0;
      continue;
    }
    const std::uint8_t b = row_byte(i);
    lf[i] = before[b] + seen[b]++;
  }
  std::vector<std::uint8_t> out(bwt.size());
  std::size_t row = 0;  // the rotation starting with the sentinel
  for (std::size_t k = bwt.size(); k-- > 0;) {
    out[k] = row_byte(row);
    row = lf[row];
  }
  return out;
}

void mtf_encode(std::vector<std::uint8_t>& data) {
  std::array<std::uint8_t, 256> order;
  std::iota(order.begin(), order.end(), 0);
  for (auto& b : data) {
    int idx = 0;
    while (order[static_cast<std::size_t>(idx)] != b) ++idx;
    std::memmove(order.data() + 1, order.data(), static_cast<std::size_t>(idx));
    order[0] = b;
    b = static_cast<std::uint8_t>(idx);
  }
}

void mtf_decode(std::vector<std::uint8_t>& data) {
  std::array<std::uint8_t, 256> order;
  std::iota(order.begin(), order.end(), 0);
  for (auto& b : data) {
    const std::uint8_t sym = order[b];
    std::memmove(order.data() + 1, order.data(), b);
    order[0] = sym;
    b = sym;
  }
}

// RLE alphabet: run digits for MTF zeros, then the 255 nonzero MTF values,
// then end-of-block.
constexpr std::uint32_t kRunA = 0, kRunB = 1, kEob = 257, kSymbols = 258;

// Zero runs in bijective base 2 over {RUNA=1, RUNB=2}: L = sum d_i * 2^i.
void emit_run(std::vector<std::uint16_t>& out, std::size_t run) {
  while (run > 0) {
    const std::size_t digit = (run - 1) % 2 + 1;
    out.push_back(digit == 1 ? kRunA : kRunB);
    run = (run - digit) / 2;
  }
}

std::vector<std::uint16_t> rle_encode(const std::vector<std::uint8_t>& mtf) {
  std::vector<std::uint16_t> out;
  out.reserve(mtf.size() / 2 + 16);
  std::size_t run = 0;
  for (std::uint8_t b : mtf) {
    if (b == 0) {
      ++run;
      continue;
    }
    emit_run(out, run);
    run = 0;
    out.push_back(static_cast<std::uint16_t>(b + 1));
  }
  emit_run(out, run);
  out.push_back(kEob);
  return out;
}

// Carryless range coder (Subbotin variant); total frequency stays below
// kBot so the range never underflows.
constexpr std::uint32_t kTop = 1u << 24, kBot = 1u << 16;

class RangeEncoder {
 public:
  explicit RangeEncoder(std::vector<std::uint8_t>& out) : out_(out) {}

  void encode(std::uint32_t cum, std::uint32_t freq, std::uint32_t total) {
    range_ /= total;
    low_ += cum * range_;
    range_ *= freq;
    while ((low_ ^ (low_ + range_)) < kTop || (range_ < kBot && ((range_ = -low_ & (kBot - 1)), true))) {
      out_.push_back(static_cast<std::uint8_t>(low_ >> 24));
      low_ <<= 8;
      range_ <<= 8;
    }
  }

  void flush() {
    for (int i = 0; i < 4; ++i) {
      out_.push_back(static_cast<std::uint8_t>(low_ >> 24));
      low_ <<= 8;
    }
  }

 private:
  std::vector<std::uint8_t>& out_;
  std::uint32_t low_ = 0;
  std::uint32_t range_ = 0xFFFFFFFFu;
};

class RangeDecoder {
 public:
  RangeDecoder(const std::uint8_t* data, std::size_t len) : p_(data), end_(data + len) {
    for (int i = 0; i < 4; ++i) code_ = (code_ << 8) | next_byte();
  }

  std::uint32_t decode_freq(std::uint32_t total) {
    range_ /= total;
    return (code_ - low_) / range_;
  }

  void decode_update(std::uint32_t cum, std::uint32_t freq) {
    low_ += cum * range_;
    range_ *= freq;
    while ((low_ ^ (low_ + range_)) < kTop || (range_ < kBot && ((range_ = -low_ & (kBot - 1)), true))) {
      code_ = (code_ << 8) | next_byte();
      low_ <<= 8;
      range_ <<= 8;
    }
  }

  std::size_t consumed(const std::uint8_t* base) const { return static_cast<std::size_t>(p_ - base); }

 private:
  std::uint8_t next_byte() { return p_ < end_ ? *p_++ : 0; }

  const std::uint8_t* p_;
  const std::uint8_t* end_;
  std::uint32_t low_ = 0;
  std::uint32_t range_ = 0xFFFFFFFFu;
  std::uint32_t code_ = 0;
};

// Adaptive order-0 frequencies, rescaled to keep the total under kBot.
class AdaptiveModel {
 public:
  AdaptiveModel() { freq_.fill(1); }

  std::uint32_t total() const { return total_; }

  std::pair<std::uint32_t, std::uint32_t> lookup(std::uint32_t sym) const {
    std::uint32_t cum = 0;
    for (std::uint32_t s = 0; s < sym; ++s) cum += freq_[s];
    return {cum, freq_[sym]};
  }

  std::uint32_t find(std::uint32_t scaled, std::uint32_t* cum_out, std::uint32_t* freq_out) const {
    std::uint32_t cum = 0, sym = 0;
    while (cum + freq_[sym] <= scaled && sym + 1 < kSymbols) cum += freq_[sym++];
    *cum_out = cum;
    *freq_out = freq_[sym];
    return sym;
  }

  void update(std::uint32_t sym) {
    freq_[sym] += 24;
    total_ += 24;
    if (total_ >= kBot - kSymbols) {
      total_ = 0;
      for (auto& f : freq_) {
        f = (f + 1) / 2;
        total_ += f;
      }
    }
  }

 private:
  std::array<std::uint32_t, kSymbols> freq_;
  std::uint32_t total_ = kSymbols;
};

class BwtCompressor final : public Compressor {
 public:
  explicit BwtCompressor(std::size_t block_size) : block_size_(block_size) {
    if (block_size_ < 16) throw input_error("block size too small");
  }

  const std::string& name() const override {
    static const std::string n = "bwt";
    return n;
  }

  std::vector<std::uint8_t> compress(const std::vector<std::uint8_t>& data) const override {
    std::vector<std::uint8_t> out;
    std::size_t off = 0;
    do {
      const std::size_t len = std::min(block_size_, data.size() - off);
      compress_block(data.data() + off, len, out);
      off += len;
    } while (off < data.size());
    return out;
  }

  std::vector<std::uint8_t> decompress(const std::vector<std::uint8_t>& stream) const override {
    std::vector<std::uint8_t> out;
    std::size_t off = 0;
    while (off < stream.size()) off += decompress_block(stream, off, out);
    return out;
  }

 private:
  static void compress_block(const std::uint8_t* data, std::size_t len,
                             std::vector<std::uint8_t>& out) {
    auto [column, primary] = bwt_forward(data, len);
    mtf_encode(column);
    const auto symbols = rle_encode(column);

    put_u32(out, static_cast<std::uint32_t>(len));
    put_u32(out, primary);
    const std::size_t coded_len_at = out.size();
    put_u32(out, 0);  // patched below

    RangeEncoder enc(out);
    AdaptiveModel model;
    for (std::uint32_t sym : symbols) {
      const auto [cum, freq] = model.lookup(sym);
      enc.encode(cum, freq, model.total());
      model.update(sym);
    }
    enc.flush();
    const std::uint32_t coded = static_cast<std::uint32_t>(out.size() - coded_len_at - 4);
    out[coded_len_at] = static_cast<std::uint8_t>(coded >> 24);
    out[coded_len_at + 1] = static_cast<std::uint8_t>(coded >> 16);
    out[coded_len_at + 2] = static_cast<std::uint8_t>(coded >> 8);
    out[coded_len_at + 3] = static_cast<std::uint8_t>(coded);
  }

  static std::size_t decompress_block(const std::vector<std::uint8_t>& stream, std::size_t off,
                                      std::vector<std::uint8_t>& out) {
    if (stream.size() - off < 12) throw input_error("truncated block stream");
    const std::uint32_t raw_len = get_u32(stream.data() + off);
    const std::uint32_t primary = get_u32(stream.data() + off + 4);
    const std::uint32_t coded_len = get_u32(stream.data() + off + 8);
    if (stream.size() - off - 12 < coded_len) throw input_error("truncated block stream");

    RangeDecoder dec(stream.data() + off + 12, coded_len);
    AdaptiveModel model;
    std::vector<std::uint8_t> mtf;
    mtf.reserve(raw_len);
    std::size_t run = 0, run_weight = 1;
    for (;;) {
      std::uint32_t cum, freq;
      const std::uint32_t sym = model.find(dec.decode_freq(model.total()), &cum, &freq);
      dec.decode_update(cum, freq);
      model.update(sym);
      if (sym == kRunA || sym == kRunB) {
        run += (sym == kRunA ? 1 : 2) * run_weight;
        run_weight <<= 1;
        if (run > raw_len) throw input_error("corrupt block stream: run overflow");
        continue;
      }
      if (mtf.size() + run > raw_len && sym != kEob)
        throw input_error("corrupt block stream: length overflow");
      mtf.insert(mtf.end(), run, 0);
      run = 0;
      run_weight = 1;
      if (sym == kEob) break;
      mtf.push_back(static_cast<std::uint8_t>(sym - 1));
    }
    if (mtf.size() != raw_len) throw input_error("corrupt block stream: length mismatch");
    mtf_decode(mtf);
    auto block = bwt_inverse(mtf, primary);
    out.insert(out.end(), block.begin(), block.end());
    return 12 + static_cast<std::size_t>(coded_len);
  }

  std::size_t block_size_;
};

}  // namespace

std::unique_ptr<Compressor> make_deflate_compressor() {
  return std::make_unique<DeflateCompressor>();
}

std::unique_ptr<Compressor> make_bwt_compressor(std::size_t block_size) {
  return std::make_unique<BwtCompressor>(block_size);
}

std::unique_ptr<Compressor> make_compressor(const std::string& name) {
  if (name == "deflate") return make_deflate_compressor();
  if (name == "bwt") return make_bwt_compressor();
  throw input_error("unknown compressor: " + name + " (expected deflate or bwt)");
}

}  // namespace quartet
