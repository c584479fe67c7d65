#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace quartet {

// A real, deterministic compressor: identical input gives an identical
// stream, and compressed_size is the full emitted stream length in bytes,
// headers included.
class Compressor {
 public:
  virtual ~Compressor() = default;
  virtual const std::string& name() const = 0;
  virtual std::vector<std::uint8_t> compress(const std::vector<std::uint8_t>& data) const = 0;
  virtual std::vector<std::uint8_t> decompress(const std::vector<std::uint8_t>& stream) const = 0;

  std::size_t compressed_size(const std::vector<std::uint8_t>& data) const {
    return compress(data).size();
  }
};

// Dictionary (deflate) family, backed by zlib at maximum effort. Its 32 KiB
// window is a caveat for inputs beyond that size: repetitions further apart
// go unseen.
std::unique_ptr<Compressor> make_deflate_compressor();

// Block-sorting (bzip2) family: Burrows-Wheeler transform, move-to-front,
// zero run-length coding and an adaptive range coder. Inputs are used whole
// (single block) up to `block_size`; larger inputs are split, which caps how
// far matching content can be from its twin.
std::unique_ptr<Compressor> make_bwt_compressor(std::size_t block_size = 1 << 20);

// Lookup by CLI name: "deflate" or "bwt". Throws input_error otherwise.
std::unique_ptr<Compressor> make_compressor(const std::string& name);

}  // namespace quartet
