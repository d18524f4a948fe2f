#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plab/amcore/hash.hpp"

namespace plab::am {

using Bytes = std::vector<std::uint8_t>;

class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u32(std::uint32_t v);
  void u64v(u64 v);
  void bits(const BitString& s);
  void challenge(const Challenge& c);
  const Bytes& bytes() const { return buf_; }
  Bytes take() { return std::move(buf_); }

 private:
  Bytes buf_;
};

// throws UsageError on truncated input
class ByteReader {
 public:
  explicit ByteReader(const Bytes& b) : b_(b) {}
  std::uint8_t u8();
  std::uint32_t u32();
  u64 u64v();
  BitString bits();
  Challenge challenge();
  bool done() const { return pos_ == b_.size(); }

 private:
  void need(std::size_t k) const;
  const Bytes& b_;
  std::size_t pos_ = 0;
};

struct Round {
  std::string speaker;  // "arthur" or "merlin"
  Bytes payload;
};

// Line-delimited text form:
//   plab-transcript 1
//   protocol <name>
//   seed <u64>
//   rounds-per-rep <k>
//   <index> <speaker> <hex payload or ->
//   verdict accept|reject
struct Transcript {
  std::string protocol;
  u64 seed = 0;
  unsigned rounds_per_rep = 2;
  std::vector<Round> rounds;
  bool accept = false;

  std::string serialize() const;
  static Transcript parse(const std::string& text);
};

std::string to_hex(const Bytes& b);
Bytes from_hex(const std::string& s);

}  // namespace plab::am
