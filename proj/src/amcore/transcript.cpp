#include "plab/amcore/transcript.hpp"

#include <sstream>

#include "plab/arith/errors.hpp"

namespace plab::am {

void ByteWriter::u32(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::u64v(u64 v) {
  for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::bits(const BitString& s) {
  u32(static_cast<std::uint32_t>(s.n));
  for (u64 w : s.w) u64v(w);
}

void ByteWriter::challenge(const Challenge& c) {
  u32(static_cast<std::uint32_t>(c.h.n));
  u32(c.h.out);
  u64v(c.h.b);
  u64v(c.u);
  u64v(c.tau);
  for (auto& r : c.h.rows)
    for (u64 w : r.w) u64v(w);
}

void ByteReader::need(std::size_t k) const {
  if (pos_ + k > b_.size()) throw UsageError("truncated message");
}

std::uint8_t ByteReader::u8() {
  need(1);
  return b_[pos_++];
}

std::uint32_t ByteReader::u32() {
  need(4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b_[pos_++]) << (8 * i);
  return v;
}

u64 ByteReader::u64v() {
  need(8);
  u64 v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<u64>(b_[pos_++]) << (8 * i);
  return v;
}

BitString ByteReader::bits() {
  std::size_t n = u32();
  if (n > (std::size_t{1} << 24)) throw UsageError("bit string too long");
  BitString s(n);
  for (auto& w : s.w) w = u64v();
  if (n % 64 && !s.w.empty() && (s.w.back() >> (n % 64)) != 0) throw UsageError("bit string has stray bits");
  return s;
}

Challenge ByteReader::challenge() {
  Challenge c;
  c.h.n = u32();
  c.h.out = u32();
  if (c.h.out == 0 || c.h.out > 62 || c.h.n > (std::size_t{1} << 24)) throw UsageError("malformed challenge");
  c.h.b = u64v();
  c.u = u64v();
  c.tau = u64v();
  for (unsigned i = 0; i < c.h.out; ++i) {
    BitString r(c.h.n);
    for (auto& w : r.w) w = u64v();
    c.h.rows.push_back(std::move(r));
  }
  return c;
}

std::string to_hex(const Bytes& b) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(2 * b.size());
  for (auto v : b) {
    s.push_back(digits[v >> 4]);
    s.push_back(digits[v & 15]);
  }
  return s;
}

Bytes from_hex(const std::string& s) {
  if (s.size() % 2) throw UsageError("odd-length hex payload");
  auto val = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw UsageError(std::string("bad hex digit '") + c + "'");
  };
  Bytes b;
  for (std::size_t i = 0; i < s.size(); i += 2) b.push_back(static_cast<std::uint8_t>(val(s[i]) * 16 + val(s[i + 1])));
  return b;
}

std::string Transcript::serialize() const {
  std::ostringstream os;
  os << "plab-transcript 1\n";
  os << "protocol " << protocol << "\n";
  os << "seed " << seed << "\n";
  os << "rounds-per-rep " << rounds_per_rep << "\n";
  for (std::size_t i = 0; i < rounds.size(); ++i)
    os << i << " " << rounds[i].speaker << " " << (rounds[i].payload.empty() ? "-" : to_hex(rounds[i].payload)) << "\n";
  os << "verdict " << (accept ? "accept" : "reject") << "\n";
  return os.str();
}

Transcript Transcript::parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  Transcript t;
  std::size_t lineno = 0;
  bool saw_verdict = false;
  auto fail = [&](const std::string& msg) { throw UsageError("transcript line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string a, b, c;
    ls >> a >> b;
    if (lineno == 1) {
      if (a != "plab-transcript" || b != "1") fail("missing header");
      continue;
    }
    if (a == "protocol") {
      t.protocol = b;
    } else if (a == "seed") {
      t.seed = std::stoull(b);
    } else if (a == "rounds-per-rep") {
      t.rounds_per_rep = static_cast<unsigned>(std::stoul(b));
    } else if (a == "verdict") {
      if (b != "accept" && b != "reject") fail("bad verdict");
      t.accept = b == "accept";
      saw_verdict = true;
    } else {
      ls >> c;
      if (std::stoull(a) != t.rounds.size()) fail("round index out of order");
      if (b != "arthur" && b != "merlin") fail("unknown speaker");
      t.rounds.push_back({b, c == "-" ? Bytes{} : from_hex(c)});
    }
  }
  if (!saw_verdict) throw UsageError("transcript has no verdict");
  return t;
}

}  // namespace plab::am
