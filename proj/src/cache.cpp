#include "addchain/cache.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace addchain {

namespace {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

std::string LengthCache::format_line(std::uint64_t n, int length,
                                     const std::vector<std::uint64_t>& terms) {
  std::ostringstream body;
  body << n << '\t' << length << '\t';
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) body << ',';
    body << terms[i];
  }
  std::string s = body.str();
  return s + '\t' + hex64(fnv1a64(s)) + '\n';
}

std::optional<CacheEntry> LengthCache::parse_line(const std::string& line) {
  const auto t3 = line.rfind('\t');
  if (t3 == std::string::npos) return std::nullopt;
  const std::string_view body(line.data(), t3);
  const std::string_view sum(line.data() + t3 + 1, line.size() - t3 - 1);
  if (sum != std::string_view(hex64(fnv1a64(body)))) return std::nullopt;

  const auto t1 = body.find('\t');
  if (t1 == std::string_view::npos) return std::nullopt;
  const auto t2 = body.find('\t', t1 + 1);
  if (t2 == std::string_view::npos) return std::nullopt;

  CacheEntry entry;
  std::uint64_t length = 0;
  if (!parse_u64(body.substr(0, t1), entry.n)) return std::nullopt;
  if (!parse_u64(body.substr(t1 + 1, t2 - t1 - 1), length) || length > 1u << 20)
    return std::nullopt;
  entry.length = static_cast<int>(length);

  std::string_view terms = body.substr(t2 + 1);
  while (!terms.empty()) {
    const auto comma = terms.find(',');
    const std::string_view tok = terms.substr(0, comma);
    std::uint64_t value = 0;
    if (!parse_u64(tok, value)) return std::nullopt;
    entry.witness_terms.push_back(value);
    if (comma == std::string_view::npos) break;
    terms.remove_prefix(comma + 1);
  }
  if (entry.witness_terms.empty()) return std::nullopt;
  return entry;
}

LengthCache::LengthCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // fresh cache
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (auto entry = parse_line(line)) {
      entries_[entry->n] = std::move(*entry);
    } else {
      ++corrupt_;
    }
  }
}

std::size_t LengthCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::optional<CacheEntry> LengthCache::get(std::uint64_t n) const {
  std::lock_guard lock(mutex_);
  const auto it = entries_.find(n);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void LengthCache::put(std::uint64_t n, int length, const AdditionChain& witness) {
  const std::string line = format_line(n, length, witness.terms());
  std::lock_guard lock(mutex_);
  auto& slot = entries_[n];
  slot = CacheEntry{n, length, witness.terms()};
  std::ofstream out(path_, std::ios::app | std::ios::binary);
  out.write(line.data(), static_cast<std::streamsize>(line.size()));
  out.flush();
}

}  // namespace addchain
