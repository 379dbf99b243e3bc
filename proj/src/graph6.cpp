#include "graphpt/graph6.hpp"

#include <algorithm>
#include <vector>

namespace graphpt {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;
constexpr int kShortMax = 62;
constexpr long long kLongMax = 258047;  // 4-byte size form

std::string_view trim(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' ||
                           line.back() == '\t')) {
    line.remove_suffix(1);
  }
  return line;
}

size_t body_bytes(long long n) {
  const long long bits = n * (n - 1) / 2;
  return static_cast<size_t>((bits + 5) / 6);
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.empty()) fail(errc::bad_length, "empty line");
  for (char c : line) {
    const int b = static_cast<unsigned char>(c);
    if (b < kBias || b > kMaxByte) {
      fail(errc::non_printable_byte, "byte " + std::to_string(b));
    }
  }

  size_t pos = 0;
  long long n = 0;
  if (line[0] != '~') {
    n = line[0] - kBias;
    pos = 1;
  } else {
    if (line.size() >= 2 && line[1] == '~') {
      fail(errc::bad_length, "8-byte size form not supported");
    }
    if (line.size() < 4) fail(errc::bad_length, "truncated size field");
    n = 0;
    for (size_t i = 1; i <= 3; ++i) n = (n << 6) | (line[i] - kBias);
    if (n <= kShortMax || n > kLongMax) {
      fail(errc::bad_length, "long form with n=" + std::to_string(n));
    }
    pos = 4;
  }
  if (n <= 0) fail(errc::bad_length, "n=" + std::to_string(n));

  if (line.size() - pos != body_bytes(n)) {
    fail(errc::bad_length, "expected " + std::to_string(body_bytes(n)) + " body bytes, got " +
                               std::to_string(line.size() - pos));
  }

  std::vector<Edge> edges;
  int bit_index = 0;
  int current = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bit_index % 6 == 0) current = line[pos + static_cast<size_t>(bit_index / 6)] - kBias;
      const int bit = (current >> (5 - bit_index % 6)) & 1;
      if (bit) edges.emplace_back(i, j);
      ++bit_index;
    }
  }

  try {
    return build_graph(static_cast<int>(n), edges);
  } catch (const Error& e) {
    if (e.code() == errc::disconnected) {
      fail(errc::disconnected_after_parse, e.what());
    }
    throw;
  }
}

std::string encode_graph6(const Graph& g) {
  const long long n = g.order();
  if (n > kLongMax) fail(errc::bad_length, "n=" + std::to_string(n) + " too large for graph6");
  std::string out;
  if (n <= kShortMax) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }

  std::vector<char> body(body_bytes(n), 0);
  int bit_index = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const auto nbrs = g.neighbors(i);
      const bool edge = std::binary_search(nbrs.begin(), nbrs.end(), j);
      if (edge) body[static_cast<size_t>(bit_index / 6)] |= static_cast<char>(1 << (5 - bit_index % 6));
      ++bit_index;
    }
  }
  for (char b : body) out.push_back(static_cast<char>(b + kBias));
  return out;
}

}  // namespace graphpt
