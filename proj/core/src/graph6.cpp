#include "longcycle/graph6.hpp"

#include <fstream>
#include <istream>

#include "longcycle/error.hpp"

namespace longcycle {

namespace {

constexpr int kBias = 63;

std::size_t payload_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw ParseError("graph6: empty record");
  for (std::size_t i = 0; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < kBias || c > 126) {
      throw ParseError("graph6: byte " + std::to_string(c) + " at offset " + std::to_string(i) +
                       " is outside 63..126");
    }
  }
  const int size_byte = static_cast<unsigned char>(line[0]);
  if (size_byte == 126) {
    throw ParseError("graph6: multi-byte size prefix (order > 62) is not supported");
  }
  const int n = size_byte - kBias;
  if (n < 1) throw ParseError("graph6: order 0 is not a valid graph");

  const std::size_t expected = payload_bytes(n);
  const std::string_view payload = line.substr(1);
  if (payload.size() < expected) {
    throw ParseError("graph6: truncated payload, expected " + std::to_string(expected) +
                     " bytes, got " + std::to_string(payload.size()));
  }
  if (payload.size() > expected) {
    throw ParseError("graph6: " + std::to_string(payload.size() - expected) +
                     " trailing bytes after payload");
  }

  GraphBuilder b(n);
  std::size_t bit = 0;
  auto next_bit = [&]() {
    const int byte = static_cast<unsigned char>(payload[bit / 6]) - kBias;
    const int value = (byte >> (5 - bit % 6)) & 1;
    ++bit;
    return value;
  };
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (next_bit()) b.add_edge(i, j);
    }
  }
  while (bit < expected * 6) {
    if (next_bit()) throw ParseError("graph6: nonzero padding bits");
  }
  return b.build();
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw DomainError("graph6: order above 62 needs the multi-byte form");
  std::string out;
  out.reserve(1 + payload_bytes(n));
  out.push_back(static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view = line;
    if (number == 1 && view.starts_with(">>graph6<<")) view.remove_prefix(10);
    if (view.empty()) continue;
    try {
      out.push_back(parse_graph6(view));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph6 file " + path);
  return read_graph6(in);
}

}  // namespace longcycle
