#include "partmod/io.hpp"

#include <cctype>

namespace partmod {

Partition parse_partition(const std::string& text) {
  if (text == "-") return Partition{};
  if (text.empty()) fail(Errc::NotAPartition, "empty partition text, use \"-\"");
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail(Errc::NotAPartition, "unexpected character in \"" + text + "\"");
    if (pos - start > 9) fail(Errc::NotAPartition, "part too large in \"" + text + "\"");
    parts.push_back(std::stoi(text.substr(start, pos - start)));
    if (pos < text.size()) {
      if (text[pos] != ',') fail(Errc::NotAPartition, "unexpected character in \"" + text + "\"");
      ++pos;
      if (pos == text.size()) fail(Errc::NotAPartition, "trailing comma in \"" + text + "\"");
    }
  }
  return Partition(parts);
}

std::string format_partition(const Partition& la) {
  if (la.empty()) return "-";
  std::string out;
  for (int i = 1; i <= la.height(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(la.part(i));
  }
  return out;
}

ParsedLabel parse_label(const std::string& text) {
  if (text == "-") return {Partition{}, Variant::Whole};
  if (text.empty()) fail(Errc::NotAPartition, "empty label text");
  char last = text.back();
  if (last == '+') return {parse_partition(text.substr(0, text.size() - 1)), Variant::Plus};
  if (last == '-') return {parse_partition(text.substr(0, text.size() - 1)), Variant::Minus};
  return {parse_partition(text), Variant::Whole};
}

std::string format_label(const AltLabel& label) {
  std::string out = format_partition(label.partition);
  if (label.variant == Variant::Plus) out += '+';
  if (label.variant == Variant::Minus) out += '-';
  return out;
}

std::string format_node(Node node) {
  return "(" + std::to_string(node.row) + "," + std::to_string(node.col) + ")";
}

}  // namespace partmod
