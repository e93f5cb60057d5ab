#pragma once

#include <string>

#include "partmod/alternating.hpp"
#include "partmod/partition.hpp"

namespace partmod {

// "5,3,1" -> (5,3,1); "-" -> empty partition. "0" and malformed text are rejected.
Partition parse_partition(const std::string& text);

// Inverse of parse_partition: "5,3,1", or "-" for the empty partition.
std::string format_partition(const Partition& la);

// Optional trailing '+' or '-' selects a split variant: "5,3,1+", "8,1".
// A bare "-" is the empty partition, not a variant suffix.
struct ParsedLabel {
  Partition partition;
  Variant variant = Variant::Whole;
};
ParsedLabel parse_label(const std::string& text);

std::string format_label(const AltLabel& label);

std::string format_node(Node node);

}  // namespace partmod
