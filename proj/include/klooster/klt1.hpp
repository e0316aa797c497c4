#pragma once

#include <cstdint>
#include <string>

#include "klooster/kloosterman.hpp"

namespace klooster {

// Binary cache file for one table, format "KLT1":
//   bytes 0..3   magic "KLT1"
//   bytes 4..11  p, unsigned 64-bit little-endian
//   then (p-1) IEEE-754 binary64 little-endian values S(1,1), ..., S(p-1,1).
// Written atomically (temp file + rename). Throws std::runtime_error on I/O
// failure and std::runtime_error with a descriptive message on any header,
// size, or value-validation mismatch when reading.
void write_klt1(const std::string& path, const KloostermanTable& table);

// Reads and structurally validates a KLT1 file (magic, prime p, exact length,
// every value within the Weil bound). Spot-checking entries against fresh
// computation is the caller's job (see cache logic in the CLI).
KloostermanTable read_klt1(const std::string& path);

}  // namespace klooster
