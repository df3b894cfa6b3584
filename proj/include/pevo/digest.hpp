#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pevo {

/// First 128 bits of SHA-256 over the exact bytes, as 32 lowercase hex chars.
/// Used to key the fitness cache and name image files on disk.
std::string digest128_hex(std::string_view bytes);

/// Full SHA-256 hex (64 chars). Used for content hashes of stored artifacts.
std::string sha256_hex(std::string_view bytes);

/// FNV-1a over bytes; stable across platforms, used for RNG stream labels.
uint64_t fnv1a64(std::string_view bytes);

}  // namespace pevo
