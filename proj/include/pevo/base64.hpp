#pragma once

#include <string>
#include <string_view>

namespace pevo {

std::string base64_encode(std::string_view bytes);

/// Strict RFC 4648 decode; throws Error(BadResponse) on invalid input.
std::string base64_decode(std::string_view text);

}  // namespace pevo
