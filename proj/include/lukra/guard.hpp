#pragma once

#include <cstddef>
#include <optional>

namespace lukra {

// Explicit limit if given, else LUKRA_GUARD from the environment, else the default.
std::size_t resolve_guard(std::optional<std::size_t> explicit_limit, std::size_t fallback);

}  // namespace lukra
