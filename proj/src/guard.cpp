#include "lukra/guard.hpp"

#include <cstdlib>
#include <string>

#include "lukra/errors.hpp"

namespace lukra {

std::size_t resolve_guard(std::optional<std::size_t> explicit_limit, std::size_t fallback) {
    if (explicit_limit) return *explicit_limit;
    if (const char* env = std::getenv("LUKRA_GUARD")) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used == std::string(env).size()) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw InvalidArgument(std::string("LUKRA_GUARD is not a number: ") + env);
    }
    return fallback;
}

}  // namespace lukra
