#include "exring/budget.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace exring {

std::uint64_t budget_from_env(std::uint64_t fallback) {
    const char* raw = std::getenv("EXC_BUDGET");
    if (!raw || !*raw) return fallback;
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(raw, &used);
        if (used != std::string(raw).size()) return fallback;
        return std::max<std::uint64_t>(fallback, v);
    } catch (const std::exception&) {
        return fallback;
    }
}

}  // namespace exring
