#ifndef NEGWIT_VERSION_HPP
#define NEGWIT_VERSION_HPP

#include <string_view>

namespace negwit {

inline constexpr std::string_view kVersion = "0.1.0";

// Identifier of the deterministic sampling pipeline. Bump whenever the
// generator, the stream-splitting rule, or any draw order changes, since
// every seeded CSV is reproducible only per pipeline version.
inline constexpr std::string_view kRngVersion = "rng/1:mt19937_64+polar";

}  // namespace negwit

#endif
