#pragma once

/**
 * @file caps.hpp
 * @brief Size limits applied to constructions and exhaustive searches.
 */

#include <cstddef>
#include <cstdlib>
#include <string>

#include "ringlab/errors.hpp"

namespace ringlab {

struct Caps {
  /// Largest ring order accepted by constructions and predicate runs.
  std::size_t order = 81;
  /// Largest order for the maximal-left-ideal radical oracle.
  std::size_t oracle = 64;
  /// Largest order for exhaustive involution enumeration.
  std::size_t involution = 16;

  /// Defaults, with RINGLAB_CAP overriding the global order cap.
  static Caps from_env() {
    Caps caps;
    if (const char* raw = std::getenv("RINGLAB_CAP"); raw != nullptr && *raw != '\0') {
      try {
        caps.order = static_cast<std::size_t>(std::stoul(raw));
      } catch (const std::exception&) {
        throw SpecParseError(std::string("RINGLAB_CAP is not an integer: ") + raw);
      }
    }
    return caps;
  }
};

inline void enforce_cap(std::size_t order, std::size_t cap) {
  if (order > cap) throw CapExceeded(order, cap);
}

}  // namespace ringlab
