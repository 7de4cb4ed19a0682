#pragma once

#include <stdexcept>

namespace alleyflow {

// Base for all library errors. Subclasses carry the failure category in
// their type; messages name the offending record.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace alleyflow
