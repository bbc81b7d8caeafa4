#pragma once

#include <stdexcept>
#include <string>

namespace stod
{

/// A computed object contradicts a property it must have. Signals either an
/// arithmetic bug or a refuted claim; never a usage error.
class VerificationError : public std::runtime_error
{
public:
  explicit VerificationError(std::string const &what) : std::runtime_error(what) {}
};

} // namespace stod
