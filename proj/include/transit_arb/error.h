#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace transit_arb {

enum class ErrorKind {
  kInvalidStationId,
  kDuplicateStation,
  kInvalidRoute,
  kUnknownStationInRoute,
  kGraphNotTree,
  kUnknownStation,
  kInvalidTrip,
  kMalformedCsv,
  kMalformedMoney,
  kMissingPair,
  kAsymmetricFare,
  kInvalidModel,
  kZoneOnNonLineNetwork,
  kInstanceTooLarge,
  kUnknownRoute,
  kOriginNotOnRoute,
  kProfileTooShort,
  kIo,
};

std::string_view to_string(ErrorKind kind);

// Every data/validation failure surfaces as an Error carrying its kind; the
// what() text is "<Kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace transit_arb
