#include "transit_arb/error.h"

namespace transit_arb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidStationId: return "InvalidStationId";
    case ErrorKind::kDuplicateStation: return "DuplicateStation";
    case ErrorKind::kInvalidRoute: return "InvalidRoute";
    case ErrorKind::kUnknownStationInRoute: return "UnknownStationInRoute";
    case ErrorKind::kGraphNotTree: return "GraphNotTree";
    case ErrorKind::kUnknownStation: return "UnknownStation";
    case ErrorKind::kInvalidTrip: return "InvalidTrip";
    case ErrorKind::kMalformedCsv: return "MalformedCsv";
    case ErrorKind::kMalformedMoney: return "MalformedMoney";
    case ErrorKind::kMissingPair: return "MissingPair";
    case ErrorKind::kAsymmetricFare: return "AsymmetricFare";
    case ErrorKind::kInvalidModel: return "InvalidModel";
    case ErrorKind::kZoneOnNonLineNetwork: return "ZoneOnNonLineNetwork";
    case ErrorKind::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::kUnknownRoute: return "UnknownRoute";
    case ErrorKind::kOriginNotOnRoute: return "OriginNotOnRoute";
    case ErrorKind::kProfileTooShort: return "ProfileTooShort";
    case ErrorKind::kIo: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string const& detail)
    : std::runtime_error(std::string{to_string(kind)} + ": " + detail),
      kind_(kind) {}

}  // namespace transit_arb
