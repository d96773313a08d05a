#include "rigdist/errors.hpp"

namespace rigdist {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::parse:
      return "ParseError";
    case Errc::rig_mismatch:
      return "RigMismatch";
    case Errc::carrier_mismatch:
      return "CarrierMismatch";
    case Errc::untagged_element:
      return "UntaggedElement";
    case Errc::unpaired_element:
      return "UnpairedElement";
    case Errc::key_not_coefficient:
      return "KeyNotCoefficient";
    case Errc::map_incomplete:
      return "MapIncomplete";
    case Errc::not_invertible:
      return "NotInvertible";
    case Errc::not_probability:
      return "NotProbability";
    case Errc::cap_exceeded:
      return "CapExceeded";
    case Errc::overflow:
      return "Overflow";
  }
  return "Error";
}

}  // namespace rigdist
