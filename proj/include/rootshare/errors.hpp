// Copyright 2026 The rootshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROOTSHARE_ERRORS_HPP_
#define ROOTSHARE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rootshare {

using Int = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ModulusMismatchError : public Error {
 public:
  ModulusMismatchError() : Error("operands use different moduli") {}
};

// Carries the gcd: on a composite modulus a non-trivial gcd is a factor of
// the modulus, and callers must treat it as a security-relevant event.
class NotInvertibleError : public Error {
 public:
  explicit NotInvertibleError(Int gcd)
      : Error("value is not invertible (gcd=" + gcd.str() + ")"),
        gcd_(std::move(gcd)) {}
  const Int& gcd() const { return gcd_; }

 private:
  Int gcd_;
};

class InvalidKError : public Error {
 public:
  using Error::Error;
};

class ZeroDatumError : public Error {
 public:
  ZeroDatumError() : Error("datum/share value must be nonzero") {}
};

class WrongShareCountError : public Error {
 public:
  using Error::Error;
};

class MixedGroupsError : public Error {
 public:
  MixedGroupsError() : Error("shares belong to different groups") {}
};

class DuplicateIndexError : public Error {
 public:
  DuplicateIndexError() : Error("duplicate share index") {}
};

class AllZeroCoefficientsError : public Error {
 public:
  AllZeroCoefficientsError()
      : Error("all non-constant coefficients are zero; re-randomize the split") {}
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class TooManyRowsError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class SingularSubsetError : public Error {
 public:
  SingularSubsetError() : Error("selected share rows are linearly dependent") {}
};

class BadExponentError : public Error {
 public:
  using Error::Error;
};

class NotAUnitError : public Error {
 public:
  explicit NotAUnitError(Int gcd)
      : Error("value shares a factor with the modulus (gcd=" + gcd.str() +
              "); this leaks a factor"),
        gcd_(std::move(gcd)) {}
  const Int& gcd() const { return gcd_; }

 private:
  Int gcd_;
};

class KeyMismatchError : public Error {
 public:
  KeyMismatchError() : Error("key does not match the shares' modulus") {}
};

class ModulusTooSmallError : public Error {
 public:
  using Error::Error;
};

class ChunkOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class BadMagicError : public Error {
 public:
  BadMagicError() : Error("bad file magic") {}
};

class BadVersionError : public Error {
 public:
  using Error::Error;
};

class TruncatedFileError : public Error {
 public:
  using Error::Error;
};

class FieldOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class CountExceedsNetworkError : public Error {
 public:
  using Error::Error;
};

class UnknownNodeError : public Error {
 public:
  using Error::Error;
};

class UnrecoverableError : public Error {
 public:
  UnrecoverableError(std::size_t available, std::size_t needed)
      : Error("unrecoverable: " + std::to_string(available) + " of " +
              std::to_string(needed) + " required shares available"),
        available_(available),
        needed_(needed) {}
  std::size_t available() const { return available_; }
  std::size_t needed() const { return needed_; }

 private:
  std::size_t available_;
  std::size_t needed_;
};

class ScenarioParseError : public Error {
 public:
  ScenarioParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rootshare

#endif  // ROOTSHARE_ERRORS_HPP_
