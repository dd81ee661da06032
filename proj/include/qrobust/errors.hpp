// Copyright 2026 The qrobust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qrobust {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonHermitianInput : public Error {
 public:
  using Error::Error;
};

class NonSymmetricInput : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A matrix or parameter record that violates one of its invariants.
// `invariant` names the failed check and `amount` is the size of the violation.
class ValidationError : public Error {
 public:
  ValidationError(std::string invariant, double amount, const std::string& message)
      : Error(message), invariant_(std::move(invariant)), amount_(amount) {}

  const std::string& invariant() const noexcept { return invariant_; }
  double amount() const noexcept { return amount_; }

 private:
  std::string invariant_;
  double amount_;
};

class UnknownEnsemble : public Error {
 public:
  using Error::Error;
};

// The closed-form robustness needs all four Wootters values strictly positive.
class RankDeficient : public Error {
 public:
  using Error::Error;
};

class BadWeights : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class NotSeparableDirection : public Error {
 public:
  using Error::Error;
};

class ImproperDirection : public Error {
 public:
  using Error::Error;
};

}  // namespace qrobust
