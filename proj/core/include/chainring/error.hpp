/*
   Copyright 2026 The chainring authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CHAINRING_ERROR_HPP
#define CHAINRING_ERROR_HPP

#include <stdexcept>
#include <string>

namespace chainring {

// Base of every library error; kind() is the stable name used in CLI output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define CHAINRING_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  };

CHAINRING_DEFINE_ERROR(ParseError)
CHAINRING_DEFINE_ERROR(DomainError)
CHAINRING_DEFINE_ERROR(ZeroElement)
CHAINRING_DEFINE_ERROR(NotAUnit)
CHAINRING_DEFINE_ERROR(BadGenerator)
CHAINRING_DEFINE_ERROR(ComponentMismatch)
CHAINRING_DEFINE_ERROR(NotChainRing)
CHAINRING_DEFINE_ERROR(NotARing)
CHAINRING_DEFINE_ERROR(ZeroPolynomial)
CHAINRING_DEFINE_ERROR(EqualInputs)
CHAINRING_DEFINE_ERROR(WrongOrder)
CHAINRING_DEFINE_ERROR(ZeroIdeal)
CHAINRING_DEFINE_ERROR(ResourceExceeded)
CHAINRING_DEFINE_ERROR(TooLarge)
CHAINRING_DEFINE_ERROR(RankTooLarge)
CHAINRING_DEFINE_ERROR(NotFree)
CHAINRING_DEFINE_ERROR(RankExceeds)
CHAINRING_DEFINE_ERROR(Inconclusive)
CHAINRING_DEFINE_ERROR(MultipleSolutions)
CHAINRING_DEFINE_ERROR(NoSolution)
CHAINRING_DEFINE_ERROR(BudgetExceeded)

#undef CHAINRING_DEFINE_ERROR

}  // namespace chainring

#endif
