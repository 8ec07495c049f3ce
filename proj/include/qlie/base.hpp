/*
   Copyright 2026 The qlie authors

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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace qlie {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/* error hierarchy; every named failure mode of the library maps to one of these */

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct MixedFields : Error {
    MixedFields() : Error("operands belong to different fields") {}
};
struct MixedContext : Error {
    MixedContext() : Error("operands belong to different pairing contexts") {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error("parse error: " + m) {}
};
struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& m) : Error("arity mismatch: " + m) {}
};
struct ArityTooLarge : Error {
    explicit ArityTooLarge(const std::string& m) : Error("arity too large: " + m) {}
};
struct WordTooLong : Error {
    explicit WordTooLong(const std::string& m) : Error("word too long: " + m) {}
};
struct NotGroupHomogeneous : Error {
    NotGroupHomogeneous() : Error("polynomial is not group-homogeneous") {}
};
struct NotCharacterHomogeneous : Error {
    NotCharacterHomogeneous() : Error("polynomial is not weight-homogeneous") {}
};
struct VariableAbsent : Error {
    explicit VariableAbsent(const std::string& m) : Error("variable absent: " + m) {}
};
struct GroupPrefixPresent : Error {
    GroupPrefixPresent() : Error("group prefix present on braided side") {}
};
struct UndefinedOperation : Error {
    explicit UndefinedOperation(const std::string& reason)
        : Error("undefined: " + reason), reason(reason) {}
    std::string reason;
};
struct UnboundedSearch : Error {
    explicit UnboundedSearch(const std::string& m) : Error("unbounded search: " + m) {}
};
struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& m) : Error("precondition failed: " + m) {}
};
struct NotLeftPrimitive : Error {
    NotLeftPrimitive() : Error("polynomial is not left primitive w.r.t. the variable") {}
};
struct InternalError : Error {
    explicit InternalError(const std::string& m) : Error("internal error: " + m) {}
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline Rational inv(const Rational& r) {
    if (r.is_zero()) throw DivisionByZero();
    return Rational(1) / r;
}

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace qlie
