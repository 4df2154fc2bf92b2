#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace biaslab {

/// Arbitrary-precision integer. All weights, costs and optima are integers.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational. Every cost comparison in the library is an
/// exact rational comparison; no decision path goes through floating point.
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};
struct InvalidInstanceError : Error {
    using Error::Error;
};
struct InvalidSolutionError : Error {
    using Error::Error;
};
struct SizeLimitError : Error {
    using Error::Error;
};
struct InfeasibleError : Error {
    using Error::Error;
};
struct ModelViolationError : Error {
    using Error::Error;
};

/// Parses "p/q" or a plain integer literal (optionally signed).
/// Decimal notation is rejected: exactness of inputs is part of the contract.
Rat parse_rational(std::string_view text);

/// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string rat_string(const Rat& value);

std::string int_string(const Int& value);

/// base^exp with a nonnegative integer exponent, computed exactly.
Rat rat_pow(const Rat& base, std::uint64_t exp);

Int int_factorial(unsigned n);

/// SplitMix64 step; used to derive per-step seeds from a run seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace biaslab
