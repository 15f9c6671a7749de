#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "golod/monomial_ideal.hpp"

namespace golodkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

/// Runs one command. `args` excludes the program name. Exit codes: 0 on
/// success, 1 on a mathematically negative verdict, 2 on any error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The built-in suite of worked examples, one named check per example.
/// `seed` drives the randomized in-between ideals.
std::vector<golod::NamedCheck> worked_examples(std::uint64_t seed);

}  // namespace golodkit
