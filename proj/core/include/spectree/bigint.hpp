#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace spectree {

// Arbitrary-precision integer for walk counts and subgraph counts; the top
// spectral moment outgrows 64 bits well inside CLI-reachable tree sizes.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace spectree
