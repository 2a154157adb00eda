#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hgsat {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace hgsat
