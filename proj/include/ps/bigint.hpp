#ifndef PS_BIGINT_HPP
#define PS_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace ps {

// Exact arbitrary-precision signed integer. Everything numeric in this
// library is exact; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

}  // namespace ps

#endif  // PS_BIGINT_HPP
