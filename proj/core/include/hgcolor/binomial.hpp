#ifndef HGCOLOR_BINOMIAL_HPP
#define HGCOLOR_BINOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace hgcolor {

using BigInt = boost::multiprecision::cpp_int;

// Exact C(n, k); 0 when k > n. Binomials here routinely exceed 64 bits
// (C(256,16) ~ 1e25), so everything stays integral until a final ratio.
inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline double big_ratio(const BigInt& num, const BigInt& den) {
    return num.convert_to<double>() / den.convert_to<double>();
}

}  // namespace hgcolor

#endif  // HGCOLOR_BINOMIAL_HPP
