#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace coha {

// Exact arithmetic everywhere; floating point only enters the D_n sampling
// kernel, which lives in its own header.
using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline integer ipow(const integer& base, unsigned long exp) {
    integer r = 1;
    for (unsigned long k = 0; k < exp; ++k) r *= base;
    return r;
}

inline rational rpow(const rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("rpow: 1/0");
        return rational(1) / rpow(base, -exp);
    }
    rational r = 1;
    for (long k = 0; k < exp; ++k) r *= base;
    return r;
}

// Moebius function on small n, by trial division.
inline int moebius(unsigned long n) {
    int result = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

inline std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

}  // namespace coha
