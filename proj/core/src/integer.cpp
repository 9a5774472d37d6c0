#include "parthom/integer.hpp"

#include <mutex>
#include <stdexcept>

namespace parthom {

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    static std::vector<Integer> cache{1};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<int>(cache.size()) <= n)
        cache.push_back(cache.back() * static_cast<int>(cache.size()));
    return cache[static_cast<std::size_t>(n)];
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - i + 1;
        r /= i;
    }
    return r;
}

Integer multinomial_of(int n, const std::vector<int>& ks) {
    int sum = 0;
    for (int k : ks) {
        if (k < 0) throw std::invalid_argument("multinomial_of: negative part");
        sum += k;
    }
    if (sum != n) throw std::invalid_argument("multinomial_of: parts do not sum to n");
    Integer r = factorial(n);
    for (int k : ks) r /= factorial(k);
    return r;
}

std::string to_string(const Integer& v) { return v.str(); }

}  // namespace parthom
