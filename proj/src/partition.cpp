#include "smirnov/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace smirnov {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("partition parts must be >= 1");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    for (int p : parts_) size_ += p;
}

mpz_class Partition::z_number() const {
    std::map<int, int> mult;
    for (int p : parts_) ++mult[p];
    mpz_class z = 1;
    for (auto [i, m] : mult) {
        for (int q = 0; q < m; ++q) z *= i;
        z *= factorial(m);
    }
    return z;
}

bool Partition::operator<(const Partition& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    // reverse-lex: (n) before (n-1,1) before ... before (1^n)
    return parts_ > o.parts_;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

mpz_class factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace smirnov
