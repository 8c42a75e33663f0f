#pragma once

#include <gmpxx.h>
#include <vector>

namespace smirnov {

/// Integer partition: weakly decreasing parts, all >= 1.
/// The empty partition (of 0) is allowed.
class Partition {
public:
    Partition() = default;
    /// Sorts the given parts; throws on parts < 1.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }

    /// Centralizer size z = prod i^{m_i} m_i! over multiplicities m_i.
    mpz_class z_number() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    /// Reverse-lexicographic within equal size; by size across sizes.
    bool operator<(const Partition& o) const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n, reverse-lexicographic: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

mpz_class factorial(int n);
mpz_class binomial(int n, int k);

}  // namespace smirnov
