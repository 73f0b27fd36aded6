#pragma once

#include <string>
#include <vector>

namespace hnum {

// Weakly decreasing positive integers.  Used both as ramification profiles
// and as cycle types.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts); // sorts non-increasing, checks > 0

    static Partition parse(const std::string& text); // "3,1,1"; "" = empty

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return (int)parts_.size(); }
    int sum() const { return sum_; }
    bool empty() const { return parts_.empty(); }

    std::string str() const; // "3,1,1", "-" for empty

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

// lambda = (oo^2, ee^2, o, e): repeated odd pairs, repeated even pairs, then
// distinct leftover odd / even entries (at most one occurrence each).
struct TailDecomposition {
    Partition oo; // one copy per repeated odd pair
    Partition ee; // one copy per repeated even pair
    Partition o;  // distinct odd leftovers
    Partition e;  // distinct even leftovers
};

TailDecomposition tail_decomposition(const Partition& lambda);

// All partitions of n, deterministic order.
std::vector<Partition> partitions_of(int n);

} // namespace hnum
