#include "hnum/partition.hpp"

#include <algorithm>
#include <map>

#include "hnum/errors.hpp"

namespace hnum {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    for (int p : parts_) {
        if (p < 1) throw ParseError("partition parts must be positive");
        sum_ += p;
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    if (text.empty() || text == "-") return Partition(parts);
    size_t i = 0;
    while (i < text.size()) {
        size_t j = text.find(',', i);
        if (j == std::string::npos) j = text.size();
        std::string tok = text.substr(i, j - i);
        if (tok.empty()) throw ParseError("empty entry in partition \"" + text + "\"");
        int v = 0;
        for (char c : tok) {
            if (c < '0' || c > '9')
                throw ParseError("bad character '" + std::string(1, c) + "' in partition \"" + text + "\"");
            v = v * 10 + (c - '0');
            if (v > 1000000) throw ParseError("partition entry out of range");
        }
        if (v == 0) throw ParseError("partition parts must be positive");
        parts.push_back(v);
        i = j + 1;
        if (i == text.size() && text.back() == ',')
            throw ParseError("trailing comma in partition \"" + text + "\"");
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    if (parts_.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

TailDecomposition tail_decomposition(const Partition& lambda) {
    std::map<int, int> mult;
    for (int p : lambda.parts()) ++mult[p];
    std::vector<int> oo, ee, o, e;
    for (auto [v, m] : mult) {
        int pairs = m / 2;
        for (int i = 0; i < pairs; ++i) (v % 2 ? oo : ee).push_back(v);
        if (m % 2) (v % 2 ? o : e).push_back(v);
    }
    return TailDecomposition{Partition(oo), Partition(ee), Partition(o), Partition(e)};
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    // Non-increasing parts, largest first.
    auto rec = [&](auto&& self, int rem, int max_part) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

} // namespace hnum
