#include "hnum/signs.hpp"

#include "hnum/errors.hpp"

namespace hnum {

SignSplitting::SignSplitting(std::vector<int> signs) : signs_(std::move(signs)) {
    for (int s : signs_)
        if (s != 1 && s != -1) throw ParseError("signs must be +1/-1");
}

SignSplitting SignSplitting::parse(const std::string& text) {
    std::vector<int> signs;
    for (char c : text) {
        if (c == '+')
            signs.push_back(1);
        else if (c == '-')
            signs.push_back(-1);
        else
            throw ParseError("bad character '" + std::string(1, c) + "' in sign string \"" + text + "\"");
    }
    return SignSplitting(std::move(signs));
}

int SignSplitting::positives() const {
    int s = 0;
    for (int v : signs_) s += (v == 1);
    return s;
}

SignSplitting SignSplitting::doubled() const {
    std::vector<int> d;
    d.reserve(signs_.size() * 2);
    for (int v : signs_) {
        d.push_back(v);
        d.push_back(v);
    }
    return SignSplitting(std::move(d));
}

std::string SignSplitting::str() const {
    std::string s;
    for (int v : signs_) s.push_back(v == 1 ? '+' : '-');
    return s;
}

std::vector<SignSplitting> SignSplitting::all(int r) {
    std::vector<SignSplitting> out;
    out.reserve(1u << r);
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> signs(r);
        for (int i = 0; i < r; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
        out.emplace_back(std::move(signs));
    }
    return out;
}

} // namespace hnum
