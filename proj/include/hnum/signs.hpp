#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hnum {

// The sign sequence S(s) attached to the r branch points with a 3-cycle.
class SignSplitting {
public:
    SignSplitting() = default;
    explicit SignSplitting(std::vector<int> signs); // entries +1/-1

    static SignSplitting parse(const std::string& text); // "+-+"

    int size() const { return (int)signs_.size(); }
    int sign(int i) const { return signs_[i]; } // 0-based pair index
    int positives() const;                      // s
    const std::vector<int>& signs() const { return signs_; }

    // S'(s): each sign doubled, s'_{2i-1} = s'_{2i} = s_i.
    SignSplitting doubled() const;

    std::string str() const; // "+-+"

    bool operator==(const SignSplitting& o) const { return signs_ == o.signs_; }

    // All 2^r sign sequences of length r, lexicographic with '+' < '-'.
    static std::vector<SignSplitting> all(int r);

private:
    std::vector<int> signs_;
};

} // namespace hnum
