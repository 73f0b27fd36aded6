#include "hnum/perm.hpp"

#include <algorithm>
#include <cstdlib>

namespace hnum {

namespace {
int g_degree_cap = kMaxDegree;
bool g_cap_initialised = false;
} // namespace

int degree_cap() {
    if (!g_cap_initialised) {
        g_cap_initialised = true;
        if (const char* env = std::getenv("HNUM_MAX_D")) {
            int v = std::atoi(env);
            if (v >= 1 && v <= kMaxDegree) g_degree_cap = v;
        }
    }
    return g_degree_cap;
}

void set_degree_cap(int cap) {
    if (cap < 1 || cap > kMaxDegree)
        throw DegenerateError("degree cap must lie in [1," + std::to_string(kMaxDegree) + "]");
    g_degree_cap = cap;
    g_cap_initialised = true;
}

Perm::Perm(int d) : d_((uint8_t)d) {
    if (d < 0 || d > kMaxDegree) throw DegenerateError("degree out of range");
    for (int i = 0; i < d; ++i) img_[i] = (uint8_t)i;
}

Perm Perm::from_images(const std::vector<int>& images0) {
    int d = (int)images0.size();
    Perm p(d);
    std::array<bool, kMaxDegree> seen{};
    for (int i = 0; i < d; ++i) {
        int v = images0[i];
        if (v < 0 || v >= d || seen[v]) throw ParseError("images do not form a bijection");
        seen[v] = true;
        p.img_[i] = (uint8_t)v;
    }
    return p;
}

Perm Perm::from_cycles(int d, const std::vector<std::vector<int>>& cycles1) {
    Perm p(d);
    std::array<bool, kMaxDegree> touched{};
    for (const auto& cyc : cycles1) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i] - 1;
            int b = cyc[(i + 1) % cyc.size()] - 1;
            if (a < 0 || a >= d || b < 0 || b >= d) throw ParseError("cycle entry out of range");
            if (touched[a]) throw ParseError("repeated entry in cycles");
            touched[a] = true;
            p.img_[a] = (uint8_t)b;
        }
    }
    return p;
}

Perm Perm::parse(const std::string& text, int d) {
    if (text == "id" || text == "()") return Perm(d);
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') throw ParseError("unterminated one-line form");
        std::vector<int> images;
        int v = -1;
        for (size_t i = 1; i < text.size(); ++i) {
            char c = text[i];
            if (c >= '0' && c <= '9') {
                v = (v < 0 ? 0 : v) * 10 + (c - '0');
            } else if (c == ',' || c == ']') {
                if (v < 1) throw ParseError("bad one-line form \"" + text + "\"");
                images.push_back(v - 1);
                v = -1;
            } else {
                throw ParseError("bad character in one-line form \"" + text + "\"");
            }
        }
        if ((int)images.size() != d) throw ParseError("one-line form has wrong length");
        return from_images(images);
    }
    if (!text.empty() && text.front() == '(') {
        std::vector<std::vector<int>> cycles;
        std::vector<int> cur;
        int v = -1;
        bool open = false;
        for (char c : text) {
            if (c == '(') {
                if (open) throw ParseError("nested '(' in cycle form");
                open = true;
                cur.clear();
            } else if (c >= '0' && c <= '9') {
                if (!open) throw ParseError("digit outside cycle");
                v = (v < 0 ? 0 : v) * 10 + (c - '0');
            } else if (c == ' ' || c == ',') {
                if (v > 0) cur.push_back(v);
                v = -1;
            } else if (c == ')') {
                if (!open) throw ParseError("unmatched ')'");
                if (v > 0) cur.push_back(v);
                v = -1;
                open = false;
                if (!cur.empty()) cycles.push_back(cur);
            } else {
                throw ParseError("bad character in cycle form \"" + text + "\"");
            }
        }
        if (open) throw ParseError("unterminated cycle");
        return from_cycles(d, cycles);
    }
    throw ParseError("cannot parse permutation \"" + text + "\"");
}

Perm Perm::operator*(const Perm& rhs) const {
    if (d_ != rhs.d_) throw DegenerateError("composing permutations of different degree");
    Perm r((int)d_);
    for (int i = 0; i < d_; ++i) r.img_[i] = img_[rhs.img_[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r((int)d_);
    for (int i = 0; i < d_; ++i) r.img_[img_[i]] = (uint8_t)i;
    return r;
}

bool Perm::is_identity() const {
    for (int i = 0; i < d_; ++i)
        if (img_[i] != i) return false;
    return true;
}

bool Perm::is_involution() const {
    for (int i = 0; i < d_; ++i)
        if (img_[img_[i]] != i) return false;
    return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::array<bool, kMaxDegree> seen{};
    for (int i = 0; i < d_; ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int x = i;
        do {
            seen[x] = true;
            cyc.push_back(x);
            x = img_[x];
        } while (x != i);
        out.push_back(std::move(cyc));
    }
    return out;
}

Partition Perm::cycle_type() const {
    std::vector<int> lens;
    std::array<bool, kMaxDegree> seen{};
    for (int i = 0; i < d_; ++i) {
        if (seen[i]) continue;
        int len = 0, x = i;
        do {
            seen[x] = true;
            ++len;
            x = img_[x];
        } while (x != i);
        lens.push_back(len);
    }
    return Partition(std::move(lens));
}

std::string Perm::cycle_string() const {
    std::string s;
    for (const auto& cyc : cycles()) {
        if (cyc.size() < 2) continue;
        s += '(';
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(cyc[i] + 1);
        }
        s += ')';
    }
    return s.empty() ? "id" : s;
}

std::string Perm::one_line_string() const {
    std::string s = "[";
    for (int i = 0; i < d_; ++i) {
        if (i) s += ',';
        s += std::to_string(img_[i] + 1);
    }
    return s + "]";
}

std::strong_ordering Perm::operator<=>(const Perm& o) const {
    if (d_ != o.d_) return d_ <=> o.d_;
    for (int i = 0; i < d_; ++i)
        if (img_[i] != o.img_[i]) return img_[i] <=> o.img_[i];
    return std::strong_ordering::equal;
}

size_t Perm::hash() const {
    size_t h = d_;
    for (int i = 0; i < d_; ++i) h = h * 1315423911u + img_[i];
    return h;
}

Perm conjugate(const Perm& g, const Perm& p) {
    if (g.degree() != p.degree()) throw DegenerateError("conjugating permutations of different degree");
    return g * p * g.inverse();
}

bool is_transitive(const std::vector<Perm>& gens, int d) {
    if (d <= 0) throw DegenerateError("degree must be positive");
    for (const Perm& g : gens)
        if (g.degree() != d) throw DegenerateError("generator degree mismatch");
    std::array<int, kMaxDegree> parent;
    for (int i = 0; i < d; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = d;
    for (const Perm& g : gens) {
        for (int i = 0; i < d; ++i) {
            int a = find(i), b = find(g(i));
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    }
    return components == 1;
}

namespace {

// All involutions of S_d (id included), by pairing points.
void involutions_rec(int d, std::array<int, kMaxDegree>& img, std::array<bool, kMaxDegree>& used,
                     int from, std::vector<Perm>& out) {
    int i = from;
    while (i < d && used[i]) ++i;
    if (i == d) {
        std::vector<int> v(img.begin(), img.begin() + d);
        out.push_back(Perm::from_images(v));
        return;
    }
    used[i] = true;
    img[i] = i; // fixed point
    involutions_rec(d, img, used, i + 1, out);
    for (int j = i + 1; j < d; ++j) {
        if (used[j]) continue;
        used[j] = true;
        img[i] = j;
        img[j] = i;
        involutions_rec(d, img, used, i + 1, out);
        used[j] = false;
    }
    used[i] = false;
}

} // namespace

std::vector<Perm> reversing_involutions(const Perm& sigma) {
    int d = sigma.degree();
    std::array<int, kMaxDegree> img{};
    std::array<bool, kMaxDegree> used{};
    std::vector<Perm> all;
    involutions_rec(d, img, used, 0, all);
    Perm inv = sigma.inverse();
    std::vector<Perm> out;
    for (const Perm& g : all)
        if (g * sigma * g == inv) out.push_back(g);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Canonical cycle-structure generation: the smallest unused point leads the
// next cycle and may take any remaining distinct length.  Each permutation
// of the type is produced exactly once.
void perms_of_type_rec(int d, std::vector<int>& remaining, std::array<int, kMaxDegree>& img,
                       std::array<bool, kMaxDegree>& used,
                       const std::function<void(const Perm&)>& fn) {
    if (remaining.empty()) {
        std::vector<int> v(img.begin(), img.begin() + d);
        fn(Perm::from_images(v));
        return;
    }
    int leader = 0;
    while (leader < d && used[leader]) ++leader;
    used[leader] = true;
    for (size_t li = 0; li < remaining.size(); ++li) {
        if (li > 0 && remaining[li] == remaining[li - 1]) continue;
        int len = remaining[li];
        remaining.erase(remaining.begin() + li);
        std::vector<int> cyc{leader};
        auto extend = [&](auto&& self) -> void {
            if ((int)cyc.size() == len) {
                for (size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = cyc[(i + 1) % cyc.size()];
                perms_of_type_rec(d, remaining, img, used, fn);
                return;
            }
            for (int x = leader + 1; x < d; ++x) {
                if (used[x]) continue;
                used[x] = true;
                cyc.push_back(x);
                self(self);
                cyc.pop_back();
                used[x] = false;
            }
        };
        extend(extend);
        remaining.insert(remaining.begin() + li, len);
    }
    used[leader] = false;
}

} // namespace

void for_each_permutation_of_type(int d, const Partition& type,
                                  const std::function<void(const Perm&)>& fn) {
    if (type.sum() != d) throw DegenerateError("cycle type does not sum to the degree");
    if (d > degree_cap()) throw DegenerateError("degree exceeds the safety cap");
    std::vector<int> lens = type.parts(); // non-increasing
    std::array<int, kMaxDegree> img{};
    std::array<bool, kMaxDegree> used{};
    perms_of_type_rec(d, lens, img, used, fn);
}

std::vector<Perm> permutations_of_type(int d, const Partition& type) {
    std::vector<Perm> out;
    for_each_permutation_of_type(d, type, [&](const Perm& p) { out.push_back(p); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm> three_cycles(int d) {
    if (d < 3) throw DegenerateError("three-cycles need degree >= 3");
    std::vector<Perm> out;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            for (int c = b + 1; c < d; ++c) {
                out.push_back(Perm::from_cycles(d, {{a + 1, b + 1, c + 1}}));
                out.push_back(Perm::from_cycles(d, {{a + 1, c + 1, b + 1}}));
            }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hnum
