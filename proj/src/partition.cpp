#include "besselmv/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace besselmv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    for (int p : parts_)
        if (p < 0) throw std::invalid_argument("partition parts must be nonnegative");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contained_in(const Partition& lambda) const {
    for (int i = 0; i < length(); ++i)
        if (parts_[i] > lambda.part(i)) return false;
    return true;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(parts_[0], 0);
    for (int j = 1; j <= parts_[0]; ++j)
        for (int p : parts_) conj[j - 1] += (p >= j) ? 1 : 0;
    return Partition(std::move(conj));
}

Partition Partition::complement_in_box(int box_width, int n) const {
    if (length() > n || (length() > 0 && parts_[0] > box_width))
        throw std::invalid_argument("partition does not fit in the " + std::to_string(box_width) + "^" +
                                    std::to_string(n) + " box");
    std::vector<int> comp(n);
    for (int i = 1; i <= n; ++i) comp[i - 1] = box_width - part(n - i);
    return Partition(std::move(comp));
}

Partition Partition::plus_ones(int n) const {
    if (length() > n) throw std::invalid_argument("plus_ones: partition longer than n");
    std::vector<int> p(n, 1);
    for (int i = 0; i < length(); ++i) p[i] += parts_[i];
    return Partition(std::move(p));
}

std::vector<std::pair<int, int>> Partition::boxes() const {
    std::vector<std::pair<int, int>> b;
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= parts_[i - 1]; ++j) b.emplace_back(i, j);
    return b;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight())
        throw std::invalid_argument("dominance order is defined on partitions of equal weight");
    int pm = 0, pl = 0;
    const int len = std::max(mu.length(), lambda.length());
    for (int i = 0; i < len; ++i) {
        pm += mu.part(i);
        pl += lambda.part(i);
        if (pm > pl) return false;
    }
    return true;
}

namespace {

void gen_partitions(int remaining, int max_part, int max_length, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_length == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, max_length - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of_weight(int weight, int max_length) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(weight, weight, max_length, cur, out);
    return out;  // recursion emits descending lex order
}

std::vector<Partition> enumerate_partitions(int max_weight, int max_length) {
    if (max_weight < 0 || max_length < 0) throw std::invalid_argument("negative enumeration bounds");
    std::vector<Partition> out;
    out.emplace_back();
    for (int w = 1; w <= max_weight; ++w) {
        auto pw = partitions_of_weight(w, max_length);
        out.insert(out.end(), pw.begin(), pw.end());
    }
    return out;
}

std::vector<Partition> contained_partitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    // All mu with mu_i <= min(lambda_i, mu_{i-1}).
    auto rec = [&](auto&& self, int row, int upper) -> void {
        if (row == lambda.length()) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(upper, lambda.part(row)); p >= 0; --p) {
            if (p > 0) cur.push_back(p);
            self(self, p > 0 ? row + 1 : lambda.length(), p);
            if (p > 0) cur.pop_back();
        }
    };
    rec(rec, 0, lambda.part(0));
    std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
        if (x.weight() != y.weight()) return x.weight() > y.weight();
        return x.parts() > y.parts();
    });
    return out;
}

}  // namespace besselmv
