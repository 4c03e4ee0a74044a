#ifndef BESSELMV_PARTITION_HPP
#define BESSELMV_PARTITION_HPP

#include <compare>
#include <string>
#include <vector>

namespace besselmv {

// Weakly decreasing sequence of nonnegative integers, trailing zeros trimmed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return i >= 0 && i < static_cast<int>(parts_.size()) ? parts_[i] : 0; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    // mu_i <= lambda_i for all i (diagram containment).
    bool contained_in(const Partition& lambda) const;

    Partition conjugate() const;

    // nu-hat in the N^n box: nu_hat_i = N - nu_{n-i+1}; involutive.
    Partition complement_in_box(int box_width, int n) const;

    // lambda + (1^n).
    Partition plus_ones(int n) const;

    // Diagram boxes (i, j), 1-based, row-major.
    std::vector<std::pair<int, int>> boxes() const;

    bool operator==(const Partition& o) const = default;
    auto operator<=>(const Partition& o) const = default;  // lexicographic on parts

    std::string str() const;  // "[2,1]"

private:
    std::vector<int> parts_;
};

// True iff mu <= lambda in dominance order. Defined only on equal weights;
// unequal weights are a caller error.
bool dominance_leq(const Partition& mu, const Partition& lambda);

// All partitions with weight <= max_weight and length <= max_length, in
// deterministic order: by weight, then descending lexicographic.
std::vector<Partition> enumerate_partitions(int max_weight, int max_length);

// Partitions of exactly the given weight, length <= max_length, descending lex.
std::vector<Partition> partitions_of_weight(int weight, int max_length);

// All mu contained in lambda (including empty and lambda itself),
// ordered by weight descending, then descending lex.
std::vector<Partition> contained_partitions(const Partition& lambda);

}  // namespace besselmv

#endif
