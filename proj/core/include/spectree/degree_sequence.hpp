#pragma once

#include <string>
#include <vector>

namespace spectree {

// Nonincreasing degree sequence realizable by a tree: positive entries
// summing to 2(n-1), or the singleton sequence (0) for n = 1.
class DegreeSequence {
public:
    // Sorts `degrees` nonincreasing and validates tree-graphicality.
    explicit DegreeSequence(std::vector<int> degrees);

    // Accepts comma-separated entries with optional `^k` repetition,
    // e.g. "4,3,3,2,1^5". Entry order is irrelevant.
    static DegreeSequence parse(const std::string& text);

    int n() const { return static_cast<int>(degrees_.size()); }
    int operator[](int i) const { return degrees_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& degrees() const { return degrees_; }
    long long sum() const;

    // Canonical form: fully expanded, nonincreasing, comma-separated.
    std::string to_string() const;

    bool operator==(const DegreeSequence&) const = default;

private:
    std::vector<int> degrees_;
};

// True iff some tree realizes `degrees` (order irrelevant): n = 1 with the
// single entry 0, or n >= 2 with all entries positive summing to 2(n-1).
bool is_tree_graphic(const std::vector<int>& degrees);

// True iff pi is majorized by pi_prime: every prefix sum of pi_prime
// dominates the corresponding prefix sum of pi, with equal totals.
// Throws std::invalid_argument on length or total mismatch.
bool majorized_by(const DegreeSequence& pi, const DegreeSequence& pi_prime);

// Strict variant: majorized and not equal.
bool strictly_majorized_by(const DegreeSequence& pi, const DegreeSequence& pi_prime);

// True iff the sorted sequences differ in exactly two positions, one entry
// raised by one and another lowered by one.
bool is_unit_transfer(const DegreeSequence& a, const DegreeSequence& b);

// Chain pi = c_0, c_1, ..., c_m = pi_prime of tree degree sequences in
// which each step is a single unit transfer and every element is strictly
// majorized by the next. Requires pi strictly majorized by pi_prime.
std::vector<DegreeSequence> majorization_chain(const DegreeSequence& pi,
                                               const DegreeSequence& pi_prime);

// Checks the chain contract above for an externally produced chain.
bool validate_majorization_chain(const DegreeSequence& pi,
                                 const DegreeSequence& pi_prime,
                                 const std::vector<DegreeSequence>& chain);

}  // namespace spectree
