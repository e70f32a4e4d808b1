#include "spectree/degree_sequence.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace spectree {

namespace {

// Guard against absurd `^k` repetition counts blowing up memory.
constexpr long long kMaxEntries = 1'000'000;

[[noreturn]] void bad_sequence(const std::string& why) {
    throw std::invalid_argument("degree sequence: " + why);
}

int parse_int(std::string_view token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        bad_sequence("malformed entry '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    std::sort(degrees_.begin(), degrees_.end(), std::greater<int>());
    if (!is_tree_graphic(degrees_)) {
        std::string shown;
        for (std::size_t i = 0; i < degrees_.size() && i < 16; ++i) {
            if (i) shown += ',';
            shown += std::to_string(degrees_[i]);
        }
        if (degrees_.size() > 16) shown += ",...";
        bad_sequence("(" + shown + ") is not realizable by a tree");
    }
}

DegreeSequence DegreeSequence::parse(const std::string& text) {
    std::vector<int> entries;
    std::size_t pos = 0;
    if (text.empty()) bad_sequence("empty input");
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string_view token(text.data() + pos, comma - pos);
        if (token.empty()) bad_sequence("empty entry");
        int value = 0;
        long long repeat = 1;
        if (std::size_t caret = token.find('^'); caret != std::string_view::npos) {
            value = parse_int(token.substr(0, caret));
            repeat = parse_int(token.substr(caret + 1));
            if (repeat <= 0) bad_sequence("repetition count must be positive");
        } else {
            value = parse_int(token);
        }
        if (static_cast<long long>(entries.size()) + repeat > kMaxEntries) {
            bad_sequence("too many entries");
        }
        entries.insert(entries.end(), static_cast<std::size_t>(repeat), value);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return DegreeSequence(std::move(entries));
}

long long DegreeSequence::sum() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
}

std::string DegreeSequence::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(degrees_[i]);
    }
    return out;
}

bool is_tree_graphic(const std::vector<int>& degrees) {
    const auto n = static_cast<long long>(degrees.size());
    if (n == 0) return false;
    if (n == 1) return degrees[0] == 0;
    long long total = 0;
    for (int d : degrees) {
        if (d < 1) return false;
        total += d;
    }
    return total == 2 * (n - 1);
}

bool majorized_by(const DegreeSequence& pi, const DegreeSequence& pi_prime) {
    if (pi.n() != pi_prime.n()) {
        throw std::invalid_argument("majorization: length mismatch");
    }
    if (pi.sum() != pi_prime.sum()) {
        throw std::invalid_argument("majorization: total mismatch");
    }
    long long lhs = 0;
    long long rhs = 0;
    for (int i = 0; i < pi.n(); ++i) {
        lhs += pi[i];
        rhs += pi_prime[i];
        if (lhs > rhs) return false;
    }
    return true;
}

bool strictly_majorized_by(const DegreeSequence& pi, const DegreeSequence& pi_prime) {
    return majorized_by(pi, pi_prime) && !(pi == pi_prime);
}

bool is_unit_transfer(const DegreeSequence& a, const DegreeSequence& b) {
    if (a.n() != b.n() || a == b) return false;
    const std::vector<int>& av = a.degrees();
    const std::vector<int>& bv = b.degrees();
    for (std::size_t i = 0; i < av.size(); ++i) {
        for (std::size_t j = 0; j < av.size(); ++j) {
            if (i == j) continue;
            std::vector<int> c = av;
            c[i] += 1;
            c[j] -= 1;
            std::sort(c.begin(), c.end(), std::greater<int>());
            if (c == bv) return true;
        }
    }
    return false;
}

std::vector<DegreeSequence> majorization_chain(const DegreeSequence& pi,
                                               const DegreeSequence& pi_prime) {
    if (!strictly_majorized_by(pi, pi_prime)) {
        throw std::invalid_argument(
            "majorization chain: first sequence must be strictly majorized by the second");
    }
    std::vector<DegreeSequence> chain;
    chain.push_back(pi);
    std::vector<int> cur = pi.degrees();
    const std::vector<int>& target = pi_prime.degrees();
    while (cur != target) {
        // Transfer one unit to the first position where cur falls short of
        // the target, taken from the first later position where cur exceeds
        // it. Moving mass frontward keeps every prefix sum sandwiched
        // between the endpoints', so each step is strictly majorized by the
        // target and strictly majorizes its predecessor.
        std::size_t deficit = 0;
        while (deficit < cur.size() && cur[deficit] >= target[deficit]) ++deficit;
        std::size_t excess = deficit + 1;
        while (excess < cur.size() && cur[excess] <= target[excess]) ++excess;
        if (deficit >= cur.size() || excess >= cur.size()) {
            throw std::logic_error("majorization chain: no transfer found");
        }
        cur[deficit] += 1;
        cur[excess] -= 1;
        std::sort(cur.begin(), cur.end(), std::greater<int>());
        chain.emplace_back(cur);
    }
    return chain;
}

bool validate_majorization_chain(const DegreeSequence& pi,
                                 const DegreeSequence& pi_prime,
                                 const std::vector<DegreeSequence>& chain) {
    if (chain.size() < 2) return false;
    if (!(chain.front() == pi) || !(chain.back() == pi_prime)) return false;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (!is_unit_transfer(chain[i], chain[i + 1])) return false;
        if (!strictly_majorized_by(chain[i], chain[i + 1])) return false;
    }
    return true;
}

}  // namespace spectree
