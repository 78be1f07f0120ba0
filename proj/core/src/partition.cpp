/* Partition arithmetic and the canonical axis orders. */

#include "branchq/partition.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace branchq {

namespace {

void validate(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

} // namespace

Partition::Partition(std::vector<int> p) : parts(std::move(p)) { validate(parts); }

Partition::Partition(std::initializer_list<int> p) : parts(p) { validate(parts); }

int Partition::size() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
}

int Partition::part(int i) const {
    return (i >= 0 && i < length()) ? parts[i] : 0;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    out += ')';
    return out;
}

std::string PartitionPair::to_string() const {
    return "(" + plus.to_string() + "," + minus.to_string() + ")";
}

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    // first part largest and tried in decreasing order = reverse-lex overall
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) {
            Partition p;
            p.parts = cur;
            out.push_back(std::move(p));
            return;
        }
        for (int k = std::min(rem, maxp); k >= 1; --k) {
            cur.push_back(k);
            self(self, rem - k, k);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

Partition conjugate(const Partition& lam) {
    Partition out;
    if (lam.parts.empty()) return out;
    int cols = lam.parts[0];
    out.parts.reserve(cols);
    for (int c = 1; c <= cols; ++c) {
        int h = 0;
        for (int v : lam.parts)
            if (v >= c) ++h;
        out.parts.push_back(h);
    }
    return out;
}

bool contains(const Partition& lam, const Partition& mu) {
    if (mu.length() > lam.length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.parts[i] > lam.parts[i]) return false;
    return true;
}

Partition doubled(const Partition& lam) {
    Partition out;
    out.parts.reserve(lam.parts.size());
    for (int v : lam.parts) out.parts.push_back(2 * v);
    return out;
}

std::vector<PartitionPair> pair_axis(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("pair_axis: negative degree");
    std::vector<PartitionPair> out;
    // blocks i = 0..min(p,q): sizes (p-i, q-i), lambda-major inside a block
    for (int i = 0; i <= std::min(p, q); ++i) {
        for (const Partition& lam : partitions_of(p - i))
            for (const Partition& mu : partitions_of(q - i))
                out.push_back(PartitionPair{lam, mu});
    }
    return out;
}

std::vector<Partition> parity_axis(int p) {
    if (p < 0) throw std::invalid_argument("parity_axis: negative degree");
    std::vector<Partition> out;
    for (int s = p; s >= 0; s -= 2)
        for (const Partition& lam : partitions_of(s))
            out.push_back(lam);
    return out;
}

namespace {

// shared cursor-based scanner for "(3,1)" and "((3,1),(2))"
struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw std::invalid_argument("partition parse error: expected '" + std::string(1, c) +
                                        "' in '" + std::string(text) + "'");
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    int number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
            throw std::invalid_argument("partition parse error: expected digit in '" +
                                        std::string(text) + "'");
        return std::stoi(std::string(text.substr(start, pos - start)));
    }
    Partition partition() {
        expect('(');
        std::vector<int> parts;
        if (!peek(')')) {
            parts.push_back(number());
            while (eat(',')) parts.push_back(number());
        }
        expect(')');
        return Partition(std::move(parts));
    }
    void done() {
        skip_ws();
        if (pos != text.size())
            throw std::invalid_argument("partition parse error: trailing text in '" +
                                        std::string(text) + "'");
    }
};

} // namespace

Partition parse_partition(std::string_view text) {
    Scanner s{text};
    Partition p = s.partition();
    s.done();
    return p;
}

PartitionPair parse_partition_pair(std::string_view text) {
    Scanner s{text};
    s.expect('(');
    Partition plus = s.partition();
    s.expect(',');
    Partition minus = s.partition();
    s.expect(')');
    s.done();
    return PartitionPair{std::move(plus), std::move(minus)};
}

} // namespace branchq
