#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace radix {

// Multiset of (ramification index e, residue degree f) pairs describing how a
// rational prime factors in a number field.  Kept canonical: sorted by (e, f),
// equal pairs merged, counts positive.
struct FactorShape {
    struct Entry {
        long long e = 1;
        long long f = 1;
        long long count = 1;
        auto key() const { return std::make_pair(e, f); }
    };
    std::vector<Entry> entries;

    void add(long long e, long long f, long long count = 1) {
        if (count == 0) return;
        entries.push_back({e, f, count});
    }

    void canonicalize() {
        std::map<std::pair<long long, long long>, long long> acc;
        for (const auto& en : entries) acc[en.key()] += en.count;
        entries.clear();
        for (const auto& [k, c] : acc)
            if (c != 0) entries.push_back({k.first, k.second, c});
    }

    long long degree_sum() const {
        long long s = 0;
        for (const auto& en : entries) s += en.e * en.f * en.count;
        return s;
    }

    long long prime_count() const {
        long long s = 0;
        for (const auto& en : entries) s += en.count;
        return s;
    }

    bool operator==(const FactorShape& other) const {
        FactorShape a = *this, b = other;
        a.canonicalize();
        b.canonicalize();
        return a.entries.size() == b.entries.size() &&
               std::equal(a.entries.begin(), a.entries.end(), b.entries.begin(),
                          [](const Entry& x, const Entry& y) {
                              return x.e == y.e && x.f == y.f && x.count == y.count;
                          });
    }

    std::string str() const {
        FactorShape c = *this;
        c.canonicalize();
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (const auto& en : c.entries) {
            if (!first) os << ", ";
            first = false;
            os << "(" << en.e << "," << en.f << ")x" << en.count;
        }
        os << "}";
        return os.str();
    }
};

} // namespace radix
