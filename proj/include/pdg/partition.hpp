#pragma once
// Integer partitions with box-complement and transpose helpers.

#include <string>
#include <vector>

namespace pdg {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    Partition() = default;
    Partition(std::initializer_list<int> v) : parts(v) { normalize(); }
    explicit Partition(std::vector<int> v) : parts(std::move(v)) { normalize(); }

    void normalize();  // strip trailing zeros, validate weakly decreasing

    int size() const {
        int s = 0;
        for (int v : parts) s += v;
        return s;
    }
    int rows() const { return static_cast<int>(parts.size()); }
    int part(int i) const {  // 0-indexed, zero beyond the last row
        return i < rows() ? parts[static_cast<size_t>(i)] : 0;
    }
    bool empty() const { return parts.empty(); }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    bool fits_in(int a, int b) const {  // at most a rows, parts <= b
        return rows() <= a && (parts.empty() || parts[0] <= b);
    }
    bool contains(const Partition& mu) const {
        for (int i = 0; i < mu.rows(); ++i)
            if (part(i) < mu.part(i)) return false;
        return true;
    }

    Partition transpose() const;
    // rotated complement inside an a x b box, then transpose; lands in P(b,a)
    Partition box_complement(int a, int b) const;

    std::string to_string() const;
};

// all partitions fitting in an a x b box, sorted by (size, parts)
std::vector<Partition> partitions_in_box(int a, int b);

// all partitions nu with |nu| = total, nu containing lambda, at most
// max_rows rows, and nu_1 <= width_cap
std::vector<Partition> partitions_over(const Partition& lambda, int total,
                                       int max_rows, int width_cap);

} // namespace pdg
