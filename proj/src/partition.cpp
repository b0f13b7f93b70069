#include "pdg/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdg {

void Partition::normalize() {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
            throw std::invalid_argument("not a partition");
    }
}

Partition Partition::transpose() const {
    Partition t;
    if (parts.empty()) return t;
    t.parts.resize(static_cast<size_t>(parts[0]));
    for (int j = 0; j < parts[0]; ++j) {
        int cnt = 0;
        for (int v : parts)
            if (v > j) ++cnt;
        t.parts[static_cast<size_t>(j)] = cnt;
    }
    return t;
}

Partition Partition::box_complement(int a, int b) const {
    if (!fits_in(a, b)) throw std::invalid_argument("partition exceeds box");
    std::vector<int> comp(static_cast<size_t>(a));
    for (int i = 0; i < a; ++i) comp[static_cast<size_t>(i)] = b - part(a - 1 - i);
    return Partition(std::move(comp)).transpose();
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

static void gen_box(int rows_left, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    out.push_back(Partition(cur));
    if (rows_left == 0) return;
    for (int v = max_part; v >= 1; --v) {
        cur.push_back(v);
        gen_box(rows_left - 1, v, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_in_box(int a, int b) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_box(a, b, cur, out);
    std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.parts < y.parts;
    });
    return out;
}

static void gen_over(const Partition& lam, int row, int remaining, int prev,
                     int max_rows, std::vector<int>& cur,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        std::vector<int> v = cur;
        Partition nu(std::move(v));
        if (nu.contains(lam)) out.push_back(std::move(nu));
        return;
    }
    if (row >= max_rows) return;
    int lo = lam.part(row);
    for (int v = std::min(prev, remaining); v >= std::max(lo, 1); --v) {
        if (v * (max_rows - row) < remaining) break;
        cur.push_back(v);
        gen_over(lam, row + 1, remaining - v, v, max_rows, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_over(const Partition& lambda, int total,
                                       int max_rows, int width_cap) {
    std::vector<Partition> out;
    if (total < lambda.size() || lambda.rows() > max_rows) return out;
    if (total == 0) {
        out.push_back(Partition());
        return out;
    }
    std::vector<int> cur;
    gen_over(lambda, 0, total, width_cap, max_rows, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace pdg
