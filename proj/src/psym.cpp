#include "pdg/psym.hpp"

#include <algorithm>
#include <stdexcept>

#include "pdg/fp.hpp"

namespace pdg {

void Composition::validate() const {
    if (parts.empty()) throw std::invalid_argument("not a composition");
    for (int v : parts)
        if (v <= 0) throw std::invalid_argument("not a composition");
}

std::string Composition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

PSymElement PSymElement::one(const Composition& c, uint32_t p) {
    PSymElement f(c, p);
    f.coeffs[std::vector<Partition>(static_cast<size_t>(c.blocks()))] = 1;
    return f;
}

PSymElement PSymElement::schur_tuple(const Composition& c, uint32_t p,
                                     const std::vector<Partition>& tuple,
                                     uint32_t coeff) {
    if (static_cast<int>(tuple.size()) != c.blocks())
        throw std::invalid_argument("tuple size mismatch");
    PSymElement f(c, p);
    for (int i = 0; i < c.blocks(); ++i)
        if (tuple[static_cast<size_t>(i)].rows() > c.part(i)) return f;
    if (coeff % p) f.coeffs[tuple] = coeff % p;
    return f;
}

void PSymElement::add_term(const std::vector<Partition>& tuple, uint32_t c) {
    c %= p;
    if (!c) return;
    auto it = coeffs.find(tuple);
    if (it == coeffs.end()) {
        coeffs[tuple] = c;
    } else {
        it->second = (it->second + c) % p;
        if (!it->second) coeffs.erase(it);
    }
}

static int tuple_degree(const std::vector<Partition>& tuple) {
    int d = 0;
    for (const auto& lam : tuple) d += 2 * lam.size();
    return d;
}

int PSymElement::degree() const {
    if (coeffs.empty()) return -1;
    return tuple_degree(coeffs.begin()->first);
}

bool PSymElement::is_homogeneous() const {
    if (coeffs.empty()) return true;
    int d = tuple_degree(coeffs.begin()->first);
    for (auto& [tuple, c] : coeffs)
        if (tuple_degree(tuple) != d) return false;
    return true;
}

std::string PSymElement::to_string() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (auto& [tuple, c] : coeffs) {
        if (!s.empty()) s += " + ";
        s += std::to_string(c);
        for (size_t i = 0; i < tuple.size(); ++i)
            s += "*pi" + std::to_string(i + 1) + tuple[i].to_string();
    }
    return s;
}

static void check_same(const PSymElement& a, const PSymElement& b) {
    if (a.comp != b.comp || a.p != b.p)
        throw std::invalid_argument("mixed partially-symmetric rings");
}

PSymElement operator+(const PSymElement& a, const PSymElement& b) {
    check_same(a, b);
    PSymElement r = a;
    for (auto& [tuple, c] : b.coeffs) r.add_term(tuple, c);
    return r;
}

PSymElement operator-(const PSymElement& a, const PSymElement& b) {
    check_same(a, b);
    PSymElement r = a;
    for (auto& [tuple, c] : b.coeffs) r.add_term(tuple, a.p - c);
    return r;
}

PSymElement operator*(uint32_t c, const PSymElement& a) {
    PSymElement r(a.comp, a.p);
    c %= a.p;
    for (auto& [tuple, v] : a.coeffs) r.add_term(tuple, c * v);
    return r;
}

PSymElement operator*(const PSymElement& a, const PSymElement& b) {
    check_same(a, b);
    PSymElement r(a.comp, a.p);
    int k = a.comp.blocks();
    for (auto& [ta, ca] : a.coeffs) {
        for (auto& [tb, cb] : b.coeffs) {
            // distribute the blockwise Littlewood-Richardson products
            std::vector<PSymElement> partial;
            PSymElement acc(a.comp, a.p);
            acc.coeffs[std::vector<Partition>(static_cast<size_t>(k))] =
                (ca * cb) % a.p;
            for (int i = 0; i < k; ++i) {
                SymElement prod = multiply_schur(ta[static_cast<size_t>(i)],
                                                 tb[static_cast<size_t>(i)],
                                                 a.comp.part(i), a.p);
                PSymElement next(a.comp, a.p);
                for (auto& [tuple, c] : acc.coeffs) {
                    for (auto& [mu, cm] : prod.coeffs) {
                        auto t = tuple;
                        t[static_cast<size_t>(i)] = mu;
                        next.add_term(t, c * cm);
                    }
                }
                acc = std::move(next);
            }
            for (auto& [tuple, c] : acc.coeffs) r.add_term(tuple, c);
        }
    }
    return r;
}

PSymElement psym_diff(const PSymElement& f) {
    PSymElement r(f.comp, f.p);
    int k = f.comp.blocks();
    for (auto& [tuple, c] : f.coeffs) {
        for (int i = 0; i < k; ++i) {
            SymElement di = diff_schur(tuple[static_cast<size_t>(i)],
                                       f.comp.part(i), f.p);
            for (auto& [mu, cm] : di.coeffs) {
                auto t = tuple;
                t[static_cast<size_t>(i)] = mu;
                r.add_term(t, c * cm);
            }
        }
    }
    return r;
}

PSymElement psym_e1_block(const PSymElement& f, int i) {
    PSymElement r(f.comp, f.p);
    for (auto& [tuple, c] : f.coeffs) {
        SymElement prod = multiply_schur(tuple[static_cast<size_t>(i)],
                                         Partition{1}, f.comp.part(i), f.p);
        for (auto& [mu, cm] : prod.coeffs) {
            auto t = tuple;
            t[static_cast<size_t>(i)] = mu;
            r.add_term(t, c * cm);
        }
    }
    return r;
}

// partitions contained in lam with exactly `total` boxes and at most
// max_rows rows
static std::vector<Partition> sub_partitions(const Partition& lam, int total,
                                             int max_rows) {
    std::vector<Partition> out;
    if (total < 0) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(std::vector<int>(cur));
            return;
        }
        if (row >= max_rows) return;
        int hi = std::min(cap, lam.part(row));
        for (int v = std::min(hi, remaining); v >= 1; --v) {
            cur.push_back(v);
            self(self, row + 1, remaining - v, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, total, total);
    return out;
}

PSymElement embed_schur_segment(const Composition& comp, uint32_t p,
                                const Partition& lam, int first_block,
                                int last_block) {
    if (first_block < 0 || last_block >= comp.blocks() ||
        first_block > last_block)
        throw std::invalid_argument("bad block range");
    int k = comp.blocks();
    PSymElement r(comp, p);

    // per-segment expansion over blocks [blk, last_block]
    auto rec = [&](auto&& self, const Partition& nu, int blk)
        -> std::map<std::vector<Partition>, uint32_t> {
        std::map<std::vector<Partition>, uint32_t> res;
        if (blk == last_block) {
            if (nu.rows() <= comp.part(blk)) res[{nu}] = 1;
            return res;
        }
        int rest_rows = 0;
        for (int j = blk + 1; j <= last_block; ++j) rest_rows += comp.part(j);
        for (int s = 0; s <= nu.size(); ++s) {
            for (const Partition& mu : sub_partitions(nu, s, comp.part(blk))) {
                for (const Partition& ga :
                     sub_partitions(nu, nu.size() - s, rest_rows)) {
                    long long c = lr_coefficient(nu, mu, ga) %
                                  static_cast<long long>(p);
                    if (!c) continue;
                    auto tail = self(self, ga, blk + 1);
                    for (auto& [tt, tc] : tail) {
                        std::vector<Partition> tuple;
                        tuple.reserve(tt.size() + 1);
                        tuple.push_back(mu);
                        tuple.insert(tuple.end(), tt.begin(), tt.end());
                        auto& slot = res[tuple];
                        slot = (slot + static_cast<uint32_t>(c) * tc) % p;
                        if (!slot) res.erase(tuple);
                    }
                }
            }
        }
        return res;
    };

    auto seg = rec(rec, lam, first_block);
    for (auto& [tt, tc] : seg) {
        std::vector<Partition> tuple(static_cast<size_t>(k));
        for (int j = first_block; j <= last_block; ++j)
            tuple[static_cast<size_t>(j)] = tt[static_cast<size_t>(j - first_block)];
        r.add_term(tuple, tc);
    }
    return r;
}

PSymElement sym_to_psym(const SymElement& f, const Composition& comp) {
    if (comp.total() != f.n)
        throw std::invalid_argument("composition size mismatch");
    PSymElement r(comp, f.p);
    for (auto& [lam, c] : f.coeffs)
        r = r + c * embed_schur_segment(comp, f.p, lam, 0, comp.blocks() - 1);
    return r;
}

PolyElement psym_to_monomials(const PSymElement& f) {
    int n = f.comp.total();
    PolyElement r(n, f.p);
    for (auto& [tuple, c] : f.coeffs) {
        PolyElement term = PolyElement::constant(n, f.p, c);
        for (int i = 0; i < f.comp.blocks(); ++i) {
            PolyElement blk = schur_to_monomials(tuple[static_cast<size_t>(i)],
                                                 f.comp.part(i), f.p);
            PolyElement lifted(n, f.p);
            int off = f.comp.offset(i);
            for (auto& [e, v] : blk.terms) {
                std::vector<int> ee(static_cast<size_t>(n), 0);
                std::copy(e.begin(), e.end(),
                          ee.begin() + off);
                lifted.add_term(ee, v);
            }
            term = term * lifted;
        }
        r = r + term;
    }
    return r;
}

SymElement divided_trace(const PSymElement& f) {
    int n = f.comp.total();
    int k = f.comp.blocks();
    SymElement r(n, f.p);
    Fp F(f.p);
    std::vector<int> expo(static_cast<size_t>(n));
    for (auto& [tuple, c] : f.coeffs) {
        // exponent of x_j inside block i: lambda_i[row] + (a_i - 1 - row),
        // the block Schur times its staircase
        for (int i = 0; i < k; ++i) {
            int a = f.comp.part(i), off = f.comp.offset(i);
            for (int row = 0; row < a; ++row)
                expo[static_cast<size_t>(off + row)] =
                    tuple[static_cast<size_t>(i)].part(row) + (a - 1 - row);
        }
        // full divided difference of x^expo: zero on repeats, otherwise
        // the sign of the descending sort times the Schur of sorted - delta
        std::vector<std::pair<int, int>> tagged(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) tagged[static_cast<size_t>(j)] = {expo[static_cast<size_t>(j)], j};
        std::sort(tagged.begin(), tagged.end(),
                  [](const auto& x, const auto& y) { return x.first > y.first; });
        bool repeat = false;
        for (int j = 0; j + 1 < n; ++j)
            if (tagged[static_cast<size_t>(j)].first == tagged[static_cast<size_t>(j) + 1].first) {
                repeat = true;
                break;
            }
        if (repeat) continue;
        // parity of the permutation sending position j to its sorted slot
        int inversions = 0;
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                if (tagged[static_cast<size_t>(x)].second > tagged[static_cast<size_t>(y)].second)
                    ++inversions;
        std::vector<int> parts(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j)
            parts[static_cast<size_t>(j)] = tagged[static_cast<size_t>(j)].first - (n - 1 - j);
        Partition mu(std::move(parts));
        uint32_t coeff = (inversions % 2) ? F.neg(c) : c;
        SymElement term = SymElement::schur(n, f.p, mu, coeff);
        r = r + term;
    }
    return r;
}

} // namespace pdg
