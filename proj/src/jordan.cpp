#include "thetalat/jordan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace thetalat {

FiniteGroupTable FiniteGroupTable::from_mul(int n, std::vector<int32_t> mul) {
    if (n <= 0 || mul.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("group table: bad size");
    for (int32_t v : mul)
        if (v < 0 || v >= n)
            throw std::invalid_argument("group table: entry out of range");
    FiniteGroupTable t;
    t.n = n;
    t.mul = std::move(mul);
    // identity
    int id = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = t.at(e, x) == x && t.at(x, e) == x;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id < 0)
        throw std::invalid_argument("group table: no identity");
    t.identity = id;
    // inverses (and cancellation via the latin-square property)
    t.inv.assign(n, -1);
    std::vector<char> seen(n);
    for (int x = 0; x < n; ++x) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int y = 0; y < n; ++y) {
            int v = t.at(x, y);
            if (seen[v])
                throw std::invalid_argument("group table: row is not a permutation");
            seen[v] = 1;
            if (v == id)
                t.inv[x] = y;
        }
        if (t.inv[x] < 0)
            throw std::invalid_argument("group table: missing inverse");
    }
    for (int y = 0; y < n; ++y) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int x = 0; x < n; ++x) {
            int v = t.at(x, y);
            if (seen[v])
                throw std::invalid_argument("group table: column is not a permutation");
            seen[v] = 1;
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xy = t.at(x, y);
            for (int z = 0; z < n; ++z)
                if (t.at(xy, z) != t.at(x, t.at(y, z)))
                    throw std::invalid_argument("group table: not associative");
        }
    return t;
}

FiniteGroupTable make_table(const HeisenbergGroup& h) {
    Int order = h.order();
    if (order > 1 << 20)
        throw std::invalid_argument("group table: order too large");
    const long n = order.get_si();
    std::vector<HeisenbergGroup::Elem> elems = h.enumerate_elements();
    std::map<std::pair<Int, IntVec>, int> index;
    for (long i = 0; i < n; ++i)
        index.emplace(std::make_pair(elems[i].r, elems[i].coords), static_cast<int>(i));
    std::vector<int32_t> mul(static_cast<size_t>(n) * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            HeisenbergGroup::Elem z = h.mul(elems[i], elems[j]);
            mul[static_cast<size_t>(i) * n + j] =
                index.at(std::make_pair(z.r, z.coords));
        }
    return FiniteGroupTable::from_mul(static_cast<int>(n), std::move(mul));
}

FiniteGroupTable make_table(const ThetaGroup& g, const std::vector<ThetaElement>& elems) {
    std::vector<ThetaElement> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("group table: duplicate elements");
    const int n = static_cast<int>(sorted.size());
    auto index_of = [&](const ThetaElement& x) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
        if (it == sorted.end() || !(*it == x))
            throw std::invalid_argument("group table: set is not closed under multiplication");
        return static_cast<int>(it - sorted.begin());
    };
    std::vector<int32_t> mul(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mul[static_cast<size_t>(i) * n + j] = index_of(g.mul(sorted[i], sorted[j]));
    return FiniteGroupTable::from_mul(n, std::move(mul));
}

namespace {

int mask_words(int n) {
    return (n + 63) / 64;
}

bool mask_get(const std::vector<uint64_t>& m, int i) {
    return (m[i >> 6] >> (i & 63)) & 1;
}

void mask_set(std::vector<uint64_t>& m, int i) {
    m[i >> 6] |= uint64_t(1) << (i & 63);
}

bool mask_subset(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    for (size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w])
            return false;
    return true;
}

struct MaskHash {
    size_t operator()(const std::vector<uint64_t>& m) const {
        size_t h = 1469598103934665603ull;
        for (uint64_t w : m) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }
};

Subgroup closure(const FiniteGroupTable& g, std::vector<int> seed) {
    Subgroup s;
    s.mask.assign(mask_words(g.n), 0);
    std::vector<int> work;
    auto push = [&](int x) {
        if (!mask_get(s.mask, x)) {
            mask_set(s.mask, x);
            work.push_back(x);
        }
    };
    push(g.identity);
    for (int x : seed)
        push(x);
    std::vector<int> members;
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        members.push_back(x);
        for (int y : members) {
            push(g.at(x, y));
            push(g.at(y, x));
        }
    }
    s.elems = std::move(members);
    std::sort(s.elems.begin(), s.elems.end());
    return s;
}

std::vector<int> greedy_generators(const FiniteGroupTable& g, const Subgroup& s) {
    std::vector<int> gens;
    Subgroup span = closure(g, {});
    for (int x : s.elems) {
        if (mask_get(span.mask, x))
            continue;
        gens.push_back(x);
        std::vector<int> seed = gens;
        span = closure(g, seed);
        if (span.order() == s.order())
            break;
    }
    return gens;
}

bool is_abelian(const FiniteGroupTable& g, const Subgroup& s) {
    for (size_t i = 0; i < s.elems.size(); ++i)
        for (size_t j = i + 1; j < s.elems.size(); ++j)
            if (g.at(s.elems[i], s.elems[j]) != g.at(s.elems[j], s.elems[i]))
                return false;
    return true;
}

bool is_normal_in(const FiniteGroupTable& g, const Subgroup& a, const Subgroup& b) {
    for (int x : b.elems) {
        int xi = g.inv[x];
        for (int y : a.elems)
            if (!mask_get(a.mask, g.at(g.at(x, y), xi)))
                return false;
    }
    return true;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const FiniteGroupTable& g) {
    std::unordered_map<std::vector<uint64_t>, int, MaskHash> seen;
    std::vector<Subgroup> subs;
    subs.push_back(closure(g, {}));
    seen.emplace(subs[0].mask, 0);
    for (size_t head = 0; head < subs.size(); ++head) {
        std::vector<int> base = subs[head].elems;
        for (int x = 0; x < g.n; ++x) {
            if (mask_get(subs[head].mask, x))
                continue;
            std::vector<int> seed = base;
            seed.push_back(x);
            Subgroup c = closure(g, seed);
            auto [it, inserted] = seen.emplace(c.mask, static_cast<int>(subs.size()));
            if (inserted)
                subs.push_back(std::move(c));
        }
    }
    for (auto& s : subs)
        s.generators = greedy_generators(g, s);
    std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elems.size() != b.elems.size())
            return a.elems.size() < b.elems.size();
        return a.elems < b.elems;
    });
    return subs;
}

JordanReport brute_force_jordan(const FiniteGroupTable& g, int max_order, Exec exec) {
    if (g.n > max_order)
        throw std::invalid_argument("brute force: group order exceeds the bound");
    std::vector<Subgroup> subs = all_subgroups(g);
    const int ns = static_cast<int>(subs.size());
    std::vector<char> abelian(ns);
    for (int i = 0; i < ns; ++i)
        abelian[i] = is_abelian(g, subs[i]) ? 1 : 0;

    // subgroups are sorted by size; scan candidates from the largest down
    std::vector<int> min_index(ns), witness_a(ns);
    auto process = [&](int i) {
        const Subgroup& b = subs[i];
        for (int j = ns - 1; j >= 0; --j) {
            if (!abelian[j] || subs[j].order() > b.order())
                continue;
            if (b.order() % subs[j].order() != 0)
                continue;
            if (!mask_subset(subs[j].mask, b.mask))
                continue;
            if (!is_normal_in(g, subs[j], b))
                continue;
            min_index[i] = b.order() / subs[j].order();
            witness_a[i] = j;
            return;
        }
        throw std::logic_error("brute force: no abelian normal subgroup found");
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < ns; ++i)
            process(i);
    } else {
        for (int i = 0; i < ns; ++i)
            process(i);
    }

    // largest-from-the-top scan is not tie-deterministic across sizes, so pick
    // the first maximum in canonical subgroup order
    int best = 0;
    for (int i = 1; i < ns; ++i)
        if (min_index[i] > min_index[best])
            best = i;
    JordanReport r;
    r.constant = min_index[best];
    r.witness_subgroup = subs[best].generators;
    r.witness_abelian_normal = subs[witness_a[best]].generators;
    if (r.witness_subgroup.empty())
        r.witness_subgroup.push_back(g.identity);
    if (r.witness_abelian_normal.empty())
        r.witness_abelian_normal.push_back(g.identity);
    return r;
}

Int jordan_constant(const AHData& d) {
    AlternatingForm f = make_alternating(alternating_part(d));
    SymplecticData s = symplectic_normal_form(f);
    return s.divisor_product();
}

std::vector<IntVec> maximal_isotropic(const DiscriminantGroup& d) {
    std::vector<IntVec> gens;
    for (size_t i = 0; i < d.divisors.size(); ++i) {
        IntVec v = d.zero();
        v[2 * i] = 1;
        gens.push_back(std::move(v));
    }
    return gens;
}

std::vector<IntVec> subgroup_closure(const DiscriminantGroup& d,
                                     const std::vector<IntVec>& gens) {
    std::map<IntVec, bool> elems;
    elems[d.zero()] = true;
    for (;;) {
        bool grew = false;
        std::vector<IntVec> cur;
        cur.reserve(elems.size());
        for (const auto& [v, _] : elems)
            cur.push_back(v);
        for (const auto& v : cur)
            for (const auto& w : gens)
                if (elems.emplace(d.add(v, w), true).second)
                    grew = true;
        if (!grew)
            break;
    }
    std::vector<IntVec> out;
    out.reserve(elems.size());
    for (const auto& [v, _] : elems)
        out.push_back(v);
    return out;
}

namespace {

// small-integer model of the discriminant group used by the exhaustive
// isotropic enumeration: element index in mixed radix over (d_1, d_1, ...)
struct DiscAmbient {
    std::vector<long> radix;
    long order = 1;
    long pairing_den = 1;  // lcm of the divisors

    explicit DiscAmbient(const DiscriminantGroup& d) {
        for (const auto& di : d.divisors) {
            long v = di.get_si();
            radix.push_back(v);
            radix.push_back(v);
            order *= v * v;
            pairing_den = std::lcm(pairing_den, v);
        }
    }

    std::vector<long> decode(long idx) const {
        std::vector<long> c(radix.size());
        for (size_t i = 0; i < radix.size(); ++i) {
            c[i] = idx % radix[i];
            idx /= radix[i];
        }
        return c;
    }

    long encode(const std::vector<long>& c) const {
        long idx = 0;
        for (size_t i = radix.size(); i-- > 0;)
            idx = idx * radix[i] + c[i];
        return idx;
    }

    long add(long x, long y) const {
        std::vector<long> a = decode(x), b = decode(y);
        for (size_t i = 0; i < a.size(); ++i)
            a[i] = (a[i] + b[i]) % radix[i];
        return encode(a);
    }

    // pairing numerator over pairing_den, reduced mod pairing_den
    long pairing_num(long x, long y) const {
        std::vector<long> a = decode(x), b = decode(y);
        long num = 0;
        for (size_t i = 0; i < radix.size(); i += 2) {
            long scale = pairing_den / radix[i];
            num = (num + scale * (a[i] * b[i + 1] - b[i] * a[i + 1])) % pairing_den;
        }
        return ((num % pairing_den) + pairing_den) % pairing_den;
    }
};

struct IsoSubgroup {
    std::vector<int> elems;
    std::vector<uint64_t> mask;
    std::vector<int> gens;
};

IsoSubgroup iso_extend(const DiscAmbient& amb, const IsoSubgroup& a, int g) {
    IsoSubgroup c;
    c.mask = a.mask;
    c.elems = a.elems;
    long p = g;
    while (p != 0) {
        for (int e : a.elems) {
            long z = amb.add(e, p);
            if (!mask_get(c.mask, static_cast<int>(z))) {
                mask_set(c.mask, static_cast<int>(z));
                c.elems.push_back(static_cast<int>(z));
            }
        }
        p = amb.add(p, g);
    }
    std::sort(c.elems.begin(), c.elems.end());
    c.gens = a.gens;
    c.gens.push_back(g);
    return c;
}

}  // namespace

std::vector<std::vector<IntVec>> isotropic_subgroups(const DiscriminantGroup& d,
                                                     const Int& bound, Exec exec) {
    if (d.order() > bound)
        throw std::invalid_argument("isotropic subgroups: group order exceeds the bound");
    DiscAmbient amb(d);
    const int n = static_cast<int>(amb.order);

    std::unordered_map<std::vector<uint64_t>, int, MaskHash> seen;
    std::vector<IsoSubgroup> subs;
    IsoSubgroup trivial;
    trivial.mask.assign(mask_words(n), 0);
    mask_set(trivial.mask, 0);
    trivial.elems = {0};
    subs.push_back(trivial);
    seen.emplace(trivial.mask, 0);

    // a subgroup of an isotropic subgroup is isotropic, so growing only
    // isotropic subgroups by isotropy-preserving elements finds them all
    for (size_t head = 0; head < subs.size(); ++head) {
        IsoSubgroup cur = subs[head];
        std::vector<int> candidates;
        for (int g = 1; g < n; ++g) {
            if (mask_get(cur.mask, g))
                continue;
            bool iso = true;
            for (int a : cur.gens)
                if (amb.pairing_num(g, a) != 0) {
                    iso = false;
                    break;
                }
            if (iso)
                candidates.push_back(g);
        }
        std::vector<IsoSubgroup> created(candidates.size());
        auto build = [&](size_t k) { created[k] = iso_extend(amb, cur, candidates[k]); };
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
            for (long k = 0; k < static_cast<long>(candidates.size()); ++k)
                build(static_cast<size_t>(k));
        } else {
            for (size_t k = 0; k < candidates.size(); ++k)
                build(k);
        }
        for (auto& c : created) {
            auto [it, inserted] = seen.emplace(c.mask, static_cast<int>(subs.size()));
            if (inserted)
                subs.push_back(std::move(c));
        }
    }

    std::sort(subs.begin(), subs.end(), [](const IsoSubgroup& a, const IsoSubgroup& b) {
        if (a.elems.size() != b.elems.size())
            return a.elems.size() < b.elems.size();
        return a.elems < b.elems;
    });
    std::vector<std::vector<IntVec>> out;
    out.reserve(subs.size());
    for (const auto& s : subs) {
        std::vector<IntVec> elems;
        elems.reserve(s.elems.size());
        for (int e : s.elems) {
            std::vector<long> c = amb.decode(e);
            IntVec v(c.size());
            for (size_t i = 0; i < c.size(); ++i)
                v[i] = c[i];
            elems.push_back(std::move(v));
        }
        out.push_back(std::move(elems));
    }
    return out;
}

bool divisibility_bound(const AlternatingForm& f, const Int& n) {
    if (n < 1)
        throw std::invalid_argument("divisibility bound: n must be positive");
    if (f.e.is_zero())
        throw std::invalid_argument("hypothesis E != 0 fails");
    for (const auto& v : f.e.a)
        if (v % n != 0)
            throw std::invalid_argument("hypothesis E(L,L) in nZ fails");
    SymplecticData s = symplectic_normal_form(f);
    Int prod = s.divisor_product();
    return prod % n == 0 && (prod * prod) % (n * n) == 0;
}

}  // namespace thetalat
