#include "asq/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

namespace asq {

namespace {

// ---------------------------------------------------------------------------
// small integer utilities (u64 fast paths)
// ---------------------------------------------------------------------------

std::uint64_t isqrt_u64(std::uint64_t v) {
    std::uint64_t s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

bool is_square_u64(std::uint64_t v, std::uint64_t* root = nullptr) {
    std::uint64_t s = isqrt_u64(v);
    if (root) *root = s;
    return s * s == v;
}

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1 << 16;
        std::vector<bool> comp(limit, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < limit; ++i) {
            if (comp[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j < limit; j += i) comp[j] = true;
        }
        return out;
    }();
    return primes;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % mod);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t acc = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) acc = mulmod_u64(acc, base, mod);
        base = mulmod_u64(base, base, mod);
        exp >>= 1;
    }
    return acc;
}

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t pollard_brent_u64(std::uint64_t n) {
    // n odd composite, no factor < 2^16.
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t power = 1, lam = 1;
        while (d == 1) {
            if (power == lam) {
                x = y;
                power <<= 1;
                lam = 0;
            }
            y = f(y);
            ++lam;
            std::uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factorize_u64_into(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
    for (std::uint32_t p : small_primes()) {
        if (std::uint64_t(p) * p > n) break;
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = pollard_brent_u64(n);
    factorize_u64_into(d, out);
    factorize_u64_into(n / d, out);
}

std::vector<std::uint64_t> divisors_u64(std::uint64_t n) {
    std::map<std::uint64_t, unsigned> fac;
    if (n > 1) factorize_u64_into(n, fac);
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, e] : fac) {
        const std::size_t base = divs.size();
        std::uint64_t pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Run fn(chunk_index, lo, hi) over [lo0, hi0] split into contiguous chunks.
// Chunks are claimed from an atomic counter, so results keyed by chunk index
// merge deterministically for any worker count.
void run_chunked(std::uint64_t lo0, std::uint64_t hi0, int workers, std::uint64_t chunk_size,
                 const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn) {
    if (hi0 < lo0) return;
    const std::uint64_t span = hi0 - lo0 + 1;
    const std::size_t n_chunks = static_cast<std::size_t>((span + chunk_size - 1) / chunk_size);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            const std::size_t c = next.fetch_add(1);
            if (c >= n_chunks) return;
            const std::uint64_t lo = lo0 + c * chunk_size;
            const std::uint64_t hi = std::min(hi0, lo + chunk_size - 1);
            try {
                fn(c, lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failed.load()) std::rethrow_exception(error);
}

// ---------------------------------------------------------------------------
// triple enumeration core
// ---------------------------------------------------------------------------

struct RawTriple {
    std::uint32_t n1, n2, n3;
};

// Shared second phase: given per-index sorted partner lists (partners >= own
// index only), intersect and finish with the triple-sum membership test.
template <class TripleSumMember>
std::vector<RawTriple> finish_triples(std::uint64_t nmin, std::uint64_t x,
                                      const std::vector<std::vector<std::uint32_t>>& adj,
                                      int workers, TripleSumMember&& member3) {
    std::vector<std::vector<RawTriple>> per_chunk;
    const std::uint64_t chunk = 256;
    const std::size_t n_chunks =
        static_cast<std::size_t>((x - nmin + chunk) / chunk);
    per_chunk.resize(n_chunks);
    run_chunked(nmin, x, workers, chunk, [&](std::size_t ci, std::uint64_t lo, std::uint64_t hi) {
        auto& out = per_chunk[ci];
        for (std::uint64_t n1 = lo; n1 <= hi; ++n1) {
            const auto& row1 = adj[n1];
            for (std::size_t i = 0; i < row1.size(); ++i) {
                const std::uint32_t n2 = row1[i];
                const auto& row2 = adj[n2];
                // candidates n3 >= n2 common to both partner lists
                std::size_t a = i, b = 0;
                while (a < row1.size() && b < row2.size()) {
                    if (row1[a] < row2[b]) {
                        ++a;
                    } else if (row2[b] < row1[a]) {
                        ++b;
                    } else {
                        const std::uint32_t n3 = row1[a];
                        if (member3(n1, n2, n3))
                            out.push_back({static_cast<std::uint32_t>(n1), n2, n3});
                        ++a;
                        ++b;
                    }
                }
            }
        }
    });
    std::vector<RawTriple> triples;
    for (auto& v : per_chunk) {
        triples.insert(triples.end(), v.begin(), v.end());
        v.clear();
    }
    return triples;
}

struct ScanStats {
    std::uint64_t pair_tests = 0;
    std::uint64_t edges = 0;
};

template <class PairMember>
std::vector<std::vector<std::uint32_t>> build_adjacency(std::uint64_t nmin, std::uint64_t x,
                                                        int workers, std::uint64_t max_edges,
                                                        ScanStats& stats, PairMember&& member2) {
    std::vector<std::vector<std::uint32_t>> adj(x + 1);
    std::atomic<std::uint64_t> pair_tests{0}, edges{0};
    const std::uint64_t chunk = 64;
    run_chunked(nmin, x, workers, chunk, [&](std::size_t, std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t local_tests = 0;
        for (std::uint64_t n1 = lo; n1 <= hi; ++n1) {
            auto& row = adj[n1];
            for (std::uint64_t n2 = n1; n2 <= x; ++n2) {
                ++local_tests;
                if (member2(n1, n2)) row.push_back(static_cast<std::uint32_t>(n2));
            }
            const std::uint64_t total = edges.fetch_add(row.size()) + row.size();
            if (total > max_edges)
                throw ResourceError("enumeration exceeded the compatible-pair budget");
        }
        pair_tests.fetch_add(local_tests);
    });
    stats.pair_tests = pair_tests.load();
    stats.edges = edges.load();
    return adj;
}

EnumReport finalize_report(const Rational& alpha, std::uint64_t x, bool ceiling,
                           const std::vector<RawTriple>& raw,
                           const std::vector<BigInt>& values_by_index, std::uint64_t nmin,
                           ScanStats stats, double wall, int workers) {
    EnumReport rep;
    rep.alpha = alpha;
    rep.x = x;
    rep.ceiling = ceiling;
    rep.pair_tests = stats.pair_tests;
    rep.edge_count = stats.edges;
    rep.wall_seconds = wall;
    rep.workers = workers;
    rep.index_triples.reserve(raw.size());
    std::map<ValueTriple, std::uint64_t> first_seen;
    for (const auto& t : raw) {
        rep.index_triples.push_back(IndexTriple{t.n1, t.n2, t.n3});
        ValueTriple vt{values_by_index[t.n1 - nmin], values_by_index[t.n2 - nmin],
                       values_by_index[t.n3 - nmin]};
        auto [it, inserted] = first_seen.emplace(std::move(vt), t.n3);
        if (!inserted && t.n3 < it->second) it->second = t.n3;
    }
    std::sort(rep.index_triples.begin(), rep.index_triples.end());
    rep.value_triples.reserve(first_seen.size());
    rep.first_x.reserve(first_seen.size());
    for (auto& [vt, fx] : first_seen) {
        rep.value_triples.push_back(vt);
        rep.first_x.push_back(fx);
    }
    return rep;
}

EnumReport enum_triples(const Rational& alpha, std::uint64_t x, bool ceiling,
                        const EnumOptions& opt) {
    if (!(alpha > 0 && alpha <= 1))
        throw std::domain_error("enum: alpha must lie in (0,1]");
    const BigInt nmin_big = ceiling ? BigInt(1) : min_witness_index(alpha);
    if (BigInt(static_cast<unsigned long>(x)) < nmin_big || x < 2)
        throw std::domain_error("enum: x must be at least the smallest admissible witness");
    const std::uint64_t nmin = nmin_big.get_ui();
    const int workers = std::max(1, opt.workers);
    const auto t0 = std::chrono::steady_clock::now();

    // Fast path: all values and interval endpoints fit comfortably in u64.
    bool fast = num(alpha).fits_ulong_p() && den(alpha).fits_ulong_p() && x <= (1u << 30);
    if (fast) {
        const std::uint64_t p = num(alpha).get_ui(), q = den(alpha).get_ui();
        const __uint128_t worst = (__uint128_t)3 * p * x * x + q + 2;
        fast = worst < (__uint128_t(1) << 63);
    }

    std::vector<BigInt> values_by_index(x - nmin + 1);
    std::vector<RawTriple> raw;
    ScanStats stats;

    if (fast) {
        const std::uint64_t p = num(alpha).get_ui(), q = den(alpha).get_ui();
        std::vector<std::uint64_t> val(x + 1, 0);
        for (std::uint64_t n = nmin; n <= x; ++n) {
            const std::uint64_t pn2 = p * n * n;
            val[n] = ceiling ? (pn2 + q - 1) / q : pn2 / q;
            values_by_index[n - nmin] = BigInt(static_cast<unsigned long>(val[n]));
        }
        const std::uint64_t vmax3 = 3 * val[x];
        auto member_direct = [p, q, ceiling](std::uint64_t m) {
            std::uint64_t lo, hi;
            if (ceiling) {
                lo = (q * (m - 1)) / p + 1;
                hi = (q * m) / p;
            } else {
                lo = (q * m + p - 1) / p;
                hi = (q * (m + 1) - 1) / p;
            }
            if (lo > hi) return false;
            std::uint64_t s = isqrt_u64(lo);
            if (s * s < lo) ++s;
            return s * s <= hi;
        };

        std::optional<MembershipCache> cache;
        if (vmax3 + 1 <= opt.cache_bits_limit)
            cache.emplace(alpha, vmax3, ceiling);

        if (cache) {
            const MembershipCache& c = *cache;
            const std::uint64_t* v = val.data();
            auto adj = build_adjacency(nmin, x, workers, opt.max_edges, stats,
                                       [&c, v](std::uint64_t a, std::uint64_t b) {
                                           return c.contains(v[a] + v[b]);
                                       });
            raw = finish_triples(nmin, x, adj, workers,
                                 [&c, v](std::uint64_t a, std::uint64_t b, std::uint64_t d) {
                                     return c.contains(v[a] + v[b] + v[d]);
                                 });
        } else {
            const std::uint64_t* v = val.data();
            auto adj = build_adjacency(nmin, x, workers, opt.max_edges, stats,
                                       [&, v](std::uint64_t a, std::uint64_t b) {
                                           return member_direct(v[a] + v[b]);
                                       });
            raw = finish_triples(nmin, x, adj, workers,
                                 [&, v](std::uint64_t a, std::uint64_t b, std::uint64_t d) {
                                     return member_direct(v[a] + v[b] + v[d]);
                                 });
        }
    } else {
        // Exact generic path for awkward alpha (huge numerators/denominators).
        for (std::uint64_t n = nmin; n <= x; ++n)
            values_by_index[n - nmin] =
                ceiling ? ceil_mul_sq(alpha, BigInt(static_cast<unsigned long>(n)))
                        : floor_mul_sq(alpha, BigInt(static_cast<unsigned long>(n)));
        auto member = [&](const BigInt& m) {
            return (ceiling ? in_Sbar(alpha, m) : in_S(alpha, m)).member;
        };
        auto adj = build_adjacency(
            nmin, x, workers, opt.max_edges, stats, [&](std::uint64_t a, std::uint64_t b) {
                return member(values_by_index[a - nmin] + values_by_index[b - nmin]);
            });
        raw = finish_triples(nmin, x, adj, workers,
                             [&](std::uint64_t a, std::uint64_t b, std::uint64_t d) {
                                 return member(values_by_index[a - nmin] +
                                               values_by_index[b - nmin] +
                                               values_by_index[d - nmin]);
                             });
    }

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return finalize_report(alpha, x, ceiling, raw, values_by_index, nmin, stats, wall, workers);
}

}  // namespace

std::vector<std::pair<std::uint64_t, std::uint64_t>> EnumReport::step_points() const {
    std::vector<std::uint64_t> fx = first_x;
    std::sort(fx.begin(), fx.end());
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
    pts.emplace_back(0, 0);
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < fx.size();) {
        std::size_t j = i;
        while (j < fx.size() && fx[j] == fx[i]) ++j;
        count += j - i;
        pts.emplace_back(fx[i], count);
        i = j;
    }
    if (pts.back().first != x) pts.emplace_back(x, count);
    return pts;
}

EnumReport enum_T(const Rational& alpha, std::uint64_t x, const EnumOptions& opt) {
    return enum_triples(alpha, x, false, opt);
}

EnumReport enum_Tbar(const Rational& alpha, std::uint64_t x, const EnumOptions& opt) {
    return enum_triples(alpha, x, true, opt);
}

// ---------------------------------------------------------------------------
// variant bricks
// ---------------------------------------------------------------------------

std::vector<IndexTriple> enum_V(std::uint64_t x, const EnumOptions& opt) {
    if (x < 2) throw std::domain_error("enum_V: x must be >= 2");
    const int workers = std::max(1, opt.workers);

    // Smallest-prime-factor sieve up to x+1 makes factoring n3^2 - 1 =
    // (n3-1)(n3+1) immediate.
    std::vector<std::uint32_t> spf(x + 2, 0);
    for (std::uint64_t i = 2; i <= x + 1; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= x + 1; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
    auto spf_factor = [&](std::uint64_t v, std::map<std::uint64_t, unsigned>& out) {
        while (v > 1) {
            const std::uint64_t p = spf[v];
            ++out[p];
            v /= p;
        }
    };

    std::vector<std::vector<IndexTriple>> per_chunk;
    const std::uint64_t chunk = 1024;
    per_chunk.resize(static_cast<std::size_t>((x - 2 + chunk) / chunk));
    run_chunked(2, x, workers, chunk, [&](std::size_t ci, std::uint64_t lo, std::uint64_t hi) {
        auto& out = per_chunk[ci];
        std::vector<std::uint64_t> partners;
        for (std::uint64_t n3 = lo; n3 <= hi; ++n3) {
            const std::uint64_t D = n3 * n3 - 1;
            std::map<std::uint64_t, unsigned> fac;
            spf_factor(n3 - 1, fac);
            spf_factor(n3 + 1, fac);
            std::vector<std::uint64_t> divs{1};
            for (const auto& [p, e] : fac) {
                const std::size_t base = divs.size();
                std::uint64_t pe = 1;
                for (unsigned k = 1; k <= e; ++k) {
                    pe *= p;
                    for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
                }
            }
            // Partner n of n3: d * e = n3^2 - 1 with d < e, d = e (mod 2),
            // n = (e - d)/2, so n^2 + n3^2 - 1 = ((e+d)/2)^2.
            partners.clear();
            for (std::uint64_t d : divs) {
                if (d * d >= D) continue;
                const std::uint64_t e = D / d;
                if (((e ^ d) & 1) != 0) continue;
                const std::uint64_t n = (e - d) / 2;
                if (n >= 2 && n <= n3) partners.push_back(n);
            }
            std::sort(partners.begin(), partners.end());
            for (std::size_t i = 0; i < partners.size(); ++i) {
                for (std::size_t j = i; j < partners.size(); ++j) {
                    const std::uint64_t n1 = partners[i], n2 = partners[j];
                    if (!is_square_u64(n1 * n1 + n2 * n2 - 1)) continue;
                    if (!is_square_u64(n1 * n1 + n2 * n2 + n3 * n3 - 2)) continue;
                    out.push_back(IndexTriple{n1, n2, n3});
                }
            }
        }
    });

    std::vector<IndexTriple> result;
    for (auto& v : per_chunk) result.insert(result.end(), v.begin(), v.end());
    std::sort(result.begin(), result.end());
    return result;
}

// ---------------------------------------------------------------------------
// shifted-square box sets
// ---------------------------------------------------------------------------

namespace {

// All l in [1, x] with y^2 = l^2 + t solvable in y >= 1, via divisor pairing
// on |t|; t == 0 means every l works (y = l).
void shifted_square_partners(std::int64_t t, std::uint64_t x, bool& all,
                             std::vector<std::uint64_t>& out) {
    out.clear();
    all = (t == 0);
    if (all) return;
    const std::uint64_t at = static_cast<std::uint64_t>(t > 0 ? t : -t);
    for (std::uint64_t d : divisors_u64(at)) {
        if (d * d >= at) break;
        const std::uint64_t e = at / d;
        if (((e ^ d) & 1) != 0) continue;
        // t > 0: (y-l)(y+l) = t -> l = (e-d)/2 ; t < 0: (l-y)(l+y) = -t.
        const std::uint64_t l = t > 0 ? (e - d) / 2 : (e + d) / 2;
        const std::uint64_t y = t > 0 ? (e + d) / 2 : (e - d) / 2;
        if (y >= 1 && l >= 1 && l <= x) out.push_back(l);
    }
    std::sort(out.begin(), out.end());
}

}  // namespace

ABoxResult enum_A_box(std::uint64_t x, std::int64_t a1, std::int64_t a2, std::int64_t a3,
                      std::int64_t shift_cap) {
    if (x < 1) throw std::domain_error("enum_A_box: x must be >= 1");
    for (std::int64_t a : {a1, a2, a3})
        if (a > shift_cap || a < -shift_cap)
            throw std::domain_error("enum_A_box: shift exceeds the configured cap");

    ABoxResult res;
    std::vector<std::uint64_t> s1, s2, all_range;
    for (std::uint64_t k = 1; k <= x; ++k) {
        const std::int64_t k2 = static_cast<std::int64_t>(k * k);
        bool all1 = false, all2 = false;
        shifted_square_partners(k2 - a1, x, all1, s1);
        shifted_square_partners(k2 - a2, x, all2, s2);
        const std::vector<std::uint64_t>* L = &s1;
        const std::vector<std::uint64_t>* M = &s2;
        if (all1 || all2) {
            if (all_range.empty())
                for (std::uint64_t i = 1; i <= x; ++i) all_range.push_back(i);
            if (all1) L = &all_range;
            if (all2) M = &all_range;
        }
        if (L->empty() || M->empty()) continue;
        for (std::uint64_t l : *L) {
            for (std::uint64_t m : *M) {
                const std::int64_t w2 = static_cast<std::int64_t>(l * l + m * m) - a3;
                if (w2 < 1) continue;
                if (!is_square_u64(static_cast<std::uint64_t>(w2))) continue;
                ++res.count;
                res.tuples.push_back({k, l, m});
            }
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// divisor machinery
// ---------------------------------------------------------------------------

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
    if (n < 2) throw std::domain_error("factorize: n must be >= 2");
    std::vector<std::pair<BigInt, unsigned>> out;
    if (n.fits_ulong_p()) {
        std::map<std::uint64_t, unsigned> fac;
        factorize_u64_into(n.get_ui(), fac);
        for (const auto& [p, e] : fac) out.emplace_back(BigInt(static_cast<unsigned long>(p)), e);
    } else {
        BigInt rest = n;
        std::map<std::string, std::pair<BigInt, unsigned>> fac;
        auto add = [&](const BigInt& p, unsigned e) {
            auto key = p.get_str();
            auto it = fac.find(key);
            if (it == fac.end())
                fac.emplace(std::move(key), std::make_pair(p, e));
            else
                it->second.second += e;
        };
        for (std::uint32_t p : small_primes()) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
                ++e;
            }
            if (e) add(BigInt(p), e);
            if (rest == 1) break;
        }
        // Recursive split with probabilistic primality (50 rounds).
        std::vector<BigInt> stack;
        if (rest > 1) stack.push_back(rest);
        while (!stack.empty()) {
            BigInt v = stack.back();
            stack.pop_back();
            if (v.fits_ulong_p()) {
                std::map<std::uint64_t, unsigned> fac64;
                factorize_u64_into(v.get_ui(), fac64);
                for (const auto& [p, e] : fac64) add(BigInt(static_cast<unsigned long>(p)), e);
                continue;
            }
            if (mpz_probab_prime_p(v.get_mpz_t(), 50) != 0) {
                add(v, 1);
                continue;
            }
            // Pollard rho on mpz.
            BigInt d = v;
            for (unsigned long c = 1; d == v || d == 1; ++c) {
                BigInt y = 2, x_ = 2, diff;
                d = 1;
                while (d == 1) {
                    x_ = (x_ * x_ + c) % v;
                    y = (y * y + c) % v;
                    y = (y * y + c) % v;
                    diff = x_ > y ? x_ - y : y - x_;
                    if (diff == 0) break;
                    mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), v.get_mpz_t());
                }
            }
            stack.push_back(d);
            stack.push_back(v / d);
        }
        std::vector<std::pair<BigInt, unsigned>> tmp;
        for (auto& [_, pe] : fac) tmp.push_back(pe);
        std::sort(tmp.begin(), tmp.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        out = std::move(tmp);
    }
    BigInt check = 1;
    for (const auto& [p, e] : out)
        for (unsigned i = 0; i < e; ++i) check *= p;
    if (check != n) throw std::logic_error("factorize: product-of-factors check failed");
    return out;
}

BigInt tau_plus(const BigInt& n) {
    if (n == 0) throw std::domain_error("tau_plus: undefined at 0");
    BigInt a = abs(n);
    if (a == 1) return 1;
    BigInt count = 1;
    for (const auto& [p, e] : factorize(a)) count *= static_cast<unsigned long>(e) + 1;
    return count;
}

BigInt tau(const BigInt& n) { return 2 * tau_plus(n); }

DivisorSumProfile divisor_sum_profile(std::uint64_t x, std::int64_t a1, std::int64_t a2) {
    if (x < 2) throw std::domain_error("divisor_sum_profile: x must be >= 2");
    DivisorSumProfile prof;
    for (std::uint64_t g = 2; g < x; g *= 2) prof.grid.push_back(g);
    prof.grid.push_back(x);
    BigInt sum = 0;
    std::size_t gi = 0;
    for (std::uint64_t k = 2; k <= x; ++k) {
        const std::int64_t k2 = static_cast<std::int64_t>(k * k);
        if (k2 != a1 && k2 != a2) sum += tau(BigInt(k2 - a1)) * tau(BigInt(k2 - a2));
        while (gi < prof.grid.size() && prof.grid[gi] == k) {
            prof.partial_sums.push_back(sum);
            const double X = static_cast<double>(k);
            prof.ratio_to_bound.push_back(sum.get_d() / (X * std::pow(std::log(X), 15)));
            ++gi;
        }
    }
    return prof;
}

}  // namespace asq
