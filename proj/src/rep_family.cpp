#include "tmatch/rep_family.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <string>

namespace tmatch {

void WeightedSetFamily::push(std::vector<int> set, long long weight) {
    std::sort(set.begin(), set.end());
    if (sets.empty() && set_size == 0) set_size = static_cast<int>(set.size());
    sets.push_back(std::move(set));
    weights.push_back(weight);
}

void WeightedSetFamily::validate(const Universe& u) const {
    if (sets.size() != weights.size()) throw std::invalid_argument("weights/sets size mismatch");
    std::set<std::vector<int>> seen;
    for (size_t i = 0; i < sets.size(); ++i) {
        const auto& s = sets[i];
        if (static_cast<int>(s.size()) != set_size)
            throw std::invalid_argument("set " + std::to_string(i) + " has wrong size");
        if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("set " + std::to_string(i) + " not sorted/unique");
        if (!s.empty() && (s.front() < 0 || s.back() >= u.n))
            throw std::invalid_argument("set " + std::to_string(i) + " leaves the universe");
        if (weights[i] < 0) throw std::invalid_argument("negative weight");
        if (!seen.insert(s).second) throw std::invalid_argument("duplicate set " + std::to_string(i));
    }
}

PrimeField::PrimeField(uint64_t modulus) : p_(modulus) {
    if (!is_prime(modulus)) throw std::invalid_argument("modulus is not prime");
}

uint64_t PrimeField::pow(uint64_t base, uint64_t exp) const {
    uint64_t acc = 1;
    base %= p_;
    while (exp) {
        if (exp & 1) acc = mul(acc, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return acc;
}

uint64_t PrimeField::inv(uint64_t a) const { return pow(a, p_ - 2); }

bool PrimeField::is_prime(uint64_t x) {
    if (x < 2) return false;
    for (uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

uint64_t PrimeField::next_prime_after(uint64_t x) {
    uint64_t c = x + 1;
    while (!is_prime(c)) ++c;
    return c;
}

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    constexpr unsigned long long kSat = std::numeric_limits<long long>::max();
    unsigned long long acc = 1;
    for (int i = 1; i <= k; ++i) {
        unsigned long long num = static_cast<unsigned long long>(n - k + i);
        if (acc > kSat / num) return kSat;
        acc = acc * num / static_cast<unsigned long long>(i);
    }
    return acc;
}

unsigned long long max_fingerprint_dim(int r, int p) {
    unsigned long long best = 1;
    for (int j = 1; j <= p; ++j) best = std::max(best, binomial(r, j));
    return best;
}

namespace {

// All p x p minors of the (r x p) matrix whose columns are Vandermonde
// columns (x^0 .. x^{r-1}) for x = element id + 1. Minor of row subset S
// lands at the colex rank of S.
class Fingerprinter {
public:
    Fingerprinter(const PrimeField& field, int r, int p) : field_(field), r_(r), p_(p) {
        choose_.assign(static_cast<size_t>(r + 1), std::vector<unsigned long long>(static_cast<size_t>(r + 1), 0));
        for (int n = 0; n <= r; ++n) {
            choose_[static_cast<size_t>(n)][0] = 1;
            for (int k = 1; k <= n; ++k)
                choose_[static_cast<size_t>(n)][static_cast<size_t>(k)] =
                    choose_[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)] +
                    (k <= n - 1 ? choose_[static_cast<size_t>(n - 1)][static_cast<size_t>(k)] : 0);
        }
    }

    std::vector<uint64_t> compute(const std::vector<int>& elements) const {
        std::vector<uint64_t> cur{1};  // level 0: the empty row subset
        std::vector<uint64_t> next;
        std::vector<int> c(static_cast<size_t>(p_) + 1, 0);
        std::vector<unsigned long long> pre(static_cast<size_t>(p_) + 1, 0);
        std::vector<unsigned long long> suf(static_cast<size_t>(p_) + 2, 0);
        std::vector<uint64_t> xp(static_cast<size_t>(r_), 0);

        for (int j = 1; j <= p_; ++j) {
            uint64_t x = static_cast<uint64_t>(elements[static_cast<size_t>(j - 1)] + 1);
            xp[0] = 1;
            for (int row = 1; row < r_; ++row) xp[static_cast<size_t>(row)] = field_.mul(xp[static_cast<size_t>(row - 1)], x);

            next.assign(static_cast<size_t>(choose_[static_cast<size_t>(r_)][static_cast<size_t>(j)]), 0);
            // Enumerate j-subsets c[0] < ... < c[j-1] of [0, r).
            for (int i = 0; i < j; ++i) c[static_cast<size_t>(i)] = i;
            while (true) {
                // Colex rank of the subset and of each one-element removal.
                pre[0] = 0;
                for (int i = 0; i < j; ++i)
                    pre[static_cast<size_t>(i + 1)] =
                        pre[static_cast<size_t>(i)] +
                        choose_[static_cast<size_t>(c[static_cast<size_t>(i)])][static_cast<size_t>(i + 1)];
                suf[static_cast<size_t>(j)] = 0;
                for (int i = j - 1; i >= 0; --i)
                    suf[static_cast<size_t>(i)] =
                        suf[static_cast<size_t>(i + 1)] +
                        choose_[static_cast<size_t>(c[static_cast<size_t>(i)])][static_cast<size_t>(i)];

                uint64_t plus = 0, minus = 0;
                for (int m = 0; m < j; ++m) {
                    uint64_t term = field_.mul(xp[static_cast<size_t>(c[static_cast<size_t>(m)])],
                                               cur[pre[static_cast<size_t>(m)] + suf[static_cast<size_t>(m + 1)]]);
                    // Laplace sign along the newest column.
                    if (((m + j) & 1) != 0)
                        plus += term;
                    else
                        minus += term;
                    if (plus >= kFold) plus %= field_.modulus();
                    if (minus >= kFold) minus %= field_.modulus();
                }
                next[pre[static_cast<size_t>(j)]] = field_.sub(plus % field_.modulus(), minus % field_.modulus());

                int i = j - 1;
                while (i >= 0 && c[static_cast<size_t>(i)] == r_ - j + i) --i;
                if (i < 0) break;
                ++c[static_cast<size_t>(i)];
                for (int l = i + 1; l < j; ++l) c[static_cast<size_t>(l)] = c[static_cast<size_t>(l - 1)] + 1;
            }
            cur.swap(next);
        }
        return cur;
    }

private:
    static constexpr uint64_t kFold = uint64_t(1) << 62;
    const PrimeField& field_;
    int r_;
    int p_;
    std::vector<std::vector<unsigned long long>> choose_;
};

// Incremental row-echelon basis over the field.
class Basis {
public:
    explicit Basis(const PrimeField& field) : field_(field) {}

    // Returns false when v is dependent on the basis; otherwise absorbs it.
    bool insert(std::vector<uint64_t>&& v) {
        for (const auto& row : rows_) {
            uint64_t f = v[row.pivot];
            if (f == 0) continue;
            const auto& vec = row.vec;
            for (size_t i = row.pivot; i < v.size(); ++i)
                if (vec[i]) v[i] = field_.sub(v[i], field_.mul(f, vec[i]));
        }
        size_t pivot = 0;
        while (pivot < v.size() && v[pivot] == 0) ++pivot;
        if (pivot == v.size()) return false;
        uint64_t scale = field_.inv(v[pivot]);
        for (size_t i = pivot; i < v.size(); ++i)
            if (v[i]) v[i] = field_.mul(v[i], scale);
        rows_.push_back(Row{pivot, std::move(v)});
        return true;
    }

    size_t rank() const { return rows_.size(); }

private:
    struct Row {
        size_t pivot;
        std::vector<uint64_t> vec;
    };
    const PrimeField& field_;
    std::vector<Row> rows_;
};

void check_dims(int r, int p, size_t candidates, const std::string& who) {
    unsigned long long dim = max_fingerprint_dim(r, p);
    if (dim > kRepDimGuard)
        throw GuardError("rep-dim", who + ": fingerprint dimension " + std::to_string(dim) +
                                         " exceeds guard " + std::to_string(kRepDimGuard) +
                                         " (r=" + std::to_string(r) + ", p=" + std::to_string(p) + ")");
    unsigned long long top = binomial(r, p);
    unsigned long long keep_bound = std::min<unsigned long long>(candidates, top);
    if ((keep_bound + 2) * top > kRepMemGuard / 8)
        throw GuardError("rep-mem", who + ": projected basis memory exceeds guard");
}

struct Candidate {
    long long weight;
    int order;  // generation order, the tie-break
};

// Indices of candidates sorted by weight desc, generation order asc.
std::vector<int> processing_order(const std::vector<long long>& weights) {
    std::vector<int> order(weights.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return weights[static_cast<size_t>(a)] > weights[static_cast<size_t>(b)]; });
    return order;
}

}  // namespace

RepResult representative(const WeightedSetFamily& family, int q, const Universe& universe,
                         const RepOptions& options) {
    if (q < 0) throw std::invalid_argument("q must be >= 0");
    family.validate(universe);
    RepResult out;
    out.q = q;
    if (family.sets.empty()) return out;

    int p = family.set_size;
    if (p == 0) {  // only the empty set; it represents itself
        out.indices.push_back(0);
        return out;
    }
    int r = p + q;
    check_dims(r, p, family.size(), "representative");
    PrimeField field(PrimeField::next_prime_after(
        std::max<uint64_t>(static_cast<uint64_t>(universe.n + q), max_fingerprint_dim(r, p))));
    Fingerprinter fp(field, r, p);
    Basis basis(field);
    unsigned long long top = binomial(r, p);

    for (int idx : processing_order(family.weights)) {
        // Once the basis spans the whole fingerprint space every further
        // set is dependent; skip the minor computation.
        bool kept = basis.rank() < top && basis.insert(fp.compute(family.sets[static_cast<size_t>(idx)]));
        if (kept) out.indices.push_back(idx);
        if (options.audit)
            *options.audit << (kept ? "keep " : "drop ") << idx << " w=" << family.weights[static_cast<size_t>(idx)]
                           << '\n';
    }
    return out;
}

UnionRepResult iterated_union_representative(const WeightedSetFamily& h, int alpha, int beta,
                                             const Universe& universe, const RepOptions& options) {
    if (alpha < 0 || beta < 0) throw std::invalid_argument("alpha, beta must be >= 0");
    h.validate(universe);
    UnionRepResult out;
    out.alpha = alpha;
    out.beta = beta;
    out.gamma = h.set_size;
    out.r = (alpha + beta) * h.set_size;
    if (alpha == 0) {
        out.sets.push_back(UnionSet{{}, 0, {}});
        return out;
    }
    if (h.sets.empty()) return out;
    if (h.set_size == 0) throw std::invalid_argument("member sets must be non-empty");
    int gamma = h.set_size;
    int r = out.r;
    check_dims(r, alpha * gamma, 1, "iterated_union_representative");

    // One field serves every round; the largest query size is r - gamma.
    PrimeField field(PrimeField::next_prime_after(std::max<uint64_t>(
        static_cast<uint64_t>(universe.n + r), max_fingerprint_dim(r, alpha * gamma))));

    std::vector<UnionSet> current{UnionSet{{}, 0, {}}};
    for (int round = 1; round <= alpha; ++round) {
        // Candidates: disjoint extensions of every current set by every h set.
        std::vector<UnionSet> cand;
        for (const UnionSet& a : current) {
            for (size_t j = 0; j < h.sets.size(); ++j) {
                const auto& hs = h.sets[j];
                std::vector<int> merged;
                merged.reserve(a.elements.size() + hs.size());
                std::set_union(a.elements.begin(), a.elements.end(), hs.begin(), hs.end(),
                               std::back_inserter(merged));
                if (merged.size() != a.elements.size() + hs.size()) continue;  // not disjoint
                UnionSet u;
                u.elements = std::move(merged);
                u.weight = a.weight + h.weights[j];
                u.parts = a.parts;
                u.parts.push_back(static_cast<int>(j));
                cand.push_back(std::move(u));
            }
        }
        if (cand.empty()) {
            out.sets.clear();
            return out;  // no disjoint alpha-fold unions exist
        }

        int p = round * gamma;
        check_dims(r, p, cand.size(), "iterated_union_representative");
        Fingerprinter fp(field, r, p);
        Basis basis(field);
        unsigned long long top = binomial(r, p);
        std::vector<long long> weights(cand.size());
        for (size_t i = 0; i < cand.size(); ++i) weights[i] = cand[i].weight;

        std::vector<UnionSet> kept;
        for (int idx : processing_order(weights)) {
            bool keep = basis.rank() < top &&
                        basis.insert(fp.compute(cand[static_cast<size_t>(idx)].elements));
            if (options.audit)
                *options.audit << "round " << round << (keep ? " keep " : " drop ") << idx
                               << " w=" << weights[static_cast<size_t>(idx)] << '\n';
            if (keep) kept.push_back(std::move(cand[static_cast<size_t>(idx)]));
        }
        current = std::move(kept);
    }
    for (auto& s : current) std::sort(s.parts.begin(), s.parts.end());
    out.sets = std::move(current);
    return out;
}

namespace {

// Multiword bitmask intersection helper for the verifier.
std::vector<uint64_t> mask_of(const std::vector<int>& set, int words) {
    std::vector<uint64_t> m(static_cast<size_t>(words), 0);
    for (int e : set) m[static_cast<size_t>(e >> 6)] |= uint64_t(1) << (e & 63);
    return m;
}

bool disjoint(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return false;
    return true;
}

}  // namespace

bool verify_representative(const WeightedSetFamily& full, const std::vector<int>& sub_indices,
                           int q, const Universe& universe) {
    full.validate(universe);
    unsigned long long y_count = 0;
    for (int j = 0; j <= q; ++j) y_count += binomial(universe.n, j);
    if (y_count > 1'000'000)
        throw GuardError("verify-size", "too large to verify: " + std::to_string(y_count) + " candidate Y sets");

    int words = (universe.n + 63) / 64;
    std::vector<std::vector<uint64_t>> full_masks, sub_masks;
    std::vector<long long> sub_weights;
    for (const auto& s : full.sets) full_masks.push_back(mask_of(s, words));
    for (int idx : sub_indices) {
        if (idx < 0 || static_cast<size_t>(idx) >= full.sets.size())
            throw std::invalid_argument("sub index out of range");
        sub_masks.push_back(mask_of(full.sets[static_cast<size_t>(idx)], words));
        sub_weights.push_back(full.weights[static_cast<size_t>(idx)]);
    }

    std::vector<uint64_t> y_mask(static_cast<size_t>(words), 0);
    bool ok = true;
    // Enumerates all Y with |Y| <= q via subsets of each size.
    auto check_y = [&]() {
        long long best = -1;
        for (size_t i = 0; i < full_masks.size(); ++i)
            if (disjoint(full_masks[i], y_mask)) best = std::max(best, full.weights[i]);
        if (best < 0) return true;
        for (size_t i = 0; i < sub_masks.size(); ++i)
            if (sub_weights[i] >= best && disjoint(sub_masks[i], y_mask)) return true;
        return false;
    };
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from, int remaining) -> void {
        if (!ok) return;
        if (!check_y()) {
            ok = false;
            return;
        }
        if (remaining == 0) return;
        for (int e = from; e < universe.n; ++e) {
            y_mask[static_cast<size_t>(e >> 6)] |= uint64_t(1) << (e & 63);
            self(self, e + 1, remaining - 1);
            y_mask[static_cast<size_t>(e >> 6)] &= ~(uint64_t(1) << (e & 63));
            if (!ok) return;
        }
    };
    rec(rec, 0, q);
    return ok;
}

}  // namespace tmatch
