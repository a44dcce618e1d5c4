#include "jnmf/benchmarks.hpp"

#include "jnmf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace jnmf {

namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

std::vector<std::string> numbered_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(std::to_string(i + 1));
    return labels;
}

// Simple undirected edge set built by stub matching.
class EdgePool {
  public:
    explicit EdgePool(std::size_t n) : n_(n) {}

    bool contains(int u, int v) const { return keys_.count(key(u, v)) != 0; }

    void add(int u, int v) {
        keys_.insert(key(u, v));
        edges_.emplace_back(u, v);
    }

    // Removes the edge at position idx of the matching list `from`.
    std::pair<int, int> take(std::vector<std::size_t>& from, std::size_t slot) {
        const auto idx = from[slot];
        const auto e = edges_[idx];
        keys_.erase(key(e.first, e.second));
        edges_[idx] = {-1, -1};
        from[slot] = from.back();
        from.pop_back();
        return e;
    }

    std::size_t size() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  private:
    std::uint64_t key(int u, int v) const {
        const auto a = static_cast<std::uint64_t>(std::min(u, v));
        const auto b = static_cast<std::uint64_t>(std::max(u, v));
        return a * n_ + b;
    }

    std::size_t n_;
    std::unordered_set<std::uint64_t> keys_;
    std::vector<std::pair<int, int>> edges_;
};

// Pairs the stubs uniformly at random. Invalid pairs (self-loops, repeated
// edges, pairs rejected by `allowed`) are repaired by swapping endpoints with a
// random edge of the same matching; pairs that cannot be repaired are dropped.
template <typename Allowed>
void match_stubs(std::vector<int> stubs, EdgePool& pool, Allowed&& allowed, Rng& rng) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    auto valid = [&](int u, int v) { return u != v && allowed(u, v) && !pool.contains(u, v); };

    std::vector<std::size_t> mine;
    std::vector<std::pair<int, int>> bad;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        const int u = stubs[i], v = stubs[i + 1];
        if (valid(u, v)) {
            mine.push_back(pool.size());
            pool.add(u, v);
        } else {
            bad.emplace_back(u, v);
        }
    }

    constexpr int kAttempts = 200;
    for (auto [u, v] : bad) {
        for (int attempt = 0; attempt < kAttempts && !mine.empty(); ++attempt) {
            std::uniform_int_distribution<std::size_t> pick(0, mine.size() - 1);
            const auto slot = pick(rng);
            auto [x, y] = pool.edges()[mine[slot]];
            if (rng() & 1u)
                std::swap(x, y);
            if (u == x || v == y || (u == y && v == x))
                continue;
            if (!valid(u, x) || !valid(v, y) || (std::min(u, x) == std::min(v, y) && std::max(u, x) == std::max(v, y)))
                continue;
            pool.take(mine, slot);
            mine.push_back(pool.size());
            pool.add(u, x);
            mine.push_back(pool.size());
            pool.add(v, y);
            break;
        }
    }
}

} // namespace

void SgConfig::validate() const {
    if (c < 1 || n < 2)
        throw ParameterError("SG needs c >= 1 and n >= 2");
    if (!is_probability(p_in) || !is_probability(p_plus) || !is_probability(p_minus))
        throw ParameterError("SG probabilities must lie in [0, 1]");
    if (!(k > 0.0) || k >= static_cast<double>(c) * n)
        throw ParameterError("SG average degree must satisfy 0 < k < c n");
    if (k * p_in > n - 1)
        throw ParameterError("SG internal degree k p_in exceeds n - 1");
    if (c == 1 ? p_in < 1.0 && k * (1.0 - p_in) > 0.0 : k * (1.0 - p_in) > static_cast<double>(c - 1) * n)
        throw ParameterError("SG external degree k (1 - p_in) exceeds the available pairs");
}

void SlfrConfig::validate() const {
    if (n < 2)
        throw ParameterError("SLFR needs n >= 2");
    if (s_min < 2 || s_min > s_max || s_max > n)
        throw ParameterError("SLFR needs 2 <= s_min <= s_max <= n");
    if (!(k_avg > 0.0) || k_avg > k_max)
        throw ParameterError("SLFR needs 0 < k_avg <= k_max");
    if (!(lambda1 > 0.0) || !(lambda2 > 0.0))
        throw ParameterError("SLFR exponents must be positive");
    if (!is_probability(mu) || !is_probability(p_plus) || !is_probability(p_minus))
        throw ParameterError("SLFR mu and noise levels must lie in [0, 1]");
}

LabeledGraph apply_sign_noise(const LabeledGraph& g, double p_plus, double p_minus, Rng& rng) {
    if (!is_probability(p_plus) || !is_probability(p_minus))
        throw ParameterError("noise levels must lie in [0, 1]");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Matrix a = g.graph.adjacency();
    for (const auto& e : g.graph.edges()) {
        const bool intra = g.truth.label(static_cast<std::size_t>(e.u)) == g.truth.label(static_cast<std::size_t>(e.v));
        const double u = unit(rng);
        const double magnitude = std::abs(e.weight);
        const bool positive = intra ? !(u < p_minus) : u < p_plus;
        a(e.u, e.v) = a(e.v, e.u) = positive ? magnitude : -magnitude;
    }
    return {SignedGraph(std::move(a), g.graph.labels()), g.truth};
}

LabeledGraph generate_sg(const SgConfig& cfg) {
    cfg.validate();
    const int total = cfg.c * cfg.n;
    const double p_intra = cfg.k * cfg.p_in / (cfg.n - 1);
    const double p_inter = cfg.c > 1 ? cfg.k * (1.0 - cfg.p_in) / (static_cast<double>(cfg.c - 1) * cfg.n) : 0.0;

    Rng rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<int> labels(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i)
        labels[static_cast<std::size_t>(i)] = i / cfg.n;

    Matrix a = Matrix::Zero(total, total);
    for (int i = 0; i < total; ++i) {
        for (int j = i + 1; j < total; ++j) {
            const bool intra = labels[static_cast<std::size_t>(i)] == labels[static_cast<std::size_t>(j)];
            if (unit(rng) < (intra ? p_intra : p_inter))
                a(i, j) = a(j, i) = intra ? 1.0 : -1.0;
        }
    }
    LabeledGraph base{SignedGraph(std::move(a), numbered_labels(static_cast<std::size_t>(total))),
                      Partition(std::move(labels))};
    return apply_sign_noise(base, cfg.p_plus, cfg.p_minus, rng);
}

TruncatedPowerLaw::TruncatedPowerLaw(double exponent, double lo, double hi) : exponent_(exponent), lo_(lo), hi_(hi) {
    if (!(lo > 0.0) || !(hi > lo))
        throw ParameterError("power law needs 0 < lo < hi");
}

double TruncatedPowerLaw::cdf(double x) const {
    if (x <= lo_)
        return 0.0;
    if (x >= hi_)
        return 1.0;
    if (exponent_ == 1.0)
        return std::log(x / lo_) / std::log(hi_ / lo_);
    const double e = 1.0 - exponent_;
    return (std::pow(x, e) - std::pow(lo_, e)) / (std::pow(hi_, e) - std::pow(lo_, e));
}

double TruncatedPowerLaw::quantile(double u) const {
    if (exponent_ == 1.0)
        return lo_ * std::pow(hi_ / lo_, u);
    const double e = 1.0 - exponent_;
    const double lo_e = std::pow(lo_, e);
    return std::clamp(std::pow(lo_e + u * (std::pow(hi_, e) - lo_e), 1.0 / e), lo_, hi_);
}

double TruncatedPowerLaw::mean() const {
    if (exponent_ == 1.0)
        return (hi_ - lo_) / std::log(hi_ / lo_);
    if (exponent_ == 2.0)
        return std::log(hi_ / lo_) / (1.0 / lo_ - 1.0 / hi_);
    const double e1 = 1.0 - exponent_;
    const double e2 = 2.0 - exponent_;
    return e1 / e2 * (std::pow(hi_, e2) - std::pow(lo_, e2)) / (std::pow(hi_, e1) - std::pow(lo_, e1));
}

double TruncatedPowerLaw::sample(Rng& rng) const {
    return quantile(std::uniform_real_distribution<double>(0.0, 1.0)(rng));
}

double power_law_lower_cutoff(double exponent, double hi, double mean) {
    double lo = 0.5;
    double up = hi;
    if (mean >= hi)
        return hi;
    if (TruncatedPowerLaw(exponent, lo, hi).mean() > mean)
        throw GenerationError("average degree is too small for the degree bounds");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + up);
        if (TruncatedPowerLaw(exponent, mid, hi).mean() < mean)
            lo = mid;
        else
            up = mid;
    }
    return 0.5 * (lo + up);
}

std::vector<int> sample_degree_sequence(int n, double k_avg, int k_max, double exponent, Rng& rng) {
    std::vector<int> degrees(static_cast<std::size_t>(n));
    if (k_avg >= k_max) {
        std::fill(degrees.begin(), degrees.end(), k_max);
    } else {
        const TruncatedPowerLaw law(exponent, power_law_lower_cutoff(exponent, k_max, k_avg), k_max);
        for (auto& d : degrees)
            d = std::clamp(static_cast<int>(std::lround(law.sample(rng))), 1, k_max);
    }
    if (std::accumulate(degrees.begin(), degrees.end(), 0L) % 2 != 0) {
        auto& d = degrees[std::uniform_int_distribution<std::size_t>(0, degrees.size() - 1)(rng)];
        d += d < k_max ? 1 : -1;
    }
    return degrees;
}

std::vector<int> sample_community_sizes(int n, int s_min, int s_max, double exponent, Rng& rng) {
    if (s_min < 1 || s_min > s_max || s_min > n)
        throw GenerationError("no community-size partition fits the bounds");
    std::vector<double> weights;
    for (int s = s_min; s <= s_max; ++s)
        weights.push_back(std::pow(static_cast<double>(s), -exponent));
    std::discrete_distribution<int> law(weights.begin(), weights.end());

    constexpr int kAttempts = 1000;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<int> sizes;
        int total = 0;
        while (total < n) {
            sizes.push_back(s_min + law(rng));
            total += sizes.back();
        }
        int excess = total - n;
        while (excess > 0) {
            std::vector<std::size_t> shrinkable;
            for (std::size_t i = 0; i < sizes.size(); ++i)
                if (sizes[i] > s_min)
                    shrinkable.push_back(i);
            if (shrinkable.empty())
                break;
            const auto i = shrinkable[std::uniform_int_distribution<std::size_t>(0, shrinkable.size() - 1)(rng)];
            const int cut = std::min(excess, sizes[i] - s_min);
            const int take = std::uniform_int_distribution<int>(1, cut)(rng);
            sizes[i] -= take;
            excess -= take;
        }
        if (excess == 0)
            return sizes;
    }
    throw GenerationError("could not partition " + std::to_string(n) + " nodes into communities of size [" +
                          std::to_string(s_min) + ", " + std::to_string(s_max) + "]");
}

LabeledGraph generate_slfr(const SlfrConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    const auto n = static_cast<std::size_t>(cfg.n);
    const auto degrees = sample_degree_sequence(cfg.n, cfg.k_avg, cfg.k_max, cfg.lambda1, rng);

    std::vector<int> internal(n), external(n);
    for (std::size_t i = 0; i < n; ++i) {
        internal[i] = static_cast<int>(std::lround((1.0 - cfg.mu) * degrees[i]));
        external[i] = degrees[i] - internal[i];
    }
    std::vector<std::size_t> by_internal(n);
    std::iota(by_internal.begin(), by_internal.end(), std::size_t{0});
    std::stable_sort(by_internal.begin(), by_internal.end(),
                     [&](std::size_t x, std::size_t y) { return internal[x] > internal[y]; });

    // Place nodes, largest internal degree first, into a random free slot of a
    // community big enough to hold all of the node's internal links.
    std::vector<int> membership;
    std::vector<int> sizes;
    constexpr int kAttempts = 100;
    for (int attempt = 0; attempt < kAttempts && membership.empty(); ++attempt) {
        sizes = sample_community_sizes(cfg.n, cfg.s_min, cfg.s_max, cfg.lambda2, rng);
        std::vector<int> free = sizes;
        std::vector<int> placed(n, -1);
        bool ok = true;
        for (auto node : by_internal) {
            long slots = 0;
            for (std::size_t c = 0; c < sizes.size(); ++c)
                if (free[c] > 0 && sizes[c] > internal[node])
                    slots += free[c];
            if (slots == 0) {
                ok = false;
                break;
            }
            long pick = std::uniform_int_distribution<long>(0, slots - 1)(rng);
            for (std::size_t c = 0; c < sizes.size(); ++c) {
                if (free[c] > 0 && sizes[c] > internal[node]) {
                    if (pick < free[c]) {
                        placed[node] = static_cast<int>(c);
                        --free[c];
                        break;
                    }
                    pick -= free[c];
                }
            }
        }
        if (ok)
            membership = std::move(placed);
    }
    if (membership.empty())
        throw GenerationError("could not assign nodes to communities large enough for their internal degree");

    std::vector<std::vector<int>> groups(sizes.size());
    for (std::size_t i = 0; i < n; ++i)
        groups[static_cast<std::size_t>(membership[i])].push_back(static_cast<int>(i));

    // Internal stub totals must be even within each community; one node's
    // degree moves by one to fix the parity.
    for (std::size_t c = 0; c < groups.size(); ++c) {
        const auto& members = groups[c];
        long stubs = 0;
        for (int v : members)
            stubs += internal[static_cast<std::size_t>(v)];
        if (stubs % 2 == 0)
            continue;
        std::vector<int> growable, shrinkable;
        for (int v : members) {
            const auto i = static_cast<std::size_t>(v);
            if (internal[i] + 1 < sizes[c] && internal[i] + external[i] < cfg.k_max)
                growable.push_back(v);
            if (internal[i] > 0)
                shrinkable.push_back(v);
        }
        const bool grow = !growable.empty();
        const auto& pool_of = grow ? growable : shrinkable;
        const int v = pool_of[std::uniform_int_distribution<std::size_t>(0, pool_of.size() - 1)(rng)];
        internal[static_cast<std::size_t>(v)] += grow ? 1 : -1;
    }

    EdgePool pool(n);
    for (const auto& members : groups) {
        std::vector<int> stubs;
        for (int v : members)
            stubs.insert(stubs.end(), static_cast<std::size_t>(internal[static_cast<std::size_t>(v)]), v);
        match_stubs(std::move(stubs), pool, [](int, int) { return true; }, rng);
    }
    std::vector<int> stubs;
    for (std::size_t v = 0; v < n; ++v)
        stubs.insert(stubs.end(), static_cast<std::size_t>(external[v]), static_cast<int>(v));
    match_stubs(std::move(stubs), pool,
                [&](int u, int v) {
                    return membership[static_cast<std::size_t>(u)] != membership[static_cast<std::size_t>(v)];
                },
                rng);

    Matrix a = Matrix::Zero(cfg.n, cfg.n);
    for (auto [u, v] : pool.edges()) {
        if (u < 0)
            continue;
        a(u, v) = a(v, u) = membership[static_cast<std::size_t>(u)] == membership[static_cast<std::size_t>(v)] ? 1.0 : -1.0;
    }
    LabeledGraph base{SignedGraph(std::move(a), numbered_labels(n)), Partition::compacted(membership)};
    return apply_sign_noise(base, cfg.p_plus, cfg.p_minus, rng);
}

} // namespace jnmf
