#include "prefatt/enumerate.hpp"

#include <stdexcept>
#include <string>

namespace prefatt {

namespace {

constexpr int kMaxStates = 2'000'000;

void add_mass(JointPmf& pmf, std::vector<std::int64_t> key, const Rational& p) {
    pmf[std::move(key)] += p;
}

using StateMap = std::map<std::vector<std::int64_t>, Rational>;

// Expands the ell sequential draws of one arriving vertex.
void expand_draws(const std::vector<std::int64_t>& weights, const Rational& prob,
                  int draws_left, StateMap& out) {
    if (draws_left == 0) {
        out[weights] += prob;
        return;
    }
    std::int64_t total = 0;
    for (std::int64_t w : weights) total += w;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        std::vector<std::int64_t> next = weights;
        ++next[i];
        expand_draws(next, prob * Rational(weights[i], total), draws_left - 1, out);
    }
}

StateMap enumerate_graph_states(const ModelVariant& model, const SeedGraph& seed, int n) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (model.ell < 1) throw std::invalid_argument("ell must be >= 1");
    StateMap cur;
    cur[seed.weights] = Rational(1);
    for (int step = 0; step < n; ++step) {
        StateMap nxt;
        for (const auto& [weights, prob] : cur) {
            if (model.kind == ModelKind::L) {
                std::vector<std::int64_t> with_new = weights;
                with_new.push_back(1);
                expand_draws(with_new, prob, model.ell, nxt);
            } else {
                StateMap after;
                expand_draws(weights, prob, model.ell, after);
                for (auto& [w2, p2] : after) {
                    std::vector<std::int64_t> with_new = w2;
                    with_new.push_back(1);
                    nxt[std::move(with_new)] += p2;
                }
            }
            if (static_cast<int>(nxt.size()) > kMaxStates)
                throw std::invalid_argument("enumeration too large");
        }
        cur = std::move(nxt);
    }
    return cur;
}

}  // namespace

JointPmf enumerate_graph_weights_law(const ModelVariant& model, const SeedGraph& seed,
                                     int n, int r) {
    std::int64_t s = static_cast<std::int64_t>(seed.weights.size());
    if (r < 1 || r > s + n) throw std::invalid_argument("r exceeds vertex count");
    StateMap states = enumerate_graph_states(model, seed, n);
    JointPmf out;
    for (const auto& [weights, prob] : states) {
        std::vector<std::int64_t> key(weights.begin(), weights.begin() + r);
        add_mass(out, std::move(key), prob);
    }
    return out;
}

JointPmf enumerate_graph_cumulative_law(const ModelVariant& model, const SeedGraph& seed,
                                        int n, int r) {
    JointPmf weights_law = enumerate_graph_weights_law(model, seed, n, r);
    JointPmf out;
    for (const auto& [w, prob] : weights_law) {
        std::vector<std::int64_t> cum(w.size());
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            acc += w[i];
            cum[i] = acc;
        }
        add_mass(out, std::move(cum), prob);
    }
    return out;
}

JointPmf enumerate_urn_cumulative_law(const InfiniteUrnConfig& cfg, int steps, int r) {
    if (cfg.ell < 1) throw std::invalid_argument("ell must be >= 1");
    if (steps < 0) throw std::invalid_argument("steps must be >= 0");
    std::int64_t s = cfg.s();
    if (r < 1 || r > s + steps / cfg.ell)
        throw std::invalid_argument("color r does not exist yet at time n");
    StateMap cur;
    cur[cfg.initial_counts] = Rational(1);
    for (int k = 1; k <= steps; ++k) {
        StateMap nxt;
        for (const auto& [counts, prob] : cur) {
            std::int64_t total = 0;
            for (std::int64_t c : counts) total += c;
            for (std::size_t i = 0; i < counts.size(); ++i) {
                std::vector<std::int64_t> next = counts;
                ++next[i];
                if (k % cfg.ell == 0) next.push_back(1);
                nxt[std::move(next)] += prob * Rational(counts[i], total);
            }
            if (static_cast<int>(nxt.size()) > kMaxStates)
                throw std::invalid_argument("enumeration too large");
        }
        cur = std::move(nxt);
    }
    JointPmf out;
    for (const auto& [counts, prob] : cur) {
        std::vector<std::int64_t> cum(static_cast<std::size_t>(r));
        std::int64_t acc = 0;
        for (int i = 0; i < r; ++i) {
            acc += counts[static_cast<std::size_t>(i)];
            cum[static_cast<std::size_t>(i)] = acc;
        }
        add_mass(out, std::move(cum), prob);
    }
    return out;
}

namespace {

// Plane binary trees as parenthesis strings: "x" is a leaf, "(AB)" a fork.
std::vector<std::string> all_shapes(int leaves) {
    if (leaves == 1) return {"x"};
    std::vector<std::string> out;
    for (int i = 1; i < leaves; ++i) {
        for (const std::string& a : all_shapes(i))
            for (const std::string& b : all_shapes(leaves - i))
                out.push_back("(" + a + b + ")");
    }
    return out;
}

// Root-to-leaf paths, in left-to-right leaf order; each path is a 0/1 string.
void collect_paths(const std::string& s, std::size_t& pos, std::string& path,
                   std::vector<std::string>& out) {
    if (s[pos] == 'x') {
        ++pos;
        out.push_back(path);
        return;
    }
    ++pos;  // '('
    path.push_back('0');
    collect_paths(s, pos, path, out);
    path.back() = '1';
    collect_paths(s, pos, path, out);
    path.pop_back();
    ++pos;  // ')'
}

}  // namespace

JointPmf enumerate_plane_tree_spanning_law(int leaves, int k) {
    if (leaves < 2 || k < 1 || k > leaves)
        throw std::invalid_argument("enumerate_plane_tree_spanning_law: bad sizes");
    if (leaves > 8) throw std::invalid_argument("enumeration too large");
    std::vector<std::string> shapes = all_shapes(leaves);
    Rational shape_p(1, static_cast<std::int64_t>(shapes.size()));
    std::int64_t tuples = 1;
    for (int j = 0; j < k; ++j) tuples *= leaves - j;
    Rational tuple_p(1, tuples);

    JointPmf out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (const std::string& shape : shapes) {
        std::vector<std::string> paths;
        std::size_t pos = 0;
        std::string path;
        collect_paths(shape, pos, path, paths);
        // ordered k-tuples of distinct leaves
        std::vector<int> perm;
        std::vector<bool> used(paths.size(), false);
        std::vector<std::int64_t> key(static_cast<std::size_t>(k));
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == k) {
                // spanning sizes: count distinct path prefixes (incl. root)
                std::map<std::string, bool> seen;
                std::vector<std::int64_t> t(static_cast<std::size_t>(k));
                std::size_t count = 0;
                for (int j = 0; j < k; ++j) {
                    const std::string& p = paths[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
                    for (std::size_t m = 0; m <= p.size(); ++m) {
                        if (!seen[p.substr(0, m)]) {
                            seen[p.substr(0, m)] = true;
                            ++count;
                        }
                    }
                    t[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(count);
                }
                out[t] += shape_p * tuple_p;
                return;
            }
            for (std::size_t i = 0; i < paths.size(); ++i) {
                if (used[i]) continue;
                used[i] = true;
                perm.push_back(static_cast<int>(i));
                self(self, depth + 1);
                perm.pop_back();
                used[i] = false;
            }
        };
        rec(rec, 0);
    }
    return out;
}

JointPmf enumerate_loop_chain_cumulative_law(int steps, int k) {
    if (steps < 0 || k < 1 || k > steps + 2)
        throw std::invalid_argument("enumerate_loop_chain_cumulative_law: bad sizes");
    ModelVariant model{ModelKind::L, 1};
    SeedGraph seed{{2}};
    StateMap states = enumerate_graph_states(model, seed, steps);
    JointPmf out;
    for (const auto& [weights, prob] : states) {
        std::vector<std::int64_t> full = weights;
        full.push_back(1);  // pending unit weight of the next vertex
        std::vector<std::int64_t> cum(static_cast<std::size_t>(k));
        std::int64_t acc = 0;
        for (int i = 0; i < k; ++i) {
            acc += full[static_cast<std::size_t>(i)];
            cum[static_cast<std::size_t>(i)] = acc;
        }
        add_mass(out, std::move(cum), prob);
    }
    return out;
}

Rational joint_tv(const JointPmf& p, const JointPmf& q) {
    Rational acc(0);
    for (const auto& [k, v] : p) {
        auto it = q.find(k);
        Rational diff = it == q.end() ? v : v - it->second;
        if (diff < 0) diff = -diff;
        acc += diff;
    }
    for (const auto& [k, v] : q) {
        if (p.find(k) == p.end()) acc += v;
    }
    return acc / 2;
}

std::map<std::int64_t, Rational> joint_marginal(const JointPmf& p, std::size_t idx) {
    std::map<std::int64_t, Rational> out;
    for (const auto& [k, v] : p) {
        if (idx >= k.size()) throw std::invalid_argument("joint_marginal: bad index");
        out[k[idx]] += v;
    }
    return out;
}

}  // namespace prefatt
