#include "homquiver/coxeter.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace homquiver {

namespace {

int count_inversions(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}

// Bruhat comparison by the rank-matrix criterion:
// u <= w iff |{a<=i : u(a) >= j}| <= |{a<=i : w(a) >= j}| for all i, j.
bool bruhat_leq_perm(const std::vector<int>& u, const std::vector<int>& w) {
    int n = static_cast<int>(u.size());
    for (int i = 0; i < n; ++i) {
        int cu = 0, cw = 0;
        std::vector<int> ru(n + 2, 0), rw(n + 2, 0);
        for (int a = 0; a <= i; ++a) { ru[u[a]]++; rw[w[a]]++; }
        // suffix counts: entries >= j among the first i+1 values
        for (int j = n; j >= 1; --j) {
            cu += ru[j];
            cw += rw[j];
            if (cu > cw) return false;
        }
    }
    return true;
}

// Robinson-Schensted insertion shape.
std::vector<int> rsk_shape(const std::vector<int>& w) {
    std::vector<std::vector<int>> rows;
    for (int x : w) {
        int cur = x;
        bool placed = false;
        for (auto& row : rows) {
            auto it = std::upper_bound(row.begin(), row.end(), cur);
            if (it == row.end()) { row.push_back(cur); placed = true; break; }
            std::swap(cur, *it);
        }
        if (!placed) rows.push_back({cur});
        else continue;
    }
    std::vector<int> shape;
    for (auto& row : rows) shape.push_back(static_cast<int>(row.size()));
    return shape;
}

int shape_statistic(const std::vector<int>& shape) {
    int s = 0;
    for (size_t i = 0; i < shape.size(); ++i) s += static_cast<int>(i) * shape[i];
    return s;
}

void fill_root_constants(WeylGroup& g) {
    g.num_positive_roots = g.length[g.w0];
    if (g.type == "A1xA1") { g.dim_g = 6; g.dim_h = 2; }
    else if (g.type == "B2") { g.dim_g = 10; g.dim_h = 2; }
    else if (g.type == "G2") { g.dim_g = 14; g.dim_h = 2; }
    else {  // A_n
        int n = g.num_gens;
        g.dim_g = n * n + 2 * n;
        g.dim_h = n;
    }
}

WeylGroup build_type_a(int n) {
    WeylGroup g;
    g.type = "A" + std::to_string(n);
    g.num_gens = n;
    std::vector<int> base(n + 1);
    std::iota(base.begin(), base.end(), 1);
    std::map<std::vector<int>, int> index;
    std::vector<int> p = base;
    do {
        index[p] = static_cast<int>(g.perms.size());
        g.perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    g.order = static_cast<int>(g.perms.size());

    g.length.resize(g.order);
    for (int i = 0; i < g.order; ++i) g.length[i] = count_inversions(g.perms[i]);
    g.id = index[base];
    std::vector<int> rev(base.rbegin(), base.rend());
    g.w0 = index[rev];

    g.mult.assign(g.order, std::vector<int>(g.order));
    for (int u = 0; u < g.order; ++u)
        for (int w = 0; w < g.order; ++w) {
            std::vector<int> prod(n + 1);
            for (int i = 0; i <= n; ++i) prod[i] = g.perms[u][g.perms[w][i] - 1];
            g.mult[u][w] = index[prod];
        }
    g.inverse.resize(g.order);
    for (int u = 0; u < g.order; ++u) {
        std::vector<int> inv(n + 1);
        for (int i = 0; i <= n; ++i) inv[g.perms[u][i] - 1] = i + 1;
        g.inverse[u] = index[inv];
    }
    for (int s = 0; s < n; ++s) {
        std::vector<int> t = base;
        std::swap(t[s], t[s + 1]);
        g.gens.push_back(index[t]);
    }
    g.bruhat_leq.assign(g.order, std::vector<bool>(g.order));
    for (int u = 0; u < g.order; ++u)
        for (int w = 0; w < g.order; ++w)
            g.bruhat_leq[u][w] = bruhat_leq_perm(g.perms[u], g.perms[w]);
    g.a_value.resize(g.order);
    for (int u = 0; u < g.order; ++u) g.a_value[u] = shape_statistic(rsk_shape(g.perms[u]));
    fill_root_constants(g);
    return g;
}

}  // namespace

WeylGroup build_dihedral_group(int m, const std::string& type_name) {
    // elements (k, r): rotations x -> x + k and reflections x -> k - x mod m
    WeylGroup g;
    g.type = type_name;
    g.num_gens = 2;
    g.order = 2 * m;
    auto idx = [m](int k, int r) { return ((k % m) + m) % m * 2 + r; };
    auto mul = [m, idx](int a, int b) {
        int ka = a / 2, ra = a % 2, kb = b / 2, rb = b % 2;
        // (ka,ra) ∘ (kb,rb): apply b, then a
        int k = ra == 0 ? ka + kb : ka - kb;
        return idx(k, ra ^ rb);
    };
    g.mult.assign(g.order, std::vector<int>(g.order));
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) g.mult[a][b] = mul(a, b);
    g.id = idx(0, 0);
    int s = idx(0, 1), t = idx(1, 1);
    g.gens = {s, t};
    g.inverse.resize(g.order);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (g.mult[a][b] == g.id) g.inverse[a] = b;

    // lengths by breadth-first search over the Cayley graph
    g.length.assign(g.order, -1);
    g.length[g.id] = 0;
    std::vector<int> frontier{g.id};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int u : frontier)
            for (int gen : g.gens) {
                int v = g.mult[u][gen];
                if (g.length[v] < 0) { g.length[v] = g.length[u] + 1; next.push_back(v); }
            }
        frontier = std::move(next);
    }
    g.w0 = static_cast<int>(std::max_element(g.length.begin(), g.length.end()) - g.length.begin());
    assert(g.length[g.w0] == m);

    // dihedral Bruhat order: u <= w iff u = w or l(u) < l(w)
    g.bruhat_leq.assign(g.order, std::vector<bool>(g.order));
    for (int u = 0; u < g.order; ++u)
        for (int w = 0; w < g.order; ++w)
            g.bruhat_leq[u][w] = (u == w) || (g.length[u] < g.length[w]);

    g.a_value.resize(g.order);
    for (int u = 0; u < g.order; ++u)
        g.a_value[u] = g.length[u] == 0 ? 0 : (g.length[u] == m ? m : 1);
    fill_root_constants(g);
    return g;
}

WeylGroup build_weyl_group(const std::string& type) {
    if (type == "A1xA1") return build_dihedral_group(2, type);
    if (type == "B2") return build_dihedral_group(4, type);
    if (type == "G2") return build_dihedral_group(6, type);
    if (type.size() == 2 && type[0] == 'A' && type[1] >= '1' && type[1] <= '5')
        return build_type_a(type[1] - '0');
    throw std::invalid_argument("unsupported Weyl group type '" + type + "'");
}

int WeylGroup::element_of_word(const std::vector<int>& gen_word) const {
    int e = id;
    for (int s : gen_word) {
        if (s < 0 || s >= num_gens) throw std::invalid_argument("bad generator index");
        e = mult[e][gens[s]];
    }
    return e;
}

std::string WeylGroup::word_name(int elem) const {
    if (elem == id) return "e";
    // breadth-first search back to the identity gives a shortest word
    std::vector<int> prev(order, -1), via(order, -1);
    std::vector<int> frontier{id};
    std::vector<bool> seen(order, false);
    seen[id] = true;
    while (!frontier.empty() && !seen[elem]) {
        std::vector<int> next;
        for (int u : frontier)
            for (int s = 0; s < num_gens; ++s) {
                int v = mult[u][gens[s]];
                if (!seen[v]) {
                    seen[v] = true;
                    prev[v] = u;
                    via[v] = s;
                    next.push_back(v);
                }
            }
        frontier = std::move(next);
    }
    std::string out;
    for (int v = elem; v != id; v = prev[v]) out = "s" + std::to_string(via[v] + 1) + out;
    return out;
}

std::vector<uint32_t> coideals(const WeylGroup& w) {
    if (w.order > 24) throw std::invalid_argument("coideal enumeration limited to |W| <= 24");
    // process elements by decreasing length; including an element requires all
    // larger elements to be present already
    std::vector<int> order_idx(w.order);
    std::iota(order_idx.begin(), order_idx.end(), 0);
    std::sort(order_idx.begin(), order_idx.end(),
              [&](int a, int b) { return w.length[a] > w.length[b]; });

    std::vector<uint32_t> ups(w.order, 0);  // strict upper sets as masks
    for (int u = 0; u < w.order; ++u)
        for (int v = 0; v < w.order; ++v)
            if (v != u && w.bruhat_leq[u][v]) ups[u] |= 1u << v;

    std::vector<uint32_t> out;
    std::vector<std::pair<size_t, uint32_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [pos, mask] = stack.back();
        stack.pop_back();
        if (pos == order_idx.size()) {
            out.push_back(mask);
            continue;
        }
        int elem = order_idx[pos];
        stack.push_back({pos + 1, mask});  // exclude
        if ((ups[elem] & mask) == ups[elem]) stack.push_back({pos + 1, mask | (1u << elem)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

int longest_parabolic_element(const WeylGroup& w, const std::vector<int>& gen_subset) {
    for (int s : gen_subset)
        if (s < 0 || s >= w.num_gens)
            throw std::invalid_argument("parabolic generators must be simple reflections");
    // closure under multiplication by the chosen generators
    std::vector<bool> seen(w.order, false);
    seen[w.id] = true;
    std::vector<int> frontier{w.id}, members{w.id};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int u : frontier)
            for (int s : gen_subset) {
                int v = w.mult[u][w.gens[s]];
                if (!seen[v]) {
                    seen[v] = true;
                    next.push_back(v);
                    members.push_back(v);
                }
            }
        frontier = std::move(next);
    }
    int best = w.id;
    for (int u : members)
        if (w.length[u] > w.length[best]) best = u;
    for (int u : members)
        if (u != best && w.length[u] == w.length[best])
            throw std::logic_error("parabolic subgroup has no unique longest element");
    return best;
}

BlockInvariants singular_block_invariants(const WeylGroup& w, const std::vector<int>& parabolic) {
    int w0j = longest_parabolic_element(w, parabolic);
    int x = w.mult[w.w0][w0j];
    BlockInvariants out;
    out.pd_simple_verma = w.a_value[x];
    out.global_dimension = 2 * w.a_value[x];
    out.pd_dominant_simple = 2 * w.a_value[x];
    return out;
}

int regular_block_pd_simple(const WeylGroup& w, int elem) {
    return 2 * w.length[w.w0] - w.length[elem];
}

ThickCategoryPd thick_category_pd(const WeylGroup& w, int elem, std::optional<int> base_pd) {
    if (base_pd && *base_pd < 0) throw std::invalid_argument("base pd must be nonnegative");
    ThickCategoryPd out;
    out.pd_simple = w.dim_g - w.length[elem];
    out.pd_verma = w.dim_h + w.length[elem];
    if (base_pd) out.shifted_pd = w.dim_h + *base_pd;
    out.global_dimension = w.dim_g;
    out.min_pd = w.dim_h;
    return out;
}

int parse_element(const WeylGroup& w, const std::string& word) {
    if (word == "e" || word.empty()) return w.id;
    std::vector<int> gens;
    size_t i = 0;
    while (i < word.size()) {
        if (word[i] != 's') throw std::invalid_argument("bad element word '" + word + "'");
        size_t j = i + 1;
        while (j < word.size() && isdigit(static_cast<unsigned char>(word[j]))) ++j;
        if (j == i + 1) throw std::invalid_argument("bad element word '" + word + "'");
        gens.push_back(std::stoi(word.substr(i + 1, j - i - 1)) - 1);
        i = j;
    }
    return w.element_of_word(gens);
}

std::vector<int> parse_generator_set(const WeylGroup& w, const std::string& text) {
    std::vector<int> out;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
        if (i >= text.size()) break;
        if (text[i] != 's') throw std::invalid_argument("bad generator list '" + text + "'");
        size_t j = i + 1;
        while (j < text.size() && isdigit(static_cast<unsigned char>(text[j]))) ++j;
        int s = std::stoi(text.substr(i + 1, j - i - 1)) - 1;
        if (s < 0 || s >= w.num_gens) throw std::invalid_argument("unknown generator in '" + text + "'");
        out.push_back(s);
        i = j;
    }
    return out;
}

}  // namespace homquiver
