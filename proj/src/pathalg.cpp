#include "homquiver/pathalg.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace homquiver {

namespace {

constexpr int kMaxPaths = 20000;

struct PathInfo {
    int src = -1, tgt = -1;
    std::vector<int> word;  // traversal order
};

std::string word_name(const Quiver& q, const PathInfo& p) {
    if (p.word.empty()) return "e" + q.vertices[p.src];
    // display in product order of the right-to-left convention: last traversed first
    std::string s;
    for (auto it = p.word.rbegin(); it != p.word.rend(); ++it) {
        if (!s.empty()) s += "*";
        s += q.arrows[*it].name;
    }
    return s;
}

// Row space with pivot = largest path index, kept inter-reduced. Rewrites a
// pivot path into strictly smaller paths.
class RewriteSpace {
public:
    bool add(SparseVec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        int pc = v.back().first;
        Rat inv = 1 / v.back().second;
        for (auto& [k, c] : v) c *= inv;
        for (auto& [piv, row] : rows_) {
            (void)piv;
            reduce_against(row, v, pc);
        }
        rows_[pc] = std::move(v);
        return true;
    }

    SparseVec reduce(SparseVec v) const {
        bool changed = true;
        while (changed && !v.empty()) {
            changed = false;
            for (int idx = static_cast<int>(v.size()) - 1; idx >= 0; --idx) {
                auto it = rows_.find(v[idx].first);
                if (it == rows_.end()) continue;
                Rat c = v[idx].second;
                v = sparse_add(v, sparse_scale(-c, it->second));
                changed = true;
                break;
            }
        }
        return v;
    }

    bool is_pivot(int k) const { return rows_.count(k) != 0; }
    const std::map<int, SparseVec>& rows() const { return rows_; }
    int dim() const { return static_cast<int>(rows_.size()); }

private:
    static void reduce_against(SparseVec& row, const SparseVec& v, int pc) {
        for (auto& [k, c] : row)
            if (k == pc) {
                row = sparse_add(row, sparse_scale(-c, v));
                return;
            }
    }
    std::map<int, SparseVec> rows_;
};

}  // namespace

int Quiver::vertex_index(const std::string& label) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label) return static_cast<int>(i);
    return -1;
}

int Quiver::arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return static_cast<int>(i);
    return -1;
}

void Quiver::validate() const {
    if (vertices.empty()) throw std::invalid_argument("quiver has no vertices");
    std::set<std::string> seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size()) throw std::invalid_argument("duplicate vertex identifiers");
    std::set<std::string> anames;
    for (const Arrow& a : arrows) {
        if (!anames.insert(a.name).second)
            throw std::invalid_argument("duplicate arrow identifier '" + a.name + "'");
        if (a.src < 0 || a.src >= static_cast<int>(vertices.size()) || a.tgt < 0 ||
            a.tgt >= static_cast<int>(vertices.size()))
            throw std::invalid_argument("arrow '" + a.name + "' has undeclared endpoint");
        if (seen.count(a.name)) throw std::invalid_argument("arrow name '" + a.name + "' clashes with a vertex");
    }
}

Vec PathAlgebra::multiply(const Vec& x, const Vec& y) const {
    return convention == Convention::RightToLeft ? alg.compose(x, y) : alg.compose(y, x);
}

Vec PathAlgebra::basis_vec(int k) const {
    Vec v(alg.dim());
    v[k] = 1;
    return v;
}

Vec PathAlgebra::eval_terms(const std::vector<RelTerm>& terms) const {
    Vec total(alg.dim());
    for (const RelTerm& t : terms) {
        Vec cur;
        bool first = true;
        for (int a : t.arrows) {
            // locate the arrow as a basis element
            int idx = -1;
            for (int k = 0; k < alg.dim(); ++k)
                if (path_words[k].size() == 1 && path_words[k][0] == a) { idx = k; break; }
            Vec av(alg.dim());
            if (idx >= 0) av[idx] = 1;  // otherwise the arrow died in the quotient
            cur = first ? av : multiply(cur, av);
            first = false;
        }
        if (first) continue;
        for (int k = 0; k < alg.dim(); ++k) total[k] += t.coeff * cur[k];
    }
    return total;
}

std::string PathAlgebra::path_name(int k) const { return alg.basis[k].name; }

PathAlgebra build_path_algebra(const Quiver& q, const std::vector<Relation>& rels, Convention conv,
                               int cap) {
    q.validate();
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");

    int nv = static_cast<int>(q.vertices.size());
    std::vector<PathInfo> paths;
    std::map<std::vector<int>, int> word_index;  // keyed by (src marker for trivial) -- see below
    // Trivial paths carry word {} but differ by source, so key them separately.
    std::vector<int> trivial_index(nv);
    for (int v = 0; v < nv; ++v) {
        PathInfo p;
        p.src = p.tgt = v;
        trivial_index[v] = static_cast<int>(paths.size());
        paths.push_back(p);
    }
    auto index_of_word = [&](const std::vector<int>& w) -> int {
        auto it = word_index.find(w);
        return it == word_index.end() ? -1 : it->second;
    };

    // Traversal word of a relation term under the declared convention.
    auto term_word = [&](const RelTerm& t) {
        std::vector<int> w = t.arrows;
        if (conv == Convention::RightToLeft) std::reverse(w.begin(), w.end());
        return w;
    };
    auto word_composable = [&](const std::vector<int>& w) {
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (q.arrows[w[i]].tgt != q.arrows[w[i + 1]].src) return false;
        return true;
    };

    // Validate relations: composable terms, all parallel, and no empty side pair.
    int max_rel_len = 1;
    for (const Relation& r : rels) {
        int src = -2, tgt = -2;
        auto check_side = [&](const std::vector<RelTerm>& side) {
            for (const RelTerm& t : side) {
                if (t.arrows.empty())
                    throw MalformedRelation("malformed relation: empty path in '" + r.text + "'");
                std::vector<int> w = term_word(t);
                if (!word_composable(w))
                    throw MalformedRelation("malformed relation: non-composable product in '" + r.text + "'");
                int s = q.arrows[w.front()].src, e = q.arrows[w.back()].tgt;
                if (src == -2) { src = s; tgt = e; }
                else if (src != s || tgt != e)
                    throw MalformedRelation("malformed relation: terms not parallel in '" + r.text + "'");
                max_rel_len = std::max(max_rel_len, static_cast<int>(w.size()));
            }
        };
        check_side(r.lhs);
        check_side(r.rhs);
        if (r.lhs.empty() && r.rhs.empty())
            throw MalformedRelation("malformed relation: no terms in '" + r.text + "'");
    }
    if (max_rel_len > cap)
        throw MalformedRelation("relation longer than cap");

    RewriteSpace ideal;
    std::vector<SparseVec> pending;      // rows whose arrow products have not been offered yet
    std::vector<int> lengths_start{0};   // paths index ranges per length

    auto enumerate_length = [&](int len) {
        // extend every path of length len-1 by one arrow
        int lo = lengths_start[len - 1];
        int hi = len - 1 + 1 < static_cast<int>(lengths_start.size()) ? lengths_start[len] : static_cast<int>(paths.size());
        (void)hi;
        int end = static_cast<int>(paths.size());
        std::vector<PathInfo> fresh;
        for (int k = lo; k < end; ++k) {
            if (static_cast<int>(paths[k].word.size()) != len - 1) continue;
            for (size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[a].src != paths[k].tgt) continue;
                PathInfo p;
                p.src = paths[k].src;
                p.tgt = q.arrows[a].tgt;
                p.word = paths[k].word;
                p.word.push_back(static_cast<int>(a));
                fresh.push_back(std::move(p));
            }
        }
        std::sort(fresh.begin(), fresh.end(),
                  [](const PathInfo& a, const PathInfo& b) { return a.word < b.word; });
        lengths_start.push_back(static_cast<int>(paths.size()));
        for (PathInfo& p : fresh) {
            word_index[p.word] = static_cast<int>(paths.size());
            paths.push_back(std::move(p));
            if (static_cast<int>(paths.size()) > kMaxPaths)
                throw NotFiniteDimensional("path space exceeds limit before saturation; reduce cap");
        }
    };

    // relation generator rows (entered once their longest term fits the window)
    auto relation_max_len = [&](const Relation& r) {
        int maxlen = 0;
        for (const std::vector<RelTerm>* side : {&r.lhs, &r.rhs})
            for (const RelTerm& t : *side) maxlen = std::max(maxlen, static_cast<int>(t.arrows.size()));
        return maxlen;
    };
    auto build_gen = [&](const Relation& r) {
        SparseVec row;
        auto acc = [&](const std::vector<RelTerm>& side, int sign) {
            for (const RelTerm& t : side) {
                std::vector<int> w = term_word(t);
                int idx = index_of_word(w);
                assert(idx >= 0);
                row = sparse_add(row, SparseVec{{idx, sign * t.coeff}});
            }
        };
        acc(r.lhs, 1);
        acc(r.rhs, -1);
        return row;
    };

    // product of a row with one arrow on either side, staying inside the
    // enumerated window; nullopt when a term would overflow
    auto row_times_arrow = [&](const SparseVec& row, int arrow, bool arrow_after,
                               int window) -> std::optional<SparseVec> {
        SparseVec out;
        for (auto& [k, c] : row) {
            const PathInfo& p = paths[k];
            std::vector<int> w;
            if (arrow_after) {  // compose(arrow, path): traverse path, then arrow
                if (p.tgt != q.arrows[arrow].src) continue;
                w = p.word;
                w.push_back(arrow);
            } else {  // compose(path, arrow): traverse arrow, then path
                if (q.arrows[arrow].tgt != p.src) continue;
                w.reserve(p.word.size() + 1);
                w.push_back(arrow);
                w.insert(w.end(), p.word.begin(), p.word.end());
            }
            if (static_cast<int>(w.size()) > window) return std::nullopt;
            int idx = index_of_word(w);
            assert(idx >= 0);
            out = sparse_add(out, SparseVec{{idx, c}});
        }
        return out;
    };

    int saturation = -1;
    int window = 0;
    std::vector<bool> gen_entered;
    for (const Relation& r : rels) {
        (void)r;
        gen_entered.push_back(false);
    }

    while (window < cap) {
        ++window;
        enumerate_length(window);

        // admit relation generators that now fit
        for (size_t g = 0; g < rels.size(); ++g) {
            if (gen_entered[g] || relation_max_len(rels[g]) > window) continue;
            gen_entered[g] = true;
            SparseVec row = build_gen(rels[g]);
            if (ideal.add(row)) pending.push_back(row);
        }
        // close under arrow multiplication inside the window; reopened rows from
        // earlier windows are re-offered because larger products now fit
        std::vector<SparseVec> work = pending;
        for (auto& [piv, row] : ideal.rows()) {
            (void)piv;
            work.push_back(row);
        }
        pending.clear();
        while (!work.empty()) {
            SparseVec row = std::move(work.back());
            work.pop_back();
            for (size_t a = 0; a < q.arrows.size(); ++a)
                for (bool after : {true, false}) {
                    auto prod = row_times_arrow(row, static_cast<int>(a), after, window);
                    if (!prod || prod->empty()) continue;
                    if (ideal.add(*prod)) work.push_back(*prod);
                }
        }

        // saturated once no normal form of this length survives
        int lo = lengths_start[window];
        int hi = static_cast<int>(paths.size());
        bool all_reduce = true;
        for (int k = lo; k < hi; ++k)
            if (!ideal.is_pivot(k)) { all_reduce = false; break; }
        if (all_reduce) { saturation = window; break; }
    }
    if (saturation < 0)
        throw NotFiniteDimensional("not finite-dimensional within cap " + std::to_string(cap));

    // assemble the algebra over the kept paths
    PathAlgebra out;
    out.quiver = q;
    out.convention = conv;
    out.relations = rels;
    out.saturation_length = saturation;
    out.build_cap = cap;

    std::vector<int> kept;
    std::vector<int> kept_pos(paths.size(), -1);
    for (int k = 0; k < lengths_start[saturation]; ++k)
        if (!ideal.is_pivot(k)) {
            kept_pos[k] = static_cast<int>(kept.size());
            kept.push_back(k);
        }

    Algebra& A = out.alg;
    A.vertex_labels = q.vertices;
    A.idem.assign(nv, -1);
    for (int i = 0; i < static_cast<int>(kept.size()); ++i) {
        const PathInfo& p = paths[kept[i]];
        BasisElem e;
        e.src = p.src;
        e.tgt = p.tgt;
        e.len = static_cast<int>(p.word.size());
        e.name = word_name(q, p);
        A.basis.push_back(e);
        out.path_words.push_back(p.word);
        if (p.word.empty()) A.idem[p.src] = i;
    }
    int n = A.dim();

    auto normal_form = [&](const SparseVec& v) {
        SparseVec r = ideal.reduce(v);
        SparseVec conv_out;
        for (auto& [k, c] : r) {
            assert(kept_pos[k] >= 0);
            conv_out.emplace_back(kept_pos[k], c);
        }
        std::sort(conv_out.begin(), conv_out.end());
        return conv_out;
    };

    A.table.assign(n, std::vector<SparseVec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (A.basis[j].tgt != A.basis[i].src) continue;
            // fold basis i's word onto path j one arrow at a time, reducing as we go
            SparseVec cur{{kept[j], Rat(1)}};
            bool dead = false;
            for (int a : out.path_words[i]) {
                SparseVec next;
                for (auto& [k, c] : cur) {
                    const PathInfo& p = paths[k];
                    if (p.tgt != q.arrows[a].src) continue;
                    std::vector<int> w = p.word;
                    w.push_back(a);
                    int idx = index_of_word(w);
                    assert(idx >= 0);  // kept paths have length < saturation <= window
                    next = sparse_add(next, SparseVec{{idx, c}});
                }
                SparseVec red = ideal.reduce(next);
                cur = red;
                if (cur.empty()) { dead = true; break; }
            }
            if (!dead) A.table[i][j] = normal_form(cur);
        }

    if (!A.check_idempotents())
        throw std::logic_error("path algebra build: idempotent check failed");
    // every relation must hold in the table
    for (const Relation& r : rels) {
        Vec l = out.eval_terms(r.lhs), rr = out.eval_terms(r.rhs);
        if (!vec_is_zero(vec_sub(l, rr)))
            throw std::logic_error("path algebra build: relation not satisfied: " + r.text);
    }
    A.certify_radical_nilpotent();
    return out;
}

}  // namespace homquiver
