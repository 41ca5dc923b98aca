#include "thetapairs/root_system.hpp"

#include "thetapairs/errors.hpp"
#include "thetapairs/matrix.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace thetapairs {

std::string int_vec_key(const IntVec& v) {
    std::string s;
    for (int x : v) {
        s += std::to_string(x);
        s += ',';
    }
    return s;
}

RootDatum RootDatum::build(const std::string& label) {
    if (label.size() < 2) throw Unsupported("build_root_datum", "bad type label '" + label + "'");
    char family = label[0];
    int n = 0;
    try {
        n = std::stoi(label.substr(1));
    } catch (const std::exception&) {
        throw Unsupported("build_root_datum", "bad type label '" + label + "'");
    }
    std::vector<int> len;
    std::vector<std::pair<int, int>> edges;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) edges.emplace_back(i, i + 1);
    };
    switch (family) {
    case 'A':
        if (n < 1) break;
        len.assign(n, 1);
        chain(n);
        break;
    case 'B':
        if (n < 2) break;
        len.assign(n, 2);
        len[n - 1] = 1;
        chain(n);
        break;
    case 'C':
        if (n < 2) break;
        len.assign(n, 1);
        len[n - 1] = 2;
        chain(n);
        break;
    case 'D':
        if (n < 4) break;
        len.assign(n, 1);
        chain(n - 1);
        edges.emplace_back(n - 3, n - 1);
        break;
    case 'E':
        if (n != 6) break;
        len.assign(6, 1);
        edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
        break;
    case 'F':
        if (n != 4) break;
        len = {2, 2, 1, 1};
        chain(4);
        break;
    case 'G':
        if (n != 2) break;
        len = {1, 3};
        edges = {{0, 1}};
        break;
    default:
        break;
    }
    if (len.empty()) throw Unsupported("build_root_datum", "unsupported type/rank '" + label + "'");
    return from_dynkin(len, edges, label);
}

RootDatum RootDatum::from_dynkin(std::vector<int> half_lengths, const std::vector<std::pair<int, int>>& edges,
                                 std::string label) {
    RootDatum d;
    d.label_ = std::move(label);
    d.half_lengths_ = std::move(half_lengths);
    std::size_t r = d.half_lengths_.size();
    d.gram_.assign(r, std::vector<int>(r, 0));
    for (std::size_t i = 0; i < r; ++i) d.gram_[i][i] = 2 * d.half_lengths_[i];
    for (auto [a, b] : edges) {
        int v = -std::max(d.half_lengths_[a], d.half_lengths_[b]);
        d.gram_[a][b] = d.gram_[b][a] = v;
    }
    d.close_roots();
    return d;
}

RootDatum RootDatum::product(const RootDatum& a, const RootDatum& b) {
    std::vector<int> len = a.half_lengths_;
    len.insert(len.end(), b.half_lengths_.begin(), b.half_lengths_.end());
    RootDatum d;
    d.label_ = a.label_ + "x" + b.label_;
    d.half_lengths_ = len;
    std::size_t r = len.size();
    d.gram_.assign(r, std::vector<int>(r, 0));
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j) d.gram_[i][j] = a.gram_[i][j];
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.rank(); ++j) d.gram_[a.rank() + i][a.rank() + j] = b.gram_[i][j];
    d.close_roots();
    return d;
}

void RootDatum::close_roots() {
    std::size_t r = rank();
    std::map<std::string, IntVec> found;
    std::deque<IntVec> queue;
    for (std::size_t i = 0; i < r; ++i) {
        IntVec e(r, 0);
        e[i] = 1;
        queue.push_back(e);
        found[int_vec_key(e)] = e;
    }
    // Simple reflections applied to simple roots generate every positive and negative root.
    std::vector<IntVec> all;
    while (!queue.empty()) {
        IntVec v = queue.front();
        queue.pop_front();
        all.push_back(v);
        for (std::size_t i = 0; i < r; ++i) {
            int p = 0;
            for (std::size_t j = 0; j < r; ++j) p += v[j] * gram_[j][i];
            if (p % half_lengths_[i] != 0) throw InvariantViolation("build_root_datum", "non-integral pairing");
            p /= half_lengths_[i];
            IntVec w = v;
            w[i] -= p;
            auto key = int_vec_key(w);
            if (!found.count(key)) {
                found[key] = w;
                queue.push_back(w);
            }
        }
    }
    std::vector<IntVec> pos;
    for (const auto& v : all) {
        bool nonneg = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
        bool nonpos = std::all_of(v.begin(), v.end(), [](int x) { return x <= 0; });
        if (!nonneg && !nonpos) throw InvariantViolation("build_root_datum", "root with mixed signs");
        if (nonneg) pos.push_back(v);
    }
    if (pos.size() * 2 != all.size()) throw InvariantViolation("build_root_datum", "roots not closed under negation");
    std::sort(pos.begin(), pos.end(), [](const IntVec& a, const IntVec& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a > b;
    });
    roots_ = pos;
    for (const auto& v : pos) {
        IntVec n(v);
        for (auto& x : n) x = -x;
        roots_.push_back(n);
    }
    std::size_t np = pos.size();
    negative_.resize(roots_.size());
    for (std::size_t k = 0; k < roots_.size(); ++k) negative_[k] = k < np ? k + np : k - np;
    simple_.resize(r);
    for (std::size_t i = 0; i < r; ++i) simple_[i] = i;
    index_.clear();
    for (std::size_t k = 0; k < roots_.size(); ++k) index_[int_vec_key(roots_[k])] = k;
}

bool RootDatum::positive(std::size_t k) const { return k < roots_.size() / 2; }

std::optional<std::size_t> RootDatum::index_of(const IntVec& v) const {
    auto it = index_.find(int_vec_key(v));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int RootDatum::inner(const IntVec& a, const IntVec& b) const {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * gram_[i][j] * b[j];
    }
    return s;
}

int RootDatum::half_length(std::size_t k) const { return inner(roots_[k], roots_[k]) / 2; }

int RootDatum::pairing(const IntVec& v, std::size_t k) const {
    int num = inner(v, roots_[k]);
    int hl = half_length(k);
    if (num % hl != 0) throw InvariantViolation("RootDatum::pairing", "non-integral pairing");
    return num / hl;
}

std::vector<std::vector<int>> RootDatum::cartan_matrix() const {
    std::size_t r = rank();
    std::vector<std::vector<int>> c(r, std::vector<int>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) c[i][j] = pairing(roots_[simple_[i]], simple_[j]);
    return c;
}

IntVec RootDatum::coroot(std::size_t k) const {
    int hl = half_length(k);
    IntVec c(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        int num = roots_[k][i] * half_lengths_[i];
        if (num % hl != 0) throw InvariantViolation("RootDatum::coroot", "non-integral coroot");
        c[i] = num / hl;
    }
    return c;
}

IntVec RootDatum::reflect(std::size_t k, const IntVec& v) const {
    int p = pairing(v, k);
    IntVec w(v);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= p * roots_[k][i];
    return w;
}

std::vector<std::uint16_t> RootDatum::reflection(std::size_t k) const {
    std::vector<std::uint16_t> perm(roots_.size());
    for (std::size_t j = 0; j < roots_.size(); ++j) {
        auto idx = index_of(reflect(k, roots_[j]));
        if (!idx) throw InvariantViolation("RootDatum::reflection", "reflection does not permute roots");
        perm[j] = static_cast<std::uint16_t>(*idx);
    }
    return perm;
}

namespace {

using QVec = std::vector<mpq_class>;

mpq_class qinner(const QVec& a, const QVec& b, const std::vector<QVec>& gram) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (sgn(b[j]) != 0) s += a[i] * gram[i][j] * b[j];
    }
    return s;
}

std::string irreducible_label(std::size_t rank, std::size_t count, const std::map<mpq_class, std::size_t>& lengths) {
    auto n = static_cast<std::size_t>(rank);
    if (lengths.size() == 1) {
        if (count == n * (n + 1)) return "A" + std::to_string(n);
        if (n >= 4 && count == 2 * n * (n - 1)) return "D" + std::to_string(n);
        if (n == 6 && count == 72) return "E6";
        if (n == 7 && count == 126) return "E7";
        if (n == 8 && count == 240) return "E8";
    } else if (lengths.size() == 2) {
        const auto& [short_len, short_count] = *lengths.begin();
        const auto& [long_len, long_count] = *lengths.rbegin();
        mpq_class ratio = long_len / short_len;
        if (ratio == 3 && n == 2 && count == 12) return "G2";
        if (ratio == 2) {
            if (n == 2 && count == 8) return "B2";
            if (n == 4 && long_count == 24 && short_count == 24) return "F4";
            if (long_count == 2 * n * (n - 1) && short_count == 2 * n) return "B" + std::to_string(n);
            if (long_count == 2 * n && short_count == 2 * n * (n - 1)) return "C" + std::to_string(n);
        }
    }
    throw DomainError("recognize_type", "unrecognized signature: rank " + std::to_string(rank) + ", " +
                                            std::to_string(count) + " roots");
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

} // namespace

std::size_t weyl_order_of_label(const std::string& label) {
    std::size_t total = 1;
    std::size_t start = 0;
    while (start < label.size()) {
        std::size_t end = label.find('x', start);
        if (end == std::string::npos) end = label.size();
        std::string part = label.substr(start, end - start);
        char f = part[0];
        std::size_t n = std::stoul(part.substr(1));
        std::size_t o = 0;
        switch (f) {
        case 'A': o = factorial(n + 1); break;
        case 'B':
        case 'C': o = (std::size_t{1} << n) * factorial(n); break;
        case 'D': o = (std::size_t{1} << (n - 1)) * factorial(n); break;
        case 'E': o = n == 6 ? 51840 : n == 7 ? 2903040 : 696729600; break;
        case 'F': o = 1152; break;
        case 'G': o = 12; break;
        default: throw DomainError("weyl_order_of_label", "unknown label " + part);
        }
        total *= o;
        start = end + 1;
    }
    return total;
}

std::string recognize_type(const VectorRootSystem& system, std::optional<std::size_t> group_order) {
    // Keep indivisible roots only.
    std::map<std::string, std::size_t> seen;
    auto key = [](const QVec& v) {
        std::string s;
        for (const auto& x : v) s += x.get_str() + ",";
        return s;
    };
    for (std::size_t k = 0; k < system.roots.size(); ++k) seen[key(system.roots[k])] = k;
    std::vector<QVec> roots;
    for (const auto& v : system.roots) {
        QVec half(v);
        for (auto& x : half) x /= 2;
        if (!seen.count(key(half))) roots.push_back(v);
    }
    std::size_t m = roots.size();
    if (m == 0) {
        if (group_order && *group_order != 1) throw DomainError("recognize_type", "order mismatch for empty system");
        return "A0";
    }
    std::vector<int> comp(m, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < m; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            std::size_t a = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < m; ++b)
                if (comp[b] < 0 && sgn(qinner(roots[a], roots[b], system.gram)) != 0) {
                    comp[b] = ncomp;
                    stack.push_back(b);
                }
        }
        ++ncomp;
    }
    std::vector<std::string> labels;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<Vec> members;
        std::map<mpq_class, std::size_t> lengths;
        for (std::size_t k = 0; k < m; ++k) {
            if (comp[k] != c) continue;
            Vec v;
            for (const auto& x : roots[k]) v.emplace_back(x);
            members.push_back(v);
            lengths[qinner(roots[k], roots[k], system.gram)]++;
        }
        std::size_t r = rank(Matrix::from_rows(members, members[0].size()));
        labels.push_back(irreducible_label(r, members.size(), lengths));
    }
    std::sort(labels.begin(), labels.end());
    std::string label;
    for (const auto& l : labels) label += (label.empty() ? "" : "x") + l;
    if (group_order && weyl_order_of_label(label) != *group_order)
        throw DomainError("recognize_type", "group order " + std::to_string(*group_order) +
                                                " does not match recognized type " + label);
    return label;
}

} // namespace thetapairs
