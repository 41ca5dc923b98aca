#include "thetapairs/weyl_group.hpp"

#include "thetapairs/errors.hpp"

#include <deque>

namespace thetapairs {

WeylElement WeylElement::identity(std::size_t n) {
    RootPerm p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = static_cast<std::uint16_t>(k);
    return WeylElement(std::move(p));
}

bool WeylElement::is_identity() const {
    for (std::size_t k = 0; k < perm_.size(); ++k)
        if (perm_[k] != k) return false;
    return true;
}

WeylElement WeylElement::inverse() const {
    RootPerm p(perm_.size());
    for (std::size_t k = 0; k < perm_.size(); ++k) p[perm_[k]] = static_cast<std::uint16_t>(k);
    return WeylElement(std::move(p));
}

std::string WeylElement::key() const {
    return std::string(reinterpret_cast<const char*>(perm_.data()), perm_.size() * sizeof(std::uint16_t));
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    RootPerm p(b.perm_.size());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = a.perm_[b.perm_[k]];
    return WeylElement(std::move(p));
}

IntMatrix lattice_action(const RootDatum& datum, const WeylElement& w) {
    std::size_t r = datum.rank();
    IntMatrix m(r, r);
    for (std::size_t j = 0; j < r; ++j) {
        const IntVec& img = datum.root(w(datum.simple_index(j)));
        for (std::size_t i = 0; i < r; ++i) m(i, j) = img[i];
    }
    return m;
}

bool preserves_pairing(const RootDatum& datum, const WeylElement& w) {
    for (std::size_t k = 0; k < datum.size(); ++k)
        if (w(datum.negative(k)) != datum.negative(w(k))) return false;
    for (auto i : datum.simple())
        for (auto j : datum.simple())
            if (datum.inner(datum.root(i), datum.root(j)) != datum.inner(datum.root(w(i)), datum.root(w(j))))
                return false;
    return true;
}

std::size_t length(const RootDatum& datum, const WeylElement& w) {
    std::size_t l = 0;
    for (std::size_t k = 0; k < datum.positive_count(); ++k)
        if (!datum.positive(w(k))) ++l;
    return l;
}

WeylGroup WeylGroup::enumerate(const RootDatum& datum, std::size_t bound) {
    std::vector<WeylElement> gens;
    for (auto s : datum.simple()) gens.emplace_back(datum.reflection(s));
    return generated(datum.size(), gens, bound);
}

WeylGroup WeylGroup::generated(std::size_t root_count, const std::vector<WeylElement>& generators,
                               std::size_t bound) {
    WeylGroup g;
    g.generators_ = generators;
    WeylElement id = WeylElement::identity(root_count);
    g.elements_.push_back(id);
    g.parent_.push_back(-1);
    g.via_.push_back(-1);
    g.index_[id.key()] = 0;
    for (std::size_t head = 0; head < g.elements_.size(); ++head) {
        for (std::size_t s = 0; s < generators.size(); ++s) {
            WeylElement next = g.elements_[head] * generators[s];
            auto key = next.key();
            if (g.index_.count(key)) continue;
            if (g.elements_.size() >= bound)
                throw EnumerationBoundExceeded("enumerate_weyl",
                                               "group order exceeds bound " + std::to_string(bound));
            g.index_[key] = g.elements_.size();
            g.elements_.push_back(std::move(next));
            g.parent_.push_back(static_cast<std::int64_t>(head));
            g.via_.push_back(static_cast<int>(s));
        }
    }
    return g;
}

std::vector<int> WeylGroup::word(std::size_t i) const {
    std::vector<int> w;
    for (std::int64_t cur = static_cast<std::int64_t>(i); parent_[cur] >= 0; cur = parent_[cur]) w.push_back(via_[cur]);
    return std::vector<int>(w.rbegin(), w.rend());
}

std::optional<std::size_t> WeylGroup::index_of(const WeylElement& w) const {
    auto it = index_.find(w.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

} // namespace thetapairs
