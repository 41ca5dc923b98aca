#pragma once

#include "thetapairs/int_matrix.hpp"
#include "thetapairs/root_system.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace thetapairs {

using RootPerm = std::vector<std::uint16_t>;

// A Weyl group element stored as the permutation it induces on the root indices.
class WeylElement {
public:
    WeylElement() = default;
    explicit WeylElement(RootPerm p) : perm_(std::move(p)) {}
    static WeylElement identity(std::size_t n);

    const RootPerm& perm() const { return perm_; }
    std::size_t operator()(std::size_t k) const { return perm_[k]; }
    std::size_t size() const { return perm_.size(); }
    bool is_identity() const;
    WeylElement inverse() const;
    std::string key() const;

    // (a * b)(k) = a(b(k))
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm_ == b.perm_; }
    friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.perm_ < b.perm_; }

private:
    RootPerm perm_;
};

// Columns are the images of the simple roots, in simple-root coordinates.
IntMatrix lattice_action(const RootDatum& datum, const WeylElement& w);
bool preserves_pairing(const RootDatum& datum, const WeylElement& w);
std::size_t length(const RootDatum& datum, const WeylElement& w);

class WeylGroup {
public:
    static constexpr std::size_t default_bound = 60000;

    // Breadth-first closure over the simple reflections.
    static WeylGroup enumerate(const RootDatum& datum, std::size_t bound = default_bound);
    // Breadth-first closure over arbitrary generators.
    static WeylGroup generated(std::size_t root_count, const std::vector<WeylElement>& generators,
                               std::size_t bound = default_bound);

    std::size_t order() const { return elements_.size(); }
    const std::vector<WeylElement>& elements() const { return elements_; }
    const WeylElement& element(std::size_t i) const { return elements_[i]; }
    const std::vector<WeylElement>& generators() const { return generators_; }
    // Word in the generators reaching element i (shortest, first found in BFS order).
    std::vector<int> word(std::size_t i) const;
    std::optional<std::size_t> index_of(const WeylElement& w) const;
    bool contains(const WeylElement& w) const { return index_of(w).has_value(); }

private:
    std::vector<WeylElement> generators_;
    std::vector<WeylElement> elements_;
    std::vector<std::int64_t> parent_;
    std::vector<int> via_;
    std::unordered_map<std::string, std::size_t> index_;
};

} // namespace thetapairs
