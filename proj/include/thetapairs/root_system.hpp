#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace thetapairs {

using IntVec = std::vector<int>;

// A reduced root system in simple-root coordinates. The inner product is the
// symmetrized Cartan form with (a_i, a_i) = 2 * half_length(i).
class RootDatum {
public:
    // "A3", "B4", "C4", "D4", "E6", "F4", "G2".
    static RootDatum build(const std::string& label);
    static RootDatum from_dynkin(std::vector<int> half_lengths, const std::vector<std::pair<int, int>>& edges,
                                 std::string label);
    static RootDatum product(const RootDatum& a, const RootDatum& b);

    const std::string& label() const { return label_; }
    std::size_t rank() const { return half_lengths_.size(); }
    std::size_t size() const { return roots_.size(); }
    const std::vector<IntVec>& roots() const { return roots_; }
    const IntVec& root(std::size_t k) const { return roots_[k]; }
    const std::vector<std::size_t>& simple() const { return simple_; }
    std::size_t simple_index(std::size_t i) const { return simple_[i]; }
    bool positive(std::size_t k) const;
    std::size_t negative(std::size_t k) const { return negative_[k]; }
    std::size_t positive_count() const { return roots_.size() / 2; }
    std::optional<std::size_t> index_of(const IntVec& v) const;

    const std::vector<std::vector<int>>& gram() const { return gram_; }
    int inner(const IntVec& a, const IntVec& b) const;
    int half_length(std::size_t k) const; // (a, a) / 2
    // <v, a_k^vee> = 2 (v, a_k) / (a_k, a_k)
    int pairing(const IntVec& v, std::size_t k) const;
    // entry (i, j) = <a_i, a_j^vee>
    std::vector<std::vector<int>> cartan_matrix() const;
    // coroot of root k in the basis of simple coroots
    IntVec coroot(std::size_t k) const;

    IntVec reflect(std::size_t k, const IntVec& v) const;
    std::vector<std::uint16_t> reflection(std::size_t k) const;

private:
    std::string label_;
    std::vector<int> half_lengths_;
    std::vector<std::vector<int>> gram_;
    std::vector<IntVec> roots_;
    std::vector<std::size_t> simple_;
    std::vector<std::size_t> negative_;
    std::unordered_map<std::string, std::size_t> index_;
    void close_roots();
};

std::string int_vec_key(const IntVec& v);

// A finite collection of rational vectors with a rational Gram matrix, e.g. the
// restriction of a root system to a fixed subspace.
struct VectorRootSystem {
    std::vector<std::vector<mpq_class>> roots;
    std::vector<std::vector<mpq_class>> gram;
};

// Label such as "F4" or "A1xA1" from rank, root counts, and root lengths of each
// irreducible component; non-reduced multiples are discarded first. When an
// order is given it must match the Weyl group order of the recognized type.
std::string recognize_type(const VectorRootSystem& system, std::optional<std::size_t> group_order = std::nullopt);
std::size_t weyl_order_of_label(const std::string& label);

} // namespace thetapairs
