#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "swcx/subspace.hpp"

namespace swcx {

// Default guard on |GL_n(F_q)| for brute-force sweeps (closure, stabilizers).
inline constexpr std::uint64_t kDefaultGlGuard = 10'000'000;
// Default guard on the element count of a generated group.
inline constexpr std::uint64_t kDefaultGroupGuard = 1'000'000;

// Partition of F_q^n into blocks indexed by canonical vector index; each
// block's label is the smallest index among its members. Orbit partitions of
// matrix groups always have {0} as the block of the zero vector.
struct OrbitPartition {
    int n = 0;
    int q = 0;
    std::vector<std::int32_t> orbit_id;  // size q^n

    int num_orbits() const;
    std::uint64_t block_size(std::int32_t label) const;
    bool operator==(const OrbitPartition&) const = default;
    bool operator<(const OrbitPartition& o) const { return orbit_id < o.orbit_id; }
};

// Every vector in its own block.
OrbitPartition singleton_partition(int q, int n);

// A finite subgroup of GL_n(F_q), fully materialized. Elements are unique and
// sorted by their canonical matrix encoding; the identity is always present.
struct MatGroup {
    int n = 0;
    Field field;
    std::vector<Mat> generators;
    std::vector<Mat> elements;
    std::vector<std::uint64_t> keys;  // mat_key of elements, sorted; for lookup

    MatGroup() : field(2, 1) {}
    std::uint64_t size() const { return elements.size(); }
    bool contains(const Mat& m) const;
};

MatGroup trivial_group(const Field& F, int n);

// Breadth-first product closure of the generators; the empty generating set
// yields the trivial group. Throws on a singular generator or when the element
// count exceeds the guard.
MatGroup group_generate(const Field& F, int n, const std::vector<Mat>& gens,
                        std::uint64_t guard = kDefaultGroupGuard);

// Wraps an element list (assumed closed under product; generators default to
// the full element list).
MatGroup group_from_elements(const Field& F, int n, std::vector<Mat> elems,
                             std::vector<Mat> gens = {});

std::uint64_t gl_order(int q, int n);

// Visits every element of GL_n(F_q) exactly once in ascending canonical
// encoding order. fn returns false to abort the sweep. The Mat reference is
// only valid during the call.
void for_each_gl(const Field& F, int n, const std::function<bool(const Mat&)>& fn);

// Materializes all of GL_n(F_q); guarded by gl_guard.
MatGroup gl_group(const Field& F, int n, std::uint64_t gl_guard = kDefaultGlGuard);

// Orbit partition of the right action v -> v*g.
OrbitPartition orbits(const MatGroup& g, std::uint64_t guard = kDefaultEnumGuard);

// True iff m maps every block of p onto itself.
bool preserves_partition(const Field& F, const Mat& m, const OrbitPartition& p);

// The closure: all elements of GL_n(F_q) preserving every orbit of g.
MatGroup closure(const MatGroup& g, std::uint64_t gl_guard = kDefaultGlGuard);
bool is_closed(const MatGroup& g, std::uint64_t gl_guard = kDefaultGlGuard);

// True iff every block of p2 is a union of blocks of p1 (p1 refines p2).
bool partition_finer(const OrbitPartition& p1, const OrbitPartition& p2);

// Finest common coarsening.
OrbitPartition partition_join(const OrbitPartition& p1, const OrbitPartition& p2);

// Closure under partition_join of the orbit partitions of all cyclic subgroups
// of GL_n(F_q); equals the set of orbit partitions of all subgroups. Sorted by
// orbit_id.
std::vector<OrbitPartition> poset_partitions(const Field& F, int n,
                                             std::uint64_t gl_guard = kDefaultGlGuard);

// All elements of GL_n(F_q) fixing every block of p setwise; always closed.
MatGroup partition_stabilizer(const Field& F, const OrbitPartition& p,
                              std::uint64_t gl_guard = kDefaultGlGuard);

// { g in G : x*g = x }.
MatGroup point_stabilizer(const MatGroup& g, const Vec& x);

}  // namespace swcx
