#pragma once

/*
  Simplicial complexes on the vertex set {1..n}, n <= 16, stored as a
  membership bitset indexed by subset bitmask. A complex here is a
  downward-closed family of nonempty subsets containing every singleton;
  these are exactly the complexes Delta_A of weight data, where a subset I
  is a face iff the weights of I sum to at most 1.

  Also here: set partitions whose blocks are faces (the index set of the
  reduction-to-unweighted sum), the sigma-contraction of a complex, and an
  exact Fourier-Motzkin feasibility test deciding whether a candidate
  complex is realized by some weight data.
*/

#include "wsd/weights.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wsd {

class SimplicialComplex {
public:
    static constexpr int kMaxVertices = 16;

    explicit SimplicialComplex(int vertexCount);

    int vertexCount() const { return n_; }
    bool isFace(unsigned mask) const;
    bool isDownwardClosed() const;
    bool hasAllVertices() const;

    // Inserts the subset and, if needed, everything below it.
    void insertFaceWithClosure(unsigned mask);

    std::vector<unsigned> faces() const;             // all faces, ascending mask
    std::vector<unsigned> maximalFaces() const;      // ascending mask
    std::vector<unsigned> minimalNonFaces() const;   // inclusion-minimal absent subsets

    bool operator==(const SimplicialComplex& other) const;
    bool operator!=(const SimplicialComplex& other) const { return !(*this == other); }

private:
    int n_;
    std::vector<bool> face_;  // indexed by mask, face_[0] unused
};

// Faces are the subsets whose weights sum to at most 1. Every singleton is a
// face because a_i <= 1, and downward closure is automatic; both are
// asserted on the result.
SimplicialComplex buildComplex(const WeightData& w);

// All subsets of size <= r+1 of an n-set (the r-skeleton of the simplex).
SimplicialComplex skeletonComplex(int n, int r);

// Cone with a new apex vertex n+1: faces are sigma and sigma+{n+1} for every
// face sigma, plus the apex itself.
SimplicialComplex cone(const SimplicialComplex& c);

struct Contraction {
    SimplicialComplex complex;
    std::vector<int> vertexMap;  // old vertex (0-based) -> new position; sigma maps to newVertex
    int newVertex;               // position of the merged vertex in the contracted complex
};

// Replaces the vertices of sigma by a single vertex. A face gamma of c
// survives when gamma is disjoint from sigma (unchanged) or contains sigma
// (as (gamma minus sigma) + new vertex). The new vertex takes the position
// of min(sigma); remaining vertices keep their relative order.
// Requires sigma to be a face.
Contraction contract(const SimplicialComplex& c, unsigned sigmaMask);

// Same combinatorics without requiring sigma to be a face; the merged
// vertex is then isolated unless some face contains all of sigma. This is
// the shape of the complexes behind the symmetric equation corrections.
Contraction contractSubset(const SimplicialComplex& c, unsigned sigmaMask);

struct SetPartition {
    std::vector<unsigned> blocks;  // disjoint masks covering {1..n}, ordered by lowest element

    int blockCount() const { return static_cast<int>(blocks.size()); }
};

int partitionDimension(int n, const SetPartition& p);  // n - |blocks|

// Enumerates the partitions of {1..n} all of whose blocks are faces, in the
// canonical order: blocks chosen for the smallest unassigned element first,
// candidates in increasing bitmask order. Inadmissible partitions are pruned
// at block-construction time, never materialized.
class AdmissiblePartitions {
public:
    // Owns a copy of the complex: the range may outlive the argument, and a
    // copy is cheap next to the enumeration itself.
    explicit AdmissiblePartitions(SimplicialComplex c);

    class iterator {
    public:
        const SetPartition& operator*() const { return current_; }
        const SetPartition* operator->() const { return &current_; }
        iterator& operator++();
        bool operator!=(const iterator& other) const { return done_ != other.done_; }

    private:
        friend class AdmissiblePartitions;
        struct Frame {
            unsigned rest;    // unassigned vertices
            unsigned element; // lowest bit of rest
            unsigned sub;     // cursor over submasks of rest^element
            bool exhausted;
        };
        explicit iterator(const SimplicialComplex* c);  // begin
        iterator() : complex_(nullptr), done_(true) {}  // end
        bool descend(unsigned rest);
        bool advance();

        const SimplicialComplex* complex_;
        std::vector<Frame> stack_;
        SetPartition current_;
        bool done_ = false;
    };

    iterator begin() const { return iterator(&complex_); }
    iterator end() const { return iterator(); }

private:
    SimplicialComplex complex_;
};

std::vector<SetPartition> collectAdmissiblePartitions(const SimplicialComplex& c);

struct RealizeOptions {
    bool positiveOnly = true;       // a_i > 0, else a_i >= 0
    bool domainConstraint = false;  // additionally require membership in D_{g,n,beta}
    int genus = 2;
    int betaDegree = 0;
    std::size_t maxRows = 200000;        // Fourier-Motzkin row cap
    std::size_t maxMinimalNonFaces = 4096;
};

// Decides by exact Fourier-Motzkin elimination whether some weight data
// realizes the complex: subset sums <= 1 exactly on the faces, > 1 on the
// minimal non-faces, 0 < a_i <= 1 (or 0 <= a_i <= 1). Returns a witness or
// nothing when the system is infeasible.
std::optional<WeightData> realize(const SimplicialComplex& c,
                                  const RealizeOptions& options = {});

// Textual format: comma-separated maximal faces, 1-based vertices,
// concatenated digits for n <= 9 ("1,2,345"), bracketed lists for n >= 10.
std::string formatComplex(const SimplicialComplex& c);
std::string formatSubset(unsigned mask, int n);
SimplicialComplex parseComplex(const std::string& text);

}  // namespace wsd
