#pragma once

#include <string>
#include <variant>
#include <vector>

#include "vknot/gauss_code.hpp"

namespace vknot {

/// One quandle relation x_lhs ▷ x_rhs = x_out over generators 1..g.
struct Relation {
    int lhs = 0;
    int rhs = 0;
    int out = 0;

    bool operator==(const Relation&) const = default;
};

/// A finite quandle presentation: generator count plus relation triples.
/// Conflicting relations (same lhs/rhs, different out) are legal here; they
/// only obstruct the matrix form.
struct RelationList {
    int generators = 0;
    std::vector<Relation> relations;

    bool operator==(const RelationList&) const = default;
};

/// g x g matrix form of a presentation: entry (i,j) = k > 0 encodes
/// x_i ▷ x_j = x_k, 0 means unconstrained.
class PresentationMatrix {
public:
    PresentationMatrix(int generators, std::vector<int> entries);

    int generators() const noexcept { return generators_; }
    int at(int i, int j) const {
        return entries_[static_cast<size_t>(i - 1) * generators_ + (j - 1)];
    }
    const std::vector<int>& entries() const noexcept { return entries_; }

    bool operator==(const PresentationMatrix&) const = default;

private:
    int generators_;
    std::vector<int> entries_;
};

/// Two relations disagreeing on the same matrix cell.
struct ConflictReport {
    int lhs = 0;
    int rhs = 0;
    int first_out = 0;
    int second_out = 0;

    bool operator==(const ConflictReport&) const = default;
};

/// Relations of the knot quandle read off a single-component code: arcs are
/// the segments between Under-symbols, arc x_k ending at the k-th arrowhead
/// in traversal order; the crossing at arrowhead k with over-strand on arc j
/// contributes (k, j, k+1) for sign + and (k+1, j, k) for sign -.
RelationList upper_relations(const GaussCode& code);

/// upper_relations of the flipped code.
RelationList lower_relations(const GaussCode& code);

/// Matrix form, or the first conflict when two relations collide.
std::variant<PresentationMatrix, ConflictReport> relations_to_matrix(const RelationList& rel);

RelationList matrix_to_relations(const PresentationMatrix& m);

/// Repairs conflicting presentations by inserting a positive kink (a fresh
/// crossing, over then under) right after the under-symbol of the earliest
/// conflicting crossing, until upper_relations yields a conflict-free
/// matrix. Returns the input unchanged when already conflict-free. The
/// rewrite is a Reidemeister-I move, so homomorphism counts into any finite
/// quandle are unchanged.
GaussCode gfix(const GaussCode& code);

/// Same text format as quandle tables but entries 0..g are allowed.
std::string serialize_matrix(const PresentationMatrix& m);
PresentationMatrix parse_matrix(const std::string& text);

}  // namespace vknot
