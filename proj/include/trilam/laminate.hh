////////////////////////////////////////////////////////////////////////////////
// laminate.hh
////////////////////////////////////////////////////////////////////////////////
// Optimal microstructures attaining the translation bound in the
// high-porosity regions: hierarchical rank-one laminates (regions A1, A2, B,
// C and their mirrors) and the four-rectangle Sigmund-Gibiansky cell
// (region B). Every lamination normal is a coordinate axis; a Layered node
// treats its children as homogeneous, so traction continuity at a node is
// checked between the children's average stresses. The primed structures are
// the unprimed ones built at -rho with every leaf stress mirrored about
// e1 x e1 (s and d1 swap).
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <memory>
#include <vector>

#include "trilam/bound.hh"

namespace trilam {

enum class Axis { e1, e2 };

struct LaminateNode {
    enum class Kind { Leaf, Layer };

    Kind kind = Kind::Leaf;
    // leaf payload
    int phase = 3;        // 1 | 2 | 3 (void)
    SymTensor2 stress{};  // identically zero for void
    // layer payload
    Axis normal = Axis::e1;
    double fraction = 0.0;  // volume fraction of child a
    std::unique_ptr<LaminateNode> a;
    std::unique_ptr<LaminateNode> b;

    static LaminateNode leaf(int phase, const SymTensor2 &stress);
    static LaminateNode void_leaf() { return leaf(3, {}); }
    static LaminateNode layer(Axis normal, double fraction, LaminateNode a, LaminateNode b);

    LaminateNode() = default;
    LaminateNode(LaminateNode &&) = default;
    LaminateNode &operator=(LaminateNode &&) = default;
    LaminateNode clone() const;

    SymTensor2 average() const;  // recursive convex combination
    int scale_rank() const;      // nesting depth of Layer nodes
};

struct LaminateReport {
    SymTensor2 avg_stress;
    double f1 = 0.0, f2 = 0.0, f3 = 0.0;
    double energy = 0.0;   // fraction-weighted quadrupled stress energy
    double det_avg = 0.0;  // fraction-weighted determinant
    std::vector<double> jump_residuals;
    int scale_rank = 0;
    SymTensor2 phase1_avg;  // mean stress over the phase-1 leaves
    SymTensor2 phase2_avg;
};

struct BuiltLaminate {
    Region region;
    LaminateNode tree;
    // construction parameters in the region's own numbering:
    //   C / C'   : beta1, beta2
    //   B / B'   : beta1..beta4
    //   A1 / A1' : beta1..beta3
    //   A2 / A2' : beta1..beta5
    std::vector<double> betas;
};

// Builds the optimal structure for classify(spec); throws RegionNotAttained
// in regions D, D' and E.
BuiltLaminate build(const CompositeSpec &spec);

// Same, but with the region imposed by the caller (used on exact region
// boundaries, where the tie-break would pick the neighbouring label).
BuiltLaminate build_for_region(const CompositeSpec &spec, Region region);

// Four-rectangle periodic cell: a beta1 x beta2 rectangle of phase 2, the
// opposite rectangle void, and two perpendicular phase-1/void laminates
// feeding the load into phase 2 (phase-1 fractions beta3, beta4).
struct SGCell {
    double beta1, beta2, beta3, beta4;
    SymTensor2 tau11, tau12, tau2;  // fields in Y_{1,1}, Y_{1,2}, Y_2
};

// Requires the spec to lie in region B (the closed rectangle, so the
// degenerate T-structure edge rho == m2 is accepted).
SGCell build_sg(const CompositeSpec &spec);

LaminateReport evaluate(const LaminateNode &node, const Material &mat1, const Material &mat2);
LaminateReport evaluate(const SGCell &cell, const Material &mat1, const Material &mat2);

// Two residuals per Layered node: |(tau_a - tau_b):(n x n)| and
// |(tau_a - tau_b):sym(n x t)|, from the children's average stresses.
std::vector<double> check_compatibility(const LaminateNode &node);

// Max signed cone violation over leaves carrying positive volume:
// <= 0 means det of every leaf has the sign of rho (zero allowed).
double check_univalence(const LaminateNode &node, double rho);
double check_univalence(const SGCell &cell, double rho);

enum class MorphBoundary { BC, A1A2, A2B, A1C, BpCp, A1pA2p, A2pBp, A1pCp };

const char *to_string(MorphBoundary b);

struct MorphReport {
    // worst discrepancy over the parameter pairs shared by the two sides,
    // evaluated at the exact boundary point and across the +-eps step
    double max_beta_jump = 0.0;
    // energies of the two constructions at the common boundary point
    double max_energy_jump = 0.0;
    // parameters that must vanish on the boundary, evaluated on it
    double max_degenerate_beta = 0.0;
};

// Samples `count` points on the boundary, builds both sides' structures at
// the boundary point itself (all parameterizations stay finite there) and
// at +-eps offsets, which also re-checks that the offsets classify into the
// expected regions.
MorphReport morph_check(const Material &mat1, const Material &mat2, double m2,
                        MorphBoundary boundary, int count, double eps = 1e-8);

}  // namespace trilam
