#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ktg/half_int.hpp"
#include "ktg/qratio.hpp"
#include "ktg/repcore.hpp"

namespace ktg {

enum class TileKind { Identity, Cup, Cap, PosCross, NegCross, VertexY, VertexP, TripleW, TripleM };

std::string tile_kind_name(TileKind k);
std::optional<TileKind> tile_kind_from_name(const std::string& s);

/**
 * One elementary block of a Morse slice. `colors` holds the defining colors:
 *   Identity, Cup, Cap     {a}
 *   PosCross, NegCross     {a, b}  (bottom left, bottom right; tops are b, a)
 *   VertexY                {a, b, c}: bottom leg c, top legs a, b
 *   VertexP                {a, b, c}: bottom legs a, b, top leg c
 *   TripleW                {a, b, c}: three top legs
 *   TripleM                {a, b, c}: three bottom legs
 */
struct Tile {
    TileKind kind;
    std::vector<HalfInt> colors;

    std::vector<HalfInt> bottom_colors() const;
    std::vector<HalfInt> top_colors() const;
    bool is_vertex() const {
        return kind == TileKind::VertexY || kind == TileKind::VertexP ||
               kind == TileKind::TripleW || kind == TileKind::TripleM;
    }
    bool is_crossing() const { return kind == TileKind::PosCross || kind == TileKind::NegCross; }
};

struct Slice {
    std::vector<Tile> tiles;
};

struct EdgeInfo {
    int id = 0;
    HalfInt color;
    int euler = 1;      // 1 iff the edge touches a vertex, 0 for closed loops
    HalfInt framing;    // offset g_e between the actual and blackboard framing
};

/**
 * Morse presentation of a colored framed KTG diagram. `wires[k]` lists the
 * edge id under every strand of cross-section k (k = 0 is the bottom
 * boundary, k = slices.size() the top); a tile leg's edge is the entry at
 * its strand position. The assignment is explicit input and cross-checked
 * by validate() rather than inferred.
 */
struct SlicedDiagram {
    std::vector<Slice> slices;
    std::vector<EdgeInfo> edges;
    std::vector<std::vector<int>> wires;
    std::vector<HalfInt> boundary_bottom;
    std::vector<HalfInt> boundary_top;

    bool is_closed() const { return boundary_bottom.empty() && boundary_top.empty(); }
    const EdgeInfo* edge(int id) const;
};

struct Violation {
    int slice = -1;  // -1 for diagram-level problems
    int tile = -1;
    std::string reason;
};

// Empty result means the diagram is well-formed (interfaces match, wire
// colors agree with edge colors, vertex triples admissible, euler flags
// consistent with vertex incidence).
std::vector<Violation> validate(const SlicedDiagram& d);

// prod_e i^{4 g_e col(e)} q^{2 g_e (col(e)^2+col(e))}
QLaurent framing_factor(const SlicedDiagram& d);

/**
 * Exact bracket of the diagram by slice-by-slice contraction. For closed
 * diagrams both state arguments stay empty. For open diagrams the states fix
 * one basis index per boundary strand and the result is that single matrix
 * entry. Throws std::invalid_argument on a diagram that fails validate().
 */
QRatio evaluate(const SlicedDiagram& d,
                const std::vector<HalfInt>& bottom_states = {},
                const std::vector<HalfInt>& top_states = {});

// evaluate() split as numerator over the fixed tile-denominator product, for
// callers that fold several evaluations before reducing.
std::pair<QLaurent, QLaurent> evaluate_raw(const SlicedDiagram& d,
                                           const std::vector<HalfInt>& bottom_states = {},
                                           const std::vector<HalfInt>& top_states = {});

// ---- corpus builders ----------------------------------------------------
namespace corpus {

SlicedDiagram unknot(HalfInt color, HalfInt framing);
SlicedDiagram unlink(const std::vector<HalfInt>& colors, const std::vector<HalfInt>& framings);
SlicedDiagram kinked_unknot(HalfInt color, int kinks, bool positive);
SlicedDiagram theta(HalfInt a, HalfInt b, HalfInt c);
SlicedDiagram tet(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e, HalfInt f);
// square with sides S=e, E=c, N=b, W=f and crossed diagonals a, d
SlicedDiagram crossed_tet(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e, HalfInt f,
                          bool positive);
// theta(a,b,c) # theta(a,d,e) glued along the a-colored edge
SlicedDiagram theta_sum(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e);
// cube Q3: two rail 4-cycles colored n joined by four rungs colored m
SlicedDiagram cube_graph(HalfInt rail, HalfInt rung);
// circle enclosing a figure-eight with ka/kb extra half-twists on the necks
SlicedDiagram nested_eight(HalfInt color, int ka, int kb);
// open tangle: two strands with |n| crossings (sign of n picks the crossing)
SlicedDiagram twist_chain(HalfInt a, HalfInt b, int n);

}  // namespace corpus

}  // namespace ktg
