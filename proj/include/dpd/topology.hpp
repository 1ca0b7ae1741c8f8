#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dpd/fibers.hpp"
#include "dpd/mobius.hpp"
#include "dpd/pair.hpp"

namespace dpd {

// The four compact connected surfaces that arise as real loci of regular
// pairs: torus, sphere, real projective plane, Klein bottle.
enum class ModelType { Torus, Sphere, RP2, KleinBottle };

std::string model_name(ModelType m);

// The canonical pair presenting each model:
//   Torus        (P^1 minus {i, -i},  D = 0,                h = 1)
//   Sphere       (P^1 minus {inf},    D = 0,                h = 1 - z^2)
//   RP2          (P^1 minus {inf},    D = 1/2*[-1],         h = 1 - z^2)
//   KleinBottle  (P^1 minus {inf},    D = 1/2*[-1] + 1/2*[1], h = 1 - z^2)
DpdPair canonical_pair(ModelType m);

// Outcome of the real-locus classification.  Equality compares the semantic
// verdict (kind and model); the diagnostic reason is presentation-dependent
// (it names points, which move under reparametrization) and is ignored.
struct TopologyVerdict {
    enum class Kind { Model, EmptyRealLocus, NonCompactOrNotConnected, Undetermined };

    Kind kind;
    std::optional<ModelType> model;  // engaged exactly when kind == Model
    std::string reason;              // engaged for the last two kinds

    static TopologyVerdict model_verdict(ModelType m);
    static TopologyVerdict empty_locus();
    static TopologyVerdict non_compact(std::string why);
    static TopologyVerdict undetermined(std::string why);

    bool is_model() const { return kind == Kind::Model; }
    std::string str() const;

    friend bool operator==(const TopologyVerdict& a, const TopologyVerdict& b) {
        return a.kind == b.kind && a.model == b.model;
    }
    friend bool operator!=(const TopologyVerdict& a, const TopologyVerdict& b) {
        return !(a == b);
    }
};

// One maximal piece of the image of the real locus in the real circle of the
// base.  An end is open when the bounding mark is a puncture (the image
// approaches a removed point without reaching it); then the piece is not
// compact.  Ends at non-puncture marks carry that mark's fiber type.
struct SegmentEnd {
    CurvePoint point;
    bool closed;
    std::optional<RealFiberType> fiber;
};

struct ImageSegment {
    SegmentEnd from, to;  // in the cyclic order of the base circle
    std::string str() const;
};

// Image of the real locus of the surface under the quotient map, as a subset
// of the real points of the base.  A segment's interior consists of
// torsor-with-real-circle fibers; its closed ends are the bounding special
// points.  Isolated image points cannot occur for regular pairs: a fiber
// letter b or c forces opposite generic signs on the two sides, so every
// special point with nonempty real fiber is adjacent to a positive arc.
struct RealImage {
    enum class Kind { Empty, FullCircle, Segments };
    Kind kind;
    std::vector<ImageSegment> segments;  // engaged exactly when kind == Segments
    std::string str() const;
};

RealImage real_image(const DpdPair& pair);

TopologyVerdict classify_real_locus(const DpdPair& pair);

// ---- Moves -----------------------------------------------------------------
//
// The elementary transformations that preserve the equivariant
// diffeomorphism type of the real locus.  Each is exact and replayable;
// normalize_to_model emits a move list whose replay reproduces the canonical
// pair verbatim.

struct MoveTwist {
    TwistData twist;
};
struct MoveRestrictNonReal {
    std::vector<CurvePoint> points;  // conjugation-stable, no real points
};
struct MoveExtendNonReal {
    std::vector<CurvePoint> points;
};
// Extension across a real puncture where the surrounding fibers are empty
// (h negative, order 0).  Needed to reach the canonical curve from bases
// with extra real punctures; the filled fibers have no real points, so the
// real locus is untouched.
struct MoveExtendNegativeReal {
    std::vector<CurvePoint> points;
};
struct MoveReparametrize {
    Mobius map;
};
struct MoveLocalReduce {
    CurvePoint point;
};
struct MoveFlipSign {};

using Move = std::variant<MoveTwist, MoveRestrictNonReal, MoveExtendNonReal,
                          MoveExtendNegativeReal, MoveReparametrize, MoveLocalReduce,
                          MoveFlipSign>;

DpdPair apply_move(const DpdPair& pair, const Move& move);
DpdPair apply_moves(const DpdPair& pair, const std::vector<Move>& moves);
std::string move_str(const Move& move);

// ---- Normalization ---------------------------------------------------------

struct NormalizeResult {
    ModelType model;
    std::vector<Move> moves;
    DpdPair canonical;
};

// Requires classify_real_locus(pair) to be a model verdict (NotAModel
// otherwise).  Emits moves in the order: h-clearing twist, restriction at
// non-real points, extensions to the canonical curve, reparametrization of
// the image onto [-1,1], local reductions at real special points, the sign
// flip making D(-1) >= D(1), and a final scalar twist.  Postconditions:
// result.canonical == canonical_pair(result.model), replaying result.moves
// on the input yields exactly result.canonical, and every intermediate pair
// has the same classification verdict as the input.
NormalizeResult normalize_to_model(const DpdPair& pair);

// ---- Equivalence certificates ----------------------------------------------

// Checks the certificate (psi, f, lambda) for an equivalence from pair1 to
// pair2: psi must carry the removed set of pair1's curve onto that of
// pair2's (CurveMismatch otherwise), lambda must be positive, and the
// verification is the exact identity pair: psi*D2 == D1 + div(f) restricted
// to the curve, and psi*h2 == lambda * f * conj(f) * h1.  Returns the truth
// of those identities; never searches for a certificate.
bool verify_equivalence(const DpdPair& pair1, const DpdPair& pair2, const Mobius& psi,
                        const RationalFunction& f, const Rational& lambda);

}  // namespace dpd
