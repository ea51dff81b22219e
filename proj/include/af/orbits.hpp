#pragma once
// Enumeration and orbit machinery: canonical projective points packed into
// 128-bit keys, BFS orbits under generator sets, the q=2 exhaustive color
// census, the structured white enumeration, line types, pure-white
// subspaces, 17-spaces and the twisted point-type trichotomy.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "af/albert.hpp"
#include "af/counts.hpp"
#include "af/group.hpp"
#include "af/rng.hpp"

namespace af {

// ---- canonical projective points ----

struct PackedPoint {
    uint64_t lo = 0, hi = 0;
    bool operator==(const PackedPoint& o) const { return lo == o.lo && hi == o.hi; }
    bool operator!=(const PackedPoint& o) const { return !(*this == o); }
};

/// Bits per coordinate, ceil(log2 q).
int point_bits(const Field& f);

PackedPoint pack_point(const std::array<uint16_t, 27>& coords, int bits);
std::array<uint16_t, 27> unpack_point(const PackedPoint& p, int bits);

/// Scale so the first nonzero canonical coordinate is 1; throws on zero.
AlbertVector canonical_point(const AlbertVector& v);
PackedPoint canonical_key(const AlbertVector& v);

/// Open-addressing hash set of packed points.
class PointSet {
public:
    explicit PointSet(uint64_t max_elements = UINT64_C(1) << 40);
    /// true if the point was new.
    bool insert(const PackedPoint& p);
    bool contains(const PackedPoint& p) const;
    uint64_t size() const { return size_; }
    uint64_t budget() const { return max_elements_; }

private:
    void grow();
    std::vector<PackedPoint> slots_;
    std::vector<uint8_t> used_;
    uint64_t size_ = 0, mask_ = 0, max_elements_;
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// ---- orbit BFS ----

struct OrbitOptions {
    uint64_t node_budget = UINT64_C(5000000);
};

struct OrbitReport {
    uint64_t size = 0;
    bool truncated = false;
    uint64_t generators = 0;  // operator count after adding inverses and deduping
};

/// BFS over canonical points under the given operators and their inverses.
/// Deterministic visit order given the operator ordering.  If the node
/// budget is exceeded the report carries the partial size and a truncation
/// flag.  out_points, when given, receives every visited key in visit order.
OrbitReport orbit_bfs(const std::vector<LinearOp27>& gens, const AlbertVector& start,
                      const OrbitOptions& opts = {},
                      std::vector<PackedPoint>* out_points = nullptr);

/// The documented BFS generator sets.
/// standard: 48 transvections (6 positions x 8 basis directions, lambda=1)
/// plus the two coordinate permutations.
std::vector<Generator> standard_generators(const Field& f);
/// stabilizer of the white point <(1,0,0|0,0,0)>: transvections in the four
/// positions fixing it plus all diagonal elements diag(u,u~,1) with N(u)=1
/// in all three slots (feasible for q <= 3).
std::vector<Generator> stabilizer_generators(const Field& f);

/// Build operators, append inverses, dedupe (first-seen order kept).
std::vector<LinearOp27> generator_ops_with_inverses(const std::vector<Generator>& gens);

// ---- q = 2 exhaustive machinery ----

/// Bit-packed split-octonion tables over GF(2): one byte per octonion.
struct Q2Tables {
    uint8_t mul[256][256];
    uint8_t conj[256];
    uint8_t norm[256];   // 0 or 1
    uint8_t trace[256];  // 0 or 1
};
const Q2Tables& q2_tables();

/// 27-bit key layout: bit 0..2 = a,b,c; 3..10 = A; 11..18 = B; 19..26 = C.
bool q2_is_white(uint32_t key);
uint32_t q2_det(uint32_t key);  // 0 or 1
Color q2_classify(uint32_t key);

struct ColorCensus {
    uint64_t white = 0, grey = 0, black = 0;
    uint64_t primitive_idempotents = 0;  // white with trace 1
    uint64_t trace0_white = 0;
    uint64_t diagonal_white = 0;  // white with A=B=C=0
    uint64_t total = 0;
};

/// Scans every nonzero vector of the 27-space over GF(2) (the only
/// feasible exhaustive field).  white_keys, if given, receives the white
/// keys in increasing order.
ColorCensus brute_force_color_census(const Field& f, int threads = 1,
                                     std::vector<uint32_t>* white_keys = nullptr);

// ---- structured white enumeration ----

/// Exact count of white vectors in one of the six cases (1..3 = diagonal
/// support patterns via the rank-1 parametrization, 4..6 = zero-diagonal
/// patterns via isotropic annihilator chains).  visit, when given, streams
/// every vector of the case exactly once (cases 1..3 require q = 2; cases
/// 4..6 work for q <= 3).
BigInt structured_white_count(const Field& f, int case_index,
                              const std::function<void(const AlbertVector&)>& visit = nullptr);

/// Number of octonions of each norm value; index = field code of the norm.
std::vector<uint64_t> octonion_norm_distribution(const Field& f);

// ---- line types and pure-white subspaces ----

enum class LineType { AllWhite, TwoWhite };
const char* line_type_name(LineType t);

/// Classification of the projective line through two distinct white
/// points; throws std::domain_error if an input is not white, and
/// std::logic_error if the white-point count on the line is not 2 or q+1.
LineType line_type(const AlbertVector& W, const AlbertVector& X);

/// around W = <(1,0,0|0,0,0)> at q=2, given the census white keys.
struct Rank3Partition {
    uint64_t all_white = 0, two_white = 0;
};
Rank3Partition rank3_partition_q2(const std::vector<uint32_t>& white_keys);

/// Representatives W1..W6 and W5' ("W5p"); name in {W1,...,W6,W5p}.
std::vector<AlbertVector> pure_white_representative(const Field& f, const std::string& name);

/// Exhaustive test that every nonzero vector of the span is white
/// (q^dim - 1 vectors; requires q <= 3 and dim <= 6).
bool pure_white(const std::vector<AlbertVector>& basis);

/// q=2 only: no white vector extends the span to a larger pure-white
/// subspace (white_keys from the census).
bool is_maximal_pure_white_q2(const std::vector<AlbertVector>& basis,
                              const std::vector<uint32_t>& white_keys);

// ---- 17-space, W10 and twisted point types ----

/// Radical of the quadratic form det(v + X)|_deg2 for white v.  In odd
/// characteristic this is the kernel of the polar form; in characteristic
/// 2 the additional conditions Q_v = 0 are imposed on that kernel by
/// solving the induced Frobenius-semilinear system.
std::vector<AlbertVector> seventeen_space(const AlbertVector& v);

/// The 10-space representative {(a,b,0|0,0,C)} through the normalized
/// white point (1,0,0|0,0,0), which carries the quadratic form
/// Q|_W10 = CC~ - ab; white points of the space are exactly its isotropic
/// points and the rest are grey.  v must be the normalized representative.
std::vector<AlbertVector> w10_space(const AlbertVector& v);

enum class TwoE6PointType { Emerald, IsotropicBrilliant, NonIsotropic };
const char* twoE6_type_name(TwoE6PointType t);

struct TwoE6TypeDetail {
    TwoE6PointType type;
    int space_dim = 0;        // dim of the 17-space
    int radical_dim = 0;      // dim of the H1-radical inside it
    bool radical_is_span_v = false;
};

/// The trichotomy over GF(q^2): emerald when v lies in the radical of H1
/// restricted to its own 17-space; else isotropic-brilliant when H1(v)=0;
/// else non-isotropic.
TwoE6TypeDetail twoE6_point_type_detail(const AlbertVector& v);
TwoE6PointType twoE6_point_type(const AlbertVector& v);

}  // namespace af
