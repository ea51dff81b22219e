#include "af/orbits.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "af/gf_linalg.hpp"

namespace af {

// ---- packed points ----

int point_bits(const Field& f) {
    int b = 0;
    uint32_t m = f.q - 1;
    while (m) {
        ++b;
        m >>= 1;
    }
    return b;
}

PackedPoint pack_point(const std::array<uint16_t, 27>& coords, int bits) {
    PackedPoint p;
    for (int i = 0; i < 27; ++i) {
        uint64_t v = coords[i];
        int pos = i * bits;
        if (pos < 64) {
            p.lo |= v << pos;
            if (pos + bits > 64) p.hi |= v >> (64 - pos);
        } else {
            p.hi |= v << (pos - 64);
        }
    }
    return p;
}

std::array<uint16_t, 27> unpack_point(const PackedPoint& p, int bits) {
    std::array<uint16_t, 27> coords{};
    const uint64_t mask = (UINT64_C(1) << bits) - 1;
    for (int i = 0; i < 27; ++i) {
        int pos = i * bits;
        uint64_t v;
        if (pos < 64) {
            v = p.lo >> pos;
            if (pos + bits > 64) v |= p.hi << (64 - pos);
        } else {
            v = p.hi >> (pos - 64);
        }
        coords[i] = static_cast<uint16_t>(v & mask);
    }
    return coords;
}

AlbertVector canonical_point(const AlbertVector& v) {
    if (v.is_zero()) throw std::domain_error("orbits: cannot canonicalize the zero vector");
    const Field& F = *v.f;
    int first = 0;
    while (!v.x[first]) ++first;
    if (v.x[first] == 1) return v;
    return alb_scale(v, F.inv(v.x[first]));
}

PackedPoint canonical_key(const AlbertVector& v) {
    return pack_point(canonical_point(v).x, point_bits(*v.f));
}

// ---- point set ----

namespace {
uint64_t mix_key(const PackedPoint& p) {
    uint64_t z = p.lo ^ (p.hi * 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
}  // namespace

PointSet::PointSet(uint64_t max_elements) : max_elements_(max_elements) {
    slots_.resize(1024);
    used_.assign(1024, 0);
    mask_ = 1023;
}

void PointSet::grow() {
    std::vector<PackedPoint> old = std::move(slots_);
    std::vector<uint8_t> old_used = std::move(used_);
    uint64_t ncap = (mask_ + 1) * 2;
    slots_.assign(ncap, PackedPoint{});
    used_.assign(ncap, 0);
    mask_ = ncap - 1;
    for (size_t i = 0; i < old.size(); ++i) {
        if (!old_used[i]) continue;
        uint64_t h = mix_key(old[i]) & mask_;
        while (used_[h]) h = (h + 1) & mask_;
        slots_[h] = old[i];
        used_[h] = 1;
    }
}

bool PointSet::insert(const PackedPoint& p) {
    uint64_t h = mix_key(p) & mask_;
    while (used_[h]) {
        if (slots_[h] == p) return false;
        h = (h + 1) & mask_;
    }
    if (size_ >= max_elements_)
        throw BudgetExceeded("orbits: point-set budget exhausted");
    slots_[h] = p;
    used_[h] = 1;
    ++size_;
    if (size_ * 10 > (mask_ + 1) * 7) grow();
    return true;
}

bool PointSet::contains(const PackedPoint& p) const {
    uint64_t h = mix_key(p) & mask_;
    while (used_[h]) {
        if (slots_[h] == p) return true;
        h = (h + 1) & mask_;
    }
    return false;
}

// ---- generator sets ----

std::vector<Generator> standard_generators(const Field& f) {
    std::vector<Generator> gens;
    const int positions[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
    for (auto& pos : positions)
        for (int o = 0; o < 8; ++o)
            gens.push_back(Generator::transvection(pos[0], pos[1], Octonion::basis(f, o)));
    gens.push_back(Generator::cyclic_perm(f));
    gens.push_back(Generator::swap_perm(f));
    return gens;
}

std::vector<Generator> stabilizer_generators(const Field& f) {
    if (f.q > 3)
        throw std::invalid_argument("orbits: stabilizer generator set is enumerated for q <= 3");
    std::vector<Generator> gens;
    const int positions[4][2] = {{1, 0}, {2, 0}, {1, 2}, {2, 1}};
    for (auto& pos : positions)
        for (int o = 0; o < 8; ++o)
            gens.push_back(Generator::transvection(pos[0], pos[1], Octonion::basis(f, o)));
    // All diagonal elements with N(u) = 1, every slot.
    uint64_t total = 1;
    for (int i = 0; i < 8; ++i) total *= f.q;
    for (uint64_t code = 0; code < total; ++code) {
        Octonion u(f);
        uint64_t cc = code;
        for (int i = 0; i < 8; ++i) {
            u.c[i] = static_cast<uint16_t>(cc % f.q);
            cc /= f.q;
        }
        if (oct_norm(u).v != 1) continue;
        if (oct_is_scalar(u) && u.c[0] == 1) continue;  // identity action
        for (int slot = 0; slot < 3; ++slot) gens.push_back(Generator::diagonal(u, slot));
    }
    return gens;
}

namespace {
std::vector<LinearOp27> ops_with_inverses(std::vector<LinearOp27> ops) {
    std::vector<LinearOp27> out;
    std::set<std::vector<uint16_t>> seen;
    auto push = [&](const LinearOp27& op) {
        if (seen.insert(op.m).second) out.push_back(op);
    };
    for (const auto& op : ops) push(op);
    for (const auto& op : ops) push(op.inverse());
    return out;
}
}  // namespace

std::vector<LinearOp27> generator_ops_with_inverses(const std::vector<Generator>& gens) {
    std::vector<LinearOp27> ops;
    ops.reserve(gens.size());
    for (const auto& g : gens) ops.push_back(g.op());
    return ops_with_inverses(std::move(ops));
}

// ---- orbit BFS ----

OrbitReport orbit_bfs(const std::vector<LinearOp27>& gens, const AlbertVector& start,
                      const OrbitOptions& opts, std::vector<PackedPoint>* out_points) {
    if (gens.empty()) {
        OrbitReport r;
        r.size = 1;
        r.generators = 0;
        if (out_points) out_points->push_back(canonical_key(start));
        return r;
    }
    const Field& F = *start.f;
    std::vector<LinearOp27> ops = ops_with_inverses(gens);
    const int bits = point_bits(F);

    OrbitReport report;
    report.generators = ops.size();
    PointSet visited;
    std::vector<PackedPoint> queue;
    size_t head = 0;

    AlbertVector cstart = canonical_point(start);
    PackedPoint skey = pack_point(cstart.x, bits);
    visited.insert(skey);
    queue.push_back(skey);
    if (out_points) out_points->push_back(skey);

    if (F.q == 2) {
        // GF(2) fast path: an operator row is a 27-bit mask, application is
        // 27 masked parities, and every nonzero vector is already canonical.
        std::vector<std::array<uint32_t, 27>> rows(ops.size());
        for (size_t g = 0; g < ops.size(); ++g)
            for (int i = 0; i < 27; ++i) {
                uint32_t m = 0;
                for (int j = 0; j < 27; ++j)
                    if (ops[g].at(i, j)) m |= UINT32_C(1) << j;
                rows[g][i] = m;
            }
        while (head < queue.size()) {
            if (visited.size() > opts.node_budget) {
                report.truncated = true;
                break;
            }
            uint32_t v = static_cast<uint32_t>(queue[head++].lo);
            for (auto& row : rows) {
                uint32_t w = 0;
                for (int i = 0; i < 27; ++i)
                    w |= static_cast<uint32_t>(__builtin_popcount(row[i] & v) & 1) << i;
                PackedPoint key{w, 0};
                if (visited.insert(key)) {
                    queue.push_back(key);
                    if (out_points) out_points->push_back(key);
                }
            }
        }
        report.size = visited.size();
        return report;
    }

    while (head < queue.size()) {
        if (visited.size() > opts.node_budget) {
            report.truncated = true;
            break;
        }
        std::array<uint16_t, 27> v = unpack_point(queue[head++], bits);
        AlbertVector X(F);
        X.x = v;
        for (const auto& op : ops) {
            AlbertVector img = op.apply(X);
            PackedPoint key = pack_point(canonical_point(img).x, bits);
            if (visited.insert(key)) {
                queue.push_back(key);
                if (out_points) out_points->push_back(key);
            }
        }
    }
    report.size = visited.size();
    return report;
}

// ---- q=2 exhaustive machinery ----

const Q2Tables& q2_tables() {
    static Q2Tables t = [] {
        Q2Tables tt;
        const Field& F2 = field_make(2, 1);
        auto to_oct = [&](uint8_t b) {
            Octonion x(F2);
            for (int i = 0; i < 8; ++i) x.c[i] = (b >> i) & 1;
            return x;
        };
        auto to_byte = [&](const Octonion& x) {
            uint8_t b = 0;
            for (int i = 0; i < 8; ++i) b |= static_cast<uint8_t>(x.c[i] & 1) << i;
            return b;
        };
        for (int a = 0; a < 256; ++a) {
            Octonion xa = to_oct(static_cast<uint8_t>(a));
            tt.conj[a] = to_byte(oct_conj(xa));
            tt.norm[a] = static_cast<uint8_t>(oct_norm(xa).v);
            tt.trace[a] = static_cast<uint8_t>(oct_trace(xa).v);
            for (int b = 0; b < 256; ++b)
                tt.mul[a][b] = to_byte(oct_mul(xa, to_oct(static_cast<uint8_t>(b))));
        }
        return tt;
    }();
    return t;
}

bool q2_is_white(uint32_t key) {
    const Q2Tables& t = q2_tables();
    uint32_t a = key & 1, b = (key >> 1) & 1, c = (key >> 2) & 1;
    uint8_t A = (key >> 3) & 0xff, B = (key >> 11) & 0xff, C = (key >> 19) & 0xff;
    if ((b & c) != t.norm[A]) return false;
    if ((a & c) != t.norm[B]) return false;
    if ((a & b) != t.norm[C]) return false;
    if (t.mul[B][C] != (a ? t.conj[A] : 0)) return false;
    if (t.mul[C][A] != (b ? t.conj[B] : 0)) return false;
    if (t.mul[A][B] != (c ? t.conj[C] : 0)) return false;
    return true;
}

uint32_t q2_det(uint32_t key) {
    const Q2Tables& t = q2_tables();
    uint32_t a = key & 1, b = (key >> 1) & 1, c = (key >> 2) & 1;
    uint8_t A = (key >> 3) & 0xff, B = (key >> 11) & 0xff, C = (key >> 19) & 0xff;
    uint32_t d = a & b & c;
    d ^= a & t.norm[A];
    d ^= b & t.norm[B];
    d ^= c & t.norm[C];
    d ^= t.trace[t.mul[t.mul[A][B]][C]];
    return d;
}

Color q2_classify(uint32_t key) {
    if (q2_is_white(key)) return Color::White;
    return q2_det(key) ? Color::Black : Color::Grey;
}

ColorCensus brute_force_color_census(const Field& f, int threads,
                                     std::vector<uint32_t>* white_keys) {
    if (f.q != 2)
        throw std::invalid_argument(
            "orbits: the exhaustive color census enumerates 2^27-1 vectors and is supported at "
            "q = 2 only");
    q2_tables();  // build before sharding
    if (threads < 1) threads = 1;
    const uint32_t end = UINT32_C(1) << 27;
    struct Shard {
        ColorCensus census;
        std::vector<uint32_t> whites;
    };
    std::vector<Shard> shards(threads);
    std::vector<std::thread> pool;
    for (int tix = 0; tix < threads; ++tix) {
        pool.emplace_back([&, tix] {
            Shard& sh = shards[tix];
            uint64_t lo = 1 + (static_cast<uint64_t>(end - 1) * tix) / threads;
            uint64_t hi = 1 + (static_cast<uint64_t>(end - 1) * (tix + 1)) / threads;
            for (uint64_t v = lo; v < hi; ++v) {
                uint32_t key = static_cast<uint32_t>(v);
                if (q2_is_white(key)) {
                    ++sh.census.white;
                    uint32_t tr = (key ^ (key >> 1) ^ (key >> 2)) & 1;
                    if (tr)
                        ++sh.census.primitive_idempotents;
                    else
                        ++sh.census.trace0_white;
                    if ((key >> 3) == 0) ++sh.census.diagonal_white;
                    if (white_keys) sh.whites.push_back(key);
                } else if (q2_det(key)) {
                    ++sh.census.black;
                } else {
                    ++sh.census.grey;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    ColorCensus total;
    for (auto& sh : shards) {
        total.white += sh.census.white;
        total.grey += sh.census.grey;
        total.black += sh.census.black;
        total.primitive_idempotents += sh.census.primitive_idempotents;
        total.trace0_white += sh.census.trace0_white;
        total.diagonal_white += sh.census.diagonal_white;
        if (white_keys)
            white_keys->insert(white_keys->end(), sh.whites.begin(), sh.whites.end());
    }
    total.total = end - 1;
    return total;
}

// ---- structured white enumeration ----

std::vector<uint64_t> octonion_norm_distribution(const Field& f) {
    std::vector<uint64_t> dist(f.q, 0);
    uint64_t total = 1;
    for (int i = 0; i < 8; ++i) total *= f.q;
    Octonion x(f);
    for (uint64_t code = 0; code < total; ++code) {
        uint64_t cc = code;
        for (int i = 0; i < 8; ++i) {
            x.c[i] = static_cast<uint16_t>(cc % f.q);
            cc /= f.q;
        }
        ++dist[oct_norm(x).v];
    }
    return dist;
}

namespace {

AlbertVector rotate_albert(const AlbertVector& X) {
    // (a,b,c | A,B,C) -> (c,a,b | C,A,B)
    AlbertVector r(*X.f);
    r.x[0] = X.x[2];
    r.x[1] = X.x[0];
    r.x[2] = X.x[1];
    for (int i = 0; i < 8; ++i) {
        r.x[3 + i] = X.x[19 + i];
        r.x[11 + i] = X.x[3 + i];
        r.x[19 + i] = X.x[11 + i];
    }
    return r;
}

AlbertVector rank1_vector(const Field& F, uint16_t c, const Octonion& x, const Octonion& y) {
    Fe a(F.mul(c, oct_norm(x).v), F);
    Fe b(F.mul(c, oct_norm(y).v), F);
    return AlbertVector::make(a, b, Fe(c, F), oct_scale(oct_conj(y), c), oct_scale(x, c),
                              oct_scale(oct_mul(oct_conj(x), y), c));
}

void for_each_octonion(const Field& f, const std::function<void(const Octonion&)>& fn) {
    uint64_t total = 1;
    for (int i = 0; i < 8; ++i) total *= f.q;
    Octonion x(f);
    for (uint64_t code = 0; code < total; ++code) {
        uint64_t cc = code;
        for (int i = 0; i < 8; ++i) {
            x.c[i] = static_cast<uint16_t>(cc % f.q);
            cc /= f.q;
        }
        fn(x);
    }
}

GfMatrix left_mul_matrix(const Octonion& A) {
    GfMatrix m(8, 8, *A.f);
    for (int j = 0; j < 8; ++j) {
        Octonion col = oct_mul(A, Octonion::basis(*A.f, j));
        for (int i = 0; i < 8; ++i) m.at(i, j) = col.c[i];
    }
    return m;
}

GfMatrix right_mul_matrix(const Octonion& A) {
    GfMatrix m(8, 8, *A.f);
    for (int j = 0; j < 8; ++j) {
        Octonion col = oct_mul(Octonion::basis(*A.f, j), A);
        for (int i = 0; i < 8; ++i) m.at(i, j) = col.c[i];
    }
    return m;
}

// Visit every nonzero combination of the kernel basis.
void for_each_span_nonzero(const Field& f, const std::vector<std::vector<uint16_t>>& basis,
                           const std::function<void(const Octonion&)>& fn) {
    uint64_t total = 1;
    for (size_t i = 0; i < basis.size(); ++i) total *= f.q;
    Octonion x(f);
    for (uint64_t code = 1; code < total; ++code) {
        x = Octonion(f);
        uint64_t cc = code;
        for (size_t b = 0; b < basis.size(); ++b) {
            uint16_t lam = static_cast<uint16_t>(cc % f.q);
            cc /= f.q;
            if (!lam) continue;
            for (int i = 0; i < 8; ++i) x.c[i] = f.add(x.c[i], f.mul(lam, basis[b][i]));
        }
        fn(x);
    }
}

uint64_t pow_u64(uint64_t b, int e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

BigInt structured_white_count(const Field& f, int case_index,
                              const std::function<void(const AlbertVector&)>& visit) {
    if (f.q > 9) throw std::invalid_argument("orbits: structured enumeration supports q <= 9");
    if (case_index < 1 || case_index > 6)
        throw std::invalid_argument("orbits: case index must be 1..6");
    const BigInt q = f.q;
    const BigInt q8 = pow_u64(f.q, 8);
    // nonzero isotropic count (q^4-1)(q^3+1); +1 for the zero octonion
    const BigInt n0 = BigInt(count_isotropic(f)) + 1;

    if (case_index <= 3) {
        if (visit && f.q > 2)
            throw std::invalid_argument(
                "orbits: streaming the diagonal-supported cases scans octonion pairs and is "
                "supported at q = 2 only");
        BigInt count;
        if (case_index == 1)
            count = (q - 1) * (q8 - n0) * (q8 - n0);
        else if (case_index == 2)
            count = 3 * (q - 1) * n0 * (q8 - n0);
        else
            count = 3 * (q - 1) * n0 * n0;
        if (visit) {
            for (uint32_t c = 1; c < f.q; ++c) {
                for_each_octonion(f, [&](const Octonion& x) {
                    bool xiso = oct_norm(x).v == 0;
                    for_each_octonion(f, [&](const Octonion& y) {
                        bool yiso = oct_norm(y).v == 0;
                        AlbertVector W(f);
                        if (case_index == 1 && !xiso && !yiso)
                            W = rank1_vector(f, static_cast<uint16_t>(c), x, y);
                        else if (case_index == 2 && xiso && !yiso)
                            W = rank1_vector(f, static_cast<uint16_t>(c), x, y);
                        else if (case_index == 3 && xiso && yiso)
                            W = rank1_vector(f, static_cast<uint16_t>(c), x, y);
                        else
                            return;
                        visit(W);
                        if (case_index != 1) {
                            // the other two diagonal-support patterns
                            AlbertVector r1 = rotate_albert(W);
                            visit(r1);
                            visit(rotate_albert(r1));
                        }
                    });
                });
            }
        }
        return count;
    }

    // Zero-diagonal cases, driven by the annihilator chain A -> B -> C.
    BigInt count = 0;
    Fe z(0, f);
    enumerate_isotropic(f, [&](const Octonion& A) {
        GfMatrix LA = left_mul_matrix(A);
        auto kerA = gf_kernel(LA);
        if (kerA.size() != 4)
            throw std::logic_error("orbits: left annihilator of an isotropic octonion is not 4-dim");
        if (case_index == 6) {
            count += 1;
            if (visit) {
                AlbertVector W = AlbertVector::make(z, z, z, A, Octonion(f), Octonion(f));
                visit(W);
                AlbertVector r1 = rotate_albert(W);
                visit(r1);
                visit(rotate_albert(r1));
            }
            return;
        }
        if (case_index == 5) {
            // pattern (A, B nonzero, C = 0): B in ker L_A
            count += pow_u64(f.q, 4) - 1;
            if (visit)
                for_each_span_nonzero(f, kerA, [&](const Octonion& B) {
                    AlbertVector W = AlbertVector::make(z, z, z, A, B, Octonion(f));
                    visit(W);
                    AlbertVector r1 = rotate_albert(W);
                    visit(r1);
                    visit(rotate_albert(r1));
                });
            return;
        }
        // case 4: all three nonzero
        std::function<void(const Octonion&)> perB = [&](const Octonion& B) {
            GfMatrix LBRA(16, 8, f);
            for (int j = 0; j < 8; ++j) {
                Octonion ej = Octonion::basis(f, j);
                Octonion lb = oct_mul(B, ej), ra = oct_mul(ej, A);
                for (int i = 0; i < 8; ++i) {
                    LBRA.at(i, j) = lb.c[i];
                    LBRA.at(8 + i, j) = ra.c[i];
                }
            }
            auto kerC = gf_kernel(LBRA);
            if (kerC.size() != 3)
                throw std::logic_error("orbits: joint annihilator is not 3-dimensional");
            count += pow_u64(f.q, 3) - 1;
            if (visit)
                for_each_span_nonzero(f, kerC, [&](const Octonion& C) {
                    visit(AlbertVector::make(z, z, z, A, B, C));
                });
        };
        for_each_span_nonzero(f, kerA, perB);
    });
    if (case_index == 6) count *= 3;
    if (case_index == 5) count *= 3;
    return count;
}

// ---- line types ----

const char* line_type_name(LineType t) {
    return t == LineType::AllWhite ? "AllWhite" : "TwoWhite";
}

LineType line_type(const AlbertVector& W, const AlbertVector& X) {
    if (W.f != X.f) throw std::domain_error("orbits: mismatched field specs");
    const Field& F = *W.f;
    if (!is_white(W) || !is_white(X)) throw std::domain_error("orbits: line_type requires white points");
    if (canonical_key(W) == canonical_key(X))
        throw std::domain_error("orbits: line_type requires two distinct points");
    uint32_t whites = 2;  // W and X themselves
    for (uint32_t mu = 1; mu < F.q; ++mu)
        if (is_white(alb_add(W, alb_scale(X, static_cast<uint16_t>(mu))))) ++whites;
    if (whites == F.q + 1) return LineType::AllWhite;
    if (whites != 2)
        throw std::logic_error("orbits: a line through two white points must have 2 or q+1 whites");
    return LineType::TwoWhite;
}

Rank3Partition rank3_partition_q2(const std::vector<uint32_t>& white_keys) {
    Rank3Partition part;
    const uint32_t wkey = 1;  // (1,0,0|0,0,0)
    for (uint32_t key : white_keys) {
        if (key == wkey) continue;
        // the third point of the line at q=2 is the sum
        if (q2_is_white(key ^ wkey))
            ++part.all_white;
        else
            ++part.two_white;
    }
    return part;
}

// ---- pure-white subspaces ----

std::vector<AlbertVector> pure_white_representative(const Field& f, const std::string& name) {
    auto B = [&](int o) { return AlbertVector::basis(f, 11 + o); };  // B-slot coordinate
    std::vector<AlbertVector> basis = {AlbertVector::basis(f, 0)};   // (1,0,0|0,0,0)
    if (name == "W1") return basis;
    basis.push_back(B(5));  // e_{-1}
    if (name == "W2") return basis;
    basis.push_back(B(3));  // e_wb
    if (name == "W3") return basis;
    basis.push_back(B(2));  // e_w
    if (name == "W4") return basis;
    if (name == "W5") {
        basis.push_back(B(0));  // e_0
        return basis;
    }
    basis.push_back(B(4));  // e_{-0}
    if (name == "W5p") return basis;
    if (name == "W6") {
        basis.push_back(AlbertVector::basis(f, 19 + 5));  // C-slot e_{-1}
        return basis;
    }
    throw std::invalid_argument("orbits: unknown pure-white representative " + name);
}

bool pure_white(const std::vector<AlbertVector>& basis) {
    if (basis.empty()) return true;
    const Field& F = *basis[0].f;
    if (F.q > 3 || basis.size() > 6)
        throw std::invalid_argument("orbits: pure_white scan budget is q <= 3 and dim <= 6");
    uint64_t total = pow_u64(F.q, static_cast<int>(basis.size()));
    for (uint64_t code = 1; code < total; ++code) {
        AlbertVector v(F);
        uint64_t cc = code;
        for (size_t b = 0; b < basis.size(); ++b) {
            uint16_t lam = static_cast<uint16_t>(cc % F.q);
            cc /= F.q;
            if (lam) v = alb_add(v, alb_scale(basis[b], lam));
        }
        if (!is_white(v)) return false;
    }
    return true;
}

bool is_maximal_pure_white_q2(const std::vector<AlbertVector>& basis,
                              const std::vector<uint32_t>& white_keys) {
    const Field& F = *basis[0].f;
    if (F.q != 2) throw std::invalid_argument("orbits: maximality scan is q = 2 only");
    // span keys (bit-packed)
    std::vector<uint32_t> span;
    uint32_t n = 1u << basis.size();
    for (uint32_t mask = 0; mask < n; ++mask) {
        AlbertVector v(F);
        for (size_t b = 0; b < basis.size(); ++b)
            if (mask & (1u << b)) v = alb_add(v, basis[b]);
        span.push_back(static_cast<uint32_t>(pack_point(v.x, 1).lo));
    }
    std::unordered_set<uint32_t> span_set(span.begin(), span.end());
    for (uint32_t w : white_keys) {
        if (span_set.count(w)) continue;
        bool extends = true;
        for (uint32_t s : span)
            if (!q2_is_white(s ^ w)) {
                extends = false;
                break;
            }
        if (extends) return false;  // found a white vector extending the span
    }
    return true;
}

// ---- 17-space, W10 and twisted point types ----

std::vector<AlbertVector> seventeen_space(const AlbertVector& v) {
    if (!is_white(v)) throw std::domain_error("orbits: seventeen_space requires a white vector");
    const Field& F = *v.f;
    QuadForm qf = quadratic_form_at(v);
    GfMatrix P(27, 27, F);
    P.a = qf.polar;
    auto kernel = gf_kernel(P);

    if (F.p != 2) {
        std::vector<AlbertVector> out;
        for (auto& k : kernel) {
            AlbertVector w(F);
            std::copy(k.begin(), k.end(), w.x.begin());
            out.push_back(w);
        }
        return out;
    }

    // Characteristic 2: impose Q_v = 0 on the polar kernel.  On the kernel
    // Q_v is additive with Q_v(c x) = c^2 Q_v(x), so with mu_i = lambda_i^2
    // the condition is the linear equation sum mu_i Q_v(k_i) = 0; solutions
    // pull back through the coordinatewise square root.
    std::vector<uint16_t> qvals;
    bool all_zero = true;
    for (auto& k : kernel) {
        std::array<uint16_t, 27> coords{};
        std::copy(k.begin(), k.end(), coords.begin());
        uint16_t val = qf.form.evaluate(coords);
        qvals.push_back(val);
        if (val) all_zero = false;
    }
    std::vector<std::vector<uint16_t>> lambda_basis;
    if (all_zero) {
        for (size_t i = 0; i < kernel.size(); ++i) {
            std::vector<uint16_t> lam(kernel.size(), 0);
            lam[i] = 1;
            lambda_basis.push_back(std::move(lam));
        }
    } else {
        GfMatrix eq(1, static_cast<int>(kernel.size()), F);
        for (size_t i = 0; i < kernel.size(); ++i) eq.at(0, static_cast<int>(i)) = qvals[i];
        auto mu_basis = gf_kernel(eq);
        uint64_t half = F.q / 2;  // sqrt(x) = x^(q/2) in characteristic 2
        for (auto& mu : mu_basis) {
            std::vector<uint16_t> lam(mu.size());
            for (size_t i = 0; i < mu.size(); ++i) lam[i] = F.pow(mu[i], half);
            lambda_basis.push_back(std::move(lam));
        }
    }
    std::vector<AlbertVector> out;
    for (auto& lam : lambda_basis) {
        AlbertVector w(F);
        for (size_t b = 0; b < kernel.size(); ++b) {
            if (!lam[b]) continue;
            for (int i = 0; i < 27; ++i) w.x[i] = F.add(w.x[i], F.mul(lam[b], kernel[b][i]));
        }
        out.push_back(w);
    }
    return out;
}

std::vector<AlbertVector> w10_space(const AlbertVector& v) {
    if (!is_white(v)) throw std::domain_error("orbits: w10_space requires a white vector");
    const Field& F = *v.f;
    AlbertVector rep = AlbertVector::basis(F, 0);
    if (!(canonical_point(v) == rep))
        throw std::invalid_argument(
            "orbits: w10_space is defined for the normalized representative (1,0,0|0,0,0)");
    std::vector<AlbertVector> basis = {AlbertVector::basis(F, 0), AlbertVector::basis(F, 1)};
    for (int o = 0; o < 8; ++o) basis.push_back(AlbertVector::basis(F, 19 + o));
    return basis;
}

const char* twoE6_type_name(TwoE6PointType t) {
    switch (t) {
        case TwoE6PointType::Emerald: return "Emerald";
        case TwoE6PointType::IsotropicBrilliant: return "IsotropicBrilliant";
        case TwoE6PointType::NonIsotropic: return "NonIsotropic";
    }
    return "?";
}

TwoE6TypeDetail twoE6_point_type_detail(const AlbertVector& v) {
    const Field& F = *v.f;
    if (!F.is_quadratic())
        throw std::domain_error("orbits: point types require a quadratic extension field");
    std::vector<AlbertVector> space = seventeen_space(v);
    TwoE6TypeDetail d{};
    d.space_dim = static_cast<int>(space.size());

    // Radical of the sesquilinear H1 pairing restricted to the space:
    //. rows index the constraint sesq(u, s_j) = 0, linear in u.
    int m = d.space_dim;
    GfMatrix G(m, m, F);
    for (int j = 0; j < m; ++j)
        for (int r = 0; r < m; ++r)
            G.at(j, r) = sesquilinear(space[r], space[j], HermitianVariant::H1).v;
    auto rad_coords = gf_kernel(G);
    d.radical_dim = static_cast<int>(rad_coords.size());

    std::vector<std::vector<uint16_t>> radical;
    for (auto& lam : rad_coords) {
        std::vector<uint16_t> w(27, 0);
        for (int b = 0; b < m; ++b) {
            if (!lam[b]) continue;
            for (int i = 0; i < 27; ++i) w[i] = F.add(w[i], F.mul(lam[b], space[b].x[i]));
        }
        radical.push_back(std::move(w));
    }
    std::vector<uint16_t> vv(v.x.begin(), v.x.end());
    bool in_radical = gf_in_span(radical, vv, F);
    if (in_radical) {
        d.type = TwoE6PointType::Emerald;
        d.radical_is_span_v = d.radical_dim == 1;
    } else if (hermitian_form(v, HermitianVariant::H1).v == 0) {
        d.type = TwoE6PointType::IsotropicBrilliant;
    } else {
        d.type = TwoE6PointType::NonIsotropic;
    }
    return d;
}

TwoE6PointType twoE6_point_type(const AlbertVector& v) { return twoE6_point_type_detail(v).type; }

}  // namespace af
