#include "wsd/complexes.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace wsd {

namespace {

int popcount(unsigned mask) { return __builtin_popcount(mask); }
unsigned lowBit(unsigned mask) { return mask & (0u - mask); }

}  // namespace

SimplicialComplex::SimplicialComplex(int vertexCount) : n_(vertexCount) {
    if (vertexCount < 0 || vertexCount > kMaxVertices)
        throw CapacityError("vertex count must be between 0 and 16");
    face_.assign(std::size_t(1) << n_, false);
}

bool SimplicialComplex::isFace(unsigned mask) const {
    return mask != 0 && mask < face_.size() && face_[mask];
}

bool SimplicialComplex::isDownwardClosed() const {
    for (unsigned mask = 1; mask < face_.size(); ++mask) {
        if (!face_[mask]) continue;
        for (unsigned rem = mask; rem; rem &= rem - 1) {
            unsigned sub = mask ^ lowBit(rem);
            if (sub != 0 && !face_[sub]) return false;
        }
    }
    return true;
}

bool SimplicialComplex::hasAllVertices() const {
    for (int i = 0; i < n_; ++i)
        if (!face_[1u << i]) return false;
    return true;
}

void SimplicialComplex::insertFaceWithClosure(unsigned mask) {
    if (mask == 0 || mask >= face_.size())
        throw std::invalid_argument("face mask out of range");
    if (face_[mask]) return;
    face_[mask] = true;
    for (unsigned rem = mask; rem; rem &= rem - 1) {
        unsigned sub = mask ^ lowBit(rem);
        if (sub != 0) insertFaceWithClosure(sub);
    }
}

std::vector<unsigned> SimplicialComplex::faces() const {
    std::vector<unsigned> out;
    for (unsigned mask = 1; mask < face_.size(); ++mask)
        if (face_[mask]) out.push_back(mask);
    return out;
}

std::vector<unsigned> SimplicialComplex::maximalFaces() const {
    std::vector<unsigned> out;
    for (unsigned mask = 1; mask < face_.size(); ++mask) {
        if (!face_[mask]) continue;
        bool maximal = true;
        for (int i = 0; i < n_ && maximal; ++i)
            if (!(mask & (1u << i)) && face_[mask | (1u << i)]) maximal = false;
        if (maximal) out.push_back(mask);
    }
    return out;
}

std::vector<unsigned> SimplicialComplex::minimalNonFaces() const {
    std::vector<unsigned> out;
    for (unsigned mask = 1; mask < face_.size(); ++mask) {
        if (face_[mask]) continue;
        bool minimal = true;
        for (unsigned rem = mask; rem && minimal; rem &= rem - 1) {
            unsigned sub = mask ^ lowBit(rem);
            if (sub != 0 && !face_[sub]) minimal = false;
        }
        if (minimal) out.push_back(mask);
    }
    return out;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
    return n_ == other.n_ && face_ == other.face_;
}

SimplicialComplex buildComplex(const WeightData& w) {
    const int n = w.size();
    SimplicialComplex c(n);
    std::vector<Rational> sum(std::size_t(1) << n, Rational(0));
    for (unsigned mask = 1; mask < sum.size(); ++mask) {
        sum[mask] = sum[mask & (mask - 1)] + w.weights[__builtin_ctz(mask)];
        if (sum[mask] <= 1) c.insertFaceWithClosure(mask);
    }
    if (!c.hasAllVertices() || !c.isDownwardClosed())
        throw std::logic_error("buildComplex produced a non-complex");
    return c;
}

SimplicialComplex skeletonComplex(int n, int r) {
    if (r < 0 || r > n - 1) throw std::invalid_argument("skeleton dimension out of range");
    SimplicialComplex c(n);
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        if (popcount(mask) <= r + 1) c.insertFaceWithClosure(mask);
    return c;
}

SimplicialComplex cone(const SimplicialComplex& c) {
    const int n = c.vertexCount();
    if (n >= SimplicialComplex::kMaxVertices)
        throw CapacityError("cone would exceed the 16-vertex cap");
    SimplicialComplex out(n + 1);
    const unsigned apex = 1u << n;
    out.insertFaceWithClosure(apex);
    for (unsigned mask : c.faces()) {
        out.insertFaceWithClosure(mask);
        out.insertFaceWithClosure(mask | apex);
    }
    return out;
}

static Contraction contractImpl(const SimplicialComplex& c, unsigned sigmaMask) {
    const int n = c.vertexCount();
    if (sigmaMask == 0 || sigmaMask >= (1u << n))
        throw std::invalid_argument("contraction subset out of range");
    const int keep = n - popcount(sigmaMask) + 1;
    const int anchor = __builtin_ctz(sigmaMask);  // new vertex sits where min(sigma) was

    std::vector<int> vertexMap(n, -1);
    int next = 0;
    int newVertex = -1;
    for (int i = 0; i < n; ++i) {
        if (i == anchor) {
            newVertex = next++;
        } else if (!(sigmaMask & (1u << i))) {
            vertexMap[i] = next++;
        }
    }
    for (int i = 0; i < n; ++i)
        if (sigmaMask & (1u << i)) vertexMap[i] = newVertex;

    SimplicialComplex out(keep);
    out.insertFaceWithClosure(1u << newVertex);
    for (unsigned gamma : c.faces()) {
        if ((gamma & sigmaMask) == 0) {
            unsigned mapped = 0;
            for (unsigned rem = gamma; rem; rem &= rem - 1)
                mapped |= 1u << vertexMap[__builtin_ctz(rem)];
            out.insertFaceWithClosure(mapped);
        } else if ((gamma & sigmaMask) == sigmaMask) {
            unsigned mapped = 1u << newVertex;
            for (unsigned rem = gamma & ~sigmaMask; rem; rem &= rem - 1)
                mapped |= 1u << vertexMap[__builtin_ctz(rem)];
            out.insertFaceWithClosure(mapped);
        }
    }
    if (!out.isDownwardClosed())
        throw std::logic_error("contraction broke downward closure");
    return Contraction{out, vertexMap, newVertex};
}

Contraction contract(const SimplicialComplex& c, unsigned sigmaMask) {
    if (!c.isFace(sigmaMask))
        throw std::invalid_argument("contract: subset is not a face");
    return contractImpl(c, sigmaMask);
}

Contraction contractSubset(const SimplicialComplex& c, unsigned sigmaMask) {
    return contractImpl(c, sigmaMask);
}

int partitionDimension(int n, const SetPartition& p) {
    return n - p.blockCount();
}

AdmissiblePartitions::AdmissiblePartitions(SimplicialComplex c) : complex_(std::move(c)) {
    if (!complex_.hasAllVertices())
        throw std::invalid_argument("partition enumeration requires all singleton faces");
}

AdmissiblePartitions::iterator::iterator(const SimplicialComplex* c) : complex_(c) {
    descend((1u << complex_->vertexCount()) - 1);
}

// Extends the current prefix by singleton blocks; always succeeds because
// every singleton is a face.
bool AdmissiblePartitions::iterator::descend(unsigned rest) {
    while (rest) {
        unsigned e = lowBit(rest);
        stack_.push_back(Frame{rest, e, 0, false});
        current_.blocks.push_back(e);
        rest ^= e;
    }
    return true;
}

bool AdmissiblePartitions::iterator::advance() {
    while (!stack_.empty()) {
        Frame& f = stack_.back();
        const unsigned others = f.rest ^ f.element;
        unsigned s = f.sub;
        bool moved = false;
        while (s != others) {
            s = (s - others) & others;  // next submask in increasing order
            if (complex_->isFace(s | f.element)) {
                moved = true;
                break;
            }
        }
        if (!moved) {
            stack_.pop_back();
            current_.blocks.pop_back();
            continue;
        }
        f.sub = s;
        current_.blocks.back() = s | f.element;
        descend(f.rest & ~(s | f.element));
        return true;
    }
    return false;
}

AdmissiblePartitions::iterator& AdmissiblePartitions::iterator::operator++() {
    done_ = !advance();
    return *this;
}

std::vector<SetPartition> collectAdmissiblePartitions(const SimplicialComplex& c) {
    std::vector<SetPartition> out;
    for (const SetPartition& p : AdmissiblePartitions(c)) out.push_back(p);
    return out;
}

/*
  Exact Fourier-Motzkin elimination with strict/non-strict flags.

  Rows represent sum(a_i x_i) <= b, or < b when strict. Eliminating x_v
  combines every row with positive coefficient against every row with
  negative coefficient; the combination is strict when either parent was.
  Witness extraction runs the recorded systems backwards, picking a point
  of the (never empty) interval allowed for each variable.
*/
namespace {

struct Row {
    std::vector<Rational> a;
    Rational b;
    bool strict;
};

struct EliminationStep {
    int var;
    std::vector<Row> rowsBefore;
};

void normalizeRow(Row& row) {
    Rational norm = 0;
    for (const Rational& c : row.a) norm += (c < 0 ? Rational(-c) : c);
    if (norm == 0) return;
    for (Rational& c : row.a) c /= norm;
    row.b /= norm;
}

// Keeps only the tightest row per coefficient vector.
void dedupeRows(std::vector<Row>& rows) {
    std::map<std::vector<Rational>, std::pair<Rational, bool>> best;
    std::vector<Row> out;
    for (Row& row : rows) {
        normalizeRow(row);
        auto it = best.find(row.a);
        if (it == best.end()) {
            best.emplace(row.a, std::make_pair(row.b, row.strict));
        } else if (row.b < it->second.first ||
                   (row.b == it->second.first && row.strict && !it->second.second)) {
            it->second = {row.b, row.strict};
        }
    }
    for (auto& [a, bs] : best) out.push_back(Row{a, bs.first, bs.second});
    rows = std::move(out);
}

// False when a row with zero coefficients is violated outright.
bool constantRowsConsistent(const std::vector<Row>& rows) {
    for (const Row& row : rows) {
        bool zero = std::all_of(row.a.begin(), row.a.end(),
                                [](const Rational& c) { return c == 0; });
        if (!zero) continue;
        if (row.strict ? !(0 < row.b) : !(0 <= row.b)) return false;
    }
    return true;
}

std::optional<std::vector<Rational>> fourierMotzkin(std::vector<Row> rows, int n,
                                                    std::size_t maxRows) {
    std::vector<bool> eliminated(n, false);
    std::vector<EliminationStep> steps;

    for (int round = 0; round < n; ++round) {
        dedupeRows(rows);
        if (!constantRowsConsistent(rows)) return std::nullopt;

        // Cheapest variable first: fewest positive*negative pairings.
        int bestVar = -1;
        std::size_t bestCost = 0;
        for (int v = 0; v < n; ++v) {
            if (eliminated[v]) continue;
            std::size_t pos = 0, neg = 0;
            for (const Row& row : rows) {
                if (row.a[v] > 0) ++pos;
                else if (row.a[v] < 0) ++neg;
            }
            std::size_t cost = pos * neg;
            if (bestVar == -1 || cost < bestCost) {
                bestVar = v;
                bestCost = cost;
            }
        }

        steps.push_back(EliminationStep{bestVar, rows});
        eliminated[bestVar] = true;

        std::vector<Row> next;
        std::vector<const Row*> pos, neg;
        for (const Row& row : rows) {
            if (row.a[bestVar] > 0) pos.push_back(&row);
            else if (row.a[bestVar] < 0) neg.push_back(&row);
            else next.push_back(row);
        }
        for (const Row* p : pos) {
            for (const Row* q : neg) {
                Row combo;
                combo.a.resize(n);
                const Rational cp = p->a[bestVar];
                const Rational cq = -q->a[bestVar];
                for (int j = 0; j < n; ++j) combo.a[j] = p->a[j] * cq + q->a[j] * cp;
                combo.b = p->b * cq + q->b * cp;
                combo.strict = p->strict || q->strict;
                next.push_back(std::move(combo));
                if (next.size() > maxRows)
                    throw CapacityError("Fourier-Motzkin row limit exceeded");
            }
        }
        rows = std::move(next);
    }

    dedupeRows(rows);
    if (!constantRowsConsistent(rows)) return std::nullopt;

    // Back-substitution.
    std::vector<Rational> x(n, Rational(0));
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        bool haveLo = false, haveHi = false, loStrict = false, hiStrict = false;
        Rational lo = 0, hi = 0;
        for (const Row& row : it->rowsBefore) {
            const Rational c = row.a[it->var];
            if (c == 0) continue;
            Rational rest = row.b;
            for (int j = 0; j < n; ++j)
                if (j != it->var) rest -= row.a[j] * x[j];
            Rational bound = rest / c;
            if (c > 0) {
                if (!haveHi || bound < hi) {
                    hi = bound;
                    hiStrict = row.strict;
                } else if (bound == hi) {
                    hiStrict = hiStrict || row.strict;
                }
                haveHi = true;
            } else {
                if (!haveLo || bound > lo) {
                    lo = bound;
                    loStrict = row.strict;
                } else if (bound == lo) {
                    loStrict = loStrict || row.strict;
                }
                haveLo = true;
            }
        }
        Rational value;
        if (haveLo && haveHi) {
            if (lo == hi) {
                if (loStrict || hiStrict)
                    throw std::logic_error("Fourier-Motzkin: empty interval after elimination");
                value = lo;
            } else {
                value = (lo + hi) / 2;
            }
        } else if (haveLo) {
            value = lo + 1;
        } else if (haveHi) {
            value = hi - 1;
        } else {
            value = 0;
        }
        x[it->var] = value;
    }
    return x;
}

}  // namespace

std::optional<WeightData> realize(const SimplicialComplex& c, const RealizeOptions& options) {
    const int n = c.vertexCount();
    if (!c.hasAllVertices())
        throw std::invalid_argument("realize: complex must contain every singleton");
    if (!c.isDownwardClosed())
        throw std::invalid_argument("realize: family is not downward closed");

    std::vector<Row> rows;
    auto subsetRow = [&](unsigned mask, bool upper, const Rational& rhs, bool strict) {
        Row row;
        row.a.assign(n, Rational(0));
        for (unsigned rem = mask; rem; rem &= rem - 1)
            row.a[__builtin_ctz(rem)] = upper ? 1 : -1;
        row.b = rhs;
        row.strict = strict;
        rows.push_back(std::move(row));
    };

    // Faces bound subset sums by 1; maximal faces suffice since weights are
    // nonnegative. Minimal non-faces force strict sums above 1, and their
    // supersets follow for the same reason.
    for (unsigned mask : c.maximalFaces())
        if (popcount(mask) >= 2) subsetRow(mask, true, 1, false);
    std::vector<unsigned> nonFaces = c.minimalNonFaces();
    if (nonFaces.size() > options.maxMinimalNonFaces)
        throw CapacityError("too many minimal non-faces");
    for (unsigned mask : nonFaces) subsetRow(mask, false, -1, true);

    for (int i = 0; i < n; ++i) {
        subsetRow(1u << i, true, 1, false);
        subsetRow(1u << i, false, 0, options.positiveOnly);
    }
    if (options.domainConstraint) {
        const unsigned all = (1u << n) - 1;
        if (options.genus == 0 && options.betaDegree == 0)
            subsetRow(all, false, -2, true);
        else if (options.genus == 1 && options.betaDegree == 0 && !options.positiveOnly)
            subsetRow(all, false, 0, true);  // excludes exactly the point (0^n)
    }

    auto witness = fourierMotzkin(std::move(rows), n, options.maxRows);
    if (!witness) return std::nullopt;
    return makeWeightData(std::move(*witness), options.genus, options.betaDegree);
}

std::string formatSubset(unsigned mask, int n) {
    std::ostringstream os;
    if (n <= 9) {
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) os << (i + 1);
    } else {
        os << "[";
        bool first = true;
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            if (!first) os << ",";
            os << (i + 1);
            first = false;
        }
        os << "]";
    }
    return os.str();
}

std::string formatComplex(const SimplicialComplex& c) {
    std::ostringstream os;
    bool first = true;
    for (unsigned mask : c.maximalFaces()) {
        if (!first) os << ",";
        os << formatSubset(mask, c.vertexCount());
        first = false;
    }
    return os.str();
}

SimplicialComplex parseComplex(const std::string& text) {
    std::vector<unsigned> masks;
    int maxVertex = 0;
    std::size_t i = 0;
    auto fail = [&]() { throw std::invalid_argument("bad complex literal: " + text); };
    while (i < text.size()) {
        if (text[i] == ',') {
            ++i;
            continue;
        }
        unsigned mask = 0;
        if (text[i] == '[') {
            ++i;
            while (i < text.size() && text[i] != ']') {
                std::size_t len = 0;
                while (i + len < text.size() &&
                       std::isdigit(static_cast<unsigned char>(text[i + len])))
                    ++len;
                if (len == 0) fail();
                int v = std::stoi(text.substr(i, len));
                if (v < 1 || v > SimplicialComplex::kMaxVertices) fail();
                mask |= 1u << (v - 1);
                maxVertex = std::max(maxVertex, v);
                i += len;
                if (i < text.size() && text[i] == ',') ++i;
            }
            if (i >= text.size() || text[i] != ']') fail();
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                int v = text[i] - '0';
                if (v < 1) fail();
                mask |= 1u << (v - 1);
                maxVertex = std::max(maxVertex, v);
                ++i;
            }
        } else {
            fail();
        }
        if (mask == 0) fail();
        masks.push_back(mask);
    }
    if (masks.empty() || maxVertex == 0) fail();
    SimplicialComplex c(maxVertex);
    for (unsigned mask : masks) c.insertFaceWithClosure(mask);
    return c;
}

}  // namespace wsd
