#include "wsd/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace wsd {

Rational genus0Point(const std::vector<int>& ks) {
    const int n = static_cast<int>(ks.size());
    if (n < 3) throw std::invalid_argument("genus0Point requires at least 3 insertions");
    long long sum = 0;
    for (int k : ks) {
        if (k < 0) return 0;
        sum += k;
    }
    if (sum != n - 3) return 0;
    Rational value = Rational(factorial(unsigned(n - 3)));
    for (int k : ks) value /= Rational(factorial(unsigned(k)));
    return value;
}

namespace {

using Key = std::pair<int, std::vector<int>>;  // genus, exponents sorted descending

std::vector<int> sortedDesc(std::vector<int> ks) {
    std::sort(ks.begin(), ks.end(), std::greater<int>());
    return ks;
}

long long sumOf(const std::vector<int>& ks) {
    return std::accumulate(ks.begin(), ks.end(), 0ll);
}

bool unstablePair(int g, int n) { return 2 * g - 2 + n <= 0; }

struct ValueGroups {
    std::vector<int> value;
    std::vector<int> mult;
};

ValueGroups groupValues(const std::vector<int>& sorted) {
    ValueGroups vg;
    for (int v : sorted) {
        if (!vg.value.empty() && vg.value.back() == v) {
            ++vg.mult.back();
        } else {
            vg.value.push_back(v);
            vg.mult.push_back(1);
        }
    }
    return vg;
}

// Visits every submultiset I of the grouped multiset together with its
// complement J and the number of labeled subsets realizing it.
void forEachSubmultiset(
    const ValueGroups& vg,
    const std::function<void(const std::vector<int>&, const std::vector<int>&, const BigInt&)>&
        visit) {
    const std::size_t groups = vg.value.size();
    std::vector<int> take(groups, 0);
    while (true) {
        std::vector<int> inside, outside;
        BigInt mult = 1;
        for (std::size_t i = 0; i < groups; ++i) {
            for (int c = 0; c < take[i]; ++c) inside.push_back(vg.value[i]);
            for (int c = take[i]; c < vg.mult[i]; ++c) outside.push_back(vg.value[i]);
            mult *= binomial(unsigned(vg.mult[i]), unsigned(take[i]));
        }
        visit(inside, outside, mult);
        std::size_t pos = 0;
        while (pos < groups && take[pos] == vg.mult[pos]) take[pos++] = 0;
        if (pos == groups) break;
        ++take[pos];
    }
}

std::vector<int> withExtra(std::vector<int> base, std::initializer_list<int> extra) {
    base.insert(base.end(), extra);
    return base;
}

std::vector<int> replacingOne(const std::vector<int>& base, int from, int to) {
    std::vector<int> out = base;
    auto it = std::find(out.begin(), out.end(), from);
    *it = to;
    return out;
}

std::mutex memoMutexA;
std::map<Key, Rational> memoA;
std::mutex memoMutexB;
std::map<Key, Rational> memoB;

/*
  DVV recursion on normalized brackets [ks]_g := prod (2k_i+1)!! <ks>_g:

  [{k+1} u R]_g = sum_{j in R} (2k_j+1) [{k+k_j} u R-j]_g
              + 1/2 sum_{a+b=k-1} ( [{a,b} u R]_{g-1}
              + sum_{g1+g2=g} sum_{I u J = R} [{a} u I]_{g1} [{b} u J]_{g2} )

  with [tau_0^3]_0 = 1 and [tau_1]_1 = 3!!/24 = 1/8. Each recursive call
  strictly lowers (g, sum k_i) lexicographically.
*/
Rational normBracketDvv(int g, std::vector<int> ks) {
    if (g < 0) return 0;
    ks = sortedDesc(std::move(ks));
    const int n = static_cast<int>(ks.size());
    if (unstablePair(g, n)) return 0;
    if (sumOf(ks) != 3ll * g - 3 + n) return 0;
    if (g == 0 && n == 3) return 1;            // gate forces (0,0,0)
    if (g == 1 && n == 1) return Rational(1, 8);  // gate forces (1)

    Key key{g, ks};
    {
        std::lock_guard<std::mutex> lock(memoMutexA);
        auto it = memoA.find(key);
        if (it != memoA.end()) return it->second;
    }

    const int k = ks[0] - 1;  // ks[0] >= 1: all-zero keys were settled above
    const std::vector<int> rest(ks.begin() + 1, ks.end());
    const ValueGroups vg = groupValues(rest);

    Rational total = 0;
    for (std::size_t i = 0; i < vg.value.size(); ++i) {
        const int v = vg.value[i];
        total += Rational(vg.mult[i]) * Rational(2 * v + 1) *
                 normBracketDvv(g, replacingOne(rest, v, k + v));
    }
    for (int a = 0; a + 1 <= k; ++a) {
        const int b = k - 1 - a;
        if (g >= 1)
            total += normBracketDvv(g - 1, withExtra(rest, {a, b})) / 2;
        for (int g1 = 0; g1 <= g; ++g1) {
            const int g2 = g - g1;
            forEachSubmultiset(vg, [&](const std::vector<int>& inside,
                                       const std::vector<int>& outside, const BigInt& mult) {
                Rational left = normBracketDvv(g1, withExtra(inside, {a}));
                if (left == 0) return;
                Rational right = normBracketDvv(g2, withExtra(outside, {b}));
                if (right == 0) return;
                total += Rational(mult) * left * right / 2;
            });
        }
    }

    std::lock_guard<std::mutex> lock(memoMutexA);
    memoA.emplace(key, total);
    return total;
}

Rational kdvValue(int g, std::vector<int> ks);

// Genus read off the dimension gate; zero when no genus fits.
Rational kdvBracket(std::vector<int> ks) {
    const long long need = sumOf(ks) - static_cast<long long>(ks.size()) + 3;
    if (need < 0 || need % 3 != 0) return 0;
    return kdvValue(static_cast<int>(need / 3), std::move(ks));
}

/*
  Second scheme. The string equation strips tau_0 insertions and the dilaton
  equation strips tau_1. When every index is at least 2, with d = max and
  m = d+2, Witten's KdV equation

    (2m+1) <<tau_m tau_0 tau_0>> = <<tau_{m-1} tau_0>> <<tau_0^3>>
        + 2 <<tau_{m-1} tau_0^2>> <<tau_0^2>> + 1/4 <<tau_{m-1} tau_0^4>>

  is expanded by Leibniz against the remaining insertions S. The split
  (I,J) = (S, empty) of the first product is the unknown
  P = <tau_0 tau_{m-1} S>, and the left side expands by the string equation
  into P plus known siblings, so P has coefficient 2m overall. One more
  string expansion of P then isolates the target <tau_d S>.
*/
Rational kdvValue(int g, std::vector<int> ks) {
    if (g < 0) return 0;
    ks = sortedDesc(std::move(ks));
    const int n = static_cast<int>(ks.size());
    if (unstablePair(g, n)) return 0;
    if (sumOf(ks) != 3ll * g - 3 + n) return 0;
    if (g == 0 && n == 3) return 1;
    if (g == 1 && n == 1) return Rational(1, 24);

    Key key{g, ks};
    {
        std::lock_guard<std::mutex> lock(memoMutexB);
        auto it = memoB.find(key);
        if (it != memoB.end()) return it->second;
    }

    thread_local std::set<Key> inProgress;
    if (!inProgress.insert(key).second)
        throw std::logic_error("KdV recursion re-entered a key; ordering bug");

    Rational result = 0;
    if (ks.back() == 0) {
        // string equation
        const std::vector<int> rest(ks.begin(), ks.end() - 1);
        const ValueGroups vg = groupValues(rest);
        for (std::size_t i = 0; i < vg.value.size(); ++i) {
            const int v = vg.value[i];
            if (v == 0) continue;
            result += Rational(vg.mult[i]) * kdvValue(g, replacingOne(rest, v, v - 1));
        }
    } else if (ks.back() == 1) {
        // dilaton equation
        const std::vector<int> rest(ks.begin(), ks.end() - 1);
        result = Rational(2 * g - 2 + static_cast<int>(rest.size())) * kdvValue(g, rest);
    } else {
        const int d = ks[0];
        const int m = d + 2;
        const std::vector<int> S(ks.begin() + 1, ks.end());
        const ValueGroups vg = groupValues(S);

        Rational known = kdvBracket(withExtra(S, {m - 1, 0, 0, 0, 0})) / 4;
        forEachSubmultiset(vg, [&](const std::vector<int>& inside,
                                   const std::vector<int>& outside, const BigInt& mult) {
            if (!outside.empty()) {
                Rational left = kdvBracket(withExtra(inside, {m - 1, 0}));
                if (left != 0)
                    known += Rational(mult) * left * kdvBracket(withExtra(outside, {0, 0, 0}));
            }
            Rational left2 = kdvBracket(withExtra(inside, {m - 1, 0, 0}));
            if (left2 != 0)
                known += 2 * Rational(mult) * left2 * kdvBracket(withExtra(outside, {0, 0}));
        });

        Rational siblingsOfK = 0;
        for (std::size_t i = 0; i < vg.value.size(); ++i) {
            const int v = vg.value[i];
            siblingsOfK += Rational(vg.mult[i]) *
                           kdvBracket(withExtra(replacingOne(S, v, v - 1), {m, 0}));
        }
        const Rational p = (known - Rational(2 * m + 1) * siblingsOfK) / Rational(2 * m);

        Rational siblingsOfP = 0;
        for (std::size_t i = 0; i < vg.value.size(); ++i) {
            const int v = vg.value[i];
            siblingsOfP += Rational(vg.mult[i]) *
                           kdvValue(g, withExtra(replacingOne(S, v, v - 1), {m - 1}));
        }
        result = p - siblingsOfP;
    }

    inProgress.erase(key);
    std::lock_guard<std::mutex> lock(memoMutexB);
    memoB.emplace(key, result);
    return result;
}

}  // namespace

Rational wkPoint(int genus, const std::vector<int>& ks) {
    for (int k : ks)
        if (k < 0) return 0;
    Rational value = normBracketDvv(genus, ks);
    if (value == 0) return value;
    Rational scale = 1;
    for (int k : ks) scale *= Rational(oddDoubleFactorial(k));
    return value / scale;
}

Rational wkPointKdv(int genus, const std::vector<int>& ks) {
    for (int k : ks)
        if (k < 0) return 0;
    return kdvValue(genus, ks);
}

std::vector<std::pair<int, std::vector<int>>> wkMemoKeys() {
    std::lock_guard<std::mutex> lock(memoMutexA);
    std::vector<Key> keys;
    keys.reserve(memoA.size());
    for (const auto& [key, value] : memoA) keys.push_back(key);
    return keys;
}

bool DescendantKey::operator<(const DescendantKey& other) const {
    if (genus != other.genus) return genus < other.genus;
    return insertions < other.insertions;
}

bool DescendantKey::operator==(const DescendantKey& other) const {
    return genus == other.genus && insertions == other.insertions;
}

DescendantKey makeKey(int genus, std::vector<std::pair<int, int>> insertions) {
    std::sort(insertions.begin(), insertions.end());
    return DescendantKey{genus, std::move(insertions)};
}

const ClassInfo* TargetModel::findClass(int id) const {
    for (const ClassInfo& c : classes)
        if (c.id == id) return &c;
    return nullptr;
}

int TargetModel::classDegree(int id) const {
    const ClassInfo* c = findClass(id);
    if (!c) throw std::invalid_argument("unknown class id " + std::to_string(id));
    return c->degree;
}

TargetModel pointTarget() {
    TargetModel m;
    m.kind = TargetModel::Kind::point;
    m.classes.push_back(ClassInfo{kUnitClassId, "unit", 0, std::nullopt});
    return m;
}

namespace {

std::string stripped(std::string line) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    std::size_t end = line.find_last_not_of(" \t\r");
    return line.substr(begin, end - begin + 1);
}

std::vector<std::string> splitWords(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string word;
    while (is >> word) out.push_back(word);
    return out;
}

int parseIntStrict(const std::string& text) {
    std::size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad integer: " + text);
    return value;
}

}  // namespace

TargetModel loadTarget(std::istream& in) {
    TargetModel m;
    bool sawKind = false;
    std::string section;
    std::string line;
    int lineNo = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("target document line " + std::to_string(lineNo) + ": " + why);
    };

    while (std::getline(in, line)) {
        ++lineNo;
        std::string s = stripped(line);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s == "[target]" || s == "[classes]" || s == "[products]" || s == "[descendants]")
                section = s;
            else
                fail("unknown section " + s);
            continue;
        }
        if (section == "[target]") {
            std::size_t eq = s.find('=');
            if (eq == std::string::npos) fail("expected key=value");
            std::string keyName = s.substr(0, eq), value = s.substr(eq + 1);
            if (keyName == "kind") {
                if (value == "point") m.kind = TargetModel::Kind::point;
                else if (value == "formal") m.kind = TargetModel::Kind::formal;
                else fail("kind must be point or formal");
                sawKind = true;
            } else if (keyName == "dim") {
                m.dimension = parseIntStrict(value);
            } else if (keyName == "pairing") {
                m.pairing = parseIntStrict(value);
            } else if (keyName == "beta") {
                m.betaDegree = parseIntStrict(value);
                if (m.betaDegree < 0) fail("beta must be nonnegative");
            } else {
                fail("unknown key " + keyName);
            }
        } else if (section == "[classes]") {
            std::vector<std::string> words = splitWords(s);
            if (words.size() < 3 || words.size() > 4) fail("expected: id name degree [beta integral]");
            ClassInfo info;
            info.id = parseIntStrict(words[0]);
            info.name = words[1];
            info.degree = parseIntStrict(words[2]);
            if (words.size() == 4) info.betaIntegral = parseRational(words[3]);
            if (info.degree < 0) fail("negative class degree");
            if (m.findClass(info.id)) fail("duplicate class id " + words[0]);
            if (info.id == kUnitClassId && info.degree != 0) fail("unit class must have degree 0");
            m.classes.push_back(std::move(info));
        } else if (section == "[products]") {
            std::size_t eq = s.find('=');
            std::size_t star = s.find('*');
            if (eq == std::string::npos || star == std::string::npos || star > eq)
                fail("expected: idA*idB = combination");
            int idA = parseIntStrict(stripped(s.substr(0, star)));
            int idB = parseIntStrict(stripped(s.substr(star + 1, eq - star - 1)));
            std::string rhs = stripped(s.substr(eq + 1));
            ClassCombo combo;
            if (rhs != "0") {
                std::size_t pos = 0;
                while (pos < rhs.size()) {
                    std::size_t plus = rhs.find('+', pos + 1);
                    std::string term = stripped(rhs.substr(pos, plus == std::string::npos
                                                                    ? std::string::npos
                                                                    : plus - pos));
                    pos = plus == std::string::npos ? rhs.size() : plus + 1;
                    std::size_t termStar = term.find('*');
                    if (termStar == std::string::npos) fail("expected coef*id in " + term);
                    Rational coef = parseRational(stripped(term.substr(0, termStar)));
                    int id = parseIntStrict(stripped(term.substr(termStar + 1)));
                    if (coef != 0) combo.emplace_back(coef, id);
                }
            }
            std::sort(combo.begin(), combo.end(),
                      [](const auto& x, const auto& y) { return x.second < y.second; });
            m.products[{std::min(idA, idB), std::max(idA, idB)}] = std::move(combo);
        } else if (section == "[descendants]") {
            std::vector<std::string> parts;
            std::size_t pos = 0;
            while (true) {
                std::size_t semi = s.find(';', pos);
                parts.push_back(stripped(s.substr(pos, semi == std::string::npos
                                                           ? std::string::npos
                                                           : semi - pos)));
                if (semi == std::string::npos) break;
                pos = semi + 1;
            }
            if (parts.size() != 3) fail("expected: g=<int> ; insertions ; value");
            if (parts[0].rfind("g=", 0) != 0) fail("expected g=<int>");
            int g = parseIntStrict(parts[0].substr(2));
            std::vector<std::pair<int, int>> insertions;
            std::string ins = parts[1];
            std::size_t q = 0;
            while (q < ins.size()) {
                if (std::isspace(static_cast<unsigned char>(ins[q]))) { ++q; continue; }
                if (ins[q] != '(') fail("expected (k,id) pairs");
                std::size_t close = ins.find(')', q);
                if (close == std::string::npos) fail("unclosed insertion");
                std::string pair = ins.substr(q + 1, close - q - 1);
                std::size_t comma = pair.find(',');
                if (comma == std::string::npos) fail("expected (k,id)");
                insertions.emplace_back(parseIntStrict(stripped(pair.substr(0, comma))),
                                        parseIntStrict(stripped(pair.substr(comma + 1))));
                q = close + 1;
            }
            m.table[makeKey(g, std::move(insertions))] = parseRational(parts[2]);
        } else {
            fail("content before any section header");
        }
    }
    if (!sawKind) throw std::invalid_argument("target document: missing kind=point|formal");

    if (!m.findClass(kUnitClassId))
        m.classes.insert(m.classes.begin(), ClassInfo{kUnitClassId, "unit", 0, std::nullopt});

    for (const auto& [pairIds, combo] : m.products) {
        const ClassInfo* a = m.findClass(pairIds.first);
        const ClassInfo* b = m.findClass(pairIds.second);
        if (!a || !b) throw std::invalid_argument("product references unknown class id");
        for (const auto& [coef, id] : combo) {
            const ClassInfo* c = m.findClass(id);
            if (!c) throw std::invalid_argument("product result references unknown class id");
            if (c->degree != a->degree + b->degree)
                throw std::invalid_argument("product of " + a->name + " and " + b->name +
                                            " violates the grading");
        }
    }
    for (const auto& [key, value] : m.table) {
        for (const auto& [k, id] : key.insertions) {
            if (k < 0) throw std::invalid_argument("descendant table entry with negative k");
            if (!m.findClass(id))
                throw std::invalid_argument("descendant table references unknown class id");
        }
    }
    return m;
}

TargetModel loadTargetFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open target document " + path);
    return loadTarget(in);
}

ClassCombo ringProduct(const TargetModel& m, const std::vector<int>& ids) {
    ClassCombo combo{{Rational(1), kUnitClassId}};
    for (int id : ids) {
        if (!m.findClass(id))
            throw std::invalid_argument("unknown class id " + std::to_string(id));
        std::map<int, Rational> next;
        for (const auto& [coef, a] : combo) {
            if (a == kUnitClassId) {
                next[id] += coef;
            } else if (id == kUnitClassId) {
                next[a] += coef;
            } else {
                auto it = m.products.find({std::min(a, id), std::max(a, id)});
                if (it == m.products.end())
                    throw OracleIncompleteError("product of class " + std::to_string(a) +
                                                " and class " + std::to_string(id) +
                                                " is not specified");
                for (const auto& [c2, target] : it->second) next[target] += coef * c2;
            }
        }
        combo.clear();
        for (const auto& [cls, coef] : next)
            if (coef != 0) combo.emplace_back(coef, cls);
    }
    return combo;
}

Rational unweightedLookup(const TargetModel& m, const DescendantKey& key) {
    for (const auto& [k, id] : key.insertions)
        if (k < 0) return 0;

    if (m.kind == TargetModel::Kind::point) {
        std::vector<int> ks;
        for (const auto& [k, id] : key.insertions) {
            if (id != kUnitClassId)
                throw std::invalid_argument("point target only carries the unit class");
            ks.push_back(k);
        }
        return wkPoint(key.genus, ks);
    }

    long long total = 0;
    const int n = static_cast<int>(key.insertions.size());
    for (const auto& [k, id] : key.insertions) total += k + m.classDegree(id);
    const long long gate = static_cast<long long>(1 - key.genus) * m.dimension + m.pairing +
                           (3ll * key.genus - 3 + n);
    if (total != gate) return 0;

    DescendantKey canonical = makeKey(key.genus, key.insertions);
    auto it = m.table.find(canonical);
    if (it != m.table.end()) return it->second;

    std::ostringstream os;
    os << "oracle incomplete: missing table entry g=" << key.genus << " ;";
    for (const auto& [k, id] : canonical.insertions) os << " (" << k << "," << id << ")";
    throw OracleIncompleteError(os.str());
}

}  // namespace wsd
