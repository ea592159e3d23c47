#include "latgraph/identify.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace latgraph {

// ---------------------------------------------------------------------------
// Fingerprints

LatticeFingerprint fingerprint(const Lattice& l) {
    const auto& mv = l.minimal_vectors();
    const Rational m = mv.min_norm_sq;
    LatticeFingerprint f;
    f.rank = l.rank();
    f.kissing_number = mv.kissing_number();
    Rational mn = 1;
    for (std::size_t i = 0; i < f.rank; ++i) mn *= m;
    f.normalized_determinant = l.determinant() / mn;

    for (long t = 2; t <= 64; ++t) {
        std::vector<ShortVector> sv;
        try {
            sv = short_vectors(l.gram(), m * t, 1'000'000);
        } catch (const std::length_error&) {
            break;
        }
        std::vector<std::pair<Rational, std::size_t>> levels;
        for (const auto& v : sv) {
            Rational ratio = v.norm / m;
            if (levels.empty() || levels.back().first != ratio) {
                if (levels.size() == 3) break;
                levels.emplace_back(ratio, 0);
            }
            levels.back().second += 2;
        }
        f.histogram = levels;
        if (levels.size() == 3) break;
    }
    return f;
}

std::string to_string(const LatticeFingerprint& f) {
    std::ostringstream os;
    os << "rank=" << f.rank << " kissing=" << f.kissing_number
       << " det/min^rank=" << to_string(f.normalized_determinant) << " levels=[";
    for (std::size_t i = 0; i < f.histogram.size(); ++i)
        os << (i ? ", " : "") << to_string(f.histogram[i].first) << ":" << f.histogram[i].second;
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Similarity search

namespace {

using i64 = long long;
using i128 = __int128;

i64 to_i64(const Integer& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("is_similar: coefficient exceeds 64 bits");
    return z.get_si();
}

i64 narrow(i128 v) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
        throw std::overflow_error("is_similar: inner product exceeds 64 bits");
    return static_cast<i64>(v);
}

RationalMatrix columns_matrix(const std::vector<IntegerVector>& cols, std::size_t rows) {
    RationalMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    return m;
}

struct Candidate {
    std::vector<i64> coords;
    std::vector<i64> g_coords;  // G * coords
};

struct IsometrySearch {
    std::size_t n;
    std::vector<std::vector<i64>> target;              // D * W
    std::vector<const std::vector<std::size_t>*> pool;  // candidate ids per level
    const std::vector<Candidate>* cands;
    std::vector<std::size_t> chosen;
    std::size_t nodes = 0;
    std::size_t budget;
    bool exhausted = false;

    i64 inner(std::size_t a, std::size_t b) const {
        const auto& x = (*cands)[a].coords;
        const auto& gy = (*cands)[b].g_coords;
        i128 s = 0;
        for (std::size_t k = 0; k < n; ++k) s += static_cast<i128>(x[k]) * gy[k];
        return narrow(s);
    }

    bool search(std::size_t level) {
        if (level == n) return true;
        const auto& ids = *pool[level];
        for (std::size_t idx = 0; idx < ids.size(); ++idx) {
            std::size_t c = ids[idx];
            if (level == 0 && (c % 2) == 1) continue;  // -v is equivalent to v at the root
            if (++nodes > budget) {
                exhausted = true;
                return false;
            }
            bool ok = true;
            for (std::size_t j = 0; j < level && ok; ++j) ok = inner(c, chosen[j]) == target[level][j];
            if (!ok) continue;
            chosen[level] = c;
            if (search(level + 1)) return true;
            if (exhausted) return false;
        }
        return false;
    }
};

}  // namespace

SimilarityResult is_similar(const Lattice& l1, const Lattice& l2, std::size_t node_budget) {
    SimilarityResult res;
    const std::size_t n = l1.rank();
    if (l2.rank() != n) return res;
    const auto& mv1 = l1.minimal_vectors();
    const auto& mv2 = l2.minimal_vectors();
    res.scale_sq = mv1.min_norm_sq / mv2.min_norm_sq;
    if (mv1.kissing_number() != mv2.kissing_number()) return res;
    const RationalMatrix& g1 = l1.gram();
    const RationalMatrix g2 = l2.gram() * res.scale_sq;
    if (determinant(g1) != determinant(g2)) return res;

    // Short basis of l1, ordered by norm.
    auto u1 = lll_reduce(g1);
    Rational bound1 = 0;
    for (const auto& c : u1) bound1 = std::max(bound1, l1.norm(c));
    std::vector<IntegerVector> pool1;
    for (auto& sv : short_vectors(g1, bound1)) pool1.push_back(sv.coords);
    std::vector<IntegerVector> basis1;
    if (auto b = primitive_basis_from(pool1, n)) {
        basis1 = *b;
    } else {
        basis1 = u1;
        std::stable_sort(basis1.begin(), basis1.end(),
                         [&](const IntegerVector& a, const IntegerVector& b) { return l1.norm(a) < l1.norm(b); });
    }
    RationalMatrix v = columns_matrix(basis1, n);
    RationalMatrix w = v.transpose() * g1 * v;

    // l2 in an LLL-reduced basis keeps coordinates small.
    auto u2 = lll_reduce(g2);
    RationalMatrix u2m = columns_matrix(u2, n);
    RationalMatrix g2r = u2m.transpose() * g2 * u2m;
    Rational maxw = 0;
    for (std::size_t i = 0; i < n; ++i) maxw = std::max(maxw, w(i, i));
    auto sv2 = short_vectors(g2r, maxw);

    Integer den = lcm(w.denominator_lcm(), g2r.denominator_lcm());
    std::vector<std::vector<i64>> gi(n, std::vector<i64>(n));
    IsometrySearch s;
    s.n = n;
    s.target.assign(n, std::vector<i64>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            gi[i][j] = to_i64(Rational(g2r(i, j) * den).get_num());
            s.target[i][j] = to_i64(Rational(w(i, j) * den).get_num());
        }

    std::vector<Candidate> cands;
    std::map<i64, std::vector<std::size_t>> by_norm;
    for (const auto& sv : sv2) {
        Rational scaled_norm = sv.norm * den;
        i64 key = to_i64(scaled_norm.get_num());
        for (int sign : {1, -1}) {
            Candidate c;
            c.coords.resize(n);
            c.g_coords.assign(n, 0);
            for (std::size_t k = 0; k < n; ++k) c.coords[k] = sign * to_i64(sv.coords[k]);
            for (std::size_t r = 0; r < n; ++r) {
                i128 acc = 0;
                for (std::size_t k = 0; k < n; ++k) acc += static_cast<i128>(gi[r][k]) * c.coords[k];
                c.g_coords[r] = narrow(acc);
            }
            by_norm[key].push_back(cands.size());
            cands.push_back(std::move(c));
        }
    }
    static const std::vector<std::size_t> none;
    s.pool.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = by_norm.find(s.target[i][i]);
        s.pool[i] = it == by_norm.end() ? &none : &it->second;
    }
    s.cands = &cands;
    s.chosen.assign(n, 0);
    s.budget = node_budget;
    bool found = s.search(0);
    res.nodes = s.nodes;
    if (!found) {
        res.status = s.exhausted ? SimilarityStatus::inconclusive : SimilarityStatus::not_similar;
        return res;
    }

    RationalMatrix img(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) img(r, c) = static_cast<long>(cands[s.chosen[c]].coords[r]);
    RationalMatrix t = u2m * img * inverse(v);
    if (!t.is_integral() || t.transpose() * g2 * t != g1)
        throw std::logic_error("is_similar: witness failed exact verification");
    res.witness.assign(n, std::vector<Integer>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) res.witness[r][c] = t(r, c).get_num();
    res.status = SimilarityStatus::similar;
    return res;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {


std::vector<RationalVector> a_roots(std::size_t n) {
    std::vector<RationalVector> gens;
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector v(n + 1, 0);
        v[i] = 1;
        v[i + 1] = -1;
        gens.push_back(v);
    }
    return gens;
}

std::vector<RationalVector> d_roots(std::size_t n) {
    std::vector<RationalVector> gens;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        RationalVector v(n, 0);
        v[i] = 1;
        v[i + 1] = -1;
        gens.push_back(v);
    }
    RationalVector v(n, 0);
    v[0] = v[1] = 1;
    gens.push_back(v);
    return gens;
}

std::size_t param(const std::vector<std::size_t>& p, std::size_t i, const std::string& family) {
    if (p.size() <= i) throw std::invalid_argument("catalog_build: " + family + " needs more parameters");
    return p[i];
}

Lattice e8() {
    auto gens = d_roots(8);
    gens.push_back(RationalVector(8, Rational(1, 2)));
    return lattice_from_generators(gens, "E8");
}

}  // namespace

Lattice catalog_build(const std::string& family, const std::vector<std::size_t>& p) {
    auto bad = [&](const std::string& why) { return std::invalid_argument("catalog_build(" + family + "): " + why); };
    if (family == "Zn") {
        std::size_t n = param(p, 0, family);
        if (n < 1) throw bad("n >= 1 required");
        return Lattice(RationalMatrix::identity(n), "Z" + std::to_string(n));
    }
    if (family == "An" || family == "An_dual") {
        std::size_t n = param(p, 0, family);
        if (n < 1) throw bad("n >= 1 required");
        Lattice a = lattice_from_generators(a_roots(n), "A" + std::to_string(n));
        return family == "An" ? a : dual_lattice(a);
    }
    if (family == "An_r") {
        std::size_t n = param(p, 0, family), r = param(p, 1, family);
        if (n < 1 || r < 1 || (n + 1) % r != 0) throw bad("requires r | n+1");
        // {e1 - e_i : i = 2..n+1} together with (1/r) sum_{i=2}^{n+1} (e1 - e_i)
        std::vector<RationalVector> gens;
        RationalVector glue(n + 1, 0);
        for (std::size_t i = 1; i <= n; ++i) {
            RationalVector v(n + 1, 0);
            v[0] = 1;
            v[i] = -1;
            gens.push_back(v);
            for (std::size_t k = 0; k <= n; ++k) glue[k] += v[k];
        }
        gens.push_back(scaled(glue, Rational(1, static_cast<long>(r))));
        return lattice_from_generators(gens, "A" + std::to_string(n) + "^" + std::to_string(r));
    }
    if (family == "Dn" || family == "Dn_dual") {
        std::size_t n = param(p, 0, family);
        if (n < 3) throw bad("n >= 3 required");
        Lattice d = lattice_from_generators(d_roots(n), "D" + std::to_string(n));
        return family == "Dn" ? d : dual_lattice(d);
    }
    if (family == "Dn_plus") {
        std::size_t n = param(p, 0, family);
        if (n < 4 || n % 2 != 0) throw bad("n must be even and >= 4");
        auto gens = d_roots(n);
        gens.push_back(RationalVector(n, Rational(1, 2)));
        return lattice_from_generators(gens, "D" + std::to_string(n) + "_plus");
    }
    if (family == "E8") return e8();
    if (family == "E7" || family == "E7_dual") {
        // x7 = x8 inside E8
        RationalMatrix c(1, 8);
        c(0, 6) = 1;
        c(0, 7) = -1;
        Lattice e7 = kernel_sublattice(e8(), c, "E7");
        return family == "E7" ? e7 : dual_lattice(e7);
    }
    if (family == "E6" || family == "E6_dual") {
        // x6 = x7 = x8 inside E8
        RationalMatrix c(2, 8);
        c(0, 5) = 1;
        c(0, 6) = -1;
        c(1, 6) = 1;
        c(1, 7) = -1;
        Lattice e6 = kernel_sublattice(e8(), c, "E6");
        return family == "E6" ? e6 : dual_lattice(e6);
    }
    throw std::invalid_argument("catalog_build: unknown family '" + family + "'");
}

namespace {

struct Slot {
    CatalogEntry entry;
    std::function<Lattice()> build;
    std::once_flag once;
    std::optional<Lattice> lattice;
    std::optional<LatticeFingerprint> fp;

    void fill() {
        std::call_once(once, [this] {
            lattice = build();
            fp = fingerprint(*lattice);
        });
    }
};

Lattice named(Lattice l, const std::string& name) {
    if (l.has_basis()) return Lattice(l.basis(), name);
    return Lattice::from_gram(l.gram(), name);
}

std::vector<std::unique_ptr<Slot>> make_catalog() {
    std::vector<std::unique_ptr<Slot>> out;
    auto add = [&](std::string name, std::size_t rank, int tier, std::function<Lattice()> b) {
        auto s = std::make_unique<Slot>();
        s->entry = {name, rank, tier};
        s->build = [b, name] { return named(b(), name); };
        out.push_back(std::move(s));
    };
    constexpr std::size_t max_rank = 10;
    for (std::size_t n = 1; n <= max_rank; ++n) {
        std::string k = std::to_string(n);
        add("Z" + k, n, 0, [n] { return catalog_build("Zn", {n}); });
        add("A" + k, n, 0, [n] { return catalog_build("An", {n}); });
        add("A" + k + "_dual", n, 0, [n] { return catalog_build("An_dual", {n}); });
        if (n >= 4) {
            add("D" + k, n, 0, [n] { return catalog_build("Dn", {n}); });
            add("D" + k + "_dual", n, 0, [n] { return catalog_build("Dn_dual", {n}); });
        }
        if (n >= 6 && n % 2 == 0) add("D" + k + "_plus", n, 0, [n] { return catalog_build("Dn_plus", {n}); });
    }
    add("E6", 6, 0, [] { return catalog_build("E6"); });
    add("E6_dual", 6, 0, [] { return catalog_build("E6_dual"); });
    add("E7", 7, 0, [] { return catalog_build("E7"); });
    add("E7_dual", 7, 0, [] { return catalog_build("E7_dual"); });
    add("E8", 8, 0, [] { return catalog_build("E8"); });
    for (std::size_t n = 2; n <= max_rank; ++n)
        for (std::size_t r = 2; r <= n; ++r)
            if ((n + 1) % r == 0)
                add("A" + std::to_string(n) + "^" + std::to_string(r), n, 1,
                    [n, r] { return catalog_build("An_r", {n, r}); });
    auto a2 = [] { return catalog_build("An", {2}); };
    add("A2_tensor_A2", 4, 2, [a2] { return tensor_product(a2(), a2()); });
    add("A2_sum_A2", 4, 2, [a2] { return orthogonal_sum(a2(), a2()); });
    add("A2_sum_A2_sum_A2", 6, 2, [a2] { return orthogonal_sum(orthogonal_sum(a2(), a2()), a2()); });
    add("A2_sum_A2_sum_A2_sum_A2", 8, 2,
        [a2] { return orthogonal_sum(orthogonal_sum(a2(), a2()), orthogonal_sum(a2(), a2())); });
    return out;
}

const std::vector<std::unique_ptr<Slot>>& slots() {
    static const std::vector<std::unique_ptr<Slot>> s = make_catalog();
    return s;
}

Slot& slot(const std::string& name) {
    for (const auto& s : slots())
        if (s->entry.name == name) return *s;
    throw std::invalid_argument("unknown catalog lattice '" + name + "'");
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> e;
        for (const auto& s : slots()) e.push_back(s->entry);
        return e;
    }();
    return entries;
}

Lattice catalog_lattice(const std::string& name) {
    Slot& s = slot(name);
    s.fill();
    return *s.lattice;
}

const LatticeFingerprint& catalog_fingerprint(const std::string& name) {
    Slot& s = slot(name);
    s.fill();
    return *s.fp;
}

Identification identify(const Lattice& l) {
    Identification out;
    constexpr std::size_t max_kissing = 256;
    if (std::none_of(slots().begin(), slots().end(), [&](const auto& s) { return s->entry.rank == l.rank(); }))
        return out;
    const LatticeFingerprint fp = fingerprint(l);
    int best_tier = std::numeric_limits<int>::max();
    std::vector<std::pair<int, std::string>> confirmed;
    for (const auto& s : slots()) {
        if (s->entry.rank != l.rank()) continue;
        s->fill();
        if (*s->fp != fp) continue;
        if (fp.kissing_number > max_kissing) {
            out.fingerprint_only.push_back(s->entry.name);
            continue;
        }
        SimilarityResult r = is_similar(l, *s->lattice);
        if (r.status == SimilarityStatus::similar) {
            confirmed.emplace_back(s->entry.tier, s->entry.name);
            best_tier = std::min(best_tier, s->entry.tier);
        } else if (r.status == SimilarityStatus::inconclusive) {
            out.fingerprint_only.push_back(s->entry.name);
        }
    }
    for (const auto& [tier, name] : confirmed)
        if (tier == best_tier) out.names.push_back(name);
    out.certified = !out.names.empty();
    return out;
}

std::string to_json(const IdentificationReport& r) {
    nlohmann::json j;
    j["graph"] = r.graph;
    j["eigenvalue"] = to_string(r.eigenvalue);
    j["multiplicity"] = r.multiplicity;
    j["lattice_name"] = r.lattice_name;
    j["certified"] = r.certified;
    return j.dump();
}

}  // namespace latgraph
