#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knsub/ring.hpp"

namespace knsub {

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;
using Index = std::uint32_t;

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite module over Z/mZ. Either a product of cyclic groups Z_{d_i} with
// d_i | m and componentwise scalar action, or backed by explicit addition and
// scalar tables (quotients, standalone submodules). Immutable once built.
class FiniteModule : public std::enable_shared_from_this<FiniteModule> {
  public:
    static ModulePtr coordinate(ZModRing R, std::vector<long long> orders, std::string origin = "") {
        auto m = std::shared_ptr<FiniteModule>(new FiniteModule(std::move(R)));
        m->origin_ = std::move(origin);
        m->orders_ = std::move(orders);
        std::size_t size = 1;
        for (long long d : m->orders_) {
            if (d < 2) throw std::invalid_argument("coordinate module: each order must be >= 2");
            if (m->ring_.modulus % d != 0)
                throw std::invalid_argument("coordinate module: order " + std::to_string(d) +
                                            " does not divide modulus " + std::to_string(m->ring_.modulus));
            size *= static_cast<std::size_t>(d);
        }
        m->size_ = size;
        m->strides_.assign(m->orders_.size(), 1);
        for (std::size_t i = m->orders_.size(); i-- > 1;)
            m->strides_[i - 1] = m->strides_[i] * static_cast<std::size_t>(m->orders_[i]);
        for (std::size_t i = 0; i < m->orders_.size(); ++i)
            m->gens_.push_back(static_cast<Index>(m->strides_[i]));
        m->maybe_build_scalar_table();
        return m;
    }

    // A module presented by cyclic orders with integer scalars; all predicates
    // over integer scalars factor through Z_e for e = lcm(orders).
    static ModulePtr from_z_orders(const std::vector<long long>& orders, std::string origin = "") {
        if (orders.empty()) throw std::invalid_argument("from_z_orders: orders must be nonempty");
        long long e = 1;
        for (long long d : orders) e = std::lcm(e, d);
        return coordinate(ZModRing(e), orders, std::move(origin));
    }

    static ModulePtr table(ZModRing R, std::vector<std::string> labels, std::vector<Index> add_table,
                           std::vector<Index> scalar_table, std::string origin = "") {
        auto m = std::shared_ptr<FiniteModule>(new FiniteModule(std::move(R)));
        m->origin_ = std::move(origin);
        m->tabled_ = true;
        m->labels_ = std::move(labels);
        m->size_ = m->labels_.size();
        m->add_ = std::move(add_table);
        m->scal_ = std::move(scalar_table);
        m->verify_tables();
        m->neg_.assign(m->size_, 0);
        for (Index a = 0; a < m->size_; ++a)
            for (Index b = 0; b < m->size_; ++b)
                if (m->add_[a * m->size_ + b] == 0) m->neg_[a] = b;
        m->gens_ = m->greedy_generators();
        return m;
    }

    std::size_t size() const { return size_; }
    const ZModRing& ring() const { return ring_; }
    bool is_coordinate() const { return !tabled_; }
    bool is_zero_module() const { return size_ == 1; }
    const std::vector<long long>& orders() const { return orders_; }
    const std::string& origin() const { return origin_; }

    Index zero() const { return 0; }

    Index add(Index a, Index b) const {
        if (tabled_) return add_[a * size_ + b];
        Index r = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            long long ai = (a / strides_[i]) % orders_[i];
            long long bi = (b / strides_[i]) % orders_[i];
            r += static_cast<Index>(((ai + bi) % orders_[i]) * strides_[i]);
        }
        return r;
    }

    Index neg(Index a) const {
        if (tabled_) return neg_[a];
        Index r = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            long long ai = (a / strides_[i]) % orders_[i];
            r += static_cast<Index>(((orders_[i] - ai) % orders_[i]) * strides_[i]);
        }
        return r;
    }

    Index scalar(long long r, Index a) const {
        long long rc = ring_.canon(r);
        if (!scal_.empty()) return scal_[static_cast<std::size_t>(rc) * size_ + a];
        Index out = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            long long ai = (a / strides_[i]) % orders_[i];
            out += static_cast<Index>(((rc % orders_[i]) * ai % orders_[i]) * strides_[i]);
        }
        return out;
    }

    // (r^e)·a with r^0·a = a.
    Index scalar_pow(long long r, int e, Index a) const { return scalar(ring_.pow(r, e), a); }

    // Canonical generating set: unit vectors for coordinate modules, a greedy
    // set for table-backed ones. Empty for the zero module.
    const std::vector<Index>& generators() const { return gens_; }

    std::string label(Index a) const {
        if (tabled_) return labels_[a];
        if (orders_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string((a / strides_[i]) % orders_[i]);
        }
        return s;
    }

    // Comma-separated coordinates ("2,0"); values canonicalized mod d_i.
    Index parse_element(std::string_view text) const {
        if (tabled_) {
            for (Index i = 0; i < size_; ++i)
                if (labels_[i] == text) return i;
            throw std::invalid_argument("parse_element: unknown label '" + std::string(text) + "'");
        }
        if (orders_.empty()) {
            if (text.empty() || text == "0") return 0;
            throw std::invalid_argument("parse_element: zero module has only the element 0");
        }
        std::vector<long long> parts;
        std::string cur;
        for (char c : text) {
            if (c == ',') {
                parts.push_back(parse_int(cur));
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur += c;
            }
        }
        parts.push_back(parse_int(cur));
        if (parts.size() != orders_.size())
            throw std::invalid_argument("parse_element: expected " + std::to_string(orders_.size()) +
                                        " coordinates, got " + std::to_string(parts.size()));
        Index r = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            long long v = parts[i] % orders_[i];
            if (v < 0) v += orders_[i];
            r += static_cast<Index>(v * strides_[i]);
        }
        return r;
    }

    std::vector<long long> coords(Index a) const {
        std::vector<long long> c;
        for (std::size_t i = 0; i < orders_.size(); ++i) c.push_back((a / strides_[i]) % orders_[i]);
        return c;
    }

  private:
    explicit FiniteModule(ZModRing R) : ring_(std::move(R)) {}

    static long long parse_int(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("parse_element: empty coordinate");
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_element: bad coordinate '" + s + "'");
        }
        if (pos != s.size()) throw std::invalid_argument("parse_element: bad coordinate '" + s + "'");
        return v;
    }

    void maybe_build_scalar_table() {
        std::size_t entries = static_cast<std::size_t>(ring_.modulus) * size_;
        if (entries > (1u << 22)) return;
        scal_.resize(entries);
        for (long long r = 0; r < ring_.modulus; ++r)
            for (Index a = 0; a < size_; ++a) {
                Index out = 0;
                for (std::size_t i = 0; i < orders_.size(); ++i) {
                    long long ai = (a / strides_[i]) % orders_[i];
                    out += static_cast<Index>(((r % orders_[i]) * ai % orders_[i]) * strides_[i]);
                }
                scal_[static_cast<std::size_t>(r) * size_ + a] = out;
            }
    }

    std::vector<Index> greedy_generators() const;

    void verify_tables() const {
        std::size_t n = size_;
        if (n == 0) throw std::logic_error("table module: empty");
        if (add_.size() != n * n || scal_.size() != static_cast<std::size_t>(ring_.modulus) * n)
            throw std::logic_error("table module: table size mismatch");
        for (Index a = 0; a < n; ++a) {
            if (add_[0 * n + a] != a || add_[a * n + 0] != a)
                throw std::logic_error("table module: 0 is not an identity");
            bool hit_zero = false;
            std::vector<bool> seen(n, false);
            for (Index b = 0; b < n; ++b) {
                Index s = add_[a * n + b];
                if (s != add_[b * n + a]) throw std::logic_error("table module: addition not commutative");
                if (seen[s]) throw std::logic_error("table module: addition row not a permutation");
                seen[s] = true;
                if (s == 0) hit_zero = true;
            }
            if (!hit_zero) throw std::logic_error("table module: missing inverse");
        }
        if (n <= 128)
            for (Index a = 0; a < n; ++a)
                for (Index b = 0; b < n; ++b)
                    for (Index c = 0; c < n; ++c)
                        if (add_[add_[a * n + b] * n + c] != add_[a * n + add_[b * n + c]])
                            throw std::logic_error("table module: addition not associative");
        for (Index a = 0; a < n; ++a)
            if (scal_[1 * n + a] != a) throw std::logic_error("table module: 1 does not act as identity");
        for (long long r = 0; r < ring_.modulus; ++r) {
            for (long long s = 0; s < ring_.modulus; ++s) {
                long long rs = ring_.add(r, s);
                for (Index a = 0; a < n; ++a)
                    if (scal_[rs * n + a] != add_[scal_[r * n + a] * n + scal_[s * n + a]])
                        throw std::logic_error("table module: (r+s)a != ra+sa");
            }
            for (Index a = 0; a < n; ++a)
                for (Index b = 0; b < n; ++b)
                    if (scal_[r * n + add_[a * n + b]] != add_[scal_[r * n + a] * n + scal_[r * n + b]])
                        throw std::logic_error("table module: r(a+b) != ra+rb");
        }
    }

    ZModRing ring_;
    std::size_t size_ = 1;
    bool tabled_ = false;
    std::vector<long long> orders_;
    std::vector<std::size_t> strides_;
    std::vector<std::string> labels_;
    std::vector<Index> add_, neg_, scal_, gens_;
    std::string origin_;
};

inline ModulePtr build_module(ZModRing R, std::vector<long long> orders, std::string origin = "") {
    return FiniteModule::coordinate(std::move(R), std::move(orders), std::move(origin));
}

inline ModulePtr reduce_integer_scalars(const std::vector<long long>& orders, std::string origin = "") {
    return FiniteModule::from_z_orders(orders, std::move(origin));
}

namespace detail {

// Additive closure of base ∪ {extra}; a finite additive closure containing 0
// is a subgroup, and scalars act as iterated addition here.
inline void close_into(const FiniteModule& M, std::vector<bool>& mask, std::vector<Index>& members,
                       std::vector<Index> fresh) {
    while (!fresh.empty()) {
        Index x = fresh.back();
        fresh.pop_back();
        std::size_t snapshot = members.size();
        for (std::size_t i = 0; i < snapshot; ++i) {
            Index s = M.add(members[i], x);
            if (!mask[s]) {
                mask[s] = true;
                members.push_back(s);
                fresh.push_back(s);
            }
        }
    }
    std::sort(members.begin(), members.end());
}

}  // namespace detail

// A submodule: generator list plus the fully enumerated element set, stored as
// a bitmask over the parent module's element indices.
class Submodule {
  public:
    static Submodule span(ModulePtr M, const std::vector<Index>& gens) {
        for (Index g : gens)
            if (g >= M->size()) throw std::invalid_argument("span: element outside module");
        std::vector<bool> mask(M->size(), false);
        std::vector<Index> members{M->zero()};
        mask[M->zero()] = true;
        std::vector<Index> fresh;
        for (Index g : gens)
            if (!mask[g]) {
                mask[g] = true;
                members.push_back(g);
                fresh.push_back(g);
            }
        detail::close_into(*M, mask, members, std::move(fresh));
        Submodule N(std::move(M), std::move(mask), std::move(members));
        N.gens_ = N.minimize_generators(gens);
        return N;
    }

    // From an element set already closed under addition.
    static Submodule from_mask(ModulePtr M, std::vector<bool> mask) {
        std::vector<Index> members;
        for (Index i = 0; i < M->size(); ++i)
            if (mask[i]) members.push_back(i);
        Submodule N(std::move(M), std::move(mask), std::move(members));
        N.gens_ = N.greedy_generators();
        return N;
    }

    static Submodule zero(ModulePtr M) { return span(std::move(M), {}); }
    static Submodule whole(ModulePtr M) {
        std::vector<bool> mask(M->size(), true);
        return from_mask(std::move(M), std::move(mask));
    }

    const FiniteModule& mod() const { return *mod_; }
    const ModulePtr& mod_ptr() const { return mod_; }
    bool contains(Index a) const { return mask_[a]; }
    std::size_t size() const { return elems_.size(); }
    bool is_proper() const { return elems_.size() < mod_->size(); }
    bool is_zero() const { return elems_.size() == 1; }
    const std::vector<Index>& elements() const { return elems_; }
    const std::vector<Index>& generators() const { return gens_; }
    const std::vector<bool>& mask() const { return mask_; }

    bool same_module(const Submodule& o) const { return mod_ == o.mod_; }
    bool equals(const Submodule& o) const { return same_module(o) && mask_ == o.mask_; }
    bool subset_of(const Submodule& o) const {
        if (!same_module(o)) throw std::invalid_argument("subset_of: module mismatch");
        for (Index e : elems_)
            if (!o.mask_[e]) return false;
        return true;
    }

    // "4" or "2,0;0,1"; empty for the zero submodule.
    std::string gens_label() const {
        std::string s;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i) s += ';';
            s += mod_->label(gens_[i]);
        }
        return s;
    }

  private:
    Submodule(ModulePtr M, std::vector<bool> mask, std::vector<Index> elems)
        : mod_(std::move(M)), mask_(std::move(mask)), elems_(std::move(elems)) {}

    std::vector<Index> minimize_generators(std::vector<Index> gens) const {
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        for (std::size_t i = gens.size(); i-- > 0;) {
            std::vector<Index> rest;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) rest.push_back(gens[j]);
            if (spans_same(rest)) gens = std::move(rest);
        }
        return gens;
    }

    std::vector<Index> greedy_generators() const {
        std::vector<Index> gens;
        std::vector<bool> mask(mod_->size(), false);
        std::vector<Index> members{mod_->zero()};
        mask[mod_->zero()] = true;
        for (Index e : elems_) {
            if (mask[e]) continue;
            gens.push_back(e);
            mask[e] = true;
            members.push_back(e);
            detail::close_into(*mod_, mask, members, {e});
            if (members.size() == elems_.size()) break;
        }
        return gens;
    }

    bool spans_same(const std::vector<Index>& gens) const {
        std::vector<bool> mask(mod_->size(), false);
        std::vector<Index> members{mod_->zero()};
        mask[mod_->zero()] = true;
        std::vector<Index> fresh;
        for (Index g : gens)
            if (!mask[g]) {
                mask[g] = true;
                members.push_back(g);
                fresh.push_back(g);
            }
        detail::close_into(*mod_, mask, members, std::move(fresh));
        return members.size() == elems_.size() && mask == mask_;
    }

    ModulePtr mod_;
    std::vector<bool> mask_;
    std::vector<Index> elems_;
    std::vector<Index> gens_;
};

inline std::vector<Index> FiniteModule::greedy_generators() const {
    std::vector<Index> gens;
    std::vector<bool> mask(size_, false);
    std::vector<Index> members{0};
    mask[0] = true;
    for (Index e = 0; e < size_; ++e) {
        if (mask[e]) continue;
        gens.push_back(e);
        mask[e] = true;
        members.push_back(e);
        detail::close_into(*this, mask, members, {e});
        if (members.size() == size_) break;
    }
    return gens;
}

inline Submodule intersect(const Submodule& N, const Submodule& K) {
    if (!N.same_module(K)) throw std::invalid_argument("intersect: module mismatch");
    std::vector<bool> mask(N.mod().size(), false);
    for (Index e : N.elements())
        if (K.contains(e)) mask[e] = true;
    return Submodule::from_mask(N.mod_ptr(), std::move(mask));
}

inline Submodule sum(const Submodule& N, const Submodule& K) {
    if (!N.same_module(K)) throw std::invalid_argument("sum: module mismatch");
    std::vector<Index> gens = N.generators();
    gens.insert(gens.end(), K.generators().begin(), K.generators().end());
    return Submodule::span(N.mod_ptr(), gens);
}

// {r in R : r·M ⊆ N}, computed on a generating set of M.
inline RingIdeal residual_ring(const Submodule& N) {
    const FiniteModule& M = N.mod();
    long long g = 0;
    for (long long r = 0; r < M.ring().modulus; ++r) {
        bool in = true;
        for (Index gen : M.generators())
            if (!N.contains(M.scalar(r, gen))) {
                in = false;
                break;
            }
        if (in && r != 0) g = std::gcd(g, r);
    }
    return {M.ring(), g};
}

// {r in R : r·x in N}
inline RingIdeal residual_element(const Submodule& N, Index x) {
    const FiniteModule& M = N.mod();
    long long g = 0;
    for (long long r = 1; r < M.ring().modulus; ++r)
        if (N.contains(M.scalar(r, x))) g = std::gcd(g, r);
    return {M.ring(), g};
}

// (N :_M I) = {x in M : I·x ⊆ N}; the generator of I suffices.
inline Submodule residual_module(const Submodule& N, const RingIdeal& I) {
    const FiniteModule& M = N.mod();
    if (I.ring != M.ring()) throw std::invalid_argument("residual_module: ring mismatch");
    std::vector<bool> mask(M.size(), false);
    for (Index x = 0; x < M.size(); ++x)
        if (N.contains(M.scalar(I.gen, x))) mask[x] = true;
    return Submodule::from_mask(N.mod_ptr(), std::move(mask));
}

// All submodules, breadth-first lattice growth, deduplicated by element set,
// sorted by (size, elements). Includes {0} and M.
inline std::vector<Submodule> enumerate_submodules(const ModulePtr& M, std::size_t cap = 4096) {
    if (M->size() > cap)
        throw cap_exceeded("enumerate_submodules: module " + (M->origin().empty() ? "" : M->origin() + " ") +
                           "has " + std::to_string(M->size()) + " elements, cap is " + std::to_string(cap));
    std::map<std::vector<bool>, Submodule> seen;
    std::queue<const Submodule*> frontier;
    Submodule z = Submodule::zero(M);
    auto [it, fresh] = seen.emplace(z.mask(), std::move(z));
    frontier.push(&it->second);
    while (!frontier.empty()) {
        const Submodule* S = frontier.front();
        frontier.pop();
        for (Index e = 0; e < M->size(); ++e) {
            if (S->contains(e)) continue;
            std::vector<Index> gens = S->generators();
            gens.push_back(e);
            Submodule T = Submodule::span(M, gens);
            auto [jt, inserted] = seen.emplace(T.mask(), std::move(T));
            if (inserted) frontier.push(&jt->second);
        }
    }
    std::vector<Submodule> out;
    out.reserve(seen.size());
    for (auto& [mask, sub] : seen) out.push_back(std::move(sub));
    std::sort(out.begin(), out.end(), [](const Submodule& a, const Submodule& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.elements() < b.elements();
    });
    return out;
}

inline bool is_maximal_submodule(const Submodule& N, const std::vector<Submodule>& lattice) {
    if (!N.is_proper()) throw std::invalid_argument("is_maximal_submodule: N must be proper");
    for (const Submodule& L : lattice)
        if (L.is_proper() && L.size() > N.size() && N.subset_of(L) && !L.equals(N)) return false;
    return true;
}

inline bool is_maximal_submodule(const Submodule& N, std::size_t cap = 4096) {
    return is_maximal_submodule(N, enumerate_submodules(N.mod_ptr(), cap));
}

struct PrimeVerdict {
    bool holds = true;
    std::optional<std::pair<long long, Index>> witness;  // (r, x)
    explicit operator bool() const { return holds; }
};

// r·x in N implies x in N or r in (N:M).
inline PrimeVerdict is_prime_submodule(const Submodule& N) {
    if (!N.is_proper()) throw std::invalid_argument("is_prime_submodule: N must be proper");
    const FiniteModule& M = N.mod();
    RingIdeal res = residual_ring(N);
    for (long long r = 0; r < M.ring().modulus; ++r) {
        if (res.contains(r)) continue;
        for (Index x = 0; x < M.size(); ++x)
            if (N.contains(M.scalar(r, x)) && !N.contains(x)) return {false, {{r, x}}};
    }
    return {};
}

// A module homomorphism realized as a total index map; additivity and scalar
// compatibility are checked exhaustively at construction.
struct ModuleHom {
    ModulePtr src, dst;
    std::vector<Index> map;

    Index operator()(Index a) const { return map[a]; }
};

inline ModuleHom make_hom(ModulePtr src, ModulePtr dst, const std::vector<std::pair<Index, Index>>& gen_images) {
    if (src->ring() != dst->ring()) throw std::invalid_argument("make_hom: ring mismatch");
    constexpr Index UNSET = static_cast<Index>(-1);
    std::vector<Index> map(src->size(), UNSET);
    map[src->zero()] = dst->zero();
    std::vector<Index> work{src->zero()};
    while (!work.empty()) {
        Index s = work.back();
        work.pop_back();
        for (const auto& [g, ig] : gen_images) {
            if (g >= src->size() || ig >= dst->size()) throw std::invalid_argument("make_hom: element out of range");
            Index t = src->add(s, g);
            Index v = dst->add(map[s], ig);
            if (map[t] == UNSET) {
                map[t] = v;
                work.push_back(t);
            } else if (map[t] != v) {
                throw std::invalid_argument("make_hom: images do not give a well-defined map");
            }
        }
    }
    for (Index a = 0; a < src->size(); ++a)
        if (map[a] == UNSET) throw std::invalid_argument("make_hom: generators do not span the source");
    for (Index a = 0; a < src->size(); ++a)
        for (Index b = 0; b < src->size(); ++b)
            if (map[src->add(a, b)] != dst->add(map[a], map[b]))
                throw std::invalid_argument("make_hom: map is not additive");
    for (long long r = 0; r < src->ring().modulus; ++r)
        for (Index a = 0; a < src->size(); ++a)
            if (map[src->scalar(r, a)] != dst->scalar(r, map[a]))
                throw std::invalid_argument("make_hom: map is not scalar-compatible");
    return {std::move(src), std::move(dst), std::move(map)};
}

inline ModuleHom identity_hom(ModulePtr M) {
    std::vector<Index> map(M->size());
    for (Index i = 0; i < M->size(); ++i) map[i] = i;
    return {M, M, std::move(map)};
}

}  // namespace knsub
