#include "tropfan/fan.hpp"

#include "tropfan/linalg.hpp"

#include <algorithm>
#include <map>

namespace tropfan {

std::strong_ordering StackyCone::operator<=>(const StackyCone& o) const {
    if (auto c = cone <=> o.cone; c != 0) return c;
    return lattice <=> o.lattice;
}

StackyCone with_full_lattice(const Cone& c) { return {c, span_lattice(c.ambient(), c.rays())}; }

StackyCone induced(const StackyCone& parent, const Cone& face) {
    return {face, restrict_to_span(parent.lattice, face.rays())};
}

StackyFan::StackyFan(int ambient, std::vector<StackyCone> cones, bool close_faces) : ambient_(ambient) {
    for (const auto& c : cones)
        if (c.cone.ambient() != ambient || c.lattice.ambient() != ambient)
            throw DimensionError("cone " + to_string(c.cone) + " does not live in Z^" + std::to_string(ambient));
    if (close_faces) {
        std::vector<StackyCone> by_dim = cones;
        std::stable_sort(by_dim.begin(), by_dim.end(),
                         [](const StackyCone& a, const StackyCone& b) { return a.cone.dim() > b.cone.dim(); });
        std::map<Cone, bool> present;
        for (const auto& c : cones) present[c.cone] = true;
        for (const auto& c : by_dim) {
            for (const auto& f : faces(c.cone)) {
                if (present.count(f)) continue;
                present[f] = true;
                cones.push_back(induced(c, f));
            }
        }
        if (cones.empty()) cones.push_back({Cone::zero(ambient), Sublattice::zero(ambient)});
    }
    std::sort(cones.begin(), cones.end());
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
    cones_ = std::move(cones);
}

std::vector<StackyCone> StackyFan::maximal_cones() const {
    std::vector<StackyCone> out;
    for (const auto& c : cones_) {
        bool maximal = true;
        for (const auto& d : cones_) {
            if (d.cone.dim() <= c.cone.dim()) continue;
            if (contains(d.cone, c.cone)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(c);
    }
    return out;
}

const StackyCone* StackyFan::find(const Cone& c) const {
    auto it = std::lower_bound(cones_.begin(), cones_.end(), c,
                               [](const StackyCone& a, const Cone& b) { return a.cone < b; });
    if (it != cones_.end() && it->cone == c) return &*it;
    return nullptr;
}

ValidationReport validate(const StackyFan& fan) {
    ValidationReport rep;
    auto add = [&](std::string kind, std::string msg) { rep.violations.push_back({std::move(kind), std::move(msg)}); };
    const int n = fan.ambient();
    const auto& cs = fan.cones();

    if (!fan.find(Cone::zero(n))) add("missing-zero-cone", "the zero cone is not part of the fan");

    for (std::size_t i = 0; i < cs.size(); ++i) {
        const auto& c = cs[i];
        if (i + 1 < cs.size() && cs[i + 1].cone == c.cone)
            add("duplicate-cone", to_string(c.cone) + " is listed with two different lattices");
        bool in_span = true;
        for (const auto& b : c.lattice.basis())
            for (const auto& e : c.cone.equations())
                if (dot(e, b) != 0) in_span = false;
        if (!in_span) add("lattice-outside-span", "lattice of " + to_string(c.cone) + " leaves the span of the cone");
        if (c.lattice.rank() != c.cone.dim())
            add("lattice-rank", "lattice of " + to_string(c.cone) + " has rank " + std::to_string(c.lattice.rank()) +
                                    " but the cone has dimension " + std::to_string(c.cone.dim()));
        for (const auto& f : faces(c.cone))
            if (!fan.find(f)) add("missing-face", "face " + to_string(f) + " of " + to_string(c.cone) + " is missing");
    }

    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            const auto& a = cs[i];
            const auto& b = cs[j];
            Cone meet = intersect(a.cone, b.cone);
            if (!is_face_of(meet, a.cone) || !is_face_of(meet, b.cone)) {
                add("not-common-face", "intersection " + to_string(meet) + " of " + to_string(a.cone) + " and " +
                                           to_string(b.cone) + " is not a common face");
                continue;
            }
            if (meet == a.cone && a.cone.dim() < b.cone.dim()) {
                Sublattice restricted = restrict_to_span(b.lattice, a.cone.rays());
                if (restricted != a.lattice) {
                    std::string where = a.cone.dim() == 1 ? "ray " + to_string(a.cone.rays()[0]) : to_string(a.cone);
                    add("lattice-incompatible", "on " + where + ": lattice induced from " + to_string(b.cone) +
                                                    " differs from the lattice of the face");
                }
            }
        }
    }
    return rep;
}

bool support_member(const Vec& v, const StackyFan& fan) {
    return std::any_of(fan.cones().begin(), fan.cones().end(), [&](const StackyCone& c) { return contains(c.cone, v); });
}

std::optional<Vec> uncovered_point(const Cone& c, const std::vector<Cone>& pieces) {
    const int d = c.dim();
    if (d == 0) {
        for (const auto& p : pieces)
            if (p.ambient() == c.ambient()) return std::nullopt;
        return zeros(c.ambient());
    }
    std::vector<Cone> relevant;
    for (const auto& p : pieces) {
        Cone q = intersect(c, p);
        if (q.dim() == d) relevant.push_back(q);
    }
    std::vector<Cone> regions{c};
    for (const auto& p : relevant) {
        std::vector<Cone> next;
        for (const auto& u : regions) {
            if (contains(p, u)) continue;
            Cone overlap = intersect(u, p);
            if (overlap.dim() < d) {
                next.push_back(u);
                continue;
            }
            Mat ineq = u.facets();
            for (const auto& h : p.facets()) {
                Mat cur = ineq;
                cur.push_back(neg(h));
                Cone piece = Cone::from_inequalities(c.ambient(), cur, u.equations());
                if (piece.dim() == d) next.push_back(piece);
                ineq.push_back(h);
            }
        }
        regions = std::move(next);
        if (regions.empty()) return std::nullopt;
    }
    return interior_point(regions.front());
}

std::vector<Cone> support_cones(const StackyFan& fan) {
    std::vector<Cone> out;
    for (const auto& c : fan.maximal_cones()) out.push_back(c.cone);
    return out;
}

bool support_contains_cone(const Cone& c, const StackyFan& fan) {
    return !uncovered_point(c, support_cones(fan)).has_value();
}

bool supports_equal(const StackyFan& a, const StackyFan& b, Vec* witness) {
    auto pa = support_cones(a);
    auto pb = support_cones(b);
    for (const auto& c : pa)
        if (auto w = uncovered_point(c, pb)) {
            if (witness) *witness = *w;
            return false;
        }
    for (const auto& c : pb)
        if (auto w = uncovered_point(c, pa)) {
            if (witness) *witness = *w;
            return false;
        }
    return true;
}

bool is_complete(const StackyFan& fan) {
    const int n = fan.ambient();
    if (n == 0) return true;
    auto maxi = fan.maximal_cones();
    std::vector<Cone> top;
    for (const auto& c : maxi) {
        if (c.cone.dim() != n) return false;
        top.push_back(c.cone);
    }
    if (top.empty()) return false;
    if (n == 1) return top.size() == 2;
    for (const auto& c : fan.cones()) {
        if (c.cone.dim() != n - 1) continue;
        int count = 0;
        for (const auto& t : top)
            if (contains(t, c.cone)) ++count;
        if (count != 2) return false;
    }
    return true;
}

namespace {

/** Every cone of `fine` sits in a cone of `coarse`, with the lattice induced from every such cone. */
bool lattices_induced(const StackyFan& fine, const StackyFan& coarse) {
    for (const auto& t : fine.cones()) {
        bool found = false;
        for (const auto& s : coarse.cones()) {
            if (!contains(s.cone, t.cone)) continue;
            found = true;
            if (restrict_to_span(s.lattice, t.cone.rays()) != t.lattice) return false;
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace

bool is_subdivision(const StackyFan& fine, const StackyFan& coarse) {
    if (fine.ambient() != coarse.ambient()) throw DimensionError("fans live in different ambient ranks");
    return supports_equal(fine, coarse) && lattices_induced(fine, coarse);
}

bool is_root_construction(const StackyFan& fine, const StackyFan& coarse) {
    if (fine.ambient() != coarse.ambient()) throw DimensionError("fans live in different ambient ranks");
    if (fine.cones().size() != coarse.cones().size()) return false;
    for (std::size_t i = 0; i < fine.cones().size(); ++i) {
        const auto& f = fine.cones()[i];
        const auto& c = coarse.cones()[i];
        if (f.cone != c.cone) return false;
        if (!c.lattice.contains(f.lattice) || f.lattice.rank() != c.lattice.rank()) return false;
    }
    return true;
}

ValidationReport validate_morphism(const FanMorphism& m) {
    ValidationReport rep;
    if (m.source.ambient() != m.target.ambient()) {
        rep.violations.push_back({"ambient-mismatch", "source and target live in different ambient ranks"});
        return rep;
    }
    for (const auto& t : m.source.cones()) {
        bool ok = false;
        for (const auto& s : m.target.cones())
            if (contains(s.cone, t.cone) && restrict_to_span(s.lattice, t.cone.rays()).contains(t.lattice)) {
                ok = true;
                break;
            }
        if (!ok)
            rep.violations.push_back({"not-a-morphism", to_string(t.cone) + " with its lattice maps into no target cone"});
    }
    return rep;
}

bool is_representable(const FanMorphism& m) {
    if (!validate_morphism(m).ok()) throw InvalidInputError("source does not map into target");
    return lattices_induced(m.source, m.target);
}

bool is_proper(const FanMorphism& m) {
    if (!validate_morphism(m).ok()) throw InvalidInputError("source does not map into target");
    for (const auto& s : m.target.maximal_cones()) {
        std::vector<Cone> inside;
        for (const auto& t : m.source.cones())
            if (contains(s.cone, t.cone)) inside.push_back(t.cone);
        if (uncovered_point(s.cone, inside)) return false;
    }
    return true;
}

StackyFan common_refinement(const StackyFan& a, const StackyFan& b) {
    if (a.ambient() != b.ambient()) throw DimensionError("fans live in different ambient ranks");
    Vec w;
    if (!supports_equal(a, b, &w))
        throw SupportMismatchError("supports differ; " + to_string(w) + " lies in only one of them");
    std::map<Cone, Sublattice> cells;
    for (const auto& x : a.cones())
        for (const auto& y : b.cones()) {
            Cone meet = intersect(x.cone, y.cone);
            if (cells.count(meet)) continue;
            Sublattice l = intersect(restrict_to_span(x.lattice, meet.rays()), restrict_to_span(y.lattice, meet.rays()));
            cells.emplace(meet, l);
        }
    std::vector<StackyCone> out;
    for (auto& [c, l] : cells) out.push_back({c, l});
    return StackyFan(a.ambient(), out, false);
}

bool s_member(const Vec& v, const StackyFan& fan) {
    for (const auto& c : fan.cones())
        if (locate(c.cone, v) == Location::RelativeInterior && c.lattice.contains(v)) return true;
    return false;
}

}  // namespace tropfan
