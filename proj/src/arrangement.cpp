#include "tropfan/arrangement.hpp"

#include <algorithm>
#include <set>

namespace tropfan {

std::vector<Cone> orthants(int n) {
    std::vector<Cone> out;
    for (long mask = 0; mask < (1L << n); ++mask) {
        Mat rays;
        for (int i = 0; i < n; ++i) rays.push_back(scale((mask >> i) & 1 ? Int(-1) : Int(1), unit(n, i)));
        out.push_back(Cone::from_rays(n, rays));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cone> chambers(const std::vector<Cone>& domain, const Mat& hyperplanes) {
    std::vector<Cone> out;
    for (const auto& d : domain) {
        std::vector<Cone> cur{d};
        for (const auto& h : hyperplanes) {
            std::vector<Cone> next;
            for (const auto& c : cur) {
                bool pos = false, neg_side = false;
                for (const auto& r : c.rays()) {
                    int s = sgn(dot(h, r));
                    pos |= s > 0;
                    neg_side |= s < 0;
                }
                if (!(pos && neg_side)) {
                    next.push_back(c);
                    continue;
                }
                for (const Vec& side : {h, neg(h)}) {
                    Mat ineq = c.facets();
                    ineq.push_back(side);
                    next.push_back(Cone::from_inequalities(c.ambient(), ineq, c.equations()));
                }
            }
            cur = std::move(next);
        }
        out.insert(out.end(), cur.begin(), cur.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Mat essential_hyperplanes(const std::vector<Cone>& chambers, const GermLabel& label) {
    std::set<Vec> found;
    for (const auto& c : chambers) {
        for (const auto& h : c.facets()) {
            Vec key = normalized_direction(h);
            if (found.count(key)) continue;
            Vec p = zeros(c.ambient());
            for (const auto& r : c.rays())
                if (dot(h, r) == 0) p = add(p, r);
            if (label(p, h) != label(p, neg(h))) found.insert(key);
        }
    }
    return Mat(found.begin(), found.end());
}

std::vector<StackyCone> label_chambers(const std::vector<Cone>& chambers, const GermLabel& label) {
    std::vector<StackyCone> out;
    for (const auto& c : chambers) {
        auto l = label(interior_point(c), zeros(c.ambient()));
        if (l) out.push_back({c, *l});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Mat facet_hyperplanes(const std::vector<Cone>& cones) {
    std::set<Vec> hs;
    for (const auto& c : cones)
        for (const auto& h : c.facets()) hs.insert(normalized_direction(h));
    return Mat(hs.begin(), hs.end());
}

}  // namespace tropfan
