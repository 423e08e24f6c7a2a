#include "f2rp/newton.hpp"

namespace f2rp {

NewtonPolygon newton_polygon(const IntPoly& f, long q) {
    if (f.is_zero()) throw std::domain_error("newton_polygon: zero polynomial");
    require_prime(q, "newton_polygon");
    NewtonPolygon np;
    for (int i = 0; i <= f.degree(); ++i) {
        Val v = val_q(f.coeff(i), q);
        if (!v.is_infinity()) np.points.push_back({i, v.value()});
    }
    if (np.points.size() < 2) {
        np.hull = np.points;
        return np;  // constants and monomials carry no segment
    }
    // Monotone chain, keeping only lower-convex turns.
    for (const auto& p : np.points) {
        while (np.hull.size() >= 2) {
            const auto& a = np.hull[np.hull.size() - 2];
            const auto& b = np.hull[np.hull.size() - 1];
            // keep b only if a->b->p turns strictly left (b lies below chord a-p)
            Rat cross = Rat(b.i - a.i) * (p.v - a.v) - (b.v - a.v) * Rat(p.i - a.i);
            if (cross > 0) break;
            np.hull.pop_back();
        }
        np.hull.push_back(p);
    }
    for (size_t k = 1; k < np.hull.size(); ++k) {
        Rat slope = (np.hull[k].v - np.hull[k - 1].v) / Rat(np.hull[k].i - np.hull[k - 1].i);
        np.segments.push_back({slope, np.hull[k].i - np.hull[k - 1].i});
    }
    return np;
}

}  // namespace f2rp
