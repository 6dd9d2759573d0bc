#include "crane/pareto_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "crane/errors.hpp"

namespace crane {

std::vector<Objectives> objectives_of(const ParetoSet& set) {
    std::vector<Objectives> out;
    out.reserve(set.members.size());
    for (const auto& m : set.members) out.push_back(m.objectives);
    return out;
}

double spacing(const std::vector<Objectives>& front) {
    const std::size_t n = front.size();
    if (n < 2) throw UndefinedMetric("spacing needs at least two points");
    std::vector<double> d(n, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                d[i] = std::min(d[i], std::abs(front[i].f1 - front[j].f1) + std::abs(front[i].f2 - front[j].f2));
    double mean = 0.0;
    for (double v : d) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : d) ss += (mean - v) * (mean - v);
    return std::sqrt(ss / (n - 1));
}

double spacing(const ParetoSet& set) { return spacing(objectives_of(set)); }

Normalization joint_normalization(const std::vector<std::vector<Objectives>>& fronts) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    Normalization n{{inf, inf}, {-inf, -inf}};
    for (const auto& f : fronts)
        for (const auto& p : f) {
            n.ideal.f1 = std::min(n.ideal.f1, p.f1);
            n.ideal.f2 = std::min(n.ideal.f2, p.f2);
            n.nadir.f1 = std::max(n.nadir.f1, p.f1);
            n.nadir.f2 = std::max(n.nadir.f2, p.f2);
        }
    if (n.ideal.f1 == inf) return {{0.0, 0.0}, {1.0, 1.0}};
    return n;
}

Hyperarea hyperarea(const std::vector<Objectives>& front, const Normalization& norm, Objectives ref) {
    auto scale = [](double v, double lo, double hi) { return hi > lo ? (v - lo) / (hi - lo) : 0.0; };
    Hyperarea out;
    std::vector<Objectives> pts;
    for (const auto& p : front) {
        const Objectives q{scale(p.f1, norm.ideal.f1, norm.nadir.f1), scale(p.f2, norm.ideal.f2, norm.nadir.f2)};
        if (q.f1 > ref.f1 || q.f2 > ref.f2)
            ++out.excluded;
        else
            pts.push_back(q);
    }
    std::sort(pts.begin(), pts.end(), [](const Objectives& a, const Objectives& b) {
        return a.f1 != b.f1 ? a.f1 < b.f1 : a.f2 < b.f2;
    });
    double best_f2 = ref.f2;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].f2 >= best_f2) continue;
        // Strip from this point to the next point that lowers f2 further, or to the reference.
        double right = ref.f1;
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[j].f2 < pts[i].f2) {
                right = pts[j].f1;
                break;
            }
        out.value += (right - pts[i].f1) * (ref.f2 - pts[i].f2);
        best_f2 = pts[i].f2;
    }
    return out;
}

FuzzyChoice fuzzy_select(const std::vector<Objectives>& front) {
    if (front.empty()) throw UndefinedMetric("fuzzy selection needs a non-empty front");
    double lo1 = front[0].f1, hi1 = lo1, lo2 = front[0].f2, hi2 = lo2;
    for (const auto& p : front) {
        lo1 = std::min(lo1, p.f1);
        hi1 = std::max(hi1, p.f1);
        lo2 = std::min(lo2, p.f2);
        hi2 = std::max(hi2, p.f2);
    }
    auto mu = [](double v, double lo, double hi) { return hi > lo ? (hi - v) / (hi - lo) : 1.0; };
    FuzzyChoice best{0, -1.0};
    for (std::size_t i = 0; i < front.size(); ++i) {
        const double m = 0.5 * (mu(front[i].f1, lo1, hi1) + mu(front[i].f2, lo2, hi2));
        if (m > best.mu_bar || (m == best.mu_bar && front[i].f1 < front[best.index].f1)) best = {i, m};
    }
    return best;
}

FuzzyChoice fuzzy_select(const ParetoSet& set) { return fuzzy_select(objectives_of(set)); }

}  // namespace crane
