#include "mutkit/svg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mutkit {

namespace {

IntVec project2(const IntMat& proj, const IntVec& p) {
    return {dot(proj[0], p), dot(proj[1], p)};
}

std::string coords_attr(const IntVec& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += p[i].get_str();
    }
    return out;
}

// 2D lattice hull of integer points, CCW cycle; degenerate inputs give the
// sorted point list back.
std::vector<IntVec> hull_cycle(std::vector<IntVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    auto cross = [](const IntVec& o, const IntVec& a, const IntVec& b) -> Int {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<IntVec> h;
    for (const IntVec& p : pts) {
        while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
        h.push_back(p);
    }
    std::size_t lower = h.size() + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (h.size() >= lower && cross(h[h.size() - 2], h.back(), *it) <= 0) h.pop_back();
        h.push_back(*it);
    }
    h.pop_back();
    if (h.size() < 3) {  // collinear input
        return {pts.front(), pts.back()};
    }
    return h;
}

}  // namespace

IntMat named_projection(const std::string& plane) {
    if (plane == "xy") return {{1, 0, 0}, {0, 1, 0}};
    if (plane == "xz") return {{1, 0, 0}, {0, 0, 1}};
    if (plane == "yz") return {{0, 1, 0}, {0, 0, 1}};
    throw Error(errc::invalid_argument, "unknown projection plane: " + plane);
}

std::string render_svg(const LatticePolytope& p, const std::optional<LaurentPoly>& potential,
                       const RenderConfig& config) {
    if (config.scale < 1) throw Error(errc::invalid_argument, "scale must be >= 1");
    if (p.is_empty()) throw Error(errc::empty_input, "cannot render the empty polytope");
    const int rank = p.rank();
    IntMat proj;
    if (rank == 2) {
        proj = {{1, 0}, {0, 1}};
        if (config.projection) proj = *config.projection;
    } else if (rank == 3) {
        if (!config.projection)
            throw Error(errc::unsupported_rank, "rank-3 rendering needs a projection");
        proj = *config.projection;
    } else {
        throw Error(errc::unsupported_rank, "rendering supports rank 2 and rank 3 only");
    }
    for (const IntVec& row : proj)
        if (static_cast<int>(row.size()) != rank)
            throw Error(errc::invalid_argument, "projection width does not match rank");
    if (potential && potential->rank() != rank)
        throw Error(errc::rank_mismatch, "potential rank does not match polytope rank");

    // markers keep their original lattice coordinates in data-lattice
    std::vector<std::pair<IntVec, IntVec>> vert_markers;  // (projected, original)
    for (const IntVec& v : p.vertices()) vert_markers.emplace_back(project2(proj, v), v);
    std::vector<std::pair<IntVec, IntVec>> supp_markers;
    if (potential) {
        std::set<std::pair<IntVec, IntVec>> dedup;
        for (const auto& [e, c] : potential->terms()) dedup.emplace(project2(proj, e), e);
        supp_markers.assign(dedup.begin(), dedup.end());
    }

    Int minx = vert_markers[0].first[0], maxx = minx;
    Int miny = vert_markers[0].first[1], maxy = miny;
    auto widen = [&](const IntVec& q) {
        minx = std::min(minx, q[0]);
        maxx = std::max(maxx, q[0]);
        miny = std::min(miny, q[1]);
        maxy = std::max(maxy, q[1]);
    };
    for (const auto& [q, orig] : vert_markers) widen(q);
    for (const auto& [q, orig] : supp_markers) widen(q);
    minx -= 1;
    miny -= 1;
    maxx += 1;
    maxy += 1;

    const Int s(config.scale);
    auto px = [&](const Int& x) { return Int((x - minx) * s).get_str(); };
    auto py = [&](const Int& y) { return Int((maxy - y) * s).get_str(); };
    Int width = (maxx - minx) * s;
    Int height = (maxy - miny) * s;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width.get_str()
        << "\" height=\"" << height.get_str() << "\" viewBox=\"0 0 " << width.get_str() << " "
        << height.get_str() << "\">\n";
    svg << "<rect width=\"" << width.get_str() << "\" height=\"" << height.get_str()
        << "\" fill=\"#ffffff\"/>\n";
    if (config.grid) {
        svg << "<g class=\"grid\" fill=\"#c8c8c8\">\n";
        for (Int y = maxy; y >= miny; y -= 1)
            for (Int x = minx; x <= maxx; x += 1)
                svg << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"2\"/>\n";
        svg << "</g>\n";
    }
    std::vector<IntVec> cycle;
    {
        std::vector<IntVec> pts;
        for (const auto& [q, orig] : vert_markers) pts.push_back(q);
        cycle = hull_cycle(pts);
    }
    if (cycle.size() >= 3) {
        svg << "<polygon class=\"hull\" points=\"";
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i) svg << " ";
            svg << px(cycle[i][0]) << "," << py(cycle[i][1]);
        }
        svg << "\" fill=\"#f4c26b\" fill-opacity=\"0.5\" stroke=\"#8a5a00\" stroke-width=\"2\"/>\n";
    } else if (cycle.size() == 2) {
        svg << "<line class=\"hull\" x1=\"" << px(cycle[0][0]) << "\" y1=\"" << py(cycle[0][1])
            << "\" x2=\"" << px(cycle[1][0]) << "\" y2=\"" << py(cycle[1][1])
            << "\" stroke=\"#8a5a00\" stroke-width=\"2\"/>\n";
    }
    svg << "<g class=\"vertices\" fill=\"#1f4e9c\">\n";
    for (const auto& [q, orig] : vert_markers)
        svg << "<circle class=\"vertex\" data-lattice=\"" << coords_attr(orig) << "\" cx=\""
            << px(q[0]) << "\" cy=\"" << py(q[1]) << "\" r=\"5\"/>\n";
    svg << "</g>\n";
    if (!supp_markers.empty()) {
        svg << "<g class=\"supports\" fill=\"#c42f2f\">\n";
        for (const auto& [q, orig] : supp_markers)
            svg << "<circle class=\"support\" data-lattice=\"" << coords_attr(orig)
                << "\" cx=\"" << px(q[0]) << "\" cy=\"" << py(q[1]) << "\" r=\"3\"/>\n";
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace mutkit
