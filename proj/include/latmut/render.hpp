#pragma once

#include "latmut/classify.hpp"

#include <map>
#include <string>
#include <vector>

namespace latmut {

struct Panel {
    Polygon polygon;
    std::map<LatticeVec, std::string> labels;
    std::string caption;
};

struct RenderOptions {
    bool labels = true;
    bool origin = false;  // mark (0,0) in red
    int unit = 40;        // pixels per lattice step
};

Panel panel_of(const LaurentPoly& f, const std::string& caption = "");
Panel panel_of(const Polygon& P, const std::string& caption = "");
// Start polynomial followed by every intermediate result.
std::vector<Panel> panels_of(const MutationTrace& t);

std::string render_svg(const std::vector<Panel>& panels, const RenderOptions& opt = {});
std::string render_tikz(const std::vector<Panel>& panels, const RenderOptions& opt = {});

}  // namespace latmut
