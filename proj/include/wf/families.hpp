#pragma once

#include <string>

#include "wf/webgraph.hpp"

namespace wf {

// Builders for the example webs. All outputs pass WebGraph::validate().

WebGraph make_unknot();          // one circle edge, planar
WebGraph make_unlink(int n);     // n circle edges, planar
WebGraph make_theta();           // 2 vertices, 3 parallel edges
WebGraph make_theta_plus_unknot();  // theta ⊔ one circle
WebGraph make_tetrahedron();     // K4
WebGraph make_prism(int n);      // two n-cycles joined by n rungs; n=1 is
                                 // the handcuff graph (two loops + bridge)
WebGraph make_handcuff();        // prism(1), planar embedding
WebGraph make_twisted_handcuff();  // same graph, twisted embedding tag
WebGraph make_hopf_handcuff();     // same graph, Hopf-linked embedding tag
WebGraph make_petersen();        // Petersen graph, 5-strand closure tags

}  // namespace wf
