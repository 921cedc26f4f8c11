#pragma once

#include "hbg/catalog.hpp"

#include <stdexcept>
#include <string>

namespace hbg
{
    class RenderError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Circular layout: vertices on a circle in label order, cycle edges as
    /// segments between neighbours, chords as straight segments. Chords whose
    /// even endpoint sits in the same offset position share a colour.
    struct RenderStyle
    {
        double radius = 300.0;
        double margin = 24.0;
        double vertex_radius = 4.0;
        double cycle_stroke = 1.5;
        double chord_stroke = 1.0;
        bool colour_chord_classes = true;
    };

    /// SVG 1.1 document for a witness. Throws RenderError unless the entry
    /// verifies.
    auto render(const CatalogEntry & entry, const RenderStyle & style = {}) -> std::string;
}
