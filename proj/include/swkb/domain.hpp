#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "swkb/errors.hpp"

namespace swkb {

/// Interval of the real line on which a superpotential lives. Endpoints may
/// be infinite; a finite open endpoint marks a potential singularity, and
/// evaluation exactly there is an error.
struct DomainInterval {
    double left = -std::numeric_limits<double>::infinity();
    double right = std::numeric_limits<double>::infinity();
    bool left_open = true;
    bool right_open = true;

    static DomainInterval real_line() { return {}; }

    static DomainInterval open(double l, double r) {
        if (!(l < r))
            throw ValidityError("domain interval requires left < right");
        DomainInterval d;
        d.left = l;
        d.right = r;
        return d;
    }

    bool is_interior(double x) const {
        if (!std::isfinite(x)) return false;
        const bool above = left_open ? x > left : x >= left;
        const bool below = right_open ? x < right : x <= right;
        return above && below;
    }

    void require_interior(double x) const {
        if (!is_interior(x))
            throw DomainError("x = " + std::to_string(x) + " is outside the domain (" +
                              std::to_string(left) + ", " + std::to_string(right) + ")");
    }
};

/// Shape-invariance class tags from the three-class taxonomy of conventional
/// superpotentials, plus NonConventional for anything outside it.
enum class SIClass { IA, IB, IIA, IIB, IIIa, IIIb, NonConventional };

inline std::string to_string(SIClass c) {
    switch (c) {
        case SIClass::IA: return "IA";
        case SIClass::IB: return "IB";
        case SIClass::IIA: return "IIA";
        case SIClass::IIB: return "IIB";
        case SIClass::IIIa: return "IIIa";
        case SIClass::IIIb: return "IIIb";
        case SIClass::NonConventional: return "NonConventional";
    }
    return "?";
}

inline SIClass si_class_from_string(const std::string& s) {
    if (s == "IA") return SIClass::IA;
    if (s == "IB") return SIClass::IB;
    if (s == "IIA") return SIClass::IIA;
    if (s == "IIB") return SIClass::IIB;
    if (s == "IIIa") return SIClass::IIIa;
    if (s == "IIIb") return SIClass::IIIb;
    if (s == "NonConventional") return SIClass::NonConventional;
    throw UnknownParameter("unknown shape-invariance class tag: " + s);
}

}  // namespace swkb
