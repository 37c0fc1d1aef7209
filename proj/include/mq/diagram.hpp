#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mq/braid.hpp"
#include "mq/core.hpp"

// Colored link diagrams as arcs + signed crossings. Arc identifiers are
// opaque strings; component traversal order gives the canonical arc
// numbering used by serialization and by solvers.

namespace mq {

struct Crossing {
    int sign = 1;           // +1 or -1
    std::string over;       // the over arc
    std::string underIn;    // incoming under arc
    std::string underOut;   // outgoing under arc

    bool operator==(const Crossing&) const = default;
};

struct DiagramComponent {
    std::string id;
    int color = 1;
    std::vector<std::string> arcs;  // cyclic order; underOut follows underIn

    bool operator==(const DiagramComponent&) const = default;
};

struct ColoredDiagram {
    std::vector<DiagramComponent> components;
    std::vector<Crossing> crossings;

    // All arc ids in component traversal order.
    std::vector<std::string> arcOrder() const;
    int colorOfArc(const std::string& arc) const;

    // Checks the type invariants; throws StructuralError on failure.
    void check() const;
};

// "diag v1" text format.
ColoredDiagram parseDiagram(std::istream& in);
ColoredDiagram parseDiagramFile(const std::string& path);
std::string serializeDiagram(const ColoredDiagram& d);

// PD code ingestion. Terms X[a,b,c,d] list the four edges counterclockwise
// starting from the incoming under edge; edges are numbered consecutively
// along each component, so the over direction and the crossing sign are
// recovered from the numbering. componentColors are assigned in order of
// each component's smallest edge label.
ColoredDiagram fromPDCode(const std::string& pdText, const std::vector<int>& componentColors);

// PD code of the closure of a braid, edges numbered consecutively along
// each component (components ordered by smallest top strand). If
// componentColors is non-null it receives the colors in that order, so
// fromPDCode(pdCodeOfClosure(b, &cc), cc) rebuilds the closure diagram.
std::string pdCodeOfClosure(const ClosableBraid& b, std::vector<int>* componentColors = nullptr);

// Standard closure diagram of a closable braid. topArcs receives, per
// strand position, the arc crossing the closure line (the braid-action
// variable for that position).
ColoredDiagram closureDiagram(const ClosableBraid& b, std::vector<std::string>* topArcs = nullptr);

enum class Move { R1Plus, R1Minus, R1Undo, R2, R2Undo, R3 };

struct MoveSite {
    std::string arc;       // R1+/R1-: arc to kink; R2: arc pushed under
    std::string overArc;   // R2: arc pushed over
    int crossing = -1;     // R1Undo/R2Undo: kink / first crossing of the pair
    int crossingQ = -1;    // R3: the three crossings of the triangle
    int crossingR = -1;
};

ColoredDiagram applyReidemeister(const ColoredDiagram& d, Move move, const MoveSite& site);

// Legal sites for the undo moves and for the implemented R3 pattern.
std::vector<MoveSite> findR1UndoSites(const ColoredDiagram& d);
std::vector<MoveSite> findR2UndoSites(const ColoredDiagram& d);
std::vector<MoveSite> findR3Sites(const ColoredDiagram& d);

}  // namespace mq
