#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wsum/diagram.hpp"

namespace wsum {

struct MoveError : DiagramError {
    explicit MoveError(const std::string& m) : DiagramError(m) {}
};

enum class MoveKind { R1Insert, R1Remove, R2Insert, R2Remove, R3 };

struct Move {
    MoveKind kind = MoveKind::R1Insert;
    // R1Insert: kink on `edge`, loop disc in quadrant `disc` (OI or UI), crossing `sign`
    EdgeId edge = -1;
    Quadrant disc = Quadrant::UI;
    int sign = +1;
    // R1Remove: the kink crossing
    CrossingId crossing = -1;
    // R2Insert: push the edge at face-walk position occ_a across face `face`
    // over (or under) the edge at position occ_b
    FaceId face = -1;
    int occ_a = -1, occ_b = -1;
    bool over = true;
    // R2Remove / R3: `face` is the vanishing bigon / triangle

    std::string str() const;
};

// Apply a move; throws MoveError when the site does not match the move pattern
// or the move would destroy the ambient structure (star in a vanishing region).
Diagram apply_move(const Diagram& d, const Move& m);

// All candidate moves at pattern-matching sites (cheap checks only; apply_move
// may still reject a candidate).
std::vector<Move> candidate_moves(const Diagram& d, int max_crossings);

// Reproducible seeded sequence of applicable moves; skips inapplicable
// candidates. Returns the moves applied and the final diagram.
struct MoveSequence {
    std::vector<Move> moves;
    std::vector<Diagram> steps;  // diagram after each move
};
MoveSequence random_move_sequence(const Diagram& d, int count, std::uint64_t seed,
                                  int max_crossings = 12);

}  // namespace wsum
