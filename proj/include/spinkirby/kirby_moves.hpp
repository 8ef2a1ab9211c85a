#pragma once

// Spin Kirby moves acting on the linking matrix and characteristic vector.
//
//   blow_up      add an unlinked unknot with framing ±1; it joins C
//   blow_down    remove an unlinked ±1-framed unknot (necessarily in C)
//   slide(i, j)  L_i' = L_i + L_j; b' = Pᵀ b P and c'_j = c_j xor c_i
//
// Moves return new values and never mutate their input.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spinkirby/presentation.hpp"

namespace spinkirby {

struct BlowUp {
  int sign = 1;
  friend bool operator==(const BlowUp&, const BlowUp&) = default;
};
struct BlowDown {
  std::size_t index = 0;
  friend bool operator==(const BlowDown&, const BlowDown&) = default;
};
// Slide component `from` over component `over`.
struct Slide {
  std::size_t from = 0;
  std::size_t over = 0;
  friend bool operator==(const Slide&, const Slide&) = default;
};

using Move = std::variant<BlowUp, BlowDown, Slide>;

struct MoveSequence {
  std::vector<Move> moves;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const MoveSequence&, const MoveSequence&) = default;
};

SpinPresentation blow_up(const SpinPresentation& p, int sign);
// Throws IndexOutOfRange, NotIsolated, NotUnitFramed.
SpinPresentation blow_down(const SpinPresentation& p, std::size_t i);
// Throws SameIndex, IndexOutOfRange.
SpinPresentation slide(const SpinPresentation& p, std::size_t i, std::size_t j);

SpinPresentation apply_move(const SpinPresentation& p, const Move& m);

// Left-to-right composition. A failing move rethrows its error with
// position set to the move's index in the sequence. The observer sees every
// intermediate presentation (step index counts from 1).
using StepObserver = std::function<void(std::size_t step, const SpinPresentation&)>;
SpinPresentation apply_sequence(const SpinPresentation& p, const MoveSequence& s,
                                const StepObserver& observer = {});

// Components that are unlinked from the rest and carry framing ±1.
std::vector<std::size_t> isolated_unit_components(const IntSymMatrix& b);

struct FuzzOptions {
  // No blow-ups once the link has this many components.
  std::size_t max_components = 6;
};

// Deterministic in (p, steps, seed, options). Every move is valid when the
// sequence is applied in order starting from p.
MoveSequence random_sequence(const SpinPresentation& p, std::size_t steps, std::uint64_t seed,
                             const FuzzOptions& options = {});

// Text form: "blowup:+1; slide:2,3; blowdown:4". Whitespace is ignored.
std::string to_string(const Move& m);
std::string to_string(const MoveSequence& s);
// Throws ParseError (position = index of the offending move).
MoveSequence parse_moves(std::string_view text);

}  // namespace spinkirby
