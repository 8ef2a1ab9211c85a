#include "spinkirby/kirby_moves.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>

#include "spinkirby/error.hpp"

namespace spinkirby {

SpinPresentation blow_up(const SpinPresentation& p, int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "blow-up framing must be +1 or -1");
  IntSymMatrix unit(1);
  unit.set(0, 0, sign);
  BitVector member(1);
  member.set(0);
  return SpinPresentation::validate(p.matrix().block_sum(unit), p.characteristic().concat(member));
}

SpinPresentation blow_down(const SpinPresentation& p, std::size_t i) {
  const auto& b = p.matrix();
  if (i >= b.size()) throw Error(ErrorCode::IndexOutOfRange, "blow-down index out of range", i);
  for (std::size_t k = 0; k < b.size(); ++k)
    if (k != i && b(i, k) != 0)
      throw Error(ErrorCode::NotIsolated,
                  "component " + std::to_string(i) + " links component " + std::to_string(k), i);
  if (abs(b(i, i)) != 1)
    throw Error(ErrorCode::NotUnitFramed,
                "component " + std::to_string(i) + " has framing " + b(i, i).get_str() + ", not +1 or -1", i);

  BitVector c(b.size() - 1);
  for (std::size_t k = 0, out = 0; k < b.size(); ++k)
    if (k != i) c.set(out++, p.characteristic()[k]);
  return SpinPresentation::validate(b.without(i), std::move(c));
}

SpinPresentation slide(const SpinPresentation& p, std::size_t i, std::size_t j) {
  const auto& b = p.matrix();
  const std::size_t n = b.size();
  if (i == j) throw Error(ErrorCode::SameIndex, "cannot slide component " + std::to_string(i) + " over itself", i);
  if (i >= n) throw Error(ErrorCode::IndexOutOfRange, "slide index out of range", i);
  if (j >= n) throw Error(ErrorCode::IndexOutOfRange, "slide index out of range", j);

  IntSymMatrix out = b;
  out.set(i, i, b(i, i) + 2 * b(i, j) + b(j, j));
  for (std::size_t k = 0; k < n; ++k)
    if (k != i) out.set(i, k, b(i, k) + b(j, k));

  // The class C = Σ c_k L_k rewritten in the new basis.
  BitVector c = p.characteristic();
  if (c[i]) c.flip(j);
  return SpinPresentation::validate(std::move(out), std::move(c));
}

SpinPresentation apply_move(const SpinPresentation& p, const Move& m) {
  return std::visit(
      [&](const auto& move) -> SpinPresentation {
        using T = std::decay_t<decltype(move)>;
        if constexpr (std::is_same_v<T, BlowUp>)
          return blow_up(p, move.sign);
        else if constexpr (std::is_same_v<T, BlowDown>)
          return blow_down(p, move.index);
        else
          return slide(p, move.from, move.over);
      },
      m);
}

SpinPresentation apply_sequence(const SpinPresentation& p, const MoveSequence& s, const StepObserver& observer) {
  SpinPresentation current = p;
  for (std::size_t k = 0; k < s.moves.size(); ++k) {
    try {
      current = apply_move(current, s.moves[k]);
    } catch (const Error& e) {
      throw Error(e.code(), "move " + std::to_string(k) + " (" + to_string(s.moves[k]) + "): " + e.what(), k);
    }
    if (observer) observer(k + 1, current);
  }
  return current;
}

std::vector<std::size_t> isolated_unit_components(const IntSymMatrix& b) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (abs(b(i, i)) != 1) continue;
    bool isolated = true;
    for (std::size_t k = 0; k < b.size() && isolated; ++k)
      if (k != i && b(i, k) != 0) isolated = false;
    if (isolated) out.push_back(i);
  }
  return out;
}

MoveSequence random_sequence(const SpinPresentation& p, std::size_t steps, std::uint64_t seed,
                             const FuzzOptions& options) {
  // mt19937_64 output is fixed by the standard; reduce by modulo instead of
  // using distributions so sequences agree across standard libraries.
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

  MoveSequence seq;
  seq.seed = seed;
  SpinPresentation state = p;
  for (std::size_t step = 0; step < steps; ++step) {
    const std::size_t n = state.size();
    const auto isolated = isolated_unit_components(state.matrix());

    const std::size_t w_up = n < options.max_components ? 1 : 0;
    const std::size_t w_slide = n >= 2 ? 3 : 0;
    const std::size_t w_down = isolated.empty() ? 0 : 2;
    const std::size_t total = w_up + w_slide + w_down;

    Move move;
    if (total == 0) {
      // Only reachable with max_components == 0 on a link with no removable
      // component; fall back to a blow-up so the sequence stays valid.
      move = BlowUp{1};
    } else {
      const std::size_t r = pick(total);
      if (r < w_up) {
        move = BlowUp{pick(2) == 0 ? 1 : -1};
      } else if (r < w_up + w_slide) {
        const std::size_t i = pick(n);
        std::size_t j = pick(n - 1);
        if (j >= i) ++j;
        move = Slide{i, j};
      } else {
        move = BlowDown{isolated[pick(isolated.size())]};
      }
    }
    state = apply_move(state, move);
    seq.moves.push_back(move);
  }
  return seq;
}

std::string to_string(const Move& m) {
  return std::visit(
      [](const auto& move) -> std::string {
        using T = std::decay_t<decltype(move)>;
        if constexpr (std::is_same_v<T, BlowUp>)
          return move.sign > 0 ? "blowup:+1" : "blowup:-1";
        else if constexpr (std::is_same_v<T, BlowDown>)
          return "blowdown:" + std::to_string(move.index);
        else
          return "slide:" + std::to_string(move.from) + "," + std::to_string(move.over);
      },
      m);
}

std::string to_string(const MoveSequence& s) {
  std::string out;
  for (std::size_t k = 0; k < s.moves.size(); ++k) {
    if (k) out += "; ";
    out += to_string(s.moves[k]);
  }
  return out;
}

namespace {

std::size_t parse_index(std::string_view tok, std::size_t position) {
  std::size_t value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (tok.empty() || ec != std::errc{} || ptr != end)
    throw Error(ErrorCode::ParseError, "move " + std::to_string(position) + ": bad index '" + std::string(tok) + "'",
                position);
  return value;
}

}  // namespace

MoveSequence parse_moves(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;

  MoveSequence seq;
  if (compact.empty()) return seq;

  std::size_t position = 0;
  std::size_t start = 0;
  while (start <= compact.size()) {
    const std::size_t stop = std::min(compact.find(';', start), compact.size());
    const std::string_view item(compact.data() + start, stop - start);
    start = stop + 1;
    // A trailing separator is tolerated.
    if (item.empty() && stop == compact.size()) break;

    const auto colon = item.find(':');
    if (colon == std::string_view::npos)
      throw Error(ErrorCode::ParseError, "move " + std::to_string(position) + ": expected 'kind:args'", position);
    const auto kind = item.substr(0, colon);
    const auto args = item.substr(colon + 1);

    if (kind == "blowup") {
      if (args == "+1" || args == "1")
        seq.moves.emplace_back(BlowUp{1});
      else if (args == "-1")
        seq.moves.emplace_back(BlowUp{-1});
      else
        throw Error(ErrorCode::ParseError,
                    "move " + std::to_string(position) + ": blow-up sign must be +1 or -1", position);
    } else if (kind == "blowdown") {
      seq.moves.emplace_back(BlowDown{parse_index(args, position)});
    } else if (kind == "slide") {
      const auto comma = args.find(',');
      if (comma == std::string_view::npos)
        throw Error(ErrorCode::ParseError, "move " + std::to_string(position) + ": slide needs 'i,j'", position);
      seq.moves.emplace_back(
          Slide{parse_index(args.substr(0, comma), position), parse_index(args.substr(comma + 1), position)});
    } else {
      throw Error(ErrorCode::ParseError,
                  "move " + std::to_string(position) + ": unknown move '" + std::string(kind) + "'", position);
    }
    ++position;
  }
  return seq;
}

}  // namespace spinkirby
