#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "grpolab/rng.hpp"

namespace grpolab {

/// Hint tiers, ordered from most abstract to most concrete.
enum class HintCategory : int { knowledge = 0, planning = 1, solution = 2 };

/// Per-position constraint granularity. The three classes form a nested
/// refinement of the token range:
///   parity   -> which half of [0, A)            value in {0, 1}
///   quartile -> which pair of tokens, floor(v/2) value in [0, A/2)
///   exact    -> the token itself                 value in [0, A)
/// Every quartile class lies inside one parity class, and every token inside
/// one quartile class, so concreter constraints always shrink the consistent
/// set.
enum class Granularity : int { parity = 0, quartile = 1, exact = 2 };

constexpr int kHintLevels = 4;
constexpr int kHintCategories = 3;

const char* to_string(HintCategory c);
const char* to_string(Granularity g);

/// One verifiable task: a hidden answer sequence plus a difficulty prior.
/// `difficulty_prior` is the initial logit boost placed on answer tokens.
struct Problem {
  int id = 0;
  int alphabet_size = 0;
  int length = 0;
  std::vector<int> answer;
  double difficulty_prior = 0.0;
};

/// Identifies one rung of the hint hierarchy.
struct HintRef {
  HintCategory category = HintCategory::knowledge;
  int level = 1;  // in [1, 4]

  friend bool operator==(const HintRef&, const HintRef&) = default;
};

/// A single revealed fact about one answer position.
struct Constraint {
  int position = 0;
  Granularity granularity = Granularity::parity;
  int value = 0;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Class index of `token` under granularity `g` for alphabet size `a`.
int constraint_class(Granularity g, int token, int a);

/// True when `token` satisfies `c` for alphabet size `a`.
bool constraint_consistent(const Constraint& c, int token, int a);

/// Ordered problem collection with its generation provenance.
struct ProblemBank {
  std::vector<Problem> problems;
  std::uint64_t bank_seed = 0;
  int schema_version = 1;

  int count() const { return static_cast<int>(problems.size()); }
  const Problem& by_id(int id) const;
};

/// Fractions of easy / medium / hard problems; must sum to 1.
struct DifficultyMix {
  double easy = 0.0;
  double medium = 0.0;
  double hard = 1.0;
};

/// Deterministically generates `count` problems. Difficulty tiers are
/// assigned by largest-remainder apportionment of `mix`, then beta is drawn
/// per tier: easy U[2,4], medium U[0.5,1.5], hard 0. Answers are uniform.
/// L must be 4 (one position per hint level) and A even, at least 4.
ProblemBank generate_bank(std::uint64_t seed, int count, int alphabet_size, int length,
                          const DifficultyMix& mix);

/// Outcome reward: 1.0 iff `tokens` equals the answer elementwise, else 0.0.
/// Throws InvalidArgument on length mismatch.
double verify(const Problem& problem, const std::vector<int>& tokens);

/// Cumulative constraints for hint `ref`: positions 0..level-1 at the
/// category's granularity (knowledge->parity, planning->quartile,
/// solution->exact), each consistent with the answer by construction.
std::vector<Constraint> hint_content(const Problem& problem, const HintRef& ref);

Granularity category_granularity(HintCategory c);

}  // namespace grpolab
