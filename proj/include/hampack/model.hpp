#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hampack/bitset.hpp"
#include "hampack/space.hpp"

namespace hampack {

enum class ModelKind { full, zero_fixed, reduced, pair, profile_forbidding };

const char* to_string(ModelKind k);

// Binary packing model: maximize the number of chosen words subject to
// pairwise conflicts. Conflicts connect free words at distance 1..d-1 and,
// when forbidden_profile is set, pairs at distance exactly d with that
// marginal profile.
//
// fixed_one words contribute the objective offset. fixed_zero words are kept
// as pinned variables only in the zero-fixed model (fixed_vars_in_model);
// the reduced and pair models drop all fixed words from the variable set.
struct PackingModel {
    ModelKind kind = ModelKind::full;
    MixedSpace space;
    int d = 0;
    std::vector<WordIndex> fixed_one;
    std::vector<WordIndex> fixed_zero;
    std::vector<WordIndex> free_words;      // ascending rank; variable i <-> free_words[i]
    std::vector<Bitset> conflicts;          // adjacency over free variable indices
    std::optional<MarginalProfile> forbidden_profile;
    bool fixed_vars_in_model = false;

    int objective_offset() const { return int(fixed_one.size()); }
    std::size_t conflict_count() const;
};

struct ModelStats {
    std::size_t free_count = 0;
    std::size_t fixed_one_count = 0;
    std::size_t fixed_zero_count = 0;
    std::size_t conflict_count = 0;
};

ModelStats model_stats(const PackingModel& m);

// Builders. `threads` <= 0 uses all available cores; 1 forces the serial
// reference kernel.
PackingModel build_full(const MixedSpace& space, int d, int threads = 0);
PackingModel build_zero_fixed(const MixedSpace& space, int d, int threads = 0);
PackingModel build_reduced(const MixedSpace& space, int d, int threads = 0);
PackingModel build_pair(const MixedSpace& space, int d, WordIndex second, int threads = 0);
PackingModel build_profile_forbidding(const MixedSpace& space, int d,
                                      const MarginalProfile& profile, int threads = 0);

// Conflict adjacency among `words`: distance in [1, d-1], or distance == d
// with the given marginal profile. The serial and OpenMP kernels must produce
// identical rows; the serial one is the reference.
std::vector<Bitset> conflict_rows_serial(const MixedSpace& space,
                                         std::span<const WordIndex> words, int d,
                                         const MarginalProfile* forbid);
std::vector<Bitset> conflict_rows_parallel(const MixedSpace& space,
                                           std::span<const WordIndex> words, int d,
                                           const MarginalProfile* forbid, int threads);

enum class EmitFormat { lp, mps };

// Deterministic model text: variables named x_<printed digits> in ascending
// rank order, one row per conflict. Returns bytes written.
std::size_t emit(const PackingModel& m, EmitFormat format, std::ostream& out);
std::size_t emit_file(const PackingModel& m, EmitFormat format,
                      const std::filesystem::path& path);

// Parses solver output lines of the form `x_<digits> = <value>` (separator
// optional) and returns the words whose value rounds to 1.
std::vector<WordIndex> parse_solution_text(const MixedSpace& space, std::istream& in);

} // namespace hampack
