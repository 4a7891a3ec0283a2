#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vknot/errors.hpp"

namespace vknot {

enum class Role : std::uint8_t { Over, Under };
enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

constexpr Role opposite(Role r) noexcept {
    return r == Role::Over ? Role::Under : Role::Over;
}

/// One crossing pass: which crossing, over or under, and the crossing sign.
struct GaussSymbol {
    int label = 0;
    Role role = Role::Over;
    Sign sign = Sign::Plus;

    bool operator==(const GaussSymbol&) const = default;
};

/// A Gauss code: one symbol sequence per link component. Valid codes have
/// every crossing label appearing exactly twice (once Over, once Under, same
/// sign both times) and no empty component.
struct GaussCode {
    std::vector<std::vector<GaussSymbol>> components;

    bool single_component() const noexcept { return components.size() == 1; }

    /// The symbol sequence of a single-component code; throws
    /// UnsupportedError when the code has several components.
    const std::vector<GaussSymbol>& knot() const;

    /// Number of distinct crossings across all components.
    int crossings() const;

    bool operator==(const GaussCode&) const = default;
};

/// Throws ValidationError when the code violates a Gauss-code invariant.
void validate(const GaussCode& code);

/// Text notation: tokens <O|U><label><+|->, label a letter A..Z (A=1, B=2,
/// ...) or a positive integer; components separated by whitespace, commas,
/// or '/'. Serialization always emits integer labels.
GaussCode parse_text(const std::string& s);
std::string to_text(const GaussCode& code);

/// Vector notation: a bracketed comma-separated list with entries
///   X = OX+,  -X = UX+,  X+I = OX-,  -X-I = UX-,
/// and a 0 terminating each component.
GaussCode parse_vector(const std::string& s);
std::string to_vector(const GaussCode& code);

/// Toggles every symbol's role (labels and signs unchanged) and rotates the
/// code so the Under-symbol of the smallest label comes first. Single
/// component only.
GaussCode flip(const GaussCode& code);

/// True iff every crossing's two occurrences have an even number of symbols
/// strictly between them. Codes failing this cannot come from a planar
/// diagram. Single component only.
bool is_evenly_intersticed(const GaussCode& code);

/// Which between-count parity the census treats as an "even interstice".
/// EvenBetween is the geometric reading above; OddBetween (all between-counts
/// odd) is the convention that reproduces the reference census sizes, whose
/// filter also keeps realizable codes.
enum class IntersticeConvention { EvenBetween, OddBetween };

/// is_evenly_intersticed under a chosen convention.
bool is_evenly_intersticed(const GaussCode& code, IntersticeConvention convention);

/// True iff some crossing's two symbols are adjacent; with cyclic set, the
/// last/first position pair also counts as adjacent.
bool is_r1_reducible(const GaussCode& code, bool cyclic);

struct R2Patterns {
    bool nested = true;       // ...ab...ba...
    bool interleaved = true;  // ...ab...ab...

    bool operator==(const R2Patterns&) const = default;
};

/// True iff two distinct crossings a,b occupy two adjacent position pairs
/// forming a bigon: one pair carries both Over roles, the other both Under
/// roles, and sign(a) = -sign(b). The pairs may sit in nested or interleaved
/// arrangement per `patterns`; `cyclic` admits the last/first wrap pair.
bool is_r2_reducible(const GaussCode& code, bool cyclic, R2Patterns patterns);

/// Convention flags for the code enumeration. The reference census sizes do
/// not pin these down, so they are explicit and the default is calibrated
/// (see default_conventions in gauss_code.cpp and the README).
struct EnumerationOptions {
    bool r1_cyclic = true;
    bool r2_cyclic = true;
    R2Patterns r2_patterns{};
    bool cyclic_canonical = false;
    IntersticeConvention interstice = IntersticeConvention::OddBetween;

    bool operator==(const EnumerationOptions&) const = default;
};

/// The calibrated default conventions used by the census.
EnumerationOptions default_conventions();

/// Streams every single-component Gauss code with `crossings` crossings,
/// labels canonicalized by first occurrence and basepoint fixed at position
/// one, over/under and sign decorations exhaustive, keeping only codes that
/// are not evenly intersticed and not R1/R2-reducible under the given
/// options. Emission order is deterministic: lexicographic in (chord
/// diagram, role vector, sign vector). crossings must lie in 1..6.
void enumerate_codes(int crossings, const EnumerationOptions& opts,
                     const std::function<void(const GaussCode&)>& emit);
std::vector<GaussCode> enumerate_codes(int crossings, const EnumerationOptions& opts);

namespace detail {

/// Chord diagrams on 2n endpoints as partner arrays, lexicographic order.
void for_each_matching(int crossings, const std::function<void(const std::vector<int>&)>& fn);

/// Decorated codes of one chord diagram, filtered per `opts`, in (role
/// vector, sign vector) order. Used by enumerate_codes and by the census
/// driver, which parallelizes across matchings.
void for_each_code_of_matching(const std::vector<int>& partner, const EnumerationOptions& opts,
                               const std::function<void(const GaussCode&)>& emit);

}  // namespace detail

}  // namespace vknot
