#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dehnrw {

// One letter of a group word: generator index and exponent (+1 or -1).
struct Letter {
    int gen = 0;
    int exp = 1;

    auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

inline Letter inv(Letter a) { return {a.gen, -a.exp}; }

Word inverse(const Word& w);

// Cancel adjacent g g^-1 pairs until none remain.
Word free_reduce(const Word& w);

Word concat(const Word& a, const Word& b);

// Role of a region generator in the derived graph's antipath.
enum class Role { source, sink };

// Role per region generator; a generator and its inverse share a role.
struct RoleAssignment {
    std::vector<Role> of;

    int size() const { return static_cast<int>(of.size()); }
    bool is_source(int gen) const { return of.at(gen) == Role::source; }
    bool is_sink(int gen) const { return of.at(gen) == Role::sink; }
    bool is_source(Letter a) const { return is_source(a.gen); }
    bool is_sink(Letter a) const { return is_sink(a.gen); }

    bool operator==(const RoleAssignment&) const = default;
};

// Renders "x3 x1'" without roles, "s3 t1'" style with them. Empty word -> "1".
std::string render(const Word& w);
std::string render(const Word& w, const RoleAssignment& roles);
std::string render(Letter a);
std::string render(Letter a, const RoleAssignment& roles);

// Accepts whitespace-separated letters: x4, s4, t4, with a trailing
// apostrophe for the inverse. "1" denotes the empty word. The s/t spelling
// carries no extra information here; the index alone names the generator.
// When roles are given, s/t spellings are checked against them.
Word parse_word(const std::string& text);
Word parse_word(const std::string& text, const RoleAssignment& roles);

} // namespace dehnrw
