#ifndef ACTIVESUM_TESTS_WORD_ORACLE_HPP
#define ACTIVESUM_TESTS_WORD_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "activesum/presentation.hpp"

namespace activesum::testing {

// Independent order oracle for a finitely presented group, used to check
// coset enumeration results. Enumerates every freely reduced word up to
// max_len, identifies words connected by relator insertions whose reduced
// form stays inside the horizon, and reads the group order off the ball
// sizes once they stabilize with margin. Returns nullopt when the horizon
// is too small to conclude anything; never consults a coset table.
std::optional<std::uint64_t>
presented_order_by_words(const Presentation &p, unsigned max_len,
                         std::size_t word_cap = 2000000);

} // namespace activesum::testing

#endif
