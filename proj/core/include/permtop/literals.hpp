#ifndef PERMTOP_LITERALS_HPP
#define PERMTOP_LITERALS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "permtop/epset.hpp"
#include "permtop/residue_perm.hpp"
#include "permtop/selfnorm.hpp"
#include "permtop/subbase.hpp"
#include "permtop/tbeta.hpp"

// Text forms of the domain values.
//
//   permutation   (0 1 2)(5 6)   ()   id   sigma   res[4; 2,0,-2,0; patch: 0->1, 1->0]
//                 products with '*', powers with '^k' (k may be negative)
//   point set     {0, 3, 5}
//   EPSet         ep[M; r1,r2; +{a,b}; -{c}]   evens   odds   all   empty   {0, 3}
//   open set      conjneq(a; b)  conjeq(a; b)  dconjneq(b; c)  wordneq(x * g * x^-1)
//                 fiber(3->5)  fixes{..}  suppin{..}  and(e1, e2, ...)
//   free word     z3 * z1^-1 * z3^-1   1
//   element       (word; shift)
//   thin set      pow2  squares  finite{..}
//   partition     part[M; ep...; ep...]
//
// Parsers throw SyntaxError(line, col) for malformed text and SemanticError
// for well-formed text naming an invalid value. Printers emit the canonical
// form, and parsing it back returns an equal value.

namespace permtop {

ResiduePerm parse_perm(std::string_view text);
std::vector<Point> parse_points(std::string_view text);
EPSet parse_epset(std::string_view text);
GroupWord parse_group_word(std::string_view text);
OpenSetExpr parse_open_set(std::string_view text);
FreeWord parse_free_word(std::string_view text);
SDElement parse_element(std::string_view text);
ThinSet parse_thin_set(std::string_view text);
Partition parse_partition(std::string_view text);

std::string to_literal(const ResiduePerm &f);
std::string to_literal(const std::vector<Point> &points);
std::string to_literal(const EPSet &s);
std::string to_literal(const GroupWord &w);
std::string to_literal(const OpenSetExpr &e);
std::string to_literal(const FreeWord &w);
std::string to_literal(const SDElement &h);
std::string to_literal(const ThinSet &A);
std::string to_literal(const Partition &p);

} // namespace permtop

#endif // PERMTOP_LITERALS_HPP
