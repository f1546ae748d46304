#pragma once

#include <set>
#include <string>
#include <string_view>

#include "wcg/coxeter.hpp"

namespace wcg {

// Reference word-problem solver by Tits' rewriting: explore the braid class
// of the word; if some word in it contains a repeated letter, cancel it and
// restart, otherwise the word is reduced and the lexicographically least
// member of its class is the ShortLex normal form. Exponential in the word
// length; meant as a test oracle for CoxeterGroup.
std::string braid_normal_form(const CoxeterSystem& sys, std::string_view word);

// All words reachable from `word` by braid moves.
std::set<std::string> braid_class(const CoxeterSystem& sys, std::string_view word);

}  // namespace wcg
