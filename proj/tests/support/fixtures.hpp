#pragma once

// Machines shared by the unit tests and the acceptance runner. Built in code
// so they do not depend on the text parser.

#include "wkkit/constructions.hpp"

#include <filesystem>
#include <random>

namespace fx {

using namespace wkkit;

std::filesystem::path fixture_path(const std::string& name);

Alphabet ab();
Alphabet abc();

RestrictedWKAutomaton example1();
RestrictedWKAutomaton example2();

Dfa dfa_ab_star();
Dfa dfa_a_star_b();
Dfa dfa_sigma_star();
Dfa dfa_empty();
Dfa dfa_a_plus();

Cfg cfg_anbn();
Cfg cfg_palindromes();
Cfg cfg_dyck();
Cfg cfg_equal_count();
Cfg cfg_expressions();
std::vector<Cfg> cfg_fixtures();

Csg csg_anbncn();
Csg csg_a2n_bn();

struct NamedFinite {
    std::string name;
    RestrictedWKAutomaton machine;
};
std::vector<NamedFinite> finite_fixtures();

/// Deterministic machine over {a, b}: up to @p max_states states,
/// @p max_rules rules, strand words of at most two symbols.
WKAutomaton random_dwk(std::mt19937& rng, std::size_t max_states = 4, std::size_t max_rules = 6);
std::vector<WKAutomaton> random_dwks(std::size_t count, unsigned seed = 20240601);

Dfa random_dfa(std::mt19937& rng, const Alphabet& v, std::size_t max_states = 3);
/// Deterministic machines paired with regular restrictions.
std::vector<RestrictedWKAutomaton> regular_fixtures(std::size_t count, unsigned seed = 77);

/// Small PDAs whose λ-rules only pop, so every run on w has at most
/// 2|w| + 1 steps.
Pda random_pda(std::mt19937& rng);
std::vector<Pda> random_pdas(std::size_t count, unsigned seed = 4242);

} // namespace fx
